#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace segre {

using Integer = boost::multiprecision::cpp_int;

Integer binomial(long n, long k);

/// Polynomial in the hyperplane class H, c[k] the coefficient of H^k.
class HPolynomial {
 public:
  HPolynomial() = default;
  explicit HPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static HPolynomial constant(Integer v) { return HPolynomial({std::move(v)}); }
  /// 1 + a H
  static HPolynomial linear(const Integer& a) { return HPolynomial({1, a}); }

  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  std::size_t degree_bound() const { return c_.size(); }

  HPolynomial truncated(std::size_t max_degree) const;
  /// Power-series inverse modulo H^(max_degree+1); needs constant term +-1.
  HPolynomial inverse(std::size_t max_degree) const;
  HPolynomial pow(unsigned e, std::size_t max_degree) const;

  friend HPolynomial operator*(const HPolynomial& a, const HPolynomial& b);
  friend HPolynomial operator+(const HPolynomial& a, const HPolynomial& b);
  friend bool operator==(const HPolynomial& a, const HPolynomial& b) { return a.c_ == b.c_; }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

class AmbientMismatch : public std::invalid_argument {
 public:
  AmbientMismatch() : std::invalid_argument("Chow classes live in different projective spaces") {}
};

/// Class in A_*(P^N): sum of a_i [P^i], i = 0..N.
class ChowClass {
 public:
  explicit ChowClass(int ambient) : n_(ambient), a_(static_cast<std::size_t>(ambient + 1)) {}
  ChowClass(int ambient, std::vector<Integer> coeffs);
  /// The class of a linear subspace P^i.
  static ChowClass linear(int ambient, int i);
  /// [P^N] times an H-polynomial, i.e. sum c_k [P^(N-k)].
  static ChowClass from_hpolynomial(int ambient, const HPolynomial& h);

  int ambient() const { return n_; }
  const std::vector<Integer>& coeffs() const { return a_; }
  const Integer& operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }
  Integer& operator[](int i) { return a_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;
  /// Largest i with a_i != 0, or -1.
  int top_dimension() const;

  HPolynomial to_hpolynomial() const;
  /// Keeps only the dimension range [lo, hi].
  ChowClass restricted(int lo, int hi) const;

  friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator-(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const Integer& k, const ChowClass& a);
  friend bool operator==(const ChowClass& a, const ChowClass& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  /// "a_r [P^r] + ... + a_0 [P^0]" with zero terms omitted; "0" for the zero class.
  std::string to_string() const;

 private:
  int n_;
  std::vector<Integer> a_;
};

/// Cap product with an H-polynomial; terms below dimension 0 are dropped.
ChowClass class_multiply(const ChowClass& alpha, const HPolynomial& beta);
/// Intersection product of two classes in P^N.
ChowClass class_multiply(const ChowClass& alpha, const ChowClass& beta);

/// Multiplies the codimension-c piece by (-1)^c, codimension measured in P^N.
ChowClass dual(const ChowClass& alpha);
/// Twist by O(d): the codimension-c piece is divided by (1 + dH)^c.
ChowClass tensor_by(const ChowClass& alpha, const Integer& d);
/// Keeps only a_k [P^k].
ChowClass component(const ChowClass& alpha, int k);
/// Degree of the zero-dimensional part.
Integer integral(const ChowClass& alpha);

HPolynomial tangent_pn(int n);
HPolynomial line_bundle(const Integer& d);
/// prod (1 + d_i H) / prod (1 + e_j H), truncated above H^max_degree.
HPolynomial ci_normal_bundle(std::span<const Integer> d_list, std::span<const Integer> e_list, std::size_t max_degree);

}  // namespace segre
