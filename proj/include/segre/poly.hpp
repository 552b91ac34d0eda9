#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "segre/gf.hpp"

namespace segre {

/// Upper bound on ring variables; exponent vectors are fixed-width.
inline constexpr int kMaxVars = 16;

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("polynomials belong to different rings") {}
};

/// Exponent vector with cached total degree. Unused trailing slots are zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t deg = 0;

  static Monomial one() { return {}; }
  static Monomial variable(int i, int power = 1);
  static Monomial from_exponents(std::span<const int> e);

  std::uint16_t operator[](int i) const { return exp[static_cast<std::size_t>(i)]; }
  bool is_one() const { return deg == 0; }
  bool divides(const Monomial& m) const;
  /// Assumes `d` divides *this.
  Monomial quotient(const Monomial& d) const;
  Monomial lcm(const Monomial& m) const;
  /// True when the supports are disjoint.
  bool coprime(const Monomial& m) const;
  /// Bitmask of variables present, used as a cheap divisibility filter.
  std::uint32_t support_mask() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

enum class OrderKind { DegRevLex, BlockElimination };

/// Degree reverse lexicographic, or a two-block product order where the first
/// `block` variables are eliminated (degrevlex within each block).
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  int block = 0;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder eliminate(int k) { return {OrderKind::BlockElimination, k}; }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

struct Ring {
  int nvars;
  PrimeField field;
  MonomialOrder order;
  std::vector<std::string> names;

  std::string var_name(int i) const;
  bool same_as(const Ring& other) const {
    return nvars == other.nvars && field == other.field && order == other.order;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(int nvars, PrimeField field, MonomialOrder order = MonomialOrder::degrevlex(),
                  std::vector<std::string> names = {});
/// Same variables and field, different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

struct Term {
  Monomial mono;
  Fp coeff;
};

/// Sparse polynomial; terms sorted strictly descending in the ring's order,
/// all coefficients nonzero.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, Fp c);
  static Polynomial variable(RingPtr ring, int i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Fp c);
  /// Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusts that `terms` already satisfies the class invariant.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms) {
    return Polynomial(std::move(ring), std::move(terms));
  }

  const RingPtr& ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial scaled(Fp c) const;
  Polynomial shifted(const Monomial& m, Fp c) const;
  Polynomial monic() const;
  /// Same polynomial re-sorted for another ring with the same variable count.
  Polynomial in_ring(RingPtr target) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// `this - c*m*g` with a single merge pass.
  Polynomial sub_mul(Fp c, const Monomial& m, const Polynomial& g) const;

  std::string to_string() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& f, unsigned e);

/// All monomials of total degree e, in descending degrevlex order.
std::vector<Monomial> monomials_of_degree(int num_vars, int e);

/// Dense homogeneous form of the given degree with random coefficients.
Polynomial random_form(const RingPtr& ring, int degree, Rng& rng);
/// sum lambda_j g_j with random lambda_j; gens must be nonempty.
Polynomial random_combination(std::span<const Polynomial> gens, Rng& rng);

std::vector<Polynomial> partial_derivatives(const Polynomial& f);

/// Replaces x_i by images[i]; images live in the target ring.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// Moves f into a ring with more variables, placing x_i at index i + offset.
Polynomial embed(const Polynomial& f, const RingPtr& target, int offset);
/// Inverse of embed for polynomials free of the first `offset` variables.
Polynomial project(const Polynomial& f, const RingPtr& target, int offset);

/// Exact quotient f / g; throws std::domain_error if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace segre
