#include "segre/chow.hpp"

#include <algorithm>
#include <sstream>

namespace segre {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ---- HPolynomial ----

HPolynomial HPolynomial::truncated(std::size_t max_degree) const {
  std::vector<Integer> c(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(c_.size(), max_degree + 1)));
  return HPolynomial(std::move(c));
}

HPolynomial HPolynomial::inverse(std::size_t max_degree) const {
  if (c_.empty() || (c_[0] != 1 && c_[0] != -1)) throw std::domain_error("H-series is not invertible over Z");
  std::vector<Integer> inv(max_degree + 1);
  const Integer& c0 = c_[0];
  inv[0] = c0;  // 1/c0 = c0 for c0 = +-1
  for (std::size_t k = 1; k <= max_degree; ++k) {
    Integer s = 0;
    for (std::size_t j = 1; j <= k && j < c_.size(); ++j) s += c_[j] * inv[k - j];
    inv[k] = -s * c0;
  }
  return HPolynomial(std::move(inv));
}

HPolynomial HPolynomial::pow(unsigned e, std::size_t max_degree) const {
  HPolynomial r = constant(1);
  for (unsigned i = 0; i < e; ++i) r = (r * *this).truncated(max_degree);
  return r;
}

HPolynomial operator*(const HPolynomial& a, const HPolynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return HPolynomial(std::move(r));
}

HPolynomial operator+(const HPolynomial& a, const HPolynomial& b) {
  std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return HPolynomial(std::move(r));
}

// ---- ChowClass ----

ChowClass::ChowClass(int ambient, std::vector<Integer> coeffs) : n_(ambient), a_(std::move(coeffs)) {
  if (ambient < 0) throw std::invalid_argument("negative ambient dimension");
  if (a_.size() > static_cast<std::size_t>(ambient + 1)) {
    for (std::size_t i = static_cast<std::size_t>(ambient + 1); i < a_.size(); ++i) {
      if (a_[i] != 0) throw std::invalid_argument("class has terms above the ambient dimension");
    }
  }
  a_.resize(static_cast<std::size_t>(ambient + 1));
}

ChowClass ChowClass::linear(int ambient, int i) {
  if (i < 0 || i > ambient) throw std::out_of_range("linear subspace dimension out of range");
  ChowClass c(ambient);
  c[i] = 1;
  return c;
}

ChowClass ChowClass::from_hpolynomial(int ambient, const HPolynomial& h) {
  ChowClass c(ambient);
  for (int k = 0; k <= ambient; ++k) c[ambient - k] = h.coeff(static_cast<std::size_t>(k));
  return c;
}

bool ChowClass::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Integer& v) { return v == 0; });
}

int ChowClass::top_dimension() const {
  for (int i = n_; i >= 0; --i) {
    if ((*this)[i] != 0) return i;
  }
  return -1;
}

HPolynomial ChowClass::to_hpolynomial() const {
  std::vector<Integer> c(static_cast<std::size_t>(n_ + 1));
  for (int i = 0; i <= n_; ++i) c[static_cast<std::size_t>(n_ - i)] = (*this)[i];
  return HPolynomial(std::move(c));
}

ChowClass ChowClass::restricted(int lo, int hi) const {
  ChowClass c(n_);
  for (int i = std::max(lo, 0); i <= std::min(hi, n_); ++i) c[i] = (*this)[i];
  return c;
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
  if (a.n_ != b.n_) throw AmbientMismatch();
  ChowClass r(a.n_);
  for (int i = 0; i <= a.n_; ++i) r[i] = a[i] + b[i];
  return r;
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) {
  if (a.n_ != b.n_) throw AmbientMismatch();
  ChowClass r(a.n_);
  for (int i = 0; i <= a.n_; ++i) r[i] = a[i] - b[i];
  return r;
}

ChowClass operator*(const Integer& k, const ChowClass& a) {
  ChowClass r(a.n_);
  for (int i = 0; i <= a.n_; ++i) r[i] = k * a[i];
  return r;
}

std::string ChowClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = n_; i >= 0; --i) {
    const Integer& c = (*this)[i];
    if (c == 0) continue;
    if (first) {
      os << c;
    } else {
      os << (c < 0 ? " - " : " + ") << (c < 0 ? Integer(-c) : c);
    }
    os << " [P^" << i << "]";
    first = false;
  }
  return first ? "0" : os.str();
}

ChowClass class_multiply(const ChowClass& alpha, const HPolynomial& beta) {
  const int n = alpha.ambient();
  ChowClass r(n);
  for (int i = 0; i <= n; ++i) {
    if (alpha[i] == 0) continue;
    for (int k = 0; k <= i; ++k) r[i - k] += alpha[i] * beta.coeff(static_cast<std::size_t>(k));
  }
  return r;
}

ChowClass class_multiply(const ChowClass& alpha, const ChowClass& beta) {
  if (alpha.ambient() != beta.ambient()) throw AmbientMismatch();
  return class_multiply(alpha, beta.to_hpolynomial());
}

ChowClass dual(const ChowClass& alpha) {
  ChowClass r = alpha;
  for (int i = 0; i <= alpha.ambient(); ++i) {
    if ((alpha.ambient() - i) % 2 == 1) r[i] = -r[i];
  }
  return r;
}

ChowClass tensor_by(const ChowClass& alpha, const Integer& d) {
  const int n = alpha.ambient();
  ChowClass r(n);
  for (int i = 0; i <= n; ++i) {
    if (alpha[i] == 0) continue;
    const long c = n - i;
    if (c == 0) {
      r[i] += alpha[i];
      continue;
    }
    // (1 + dH)^(-c) = sum_k (-1)^k C(c+k-1, k) d^k H^k
    Integer dk = 1;
    for (long k = 0; k <= i; ++k) {
      Integer term = binomial(c + k - 1, k) * dk * alpha[i];
      r[i - static_cast<int>(k)] += (k % 2 == 0) ? term : Integer(-term);
      dk *= d;
    }
  }
  return r;
}

ChowClass component(const ChowClass& alpha, int k) {
  if (k < 0 || k > alpha.ambient()) throw std::out_of_range("component dimension out of range");
  return alpha.restricted(k, k);
}

Integer integral(const ChowClass& alpha) { return alpha[0]; }

HPolynomial tangent_pn(int n) {
  std::vector<Integer> c;
  for (int k = 0; k <= n + 1; ++k) c.push_back(binomial(n + 1, k));
  return HPolynomial(std::move(c)).truncated(static_cast<std::size_t>(n));
}

HPolynomial line_bundle(const Integer& d) { return HPolynomial::linear(d); }

HPolynomial ci_normal_bundle(std::span<const Integer> d_list, std::span<const Integer> e_list, std::size_t max_degree) {
  HPolynomial num = HPolynomial::constant(1);
  for (const Integer& d : d_list) num = (num * HPolynomial::linear(d)).truncated(max_degree);
  HPolynomial den = HPolynomial::constant(1);
  for (const Integer& e : e_list) den = (den * HPolynomial::linear(e)).truncated(max_degree);
  return (num * den.inverse(max_degree)).truncated(max_degree);
}

}  // namespace segre
