#include "segre/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace segre {

// ---- Monomial ----

Monomial Monomial::variable(int i, int power) {
  if (i < 0 || i >= kMaxVars) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.exp[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(power);
  m.deg = static_cast<std::uint32_t>(power);
  return m;
}

Monomial Monomial::from_exponents(std::span<const int> e) {
  if (e.size() > static_cast<std::size_t>(kMaxVars)) throw std::out_of_range("too many variables");
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > std::numeric_limits<std::uint16_t>::max()) {
      throw std::out_of_range("exponent out of range");
    }
    m.exp[i] = static_cast<std::uint16_t>(e[i]);
    m.deg += static_cast<std::uint32_t>(e[i]);
  }
  return m;
}

bool Monomial::divides(const Monomial& m) const {
  if (deg > m.deg) return false;
  for (int i = 0; i < kMaxVars; ++i) {
    if (exp[i] > m.exp[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& d) const {
  Monomial q;
  for (int i = 0; i < kMaxVars; ++i) q.exp[i] = static_cast<std::uint16_t>(exp[i] - d.exp[i]);
  q.deg = deg - d.deg;
  return q;
}

Monomial Monomial::lcm(const Monomial& m) const {
  Monomial l;
  for (int i = 0; i < kMaxVars; ++i) {
    l.exp[i] = std::max(exp[i], m.exp[i]);
    l.deg += l.exp[i];
  }
  return l;
}

bool Monomial::coprime(const Monomial& m) const {
  for (int i = 0; i < kMaxVars; ++i) {
    if (exp[i] != 0 && m.exp[i] != 0) return false;
  }
  return true;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (exp[i] != 0) mask |= 1u << i;
  }
  return mask;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned{a.exp[i]} + b.exp[i];
    if (s > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(s);
  }
  r.deg = a.deg + b.deg;
  return r;
}

// ---- MonomialOrder ----

namespace {

int revlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = hi - 1; i >= lo; --i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

std::uint32_t partial_degree(const Monomial& a, int hi) {
  std::uint32_t d = 0;
  for (int i = 0; i < hi; ++i) d += a.exp[i];
  return d;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind == OrderKind::DegRevLex) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    return revlex_range(a, b, 0, kMaxVars);
  }
  std::uint32_t da = partial_degree(a, block), db = partial_degree(b, block);
  if (da != db) return da < db ? -1 : 1;
  if (int c = revlex_range(a, b, 0, block); c != 0) return c;
  std::uint32_t ra = a.deg - da, rb = b.deg - db;
  if (ra != rb) return ra < rb ? -1 : 1;
  return revlex_range(a, b, block, kMaxVars);
}

// ---- Ring ----

std::string Ring::var_name(int i) const {
  if (static_cast<std::size_t>(i) < names.size()) return names[static_cast<std::size_t>(i)];
  return "x" + std::to_string(i);
}

RingPtr make_ring(int nvars, PrimeField field, MonomialOrder order, std::vector<std::string> names) {
  if (nvars < 1 || nvars > kMaxVars) {
    throw std::invalid_argument("ring must have between 1 and " + std::to_string(kMaxVars) + " variables");
  }
  return std::make_shared<const Ring>(Ring{nvars, field, order, std::move(names)});
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order == order) return ring;
  return make_ring(ring->nvars, ring->field, order, ring->names);
}

// ---- Polynomial ----

Polynomial Polynomial::constant(RingPtr ring, Fp c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  if (i < 0 || i >= ring->nvars) throw std::out_of_range("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(i), Fp{1});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Fp c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const MonomialOrder& ord = ring->order;
  const PrimeField& F = ring->field;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(t);
    }
  }
  return Polynomial(std::move(ring), std::move(out));
}

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.deg));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const Term& t : terms_) {
    if (t.mono.deg != terms_.front().mono.deg) return false;
  }
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_, terms_);
  for (Term& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

Polynomial Polynomial::scaled(Fp c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_, terms_);
  for (Term& t : r.terms_) t.coeff = field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::shifted(const Monomial& m, Fp c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_, terms_);
  for (Term& t : r.terms_) {
    t.mono = t.mono * m;
    t.coeff = field().mul(t.coeff, c);
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(leading().coeff));
}

Polynomial Polynomial::in_ring(RingPtr target) const {
  if (target->nvars != ring_->nvars || !(target->field == ring_->field)) throw RingMismatch();
  if (target->order == ring_->order) return Polynomial(std::move(target), terms_);
  return from_terms(std::move(target), terms_);
}

namespace {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring() && !a.ring()->same_as(*b.ring())) throw RingMismatch();
}

}  // namespace

Polynomial Polynomial::sub_mul(Fp c, const Monomial& m, const Polynomial& g) const {
  check_same_ring(*this, g);
  const PrimeField& F = field();
  const MonomialOrder& ord = ring_->order;
  Fp negc = F.neg(c);
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto i = terms_.begin();
  auto j = g.terms_.begin();
  while (i != terms_.end() && j != g.terms_.end()) {
    Monomial mj = j->mono * m;
    int cmp = ord.compare(i->mono, mj);
    if (cmp > 0) {
      out.push_back(*i++);
    } else if (cmp < 0) {
      out.push_back({mj, F.mul(negc, j->coeff)});
      ++j;
    } else {
      Fp s = F.add(i->coeff, F.mul(negc, j->coeff));
      if (!s.is_zero()) out.push_back({i->mono, s});
      ++i;
      ++j;
    }
  }
  for (; i != terms_.end(); ++i) out.push_back(*i);
  for (; j != g.terms_.end(); ++j) out.push_back({j->mono * m, F.mul(negc, j->coeff)});
  return Polynomial(ring_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return a.sub_mul(a.field().neg(Fp{1}), Monomial::one(), b);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a.sub_mul(Fp{1}, Monomial::one(), b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  const PrimeField& F = a.field();
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) prod.push_back({s.mono * t.mono, F.mul(s.coeff, t.coeff)});
  }
  return Polynomial::from_terms(a.ring_, std::move(prod));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    std::int64_t c = field().to_signed(t.coeff);
    bool negative = c < 0;
    std::uint64_t mag = negative ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || t.mono.is_one()) {
      os << mag;
      wrote = true;
    }
    for (int i = 0; i < ring_->nvars; ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << ring_->var_name(i);
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

Polynomial pow(const Polynomial& f, unsigned e) {
  Polynomial result = Polynomial::constant(f.ring(), Fp{1});
  Polynomial base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

// ---- free functions ----

std::vector<Monomial> monomials_of_degree(int num_vars, int e) {
  if (e < 0) throw std::invalid_argument("negative degree");
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(num_vars), 0);
  // enumerate compositions of e into num_vars parts, lexicographically descending
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == num_vars - 1) {
      exps[static_cast<std::size_t>(var)] = remaining;
      out.push_back(Monomial::from_exponents(exps));
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      exps[static_cast<std::size_t>(var)] = k;
      self(self, var + 1, remaining - k);
    }
  };
  if (num_vars > 0) rec(rec, 0, e);
  MonomialOrder ord = MonomialOrder::degrevlex();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
  return out;
}

Polynomial random_form(const RingPtr& ring, int degree, Rng& rng) {
  std::vector<Term> terms;
  for (const Monomial& m : monomials_of_degree(ring->nvars, degree)) {
    terms.push_back({m, rng.element(ring->field)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial random_combination(std::span<const Polynomial> gens, Rng& rng) {
  if (gens.empty()) throw std::invalid_argument("random_combination of an empty generator list");
  const RingPtr& ring = gens.front().ring();
  std::vector<Term> terms;
  for (const Polynomial& g : gens) {
    Fp lambda = rng.element(ring->field);
    for (const Term& t : g.terms()) terms.push_back({t.mono, ring->field.mul(lambda, t.coeff)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<Polynomial> partial_derivatives(const Polynomial& f) {
  const RingPtr& ring = f.ring();
  const PrimeField& F = ring->field;
  std::vector<Polynomial> out;
  for (int i = 0; i < ring->nvars; ++i) {
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
      int e = t.mono[i];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.exp[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e - 1);
      m.deg -= 1;
      terms.push_back({m, F.mul(t.coeff, F.from_int(e))});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != static_cast<std::size_t>(f.ring()->nvars)) {
    throw std::invalid_argument("substitute: one image per variable required");
  }
  const RingPtr& target = images.front().ring();
  // cache powers of each image
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) powers[i].push_back(Polynomial::constant(target, Fp{1}));
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][static_cast<std::size_t>(e)];
  };
  Polynomial result(target);
  for (const Term& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      int e = t.mono[static_cast<int>(i)];
      if (e > 0) term = term * power(i, e);
    }
    result = result + term;
  }
  return result;
}

Polynomial embed(const Polynomial& f, const RingPtr& target, int offset) {
  if (f.ring()->nvars + offset > target->nvars) throw RingMismatch();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < f.ring()->nvars; ++i) m.exp[static_cast<std::size_t>(i + offset)] = t.mono[i];
    m.deg = t.mono.deg;
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial project(const Polynomial& f, const RingPtr& target, int offset) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < f.ring()->nvars; ++i) {
      if (i < offset || i - offset >= target->nvars) {
        if (t.mono[i] != 0) throw std::invalid_argument("project: polynomial uses dropped variables");
        continue;
      }
      m.exp[static_cast<std::size_t>(i - offset)] = t.mono[i];
    }
    m.deg = t.mono.deg;
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DivisionByZero();
  const PrimeField& F = f.field();
  Fp lead_inv = F.inv(g.leading().coeff);
  Polynomial rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading();
    if (!g.leading_monomial().divides(lt.mono)) throw std::domain_error("divide_exact: not divisible");
    Monomial q = lt.mono.quotient(g.leading_monomial());
    Fp c = F.mul(lt.coeff, lead_inv);
    quotient.push_back({q, c});
    rest = rest.sub_mul(c, q, g);
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient));
}

}  // namespace segre
