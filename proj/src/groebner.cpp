#include "segre/groebner.hpp"

#include <algorithm>
#include <limits>

namespace segre {

namespace {

struct Reducer {
  const Polynomial* poly;
  Monomial lm;
  std::uint32_t mask;
};

const Reducer* find_reducer(const std::vector<Reducer>& reducers, const Monomial& m) {
  const std::uint32_t mask = m.support_mask();
  for (const Reducer& r : reducers) {
    if ((r.mask & ~mask) == 0 && r.lm.divides(m)) return &r;
  }
  return nullptr;
}

// live = h[start..], result = live - c*m*g
std::vector<Term> merge_sub(const std::vector<Term>& h, std::size_t start, Fp c, const Monomial& m,
                            const Polynomial& g, const Ring& ring) {
  const PrimeField& F = ring.field;
  const MonomialOrder& ord = ring.order;
  const Fp negc = F.neg(c);
  const auto& gt = g.terms();
  std::vector<Term> out;
  out.reserve(h.size() - start + gt.size());
  std::size_t i = start, j = 0;
  while (i < h.size() && j < gt.size()) {
    Monomial mj = gt[j].mono * m;
    int cmp = ord.compare(h[i].mono, mj);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back({mj, F.mul(negc, gt[j].coeff)});
      ++j;
    } else {
      Fp s = F.add(h[i].coeff, F.mul(negc, gt[j].coeff));
      if (!s.is_zero()) out.push_back({h[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < h.size(); ++i) out.push_back(h[i]);
  for (; j < gt.size(); ++j) out.push_back({gt[j].mono * m, F.mul(negc, gt[j].coeff)});
  return out;
}

/// Full reduction (leading and tail terms) of f modulo the reducers.
Polynomial reduce(const Polynomial& f, const std::vector<Reducer>& reducers) {
  const Ring& ring = *f.ring();
  const PrimeField& F = ring.field;
  std::vector<Term> h = f.terms();
  std::vector<Term> remainder;
  std::size_t start = 0;
  while (start < h.size()) {
    const Term& lt = h[start];
    const Reducer* r = find_reducer(reducers, lt.mono);
    if (r == nullptr) {
      remainder.push_back(lt);
      ++start;
      continue;
    }
    const Term& glt = r->poly->leading();
    Fp c = F.div(lt.coeff, glt.coeff);
    Monomial q = lt.mono.quotient(r->lm);
    h = merge_sub(h, start, c, q, *r->poly, ring);
    start = 0;
  }
  return Polynomial::from_sorted(f.ring(), std::move(remainder));
}

struct Entry {
  Polynomial poly;
  Monomial lm;
  std::uint32_t mask;
  std::uint32_t sugar;
  bool active;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t sugar;
};

std::uint32_t sugar_of(const Polynomial& p) { return static_cast<std::uint32_t>(std::max(p.degree(), 0)); }

class BuchbergerRun {
 public:
  explicit BuchbergerRun(RingPtr ring) : ring_(std::move(ring)) {}

  void add_input(const Polynomial& g) {
    Polynomial h = reduce(g, reducers());
    if (h.is_zero()) return;
    insert(h.monic(), sugar_of(g));
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.sugar < b.sugar || (a.sugar == b.sugar && ring_->order.compare(a.lcm, b.lcm) < 0)) best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      Polynomial s = s_polynomial(entries_[p.i].poly, entries_[p.j].poly);
      Polynomial h = reduce(s, reducers());
      if (h.is_zero()) continue;
      std::uint32_t sugar = std::max(p.sugar, sugar_of(h));
      insert(h.monic(), sugar);
    }
  }

  std::vector<Polynomial> reduced_basis() {
    if (unit_) return {Polynomial::constant(ring_, Fp{1})};
    std::vector<std::size_t> active;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (entries_[k].active) active.push_back(k);
    }
    std::vector<Polynomial> out;
    for (std::size_t k : active) {
      std::vector<Reducer> others;
      for (std::size_t o : active) {
        if (o != k) others.push_back({&entries_[o].poly, entries_[o].lm, entries_[o].mask});
      }
      const Polynomial& g = entries_[k].poly;
      // leading term is irreducible by minimality; reduce the tail only
      std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
      Polynomial t = reduce(Polynomial::from_sorted(ring_, std::move(tail)), others);
      std::vector<Term> terms{g.leading()};
      terms.insert(terms.end(), t.terms().begin(), t.terms().end());
      out.push_back(Polynomial::from_sorted(ring_, std::move(terms)).monic());
    }
    return out;
  }

 private:
  std::vector<Reducer> reducers() const {
    std::vector<Reducer> r;
    for (const Entry& e : entries_) {
      if (e.active) r.push_back({&e.poly, e.lm, e.mask});
    }
    return r;
  }

  // Gebauer-Moeller update for the new element h
  void insert(Polynomial h, std::uint32_t sugar) {
    if (h.is_constant()) {
      unit_ = true;
      return;
    }
    const std::size_t t = entries_.size();
    const Monomial hlm = h.leading_monomial();
    const std::uint32_t hdeg = hlm.deg;
    const std::uint32_t hsugar = std::max(sugar, static_cast<std::uint32_t>(h.degree()));

    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (!entries_[k].active) continue;
      Monomial l = entries_[k].lm.lcm(hlm);
      std::uint32_t s = std::max(entries_[k].sugar + (l.deg - entries_[k].lm.deg), hsugar + (l.deg - hdeg));
      candidates.push_back({k, t, l, s});
    }
    // chain criterion among the new pairs: drop pairs whose lcm is a strict multiple
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      bool dominated = false;
      for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
        dominated = b != a && candidates[b].lcm.divides(candidates[a].lcm) && !(candidates[b].lcm == candidates[a].lcm);
      }
      if (!dominated) kept.push_back(candidates[a]);
    }
    // one pair per lcm; none at all if some pair with that lcm is coprime
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < kept.size(); ++a) {
      bool first = true, coprime = false;
      for (std::size_t b = 0; b < kept.size(); ++b) {
        if (!(kept[b].lcm == kept[a].lcm)) continue;
        if (b < a) first = false;
        if (entries_[kept[b].i].lm.coprime(hlm)) coprime = true;
      }
      if (first && !coprime) fresh.push_back(kept[a]);
    }
    // prune old pairs whose lcm is a strict multiple through h
    std::vector<Pair> old;
    for (const Pair& p : pairs_) {
      if (hlm.divides(p.lcm) && !(entries_[p.i].lm.lcm(hlm) == p.lcm) && !(entries_[p.j].lm.lcm(hlm) == p.lcm)) {
        continue;
      }
      old.push_back(p);
    }
    pairs_ = std::move(old);
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());
    for (Entry& e : entries_) {
      if (e.active && hlm.divides(e.lm)) e.active = false;
    }
    entries_.push_back({std::move(h), hlm, hlm.support_mask(), hsugar, true});
    // pairs referencing inactive elements are still valid S-pairs; keep them
  }

  RingPtr ring_;
  std::vector<Entry> entries_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

std::vector<Polynomial> sort_basis(std::vector<Polynomial> gens) {
  if (gens.empty()) return gens;
  const MonomialOrder& ord = gens.front().ring()->order;
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return gens;
}

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> reduced)
    : ring_(std::move(ring)), gens_(sort_basis(std::move(reduced))) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const Polynomial& g : gens_) out.push_back(g.leading_monomial());
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  Polynomial g = f.in_ring(ring_);
  std::vector<Reducer> reducers;
  for (const Polynomial& b : gens_) reducers.push_back({&b, b.leading_monomial(), b.leading_monomial().support_mask()});
  return reduce(g, reducers);
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.gens_.size() != b.gens_.size()) return false;
  for (std::size_t i = 0; i < a.gens_.size(); ++i) {
    if (!(a.gens_[i] == b.gens_[i])) return false;
  }
  return true;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const PrimeField& F = f.field();
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = f.shifted(l.quotient(f.leading_monomial()), F.inv(f.leading().coeff));
  return a.sub_mul(F.inv(g.leading().coeff), l.quotient(g.leading_monomial()), g);
}

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens) {
  BuchbergerRun run(ring);
  // smallest generators first keeps early reductions cheap
  std::vector<Polynomial> input;
  for (const Polynomial& g : gens) {
    Polynomial h = g.in_ring(ring);
    if (!h.is_zero()) input.push_back(std::move(h));
  }
  std::stable_sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (const Polynomial& g : input) run.add_input(g);
  run.run();
  return GroebnerBasis(ring, run.reduced_basis());
}

std::vector<Polynomial> eliminate(const RingPtr& ring, std::span<const Polynomial> gens, int k) {
  RingPtr elim = with_order(ring, MonomialOrder::eliminate(k));
  GroebnerBasis gb = buchberger(elim, gens);
  std::vector<Polynomial> out;
  for (const Polynomial& g : gb.generators()) {
    bool free = true;
    for (const Term& t : g.terms()) {
      for (int i = 0; i < k && free; ++i) free = t.mono[i] == 0;
      if (!free) break;
    }
    if (free) out.push_back(g.in_ring(ring));
  }
  return out;
}

// ---- Hilbert series ----

namespace {

using IntPoly = std::vector<std::int64_t>;

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::vector<Monomial> out;
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& o : out) {
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  return out;
}

IntPoly numerator_rec(const std::vector<Monomial>& gens) {
  if (gens.empty()) return {1};
  // base case: pairwise coprime generators
  bool coprime = true;
  std::array<int, kMaxVars> count{};
  for (const Monomial& m : gens) {
    for (int i = 0; i < kMaxVars; ++i) {
      if (m.exp[i] == 0) continue;
      if (++count[i] > 1) coprime = false;
    }
  }
  if (coprime) {
    IntPoly r{1};
    for (const Monomial& m : gens) {
      IntPoly f(m.deg + 1, 0);
      f[0] = 1;
      f[m.deg] -= 1;
      r = poly_mul(r, f);
    }
    return r;
  }
  int pivot_var = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  int e = std::numeric_limits<int>::max();
  for (const Monomial& m : gens) {
    if (m.exp[pivot_var] > 0) e = std::min(e, static_cast<int>(m.exp[pivot_var]));
  }
  Monomial pivot = Monomial::variable(pivot_var, e);

  std::vector<Monomial> with_pivot{pivot};
  std::vector<Monomial> colon;
  for (const Monomial& m : gens) {
    if (!pivot.divides(m)) with_pivot.push_back(m);
    Monomial q = m;
    std::uint16_t sub = std::min<std::uint16_t>(m.exp[pivot_var], static_cast<std::uint16_t>(e));
    q.exp[pivot_var] = static_cast<std::uint16_t>(q.exp[pivot_var] - sub);
    q.deg -= sub;
    colon.push_back(q);
  }
  IntPoly a = numerator_rec(minimalize(std::move(with_pivot)));
  IntPoly b = numerator_rec(minimalize(std::move(colon)));
  IntPoly shifted(static_cast<std::size_t>(e), 0);
  shifted.insert(shifted.end(), b.begin(), b.end());
  IntPoly r = poly_add(a, shifted);
  trim(r);
  return r;
}

bool divide_one_minus_t(IntPoly& p) {
  // p = (1 - t) q  <=>  q_k = p_0 + ... + p_k and sum p = 0
  std::int64_t total = 0;
  for (std::int64_t c : p) total += c;
  if (total != 0) return false;
  IntPoly q(p.size() > 1 ? p.size() - 1 : 1, 0);
  std::int64_t acc = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    acc += p[k];
    q[k] = acc;
  }
  p = std::move(q);
  trim(p);
  return true;
}

bool is_zero_poly(const IntPoly& p) {
  return std::all_of(p.begin(), p.end(), [](std::int64_t c) { return c == 0; });
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, int nvars) {
  (void)nvars;
  for (const Monomial& m : gens) {
    if (m.is_one()) return {0};
  }
  return numerator_rec(minimalize(std::move(gens)));
}

HilbertData hilbert_data(std::vector<std::int64_t> numerator, int nvars) {
  HilbertData h;
  h.numerator = numerator;
  if (is_zero_poly(numerator)) return h;
  IntPoly q = std::move(numerator);
  int e = 0;
  while (e < nvars && divide_one_minus_t(q)) ++e;
  int dim = nvars - 1 - e;
  if (dim < 0) return h;
  h.projective_dimension = dim;
  std::int64_t deg = 0;
  for (std::int64_t c : q) deg += c;
  h.degree = deg;
  return h;
}

HilbertData hilbert_data(const GroebnerBasis& gb) {
  int nvars = gb.ring()->nvars;
  return hilbert_data(hilbert_numerator(gb.leading_monomials(), nvars), nvars);
}

HilbertData proj_dim_degree(const RingPtr& ring, std::span<const Polynomial> gens) {
  return hilbert_data(buchberger(with_order(ring, MonomialOrder::degrevlex()), gens));
}

bool same_hilbert_polynomial(const HilbertData& a, const HilbertData& b, int nvars) {
  IntPoly diff(std::max(a.numerator.size(), b.numerator.size()), 0);
  for (std::size_t i = 0; i < a.numerator.size(); ++i) diff[i] += a.numerator[i];
  for (std::size_t i = 0; i < b.numerator.size(); ++i) diff[i] -= b.numerator[i];
  trim(diff);
  int e = 0;
  while (!is_zero_poly(diff) && e < nvars && divide_one_minus_t(diff)) ++e;
  return is_zero_poly(diff) || e >= nvars;
}

}  // namespace segre
