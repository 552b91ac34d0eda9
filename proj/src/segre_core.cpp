#include "segre/segre_core.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <string>

namespace segre {

namespace {

Integer ipow(const Integer& b, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<Polynomial> sliced(const HyperplaneChart& chart, std::span<const Polynomial> gens) {
  std::vector<Polynomial> out;
  for (const Polynomial& g : gens) {
    Polynomial h = chart(g);
    if (!h.is_zero()) out.push_back(std::move(h));
  }
  return out;
}

/// Number of points (with multiplicity) of `base` plus `count` random members
/// of the system that lie off X.
Integer residual_count(const ProjectiveScheme& base, std::span<const Polynomial> system, int count,
                       const ProjectiveScheme& x, Rng& rng, const SegreConfig& config, int level) {
  for (int attempt = 0; attempt < std::max(config.max_retries, 1); ++attempt) {
    std::vector<Polynomial> gens = base.gens();
    if (system.empty()) {
      if (count > 0) return 0;
    } else {
      for (int i = 0; i < count; ++i) gens.push_back(random_combination(system, rng));
    }
    Ideal j(base.ring(), std::move(gens));
    std::optional<Ideal> residual;
    if (config.paranoid || system.empty()) {
      residual = saturate_by_ideal(j, x.ideal());
    } else {
      const Polynomial g = random_combination(system, rng);
      if (g.is_zero()) continue;
      residual = saturate_by_poly(j, g);
    }
    ProjectiveScheme r(std::move(*residual));
    if (r.is_empty()) return 0;
    if (r.dimension() == 0) return r.degree();
  }
  throw GenericityFailure("positive-dimensional residual scheme at level " + std::to_string(level) + " after " +
                              std::to_string(config.max_retries) + " attempts",
                          level);
}

int max_degree(std::span<const Polynomial> gens) {
  int d = 0;
  for (const Polynomial& g : gens) d = std::max(d, g.degree());
  return d;
}

}  // namespace

bool DeltaSequence::consistent() const {
  if (r < 0) return deltas.empty();
  if (deltas.size() != static_cast<std::size_t>(r + 1) || lambdas.size() != deltas.size() ||
      degrees_y.size() != deltas.size()) {
    return false;
  }
  for (int j = 0; j <= r; ++j) {
    const auto k = static_cast<std::size_t>(j);
    if (lambdas[k] < 0) return false;
    if (deltas[k] != ipow(d, n - j) * degrees_y[k] - lambdas[k]) return false;
  }
  return true;
}

Integer projective_lambda(ProjectiveScheme y, std::span<const Polynomial> padded_gens, const ProjectiveScheme& x,
                          Rng& rng, const SegreConfig& config, int level) {
  const int nj = y.dimension();
  if (nj < 0) return 0;
  return residual_count(y, padded_gens, nj, x, rng, config, level);
}

std::vector<Polynomial> generators_off(const ProjectiveScheme& x, const ProjectiveScheme& y) {
  if (!x.ring()->same_as(*y.ring())) throw RingMismatch();
  const GroebnerBasis gy = y.ideal().basis();
  std::vector<Polynomial> out;
  for (const Polynomial& g : x.gens()) {
    if (!gy.contains(g)) out.push_back(g);
  }
  return out;
}

DeltaSequence delta_sequence(const ProjectiveScheme& x, const ProjectiveScheme& y, Rng& rng,
                             const SegreConfig& config) {
  ProjectiveScheme xs(ideal_sum(x.ideal(), y.ideal()));
  ProjectiveScheme ys = y;
  DeltaSequence ds;
  ds.N = y.ambient_dimension();
  ds.r = xs.dimension();
  if (ds.r < 0) return ds;

  std::vector<Polynomial> gens = generators_off(x, y);
  if (gens.empty() || same_hilbert_polynomial(xs.hilbert(), ys.hilbert(), y.ring()->nvars)) {
    throw std::invalid_argument("Segre class undefined for X = Y");
  }
  ds.n = ys.dimension();
  ds.d = max_degree(gens);
  std::vector<Polynomial> padded = pad_to_degree(gens, ds.d);

  for (int j = 0; j <= ds.r; ++j) {
    if (j > 0) {
      const HyperplaneChart chart = HyperplaneChart::random(ys.ring(), rng);
      ys = chart(ys);
      xs = chart(xs);
      padded = sliced(chart, padded);
    }
    const std::uint64_t level_seed = rng.next();
    Rng level_rng(level_seed);
    const std::int64_t deg_y = ys.degree();
    const Integer lambda = projective_lambda(ys, padded, xs, level_rng, config, j);
    ds.degrees_y.push_back(deg_y);
    ds.lambdas.push_back(lambda);
    ds.deltas.push_back(ipow(ds.d, ds.n - j) * deg_y - lambda);
    ds.seeds.push_back(level_seed);
  }
  return ds;
}

std::vector<std::vector<Integer>> segre_system_matrix(int n, int d, int r) {
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(r + 1), std::vector<Integer>(static_cast<std::size_t>(r + 1)));
  for (int j = 0; j <= r; ++j) {
    for (int i = j; i <= r; ++i) a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = binomial(n - j, i - j) * ipow(d, i - j);
  }
  return a;
}

std::vector<std::vector<Integer>> residual_system_matrix(int N, int d, int r) {
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(r + 1), std::vector<Integer>(static_cast<std::size_t>(r + 1)));
  for (int p = r; p >= 0; --p) {
    const int m = N - r + p;
    const auto row = static_cast<std::size_t>(r - p);
    for (int i = 0; i <= p; ++i) a[row][static_cast<std::size_t>(r - i)] = binomial(m, p - i) * ipow(d, p - i);
  }
  return a;
}

ChowClass solve_segre(const DeltaSequence& ds) {
  ChowClass s(ds.N);
  if (ds.r < 0) return s;
  if (!ds.consistent()) throw std::logic_error("inconsistent delta sequence");
  const auto a = segre_system_matrix(ds.n, ds.d, ds.r);
  for (int j = ds.r; j >= 0; --j) {
    Integer v = ds.deltas[static_cast<std::size_t>(j)];
    for (int i = j + 1; i <= ds.r; ++i) v -= a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] * s[i];
    s[j] = v;
  }
  for (int i = 0; i <= ds.r; ++i) {
    Integer closed = 0;
    for (int j = i; j <= ds.r; ++j) {
      closed += binomial(ds.n - i, j - i) * ipow(-ds.d, j - i) * ds.deltas[static_cast<std::size_t>(j)];
    }
    if (closed != s[i]) throw std::logic_error("closed-form Segre coefficient disagrees with back-substitution");
  }
  return s;
}

SegreResult segre_class(const ProjectiveScheme& x, const ProjectiveScheme& y, const SegreConfig& config) {
  if (!x.ring()->same_as(*y.ring())) throw RingMismatch();
  auto run = [&config](ProjectiveScheme xr, ProjectiveScheme yr, std::uint64_t seed) {
    Rng rng(seed);
    DeltaSequence ds = delta_sequence(xr, yr, rng, config);
    ChowClass s = solve_segre(ds);
    return std::pair{std::move(s), std::move(ds)};
  };

  SegreResult result{ChowClass(y.ambient_dimension()), {}, y.ring()->field.modulus(), {}};
  if (!config.verify) {
    result.seeds = {config.seed};
    std::tie(result.segre_class, result.deltas) = run(x, y, config.seed);
    return result;
  }

  const std::uint64_t s1 = derive_seed(config.seed, 1), s2 = derive_seed(config.seed, 2);
  auto second = std::async(std::launch::async, run, x, y, s2);
  auto first = run(x, y, s1);
  auto other = second.get();
  result.seeds = {s1, s2};
  if (first.first == other.first) {
    std::tie(result.segre_class, result.deltas) = std::move(first);
    return result;
  }
  const std::uint64_t s3 = derive_seed(config.seed, 3);
  auto third = run(x, y, s3);
  result.seeds.push_back(s3);
  if (third.first == first.first) {
    std::tie(result.segre_class, result.deltas) = std::move(first);
  } else if (third.first == other.first) {
    std::tie(result.segre_class, result.deltas) = std::move(other);
  } else {
    throw RandomizationInconsistency();
  }
  return result;
}

ChowClass aluffi_segre_pn_oracle(const ProjectiveScheme& x, const SegreConfig& config) {
  const int big_n = x.ambient_dimension();
  ProjectiveScheme xs = x;
  const int r = xs.dimension();
  if (r < 0) return ChowClass(big_n);
  if (r == big_n) throw std::invalid_argument("Segre class undefined for X = Y");
  const int d = max_degree(x.gens());
  const std::vector<Polynomial> padded = pad_to_degree(x.gens(), d);

  Rng rng(derive_seed(config.seed, 0x0a1f));
  ChowClass g(big_n);
  for (int i = 0; i <= big_n; ++i) {
    // restrict to a general P^(N-i), then N-i members of the system
    ProjectiveScheme base(x.ring(), {});
    ProjectiveScheme xi = x;
    std::vector<Polynomial> system = padded;
    for (int k = 0; k < i; ++k) {
      const HyperplaneChart chart = HyperplaneChart::random(base.ring(), rng);
      base = chart(base);
      xi = chart(xi);
      system = sliced(chart, system);
    }
    g[i] = residual_count(base, system, big_n - i, xi, rng, config, i);
  }
  const ChowClass twisted = class_multiply(tensor_by(g, d), HPolynomial::linear(d).inverse(static_cast<std::size_t>(big_n)));
  return (ChowClass::linear(big_n, big_n) - twisted).restricted(0, r);
}

}  // namespace segre
