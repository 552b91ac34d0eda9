#include "segre/applications.hpp"

namespace segre {

namespace {

int hypersurface_degree(const Polynomial& f) {
  if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1) {
    throw std::invalid_argument("expected a nonzero homogeneous form of positive degree");
  }
  return f.degree();
}

/// c(TP^N) cap ( dH/(1+dH) cap [P^N] + tensor_by(dual(inner), d) )
ChowClass characteristic_class(int big_n, int d, const ChowClass& inner) {
  const auto top = static_cast<std::size_t>(big_n);
  const HPolynomial divisor = HPolynomial({0, d}) * HPolynomial::linear(d).inverse(top);
  const ChowClass body = class_multiply(ChowClass::linear(big_n, big_n), divisor) + tensor_by(dual(inner), d);
  return class_multiply(body, tangent_pn(big_n));
}

Integer ipow(const Integer& b, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

SegreResult traced(const ProjectiveScheme& x, const ProjectiveScheme& y, const SegreConfig& config, SegreResult* trace) {
  SegreResult r = segre_class(x, y, config);
  if (trace != nullptr) *trace = r;
  return r;
}

}  // namespace

ChowClass csm_hypersurface(const Polynomial& f, const SegreConfig& config, SegreResult* trace) {
  const int d = hypersurface_degree(f);
  const RingPtr& ring = f.ring();
  const int big_n = ring->nvars - 1;
  const ProjectiveScheme j = singularity_subscheme(f);
  const ChowClass s = traced(j, ProjectiveScheme(ring, {}), config, trace).segre_class;
  return characteristic_class(big_n, d, class_multiply(s, line_bundle(d)));
}

ChowClass chern_mather_hypersurface(const Polynomial& f, const SegreConfig& config, SegreResult* trace) {
  const int d = hypersurface_degree(f);
  const RingPtr& ring = f.ring();
  const int big_n = ring->nvars - 1;
  const ProjectiveScheme j = singularity_subscheme(f);
  const ChowClass s = traced(j, ProjectiveScheme(ring, {f}), config, trace).segre_class;
  return characteristic_class(big_n, d, s);
}

PolarClasses polar_classes_from_segre(int d, int n, const ChowClass& s) {
  PolarClasses p{n, {}};
  for (int k = 0; k <= n; ++k) {
    Integer rho = d * ipow(d - 1, k);
    for (int i = 0; i < k; ++i) rho -= binomial(k, i) * ipow(d - 1, i) * s[n - k + i];
    p.rho.push_back(rho);
  }
  return p;
}

PolarClasses polar_classes(const ProjectiveScheme& z, const SegreConfig& config, SegreResult* trace) {
  ProjectiveScheme zs = z;
  const int n = zs.dimension();
  if (n < 0) throw std::invalid_argument("polar classes of the empty scheme");
  if (n == zs.ambient_dimension()) throw std::invalid_argument("polar classes need a proper subvariety");
  if (zs.ambient_dimension() - n > 1) {
    Rng rng(derive_seed(config.seed, 0x9e0));
    zs = generic_projection_image(zs, rng, config.max_retries);
  }
  const Polynomial f = hypersurface_equation(zs);
  const ProjectiveScheme hyper(f.ring(), {f});
  const ChowClass s = traced(singularity_subscheme(f), hyper, config, trace).segre_class;
  return polar_classes_from_segre(f.degree(), n, s);
}

std::vector<Integer> mather_coefficients(const ChowClass& c_ma, int n) {
  std::vector<Integer> sigma;
  for (int k = 0; k <= n; ++k) sigma.push_back(c_ma[n - k]);
  return sigma;
}

namespace {

std::vector<Integer> piene(std::span<const Integer> in, int n) {
  std::vector<Integer> out;
  for (int k = 0; k <= n; ++k) {
    Integer v = 0;
    for (int i = 0; i <= k; ++i) {
      const Integer t = binomial(n + 1 - i, k - i) * in[static_cast<std::size_t>(i)];
      v += (i % 2 == 0) ? t : Integer(-t);
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<Integer> mather_from_polar(const PolarClasses& p) {
  if (p.rho.size() != static_cast<std::size_t>(p.n + 1)) throw std::invalid_argument("expected n+1 polar degrees");
  return piene(p.rho, p.n);
}

PolarClasses polar_from_mather(std::span<const Integer> sigma, int n) {
  if (sigma.size() != static_cast<std::size_t>(n + 1)) throw std::invalid_argument("expected n+1 Mather coefficients");
  return {n, piene(sigma, n)};
}

Integer ed_degree(const ProjectiveScheme& z, const SegreConfig& config, SegreResult* trace) {
  Integer total = 0;
  for (const Integer& r : polar_classes(z, config, trace).rho) total += r;
  return total;
}

Integer tau_degree(int m, int k) {
  if (m < 1 || k < 0 || k > m) throw std::invalid_argument("corank must lie in [0, m]");
  Integer num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= binomial(m + i, k);
    den *= binomial(k + i, k);
  }
  return num / den;
}

DegeneracyResult degeneracy_projection_degree(int m, int k, const ProjectiveScheme& center, const SegreConfig& config,
                                              SegreResult* trace) {
  if (center.ring()->nvars != m * m) throw std::invalid_argument("ring must have m^2 variables");
  if (k < 1 || k > m) throw std::invalid_argument("corank must lie in [1, m]");
  const ProjectiveScheme tau = rank_locus(center.ring(), m, m - k);
  const int big_n = m * m - 1;
  ChowClass s = traced(center, tau, config, trace).segre_class;
  const HPolynomial c = HPolynomial::linear(1).pow(static_cast<unsigned>(m * m - k * k - 1), static_cast<std::size_t>(big_n));
  const Integer degree = tau_degree(m, k) - integral(class_multiply(s, c));
  return {std::move(s), degree};
}

ChowClass intersection_product(const ProjectiveScheme& x, const ProjectiveScheme& v, const ProjectiveScheme& y,
                               std::span<const Integer> d_list, std::span<const Integer> e_list,
                               const SegreConfig& config, SegreResult* trace) {
  ProjectiveScheme xs = x, vs = v, ys = y;
  const int big_n = y.ambient_dimension();
  const int target = vs.dimension() + xs.dimension() - ys.dimension();
  if (target < 0) return ChowClass(big_n);
  ProjectiveScheme w(ideal_sum(x.ideal(), v.ideal()));
  ChowClass s(big_n);
  if (same_hilbert_polynomial(w.hilbert(), vs.hilbert(), v.ring()->nvars)) {
    // V lies in X, s(V, V) = [V]
    s[vs.dimension()] = vs.degree();
  } else {
    s = traced(w, v, config, trace).segre_class;
  }
  const HPolynomial c = ci_normal_bundle(d_list, e_list, static_cast<std::size_t>(big_n));
  return component(class_multiply(s, c), target);
}

}  // namespace segre
