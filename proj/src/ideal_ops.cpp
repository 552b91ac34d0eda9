#include "segre/ideal_ops.hpp"

#include <algorithm>
#include <functional>

namespace segre {

namespace {

std::vector<Polynomial> nonzero(std::span<const Polynomial> gens, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const Polynomial& g : gens) {
    if (!g.is_zero()) out.push_back(g.in_ring(ring));
  }
  return out;
}

void check_ring(const Ideal& a, const Ideal& b) {
  if (a.ring != b.ring && !a.ring->same_as(*b.ring)) throw RingMismatch();
}

void check_ring(const Ideal& a, const Polynomial& f) {
  if (a.ring != f.ring() && !a.ring->same_as(*f.ring())) throw RingMismatch();
}

/// Ring with `extra` new variables in front, block-eliminating them.
RingPtr prepend_variables(const RingPtr& ring, int extra) {
  if (ring->nvars + extra > kMaxVars) {
    throw std::length_error("auxiliary ring would exceed " + std::to_string(kMaxVars) + " variables");
  }
  return make_ring(ring->nvars + extra, ring->field, MonomialOrder::eliminate(extra));
}

std::vector<Polynomial> back_to(const RingPtr& ring, std::span<const Polynomial> gens, int offset) {
  std::vector<Polynomial> out;
  for (const Polynomial& g : gens) out.push_back(project(g, ring, offset));
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr r, std::vector<Polynomial> g) : ring(std::move(r)), gens(nonzero(g, ring)) {}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

ProjectiveScheme::ProjectiveScheme(Ideal ideal) : ideal_(std::move(ideal)) {
  if (!ideal_.is_homogeneous()) throw std::invalid_argument("projective scheme needs homogeneous generators");
  if (!(ideal_.ring->order == MonomialOrder::degrevlex())) {
    ideal_ = Ideal(with_order(ideal_.ring, MonomialOrder::degrevlex()), ideal_.gens);
  }
}

const HilbertData& ProjectiveScheme::hilbert() {
  if (!cache_) cache_ = hilbert_data(ideal_.basis());
  return *cache_;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_ring(a, b);
  std::vector<Polynomial> gens = a.gens;
  for (const Polynomial& g : b.gens) gens.push_back(g.in_ring(a.ring));
  return Ideal(a.ring, std::move(gens));
}

Ideal intersect_ideals(const Ideal& a, const Ideal& b) {
  check_ring(a, b);
  RingPtr ext = prepend_variables(a.ring, 1);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, Fp{1}) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : a.gens) gens.push_back(t * embed(g, ext, 1));
  for (const Polynomial& g : b.gens) gens.push_back(one_minus_t * embed(g, ext, 1));
  return Ideal(a.ring, back_to(a.ring, eliminate(ext, gens, 1), 1));
}

Ideal colon_by_poly(const Ideal& a, const Polynomial& f) {
  check_ring(a, f);
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  Ideal meet = intersect_ideals(a, Ideal(a.ring, {f}));
  std::vector<Polynomial> gens;
  for (const Polynomial& g : meet.gens) gens.push_back(divide_exact(g, f.in_ring(a.ring)));
  return Ideal(a.ring, std::move(gens));
}

Ideal saturate_by_poly(const Ideal& a, const Polynomial& f) {
  check_ring(a, f);
  if (f.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
  if (f.is_constant()) return a;
  RingPtr ext = prepend_variables(a.ring, 1);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : a.gens) gens.push_back(embed(g, ext, 1));
  gens.push_back(Polynomial::variable(ext, 0) * embed(f, ext, 1) - Polynomial::constant(ext, Fp{1}));
  return Ideal(a.ring, back_to(a.ring, eliminate(ext, gens, 1), 1));
}

Ideal saturate_by_poly_iterated(const Ideal& a, const Polynomial& f) {
  Ideal current = a;
  GroebnerBasis gb = current.basis();
  for (;;) {
    Ideal next = colon_by_poly(current, f);
    GroebnerBasis next_gb = next.basis();
    if (next_gb == gb) return Ideal(a.ring, next_gb.generators());
    current = std::move(next);
    gb = std::move(next_gb);
  }
}

Ideal saturate_by_ideal(const Ideal& a, const Ideal& k) {
  check_ring(a, k);
  if (k.gens.empty()) throw std::invalid_argument("saturation by the zero ideal");
  GroebnerBasis gb = a.basis();
  std::optional<Ideal> result;
  for (const Polynomial& g : k.gens) {
    // g in I contributes the unit ideal to the intersection
    if (gb.contains(g)) continue;
    Ideal s = saturate_by_poly(a, g);
    result = result ? intersect_ideals(*result, s) : s;
  }
  if (!result) return Ideal(a.ring, {Polynomial::constant(a.ring, Fp{1})});
  return *result;
}

Ideal saturate_irrelevant(const Ideal& a) {
  std::vector<Polynomial> vars;
  for (int i = 0; i < a.ring->nvars; ++i) vars.push_back(Polynomial::variable(a.ring, i));
  return saturate_by_ideal(a, Ideal(a.ring, std::move(vars)));
}

ProjectiveScheme singularity_subscheme(const Polynomial& f) {
  if (f.is_zero() || !f.is_homogeneous()) {
    throw std::invalid_argument("singularity subscheme needs a nonzero homogeneous form");
  }
  std::vector<Polynomial> gens = partial_derivatives(f);
  gens.push_back(f);
  return ProjectiveScheme(f.ring(), std::move(gens));
}

std::vector<Polynomial> pad_to_degree(std::span<const Polynomial> gens, int d) {
  std::vector<Polynomial> out;
  for (const Polynomial& f : gens) {
    if (f.is_zero()) continue;
    int deg = f.degree();
    if (deg > d) throw std::invalid_argument("pad_to_degree: generator degree exceeds target");
    if (deg == d) {
      out.push_back(f);
      continue;
    }
    for (const Monomial& m : monomials_of_degree(f.ring()->nvars, d - deg)) out.push_back(f.shifted(m, Fp{1}));
  }
  return out;
}

std::vector<ProjectiveScheme> generic_hyperplane_slice(std::span<const ProjectiveScheme> schemes, Rng& rng) {
  if (schemes.empty()) throw std::invalid_argument("nothing to slice");
  Polynomial ell = random_form(schemes.front().ring(), 1, rng);
  std::vector<ProjectiveScheme> out;
  for (const ProjectiveScheme& s : schemes) {
    if (!s.ring()->same_as(*schemes.front().ring())) throw RingMismatch();
    std::vector<Polynomial> gens = s.gens();
    gens.push_back(ell.in_ring(s.ring()));
    out.emplace_back(s.ring(), std::move(gens));
  }
  return out;
}

HyperplaneChart HyperplaneChart::random(const RingPtr& source, Rng& rng) {
  const int n = source->nvars;
  if (n < 2) throw std::invalid_argument("cannot slice P^0");
  std::vector<std::string> names;
  for (int i = 0; i + 1 < n; ++i) names.push_back(source->var_name(i));
  HyperplaneChart chart{source, make_ring(n - 1, source->field, source->order, std::move(names)), {}};
  for (int i = 0; i + 1 < n; ++i) chart.images.push_back(Polynomial::variable(chart.target, i));
  chart.images.push_back(random_form(chart.target, 1, rng));
  return chart;
}

Polynomial HyperplaneChart::operator()(const Polynomial& f) const {
  if (!f.ring()->same_as(*source)) throw RingMismatch();
  return substitute(f, images);
}

ProjectiveScheme HyperplaneChart::operator()(const ProjectiveScheme& z) const {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : z.gens()) gens.push_back((*this)(g));
  return ProjectiveScheme(target, std::move(gens));
}

Polynomial hypersurface_equation(const ProjectiveScheme& z) {
  GroebnerBasis gb = z.ideal().basis();
  if (gb.generators().size() == 1 && gb.generators()[0].degree() > 0) return gb.generators()[0];
  GroebnerBasis sat = saturate_irrelevant(z.ideal()).basis();
  if (sat.generators().size() == 1 && sat.generators()[0].degree() > 0) return sat.generators()[0];
  throw std::invalid_argument("scheme is not a hypersurface");
}

ProjectiveScheme generic_projection_image(ProjectiveScheme z, Rng& rng, int max_retries) {
  const int n_amb = z.ambient_dimension();
  const int dim = z.dimension();
  const int codim = n_amb - dim;
  if (dim < 0 || codim < 2) throw std::invalid_argument("generic projection needs codimension >= 2");
  const int target = n_amb - codim + 1;
  const int nx = n_amb + 1, nu = target + 1;
  if (nx + nu > kMaxVars) throw std::length_error("projection ring would exceed the variable limit");
  std::vector<std::string> names;
  for (int i = 0; i < nu; ++i) names.push_back("u" + std::to_string(i));
  RingPtr image_ring = make_ring(nu, z.ring()->field, MonomialOrder::degrevlex(), names);
  RingPtr big = make_ring(nx + nu, z.ring()->field, MonomialOrder::eliminate(nx));
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<Polynomial> gens;
    for (const Polynomial& g : z.gens()) gens.push_back(embed(g, big, 0));
    for (int i = 0; i < nu; ++i) {
      Polynomial ell = embed(random_form(z.ring(), 1, rng), big, 0);
      gens.push_back(Polynomial::variable(big, nx + i) - ell);
    }
    std::vector<Polynomial> elim = eliminate(big, gens, nx);
    ProjectiveScheme image(image_ring, back_to(image_ring, elim, nx));
    if (image.dimension() == target - 1) return image;
  }
  throw GenericityFailure("generic projection image is not a hypersurface");
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  const RingPtr& ring = m[0][0].ring();
  if (n == 1) return m[0][0];
  // Laplace expansion along the first row
  Polynomial det(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * determinant(sub);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

namespace {

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<Polynomial> minors_ideal(const std::vector<std::vector<Polynomial>>& m, int size) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  if (size < 1 || size > std::min(rows, cols)) throw std::invalid_argument("minor size out of range");
  std::vector<std::vector<int>> rs, cs;
  subsets(rows, size, rs);
  subsets(cols, size, cs);
  std::vector<Polynomial> out;
  for (const auto& r : rs) {
    for (const auto& c : cs) {
      std::vector<std::vector<Polynomial>> sub;
      for (int i : r) {
        std::vector<Polynomial> row;
        for (int j : c) row.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        sub.push_back(std::move(row));
      }
      Polynomial d = determinant(sub);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<std::vector<Polynomial>> generic_matrix(const RingPtr& ring, int m) {
  if (ring->nvars < m * m) throw std::invalid_argument("ring has fewer than m^2 variables");
  std::vector<std::vector<Polynomial>> mat(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) mat[static_cast<std::size_t>(r)].push_back(Polynomial::variable(ring, r * m + c));
  }
  return mat;
}

ProjectiveScheme rank_locus(const RingPtr& ring, int m, int r) {
  if (r < 0 || r >= m) throw std::invalid_argument("rank bound out of range");
  return ProjectiveScheme(ring, minors_ideal(generic_matrix(ring, m), r + 1));
}

}  // namespace segre
