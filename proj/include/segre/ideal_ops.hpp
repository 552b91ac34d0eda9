#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "segre/groebner.hpp"

namespace segre {

/// Randomized construction failed to reach a generic configuration.
class GenericityFailure : public std::runtime_error {
 public:
  GenericityFailure(const std::string& what, int level = -1) : std::runtime_error(what), level_(level) {}
  int level() const { return level_; }

 private:
  int level_;
};

/// Generator list of an ideal in a polynomial ring.
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> gens;

  Ideal(RingPtr r, std::vector<Polynomial> g = {});

  GroebnerBasis basis() const { return buchberger(ring, gens); }
  /// Equality of ideals via reduced Groebner bases.
  bool same_as(const Ideal& other) const { return basis() == other.basis(); }
  bool is_homogeneous() const;
};

/// Closed subscheme of P^N given by a homogeneous ideal in N+1 variables.
class ProjectiveScheme {
 public:
  explicit ProjectiveScheme(Ideal ideal);
  ProjectiveScheme(RingPtr ring, std::vector<Polynomial> gens) : ProjectiveScheme(Ideal(std::move(ring), std::move(gens))) {}

  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring; }
  const std::vector<Polynomial>& gens() const { return ideal_.gens; }
  int ambient_dimension() const { return ideal_.ring->nvars - 1; }

  const HilbertData& hilbert();
  int dimension() { return hilbert().projective_dimension; }
  std::int64_t degree() { return hilbert().degree; }
  bool is_empty() { return hilbert().empty(); }
  bool has_cache() const { return cache_.has_value(); }

 private:
  Ideal ideal_;
  std::optional<HilbertData> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
/// I cap K by eliminating t from t*I + (1-t)*K.
Ideal intersect_ideals(const Ideal& a, const Ideal& b);
/// I : f, computed as (I cap <f>) / f.
Ideal colon_by_poly(const Ideal& a, const Polynomial& f);
/// I : f^infinity by eliminating z from I + <z f - 1>.
Ideal saturate_by_poly(const Ideal& a, const Polynomial& f);
/// I : f^infinity by iterating colon_by_poly until the basis stabilizes.
Ideal saturate_by_poly_iterated(const Ideal& a, const Polynomial& f);
/// I : K^infinity as the intersection of I : g^infinity over generators g of K.
Ideal saturate_by_ideal(const Ideal& a, const Ideal& k);
/// Saturation with respect to the irrelevant ideal <x_0, ..., x_N>.
Ideal saturate_irrelevant(const Ideal& a);

/// Jacobian scheme: f together with all of its partial derivatives.
ProjectiveScheme singularity_subscheme(const Polynomial& f);

/// Replaces each generator of degree < d by its multiples with all monomials
/// of the complementary degree, so the output is equi-degree d.
std::vector<Polynomial> pad_to_degree(std::span<const Polynomial> gens, int d);

/// Intersects every scheme with one shared random hyperplane.
std::vector<ProjectiveScheme> generic_hyperplane_slice(std::span<const ProjectiveScheme> schemes, Rng& rng);

/// Identifies a random hyperplane of P^N with P^{N-1} by replacing the last
/// variable with a random linear form in the others.
struct HyperplaneChart {
  RingPtr source;
  RingPtr target;
  std::vector<Polynomial> images;

  static HyperplaneChart random(const RingPtr& source, Rng& rng);
  Polynomial operator()(const Polynomial& f) const;
  ProjectiveScheme operator()(const ProjectiveScheme& z) const;
};

/// Closure of the image of Z (codimension c >= 2) under a general linear
/// projection to P^{N-c+1}; retries until the image is a hypersurface.
ProjectiveScheme generic_projection_image(ProjectiveScheme z, Rng& rng, int max_retries = 5);

/// The defining form of a hypersurface (reduced basis must be principal,
/// after saturating by the irrelevant ideal if needed).
Polynomial hypersurface_equation(const ProjectiveScheme& z);

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);
/// All size x size minors of a (rectangular) matrix, zero minors dropped.
std::vector<Polynomial> minors_ideal(const std::vector<std::vector<Polynomial>>& m, int size);
/// Generic m x m matrix on the ring variables, row major.
std::vector<std::vector<Polynomial>> generic_matrix(const RingPtr& ring, int m);
/// Matrices of rank <= r: the (r+1)-minors of the generic m x m matrix.
ProjectiveScheme rank_locus(const RingPtr& ring, int m, int r);

}  // namespace segre
