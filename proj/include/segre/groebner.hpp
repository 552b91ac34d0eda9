#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "segre/poly.hpp"

namespace segre {

/// Reduced Groebner basis: monic generators, no term of one generator
/// divisible by the leading monomial of another, sorted by leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> reduced);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_constant(); }
  bool is_zero_ideal() const { return gens_.empty(); }

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// S-polynomial of two nonzero polynomials in the same ring.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis of <gens> in `ring`'s monomial order. Generators are
/// moved into `ring` first (same variable count and field required).
/// Pairs are pruned with the product and chain criteria (Gebauer-Moeller) and
/// selected by the sugar strategy, so inhomogeneous input is accepted too.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens);

/// Generators of <gens> intersected with the subring on the trailing variables,
/// returned in the input ring's order (still `nvars` variables, first k unused).
std::vector<Polynomial> eliminate(const RingPtr& ring, std::span<const Polynomial> gens, int k);

/// Hilbert series data of R/I: H(t) = numerator(t) / (1-t)^nvars.
struct HilbertData {
  std::vector<std::int64_t> numerator;
  int projective_dimension = -1;
  std::int64_t degree = 0;

  bool empty() const { return projective_dimension < 0; }
  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

/// Numerator Q(t) of the Hilbert series of k[x]/<gens> for a monomial ideal,
/// by pivot splitting Q(I) = Q(I + <p>) + t^deg(p) Q(I : p).
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, int nvars);

/// Dimension and degree from a numerator by cancelling factors of (1 - t).
HilbertData hilbert_data(std::vector<std::int64_t> numerator, int nvars);

/// HilbertData of a homogeneous ideal via the leading-term ideal of `gb`.
HilbertData hilbert_data(const GroebnerBasis& gb);

/// Convenience: degrevlex basis then hilbert_data.
HilbertData proj_dim_degree(const RingPtr& ring, std::span<const Polynomial> gens);

/// True when two Hilbert series differ by a polynomial, i.e. the
/// projective schemes have the same Hilbert polynomial.
bool same_hilbert_polynomial(const HilbertData& a, const HilbertData& b, int nvars);

}  // namespace segre
