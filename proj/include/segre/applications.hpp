#pragma once

#include <span>
#include <vector>

#include "segre/segre_core.hpp"

namespace segre {

struct PolarClasses {
  int n = 0;
  std::vector<Integer> rho;  // rho_0 .. rho_n
  friend bool operator==(const PolarClasses&, const PolarClasses&) = default;
};

/// `trace`, when given, receives the underlying Segre computation.
ChowClass csm_hypersurface(const Polynomial& f, const SegreConfig& config = {}, SegreResult* trace = nullptr);
ChowClass chern_mather_hypersurface(const Polynomial& f, const SegreConfig& config = {}, SegreResult* trace = nullptr);

/// Polar degrees of a reduced Z; Z of codimension > 1 is first projected
/// generically onto a hypersurface.
PolarClasses polar_classes(const ProjectiveScheme& z, const SegreConfig& config = {}, SegreResult* trace = nullptr);
/// Polar degrees of the hypersurface V(f) of dimension n with s(J, V(f)) = s.
PolarClasses polar_classes_from_segre(int d, int n, const ChowClass& s);

/// varsigma_k, the coefficient of [P^(n-k)] in c_Ma, for k = 0..n.
std::vector<Integer> mather_coefficients(const ChowClass& c_ma, int n);
std::vector<Integer> mather_from_polar(const PolarClasses& p);
PolarClasses polar_from_mather(std::span<const Integer> sigma, int n);

Integer ed_degree(const ProjectiveScheme& z, const SegreConfig& config = {}, SegreResult* trace = nullptr);

/// Degree of the locus of m x m matrices of corank >= k.
Integer tau_degree(int m, int k);

struct DegeneracyResult {
  ChowClass segre;  // s(L_S cap tau, tau)
  Integer degree;   // degree of the closure of the projection of tau from L_S
};

/// Projection of the corank >= k locus in P^(m^2-1) from the linear space
/// `center`; the ring must have m^2 variables, read row major.
DegeneracyResult degeneracy_projection_degree(int m, int k, const ProjectiveScheme& center,
                                              const SegreConfig& config = {}, SegreResult* trace = nullptr);

/// Pushforward of X ._Y V for complete intersections X, Y with defining
/// degrees d_list, e_list.
ChowClass intersection_product(const ProjectiveScheme& x, const ProjectiveScheme& v, const ProjectiveScheme& y,
                               std::span<const Integer> d_list, std::span<const Integer> e_list,
                               const SegreConfig& config = {}, SegreResult* trace = nullptr);

}  // namespace segre
