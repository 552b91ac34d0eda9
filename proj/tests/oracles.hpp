#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance runner.

#include "segre/chow.hpp"
#include "segre/groebner.hpp"

namespace segre::oracle {

inline bool all_spairs_reduce(const GroebnerBasis& gb) {
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!gb.normal_form(s_polynomial(g[i], g[j])).is_zero()) return false;
    }
  }
  return true;
}

/// Twist by O(d) by dividing each codim-c piece by (1+dH) c times with long
/// division, no binomial formula involved.
inline ChowClass brute_tensor(const ChowClass& alpha, const Integer& d) {
  const int n = alpha.ambient();
  const auto sz = static_cast<std::size_t>(n + 1);
  std::vector<Integer> out(sz);  // indexed by the power of H
  for (int i = 0; i <= n; ++i) {
    const int c = n - i;
    std::vector<Integer> piece(sz);
    piece[static_cast<std::size_t>(c)] = alpha[i];
    for (int rep = 0; rep < c; ++rep) {
      std::vector<Integer> q(sz);
      for (std::size_t k = 0; k < sz; ++k) q[k] = piece[k] - (k > 0 ? d * q[k - 1] : Integer(0));
      piece = q;
    }
    for (std::size_t k = 0; k < sz; ++k) out[k] += piece[k];
  }
  return ChowClass::from_hpolynomial(n, HPolynomial(out));
}

/// Sign flip on odd codimension, written out term by term.
inline ChowClass brute_dual(const ChowClass& alpha) {
  ChowClass r(alpha.ambient());
  for (int i = 0; i <= alpha.ambient(); ++i) {
    Integer sign = 1;
    for (int c = 0; c < alpha.ambient() - i; ++c) sign = -sign;
    r[i] = sign * alpha[i];
  }
  return r;
}

/// s(D, P^N) = [D]/(1+D) for a hypersurface of degree m.
inline ChowClass cartier_segre(int n, int m) {
  ChowClass c(n);
  Integer mi = m;
  for (int i = 0; i < n; ++i) {
    c[n - 1 - i] = (i % 2 == 0 ? 1 : -1) * mi;
    mi *= m;
  }
  return c;
}

/// (1+H)^-(N-r) cap [P^r] for a linear subspace.
inline ChowClass linear_subspace_segre(int n, int r) {
  ChowClass c(n);
  for (int i = 0; i <= r; ++i) c[r - i] = (i % 2 == 0 ? 1 : -1) * binomial(n - r - 1 + i, i);
  return c;
}

}  // namespace segre::oracle
