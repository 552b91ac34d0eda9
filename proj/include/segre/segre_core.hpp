#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "segre/chow.hpp"
#include "segre/ideal_ops.hpp"

namespace segre {

/// Independent runs disagreed and no majority emerged.
class RandomizationInconsistency : public std::runtime_error {
 public:
  RandomizationInconsistency() : std::runtime_error("randomization inconsistency; increase prime size") {}
};

struct SegreConfig {
  std::uint64_t seed = 0;
  /// Saturate residuals by the full ideal of X instead of one random member.
  bool paranoid = false;
  /// Attempts per residual count before giving up.
  int max_retries = 5;
  /// Run the pipeline twice with independent seeds and compare.
  bool verify = true;
};

struct DeltaSequence {
  int d = 0;
  int n = 0;
  int r = 0;
  int N = 0;
  std::vector<Integer> deltas;
  std::vector<Integer> lambdas;
  std::vector<std::int64_t> degrees_y;
  std::vector<std::uint64_t> seeds;

  /// delta_j = d^(n-j) deg(Y_j) - lambda_j for every level.
  bool consistent() const;
};

struct SegreResult {
  ChowClass segre_class;
  DeltaSequence deltas;
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> seeds;
};

/// deg(pr)·deg(image) for the map given by `padded_gens` on Y, counted as
/// the residual points of Y and n random members of the system.
Integer projective_lambda(ProjectiveScheme y, std::span<const Polynomial> padded_gens, const ProjectiveScheme& x,
                          Rng& rng, const SegreConfig& config, int level = -1);

/// Generators of X that do not vanish on Y, or an empty list when X contains Y.
std::vector<Polynomial> generators_off(const ProjectiveScheme& x, const ProjectiveScheme& y);

/// The delta sequence of X inside Y; r = -1 and no levels when X meets Y in
/// the empty scheme.
DeltaSequence delta_sequence(const ProjectiveScheme& x, const ProjectiveScheme& y, Rng& rng, const SegreConfig& config);

/// Row j: sum_{i>=j} C(n-j, i-j) d^(i-j) s_i = delta_j.
std::vector<std::vector<Integer>> segre_system_matrix(int n, int d, int r);
/// The same system written from the residual formula sum_i C(m, p-i) d^(p-i) s_(r-i),
/// m = N - r + p, rows ordered by decreasing p.
std::vector<std::vector<Integer>> residual_system_matrix(int N, int d, int r);

ChowClass solve_segre(const DeltaSequence& ds);

/// Pushforward of s(X cap Y, Y) to P^N.
SegreResult segre_class(const ProjectiveScheme& x, const ProjectiveScheme& y, const SegreConfig& config = {});

/// s(X, P^N) from the projective degrees of the rational map given by the
/// generators of X.
ChowClass aluffi_segre_pn_oracle(const ProjectiveScheme& x, const SegreConfig& config = {});

}  // namespace segre
