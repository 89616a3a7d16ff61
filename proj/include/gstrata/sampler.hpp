#pragma once

#include <cstddef>
#include <cstdint>

#include "gstrata/strata.hpp"

namespace gstrata {

struct SampleSpec {
  StratumDescriptor desc;
  FieldSpec field;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 0;  // 0 selects default_max_attempts(desc)
};

/// 10 * h * i tuple draws.
std::size_t default_max_attempts(const StratumDescriptor& d);

/// h pairwise-distinct random k-subspaces of n-space. Over F_p each draw is
/// a uniform full-rank n x k matrix, canonicalized, with collisions redrawn;
/// over Q entries start in [-9, 9] and widen on rejection.
/// NotEnoughSubspaces if F_p^n has fewer than h k-subspaces.
Configuration sample_uniform(std::size_t h, std::size_t k, std::size_t n, FieldSpec field,
                             std::uint64_t seed);

/// Draws a random i-dimensional S and then h distinct k-subspaces inside S,
/// rejecting tuples whose sum is smaller than S.
/// EmptyStratum if the stratum is empty; MaxAttemptsExceeded once the
/// attempt cap is spent (or immediately when S has too few k-subspaces).
Configuration sample_in_stratum(const SampleSpec& spec);

}  // namespace gstrata
