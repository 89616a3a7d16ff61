#pragma once

#include <cstdint>
#include <random>

#include "gstrata/matrix.hpp"

namespace gstrata {

/// Seeded source used by every randomized routine. Bounded draws use
/// rejection on the raw engine output so results do not depend on the
/// standard library's distribution implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

 private:
  std::mt19937_64 engine_;
};

/// Entries uniform over F_p.
Matrix random_field_matrix(SeededRng& rng, FieldSpec field, std::size_t rows, std::size_t cols);
/// Integer entries uniform in [-bound, bound].
Matrix random_integer_matrix(SeededRng& rng, FieldSpec field, std::size_t rows, std::size_t cols,
                             long bound);

}  // namespace gstrata
