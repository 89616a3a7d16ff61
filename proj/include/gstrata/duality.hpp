#pragma once

#include <cstddef>
#include <cstdint>

#include <gmpxx.h>

#include "gstrata/census.hpp"

namespace gstrata {

// The dual space is identified with column vectors under the standard
// pairing <y, x> = y^T x, so Ann(H) = ker(basis(H)^T).

Subspace annihilator(const Subspace& h);

/// Entrywise annihilator: k-subspaces become (n - k)-subspaces and the sum
/// dimension i becomes the intersection dimension n - i.
Configuration dualize_configuration(const Configuration& config);

struct DualityCountReport {
  std::size_t h, k, n, i;
  std::uint32_t q;
  mpz_class sum_side;           // h-tuples in Gr(k, n) with sum dimension i
  mpz_class intersection_side;  // h-tuples in Gr(n - k, n) with intersection dimension n - i
  mpz_class mapped;             // sum-side tuples whose image lands on the intersection side

  bool passed() const { return sum_side == intersection_side && mapped == sum_side; }
};

/// Counts both sides of the annihilator correspondence over F_q by direct
/// enumeration. BudgetExceeded if N^h > budget.
DualityCountReport verify_duality_counts(std::size_t k, std::size_t n, std::size_t h, std::size_t i,
                                         std::uint32_t q, std::uint64_t budget = kDefaultBudget);

}  // namespace gstrata
