#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace gstrata {

/// Dense integer matrix, used for relation matrices of abelian groups.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> entries;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
  IntMatrix(std::size_t r, std::size_t c, std::initializer_list<long> values);

  mpz_class& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Invariants of the cokernel Z^cols / rowspace(M).
struct SmithForm {
  std::vector<mpz_class> divisors;  // d_1 | d_2 | ..., all > 1
  std::size_t free_rank = 0;

  bool operator==(const SmithForm&) const = default;
};

SmithForm smith_normal_form(const IntMatrix& relations);

}  // namespace gstrata
