#include "gstrata/random.hpp"

#include <limits>
#include <vector>

namespace gstrata {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

Matrix random_field_matrix(SeededRng& rng, FieldSpec field, std::size_t rows, std::size_t cols) {
  std::vector<Scalar> data(rows * cols);
  for (auto& e : data) e = static_cast<unsigned long>(rng.below(field.modulus()));
  return Matrix(field, rows, cols, std::move(data));
}

Matrix random_integer_matrix(SeededRng& rng, FieldSpec field, std::size_t rows, std::size_t cols,
                             long bound) {
  std::vector<Scalar> data(rows * cols);
  for (auto& e : data) e = rng.between(-bound, bound);
  return Matrix(field, rows, cols, std::move(data));
}

}  // namespace gstrata
