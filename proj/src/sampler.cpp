#include "gstrata/sampler.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "gstrata/census.hpp"
#include "gstrata/error.hpp"
#include "gstrata/random.hpp"

namespace gstrata {

namespace {

constexpr long kInitialBound = 9;

// Draws a full-rank rows x cols matrix; over Q the entry bound doubles after
// repeated rank failures.
Matrix full_rank_draw(SeededRng& rng, FieldSpec field, std::size_t rows, std::size_t cols,
                      long& bound) {
  const std::size_t target = std::min(rows, cols);
  for (int failures = 0;; ++failures) {
    Matrix m = field.is_rational() ? random_integer_matrix(rng, field, rows, cols, bound)
                                   : random_field_matrix(rng, field, rows, cols);
    if (rank(m) == target) return m;
    if (field.is_rational() && failures % 8 == 7) bound *= 2;
  }
}

bool already_chosen(const std::vector<Subspace>& chosen, const Subspace& s) {
  return std::find(chosen.begin(), chosen.end(), s) != chosen.end();
}

}  // namespace

std::size_t default_max_attempts(const StratumDescriptor& d) {
  return std::max<std::size_t>(1, 10 * d.h() * d.i());
}

Configuration sample_uniform(std::size_t h, std::size_t k, std::size_t n, FieldSpec field,
                             std::uint64_t seed) {
  if (h == 0 || k == 0 || k >= n) throw Error(ErrorCode::InvalidArgument, "need h >= 1 and 0 < k < n");
  if (field.is_prime_field() && grassmannian_count(k, n, field.modulus()) < h)
    throw Error(ErrorCode::NotEnoughSubspaces, "Gr(" + std::to_string(k) + "," + std::to_string(n) +
                                                   ")(" + field.name() + ") has fewer than " +
                                                   std::to_string(h) + " points");
  SeededRng rng(seed);
  long bound = kInitialBound;
  // Generous cap: coupon collecting all points of a tiny Grassmannian.
  const std::size_t cap = 1000 + 200 * h * h;
  std::vector<Subspace> chosen;
  for (std::size_t draws = 0; chosen.size() < h; ++draws) {
    if (draws == cap)
      throw Error(ErrorCode::MaxAttemptsExceeded, "gave up after " + std::to_string(cap) + " draws");
    Subspace s = Subspace::from_basis(full_rank_draw(rng, field, n, k, bound));
    if (already_chosen(chosen, s)) {
      if (field.is_rational()) bound *= 2;
      continue;
    }
    chosen.push_back(std::move(s));
  }
  return Configuration(std::move(chosen));
}

Configuration sample_in_stratum(const SampleSpec& spec) {
  const StratumDescriptor& d = spec.desc;
  if (!is_nonempty(d)) throw Error(ErrorCode::EmptyStratum, d.to_string() + " is empty");
  const FieldSpec field = spec.field;
  const std::size_t h = d.h(), k = d.k(), n = d.n(), i = d.i();
  const std::size_t max_attempts = spec.max_attempts ? spec.max_attempts : default_max_attempts(d);
  if (field.is_prime_field() && grassmannian_count(k, i, field.modulus()) < h)
    throw Error(ErrorCode::MaxAttemptsExceeded,
                "an " + std::to_string(i) + "-dimensional subspace over " + field.name() +
                    " holds fewer than " + std::to_string(h) + " distinct " + std::to_string(k) +
                    "-subspaces");

  SeededRng rng(spec.seed);
  long bound = kInitialBound;
  const Matrix ambient_basis = full_rank_draw(rng, field, n, i, bound);
  const std::size_t slot_cap = 64 * h;

  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Subspace> chosen;
    for (std::size_t draws = 0; chosen.size() < h && draws < slot_cap; ++draws) {
      Subspace s = Subspace::from_basis(ambient_basis * full_rank_draw(rng, field, i, k, bound));
      if (!already_chosen(chosen, s)) chosen.push_back(std::move(s));
    }
    if (chosen.size() < h) continue;
    Configuration config(std::move(chosen));
    if (stratum_of(config) == i) return config;
    if (field.is_rational()) bound *= 2;
  }
  throw Error(ErrorCode::MaxAttemptsExceeded,
              d.to_string() + " over " + field.name() + ": no sample after " +
                  std::to_string(max_attempts) + " attempts");
}

}  // namespace gstrata
