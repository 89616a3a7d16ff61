#include "gstrata/subspace.hpp"

#include <string>

#include "gstrata/error.hpp"

namespace gstrata {

Subspace Subspace::from_basis(const Matrix& raw_basis) {
  Matrix canonical = canonical_column_basis(raw_basis);
  if (canonical.cols() != raw_basis.cols())
    throw Error(ErrorCode::RankDeficient, "basis columns are linearly dependent");
  return Subspace(std::move(canonical));
}

Subspace Subspace::span_of(const Matrix& generators) {
  return Subspace(canonical_column_basis(generators));
}

bool Subspace::contains(const Subspace& other) const {
  const Matrix blocks[] = {basis_, other.basis_};
  return rank(hconcat(blocks)) == dim();
}

Subspace subspace_sum(std::span<const Subspace> parts) {
  std::vector<Matrix> bases;
  for (const auto& s : parts) bases.push_back(s.basis());
  return Subspace::span_of(column_span_sum(bases));
}

Subspace subspace_intersection(std::span<const Subspace> parts) {
  std::vector<Matrix> bases;
  for (const auto& s : parts) bases.push_back(s.basis());
  return Subspace::span_of(column_span_intersection(bases));
}

Configuration::Configuration(std::vector<Subspace> subspaces) : subspaces_(std::move(subspaces)) {
  if (subspaces_.empty()) throw Error(ErrorCode::InvalidConfiguration, "configuration is empty");
  const auto& first = subspaces_.front();
  for (std::size_t j = 0; j < subspaces_.size(); ++j) {
    const auto& s = subspaces_[j];
    if (s.ambient_dim() != first.ambient_dim())
      throw Error(ErrorCode::MixedAmbient, "subspace " + std::to_string(j + 1) + " has a different ambient dimension");
    if (s.field() != first.field())
      throw Error(ErrorCode::MixedField, "subspace " + std::to_string(j + 1) + " is over a different field");
    if (s.dim() != first.dim())
      throw Error(ErrorCode::InvalidConfiguration, "subspace " + std::to_string(j + 1) + " has a different dimension");
    for (std::size_t l = 0; l < j; ++l)
      if (subspaces_[l] == s)
        throw Error(ErrorCode::InvalidConfiguration, "subspaces " + std::to_string(l + 1) + " and " +
                                                         std::to_string(j + 1) + " coincide");
  }
  if (first.dim() == 0 || first.dim() >= first.ambient_dim())
    throw Error(ErrorCode::InvalidConfiguration, "need 0 < k < n");
}

Matrix Configuration::stacked_bases() const {
  std::vector<Matrix> bases;
  bases.reserve(subspaces_.size());
  for (const auto& s : subspaces_) bases.push_back(s.basis());
  return hconcat(bases);
}

namespace {

struct EchelonWalker {
  FieldSpec field;
  std::size_t k, n;
  const std::function<bool(const Subspace&)>& visit;
  std::vector<std::size_t> pivots;
  // (row, column) slots that hold free entries, in row-major order of the
  // transposed (row-echelon) form so that the lexicographic order matches.
  std::vector<std::pair<std::size_t, std::size_t>> free_slots;

  bool pivots_from(std::size_t column, std::size_t start) {
    if (column == k) return fill_free();
    for (std::size_t r = start; r + (k - column) <= n; ++r) {
      pivots.push_back(r);
      bool go_on = pivots_from(column + 1, r + 1);
      pivots.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  bool fill_free() {
    free_slots.clear();
    std::vector<bool> pivot_row(n, false);
    for (auto r : pivots) pivot_row[r] = true;
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = pivots[c] + 1; r < n; ++r)
        if (!pivot_row[r]) free_slots.emplace_back(r, c);

    const std::uint32_t q = field.modulus();
    std::vector<std::uint32_t> digits(free_slots.size(), 0);
    for (;;) {
      std::vector<Scalar> data(n * k);
      for (std::size_t c = 0; c < k; ++c) data[pivots[c] * k + c] = 1;
      for (std::size_t s = 0; s < free_slots.size(); ++s)
        data[free_slots[s].first * k + free_slots[s].second] = digits[s];
      if (!visit(Subspace::from_basis(Matrix(field, n, k, std::move(data))))) return false;
      // Odometer with the last slot varying fastest.
      std::size_t s = free_slots.size();
      while (s > 0) {
        --s;
        if (++digits[s] < q) break;
        digits[s] = 0;
        if (s == 0) return true;
      }
      if (free_slots.empty()) return true;
    }
  }
};

}  // namespace

void for_each_subspace(FieldSpec field, std::size_t k, std::size_t n,
                       const std::function<bool(const Subspace&)>& visit) {
  if (!field.is_prime_field())
    throw Error(ErrorCode::InvalidArgument, "subspace enumeration needs a prime field");
  if (k > n) throw Error(ErrorCode::InvalidArgument, "k exceeds n");
  EchelonWalker walker{field, k, n, visit, {}, {}};
  walker.pivots_from(0, 0);
}

}  // namespace gstrata
