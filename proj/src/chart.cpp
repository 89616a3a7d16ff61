#include "gstrata/chart.hpp"

#include <optional>
#include <random>
#include <vector>

#include "gstrata/error.hpp"
#include "gstrata/random.hpp"

namespace gstrata {

namespace {

Matrix complement_completion(const Subspace& complement) {
  const Matrix& v = complement.basis();
  const std::size_t n = v.rows();
  std::vector<bool> pivot_row(n, false);
  // Canonical column-echelon: the pivot of column c is its first nonzero row.
  for (std::size_t c = 0; c < v.cols(); ++c)
    for (std::size_t r = 0; r < n; ++r)
      if (sgn(v(r, c)) != 0) {
        pivot_row[r] = true;
        break;
      }
  std::vector<Matrix> columns;
  for (std::size_t r = 0; r < n; ++r) {
    if (pivot_row[r]) continue;
    std::vector<Scalar> data(n);
    data[r] = 1;
    columns.emplace_back(v.field(), n, 1, std::move(data));
  }
  columns.push_back(v);
  return hconcat(columns);
}

bool complements_all(const Matrix& v0, const Configuration& config) {
  for (const auto& h : config.subspaces()) {
    const Matrix blocks[] = {h.basis(), v0};
    if (rank(hconcat(blocks)) != config.ambient_dim()) return false;
  }
  return true;
}

}  // namespace

Chart::Chart(Subspace complement)
    : complement_(std::move(complement)),
      basis_(complement_completion(complement_)),
      basis_inverse_(inverse(basis_)) {}

bool Chart::covers(const Subspace& h) const {
  if (h.ambient_dim() != n() || h.dim() != k() || h.field() != basis_.field()) return false;
  const Matrix blocks[] = {h.basis(), complement_.basis()};
  return rank(hconcat(blocks)) == n();
}

Chart find_common_complement(const Configuration& config, std::uint64_t seed) {
  const FieldSpec field = config.field();
  const std::size_t n = config.ambient_dim();
  const std::size_t m = n - config.dim();
  SeededRng rng(seed);

  if (field.is_rational()) {
    // A generic V0 works; widen the entry range until one is found.
    for (long bound = 1; bound <= (1L << 20); bound *= 2)
      for (int attempt = 0; attempt < 32; ++attempt) {
        Matrix v0 = random_integer_matrix(rng, field, n, m, bound);
        if (rank(v0) == m && complements_all(v0, config)) return Chart(Subspace::from_basis(v0));
      }
    throw Error(ErrorCode::NoCommonComplement, "random search over Q did not find a complement");
  }

  constexpr int kRandomAttempts = 64;
  for (int attempt = 0; attempt < kRandomAttempts; ++attempt) {
    Matrix v0 = random_field_matrix(rng, field, n, m);
    if (rank(v0) == m && complements_all(v0, config)) return Chart(Subspace::from_basis(v0));
  }
  std::optional<Subspace> found;
  for_each_subspace(field, m, n, [&](const Subspace& candidate) {
    if (!complements_all(candidate.basis(), config)) return true;
    found = candidate;
    return false;
  });
  if (!found)
    throw Error(ErrorCode::NoCommonComplement,
                "no common complement exists over " + field.name() + "; use a larger prime");
  return Chart(*found);
}

Matrix chart_coordinates(const Subspace& h, const Chart& chart) {
  if (h.ambient_dim() != chart.n() || h.dim() != chart.k())
    throw Error(ErrorCode::ShapeMismatch, "subspace does not match the chart's (k, n)");
  if (h.field() != chart.basis().field()) throw Error(ErrorCode::MixedField, "chart field differs");
  const std::size_t k = chart.k();
  // Coordinates of H's basis in B; the top block is invertible iff H meets V0 trivially.
  Matrix in_b = chart.basis_inverse_ * h.basis();
  Matrix top = in_b.row_block(0, k);
  if (rank(top) < k) throw Error(ErrorCode::NotInChart, "subspace meets V0 nontrivially");
  return in_b.row_block(k, chart.n() - k) * inverse(top);
}

Subspace from_chart(const Matrix& coords, const Chart& chart) {
  const std::size_t k = chart.k();
  if (coords.rows() != chart.n() - k || coords.cols() != k)
    throw Error(ErrorCode::ShapeMismatch, "chart coordinates must be (n-k) x k");
  const Matrix blocks[] = {Matrix::identity(coords.field(), k), coords};
  return Subspace::from_basis(chart.basis() * vconcat(blocks));
}

}  // namespace gstrata
