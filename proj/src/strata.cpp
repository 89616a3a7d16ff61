#include "gstrata/strata.hpp"

#include <algorithm>

#include "gstrata/error.hpp"

namespace gstrata {

namespace {

std::int64_t formula(std::int64_t h, std::int64_t k, std::int64_t n, std::int64_t i) {
  return i * (n - i) + h * k * (i - k);
}

void require_nonempty(const StratumDescriptor& d) {
  if (!is_nonempty(d)) throw Error(ErrorCode::EmptyStratum, d.to_string() + " is empty");
}

}  // namespace

StratumDescriptor::StratumDescriptor(std::size_t h, std::size_t k, std::size_t n, std::size_t i)
    : h_(h), k_(k), n_(n), i_(i) {
  if (h == 0) throw Error(ErrorCode::InvalidArgument, "h must be at least 1");
  if (k == 0 || k >= n) throw Error(ErrorCode::InvalidArgument, "need 0 < k < n");
  if (i > n) throw Error(ErrorCode::InvalidArgument, "i must not exceed n");
}

std::string StratumDescriptor::to_string() const {
  return "F_" + std::to_string(h_) + "^" + std::to_string(i_) + "(" + std::to_string(k_) + "," +
         std::to_string(n_) + ")";
}

bool is_nonempty(const StratumDescriptor& d) {
  if (d.h() == 1) return d.i() == d.k();
  return d.i() >= d.k() + 1 && d.i() <= std::min(d.h() * d.k(), d.n());
}

std::int64_t dimension(const StratumDescriptor& d) {
  require_nonempty(d);
  return formula(static_cast<std::int64_t>(d.h()), static_cast<std::int64_t>(d.k()),
                 static_cast<std::int64_t>(d.n()), static_cast<std::int64_t>(d.i()));
}

std::int64_t determinantal_dimension(std::size_t r, std::size_t m, std::size_t mprime) {
  if (r > std::min(m, mprime))
    throw Error(ErrorCode::RankTooLarge, "rank " + std::to_string(r) + " exceeds min(" +
                                             std::to_string(m) + "," + std::to_string(mprime) + ")");
  const auto rr = static_cast<std::int64_t>(r);
  return rr * (static_cast<std::int64_t>(m) + static_cast<std::int64_t>(mprime) - rr);
}

LocalModel chart_local_model(const StratumDescriptor& d) {
  if (d.h() < 2) throw Error(ErrorCode::InvalidArgument, "the chart model needs h >= 2");
  require_nonempty(d);
  const std::size_t k = d.k(), n = d.n(), hk = d.h() * d.k();
  return LocalModel{k * (n - k), d.i() - k, n - k, hk - k};
}

Matrix chart_block_matrix(std::span<const Matrix> coords) {
  if (coords.empty()) throw Error(ErrorCode::ShapeMismatch, "no chart matrices");
  const std::size_t k = coords.front().cols();
  std::vector<Matrix> columns;
  for (const auto& a : coords) {
    const Matrix parts[] = {Matrix::identity(a.field(), k), a};
    columns.push_back(vconcat(parts));
  }
  return hconcat(columns);
}

RankReduction rank_reduction(std::span<const Matrix> coords) {
  if (coords.size() < 2) throw Error(ErrorCode::ShapeMismatch, "need at least two chart matrices");
  const Matrix& first = coords.front();
  for (const auto& a : coords)
    if (a.rows() != first.rows() || a.cols() != first.cols() || a.field() != first.field())
      throw Error(ErrorCode::ShapeMismatch, "chart matrices differ in shape or field");
  RankReduction out;
  for (std::size_t j = 1; j < coords.size(); ++j) out.differences.push_back(coords[j] - first);
  out.rank_claim = first.cols() + rank(hconcat(out.differences));
  return out;
}

std::int64_t codimension_step(const StratumDescriptor& d) {
  require_nonempty(d);
  const auto h = static_cast<std::int64_t>(d.h()), k = static_cast<std::int64_t>(d.k()),
             n = static_cast<std::int64_t>(d.n()), i = static_cast<std::int64_t>(d.i());
  return formula(h, k, n, i) - formula(h, k, n, i - 1);
}

std::vector<StratumDescriptor> adjacency_closure(const StratumDescriptor& d) {
  if (d.h() < 2) throw Error(ErrorCode::InvalidArgument, "adjacency is defined for h >= 2");
  std::vector<StratumDescriptor> out;
  for (std::size_t j = d.i(); j >= 2; --j)
    if (is_nonempty(d.with_i(j))) out.push_back(d.with_i(j));
  return out;
}

std::string Pi1Result::to_string() const {
  switch (kind) {
    case Kind::Trivial: return "Trivial";
    case Kind::PureSphereBraid: return "PureSphereBraid(" + std::to_string(strands) + ")";
    case Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

Pi1Result fundamental_group(const StratumDescriptor& d) {
  require_nonempty(d);
  using Kind = Pi1Result::Kind;
  const std::size_t h = d.h(), k = d.k(), n = d.n(), i = d.i();
  // h = 1: the stratum is the whole Grassmannian, which is simply connected.
  if (h == 1) return {Kind::Trivial};
  // (k, n) = (1, 2): the open stratum is F_h(CP^1).
  if (k == 1 && n == 2) return {Kind::PureSphereBraid, h};
  // Hyperplane arrangements: any two distinct hyperplanes already span.
  if (k + 1 == n) return {Kind::Trivial};
  if (n != h * k && i == std::min(n, h * k)) return {Kind::Trivial};
  return {Kind::Unknown};
}

std::size_t stratum_of(const Configuration& config) { return rank(config.stacked_bases()); }

std::size_t dual_stratum_of(const Configuration& config) {
  return subspace_intersection(config.subspaces()).dim();
}

StratumDescriptor descriptor_of(const Configuration& config) {
  return {config.size(), config.dim(), config.ambient_dim(), stratum_of(config)};
}

}  // namespace gstrata
