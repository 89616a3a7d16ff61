#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gstrata/subspace.hpp"

namespace gstrata {

/// Names the stratum F_h^i(k, n): ordered h-tuples of distinct k-subspaces
/// of n-space whose sum has dimension i. Construction only checks ranges;
/// whether the stratum has points is the separate predicate is_nonempty().
class StratumDescriptor {
 public:
  /// InvalidArgument unless h >= 1, 0 < k < n and i <= n.
  StratumDescriptor(std::size_t h, std::size_t k, std::size_t n, std::size_t i);

  std::size_t h() const noexcept { return h_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t i() const noexcept { return i_; }

  StratumDescriptor with_i(std::size_t i) const { return {h_, k_, n_, i}; }
  std::string to_string() const;

  bool operator==(const StratumDescriptor&) const = default;

 private:
  std::size_t h_, k_, n_, i_;
};

bool is_nonempty(const StratumDescriptor& d);

/// i(n - i) + hk(i - k). EmptyStratum if the stratum has no points.
std::int64_t dimension(const StratumDescriptor& d);

/// Dimension r(m + m' - r) of the variety of m x m' matrices of rank <= r.
/// RankTooLarge if r > min(m, m').
std::int64_t determinantal_dimension(std::size_t r, std::size_t m, std::size_t mprime);

/// Chart-local product C^{k(n-k)} x D_{i-k}(n-k, hk-k)^*.
struct LocalModel {
  std::size_t affine_dim;
  std::size_t det_rank;
  std::size_t det_rows;
  std::size_t det_cols;

  std::int64_t total_dim() const {
    return static_cast<std::int64_t>(affine_dim) +
           determinantal_dimension(det_rank, det_rows, det_cols);
  }
  bool operator==(const LocalModel&) const = default;
};

/// Requires h >= 2 (InvalidArgument) and a nonempty stratum (EmptyStratum).
LocalModel chart_local_model(const StratumDescriptor& d);

/// The block matrix (I ... I ; A_1 ... A_h) describing h chart points.
Matrix chart_block_matrix(std::span<const Matrix> coords);

struct RankReduction {
  std::size_t rank_claim;          // k + rank(B_2 ... B_h)
  std::vector<Matrix> differences; // B_j = A_j - A_1, j = 2..h
};

/// Subtracting the first block column from the others: the rank of
/// (I ... I ; A_1 ... A_h) is k plus the rank of (A_2 - A_1 ... A_h - A_1).
/// ShapeMismatch unless h >= 2 and all A_j share shape and field.
RankReduction rank_reduction(std::span<const Matrix> coords);

/// dimension(i) - dimension(i - 1), with the formula extended to i - 1 even
/// when that stratum is empty. EmptyStratum if stratum i is empty.
std::int64_t codimension_step(const StratumDescriptor& d);

/// Nonempty strata in the closure of stratum i: j = i, i - 1, ..., 2.
/// InvalidArgument for h < 2.
std::vector<StratumDescriptor> adjacency_closure(const StratumDescriptor& d);

struct Pi1Result {
  enum class Kind { Trivial, PureSphereBraid, Unknown };
  Kind kind;
  std::size_t strands = 0;  // set for PureSphereBraid

  std::string to_string() const;
  bool operator==(const Pi1Result&) const = default;
};

/// Fundamental-group lookup. Only the cases the theory settles are answered;
/// everything else is Unknown. EmptyStratum if the stratum is empty.
Pi1Result fundamental_group(const StratumDescriptor& d);

/// dim(H_1 + ... + H_h).
std::size_t stratum_of(const Configuration& config);
/// dim(H_1 ∩ ... ∩ H_h).
std::size_t dual_stratum_of(const Configuration& config);

StratumDescriptor descriptor_of(const Configuration& config);

}  // namespace gstrata
