#pragma once

#include <cstdint>

#include "gstrata/subspace.hpp"

namespace gstrata {

/// Affine chart U_{V0} on Gr(k, n): the k-subspaces complementary to a fixed
/// (n - k)-subspace V0. The basis B = {w_1..w_k, v_1..v_{n-k}} lists the
/// w's first and a basis of V0 last.
class Chart {
 public:
  /// Uses the canonical completion: w's are the standard basis vectors
  /// indexed by the non-pivot rows of V0's canonical basis.
  explicit Chart(Subspace complement);

  const Subspace& complement() const noexcept { return complement_; }
  const Matrix& basis() const noexcept { return basis_; }
  std::size_t k() const noexcept { return basis_.rows() - complement_.dim(); }
  std::size_t n() const noexcept { return basis_.rows(); }

  /// True iff H meets V0 trivially.
  bool covers(const Subspace& h) const;

 private:
  Subspace complement_;
  Matrix basis_;
  Matrix basis_inverse_;

  friend Matrix chart_coordinates(const Subspace& h, const Chart& chart);
};

/// Returns a chart whose V0 is complementary to every member of the
/// configuration. Over F_p a seeded random search is followed by an
/// exhaustive scan of Gr(n - k, n); NoCommonComplement if none exists.
Chart find_common_complement(const Configuration& config, std::uint64_t seed);

/// The (n - k) x k matrix A with H = span of B * (I; A).
Matrix chart_coordinates(const Subspace& h, const Chart& chart);
Subspace from_chart(const Matrix& coords, const Chart& chart);

}  // namespace gstrata
