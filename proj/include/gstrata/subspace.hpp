#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gstrata/matrix.hpp"

namespace gstrata {

/// A linear subspace of F^n, held by its canonical column-echelon basis so
/// that equal subspaces compare equal entry by entry.
class Subspace {
 public:
  /// Canonicalizes `raw_basis`; throws RankDeficient if its columns are
  /// dependent.
  static Subspace from_basis(const Matrix& raw_basis);
  /// Span of arbitrary (possibly dependent) columns.
  static Subspace span_of(const Matrix& generators);

  const Matrix& basis() const noexcept { return basis_; }
  const FieldSpec& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.cols(); }

  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const { return basis_ == other.basis_; }

 private:
  explicit Subspace(Matrix canonical) : basis_(std::move(canonical)) {}
  Matrix basis_;
};

/// canonicalize(raw_basis) from the component contract.
inline Subspace canonicalize(const Matrix& raw_basis) { return Subspace::from_basis(raw_basis); }

Subspace subspace_sum(std::span<const Subspace> parts);
Subspace subspace_intersection(std::span<const Subspace> parts);

/// An ordered tuple (H_1, ..., H_h) of pairwise-distinct k-subspaces of F^n.
class Configuration {
 public:
  /// Throws InvalidConfiguration on an empty list or duplicate entries,
  /// MixedAmbient / MixedField on inconsistent members, and
  /// InvalidConfiguration if the members have different dimensions or the
  /// common dimension is not strictly between 0 and n.
  explicit Configuration(std::vector<Subspace> subspaces);

  std::size_t size() const noexcept { return subspaces_.size(); }
  std::size_t dim() const noexcept { return subspaces_.front().dim(); }
  std::size_t ambient_dim() const noexcept { return subspaces_.front().ambient_dim(); }
  const FieldSpec& field() const noexcept { return subspaces_.front().field(); }
  const std::vector<Subspace>& subspaces() const noexcept { return subspaces_; }
  const Subspace& operator[](std::size_t j) const { return subspaces_[j]; }

  /// Bases side by side: the n x hk matrix whose rank is the stratum index.
  Matrix stacked_bases() const;

  bool operator==(const Configuration&) const = default;

 private:
  std::vector<Subspace> subspaces_;
};

/// Visits every k-subspace of F_p^n exactly once, ordered by pivot rows
/// (lexicographic) and then by free entries (lexicographic). The visitor
/// returns false to stop early.
void for_each_subspace(FieldSpec field, std::size_t k, std::size_t n,
                       const std::function<bool(const Subspace&)>& visit);

}  // namespace gstrata
