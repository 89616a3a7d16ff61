#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "gstrata/strata.hpp"

namespace gstrata {

/// Default cap on enumeration work (tuple visits).
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// kDefaultBudget, or the value of GSTRATA_BUDGET when set.
std::uint64_t default_budget();

/// Gaussian binomial [n choose k]_q: the number of k-subspaces of F_q^n.
mpz_class grassmannian_count(std::size_t k, std::size_t n, std::uint32_t q);

/// All k-subspaces of F_q^n in canonical order. BudgetExceeded if there are
/// more than `budget` of them.
std::vector<Subspace> enumerate_grassmannian(std::size_t k, std::size_t n, std::uint32_t q,
                                             std::uint64_t budget = kDefaultBudget);

struct CensusRow {
  std::size_t h, k, n, i;
  std::uint32_t q;
  mpz_class count;

  bool operator==(const CensusRow&) const = default;
};

/// Number of F_q-points of every stratum: entry i counts ordered h-tuples of
/// distinct k-subspaces of F_q^n whose sum has dimension i (i = 0..n).
/// BudgetExceeded if N^h > budget, N = [n choose k]_q.
std::vector<mpz_class> stratum_histogram(std::size_t h, std::size_t k, std::size_t n,
                                         std::uint32_t q, std::uint64_t budget = kDefaultBudget,
                                         unsigned threads = 0);

/// Points of a single stratum, pruning prefixes whose span already exceeds i.
CensusRow stratum_count(const StratumDescriptor& d, std::uint32_t q,
                        std::uint64_t budget = kDefaultBudget, unsigned threads = 0);

/// m x m' matrices over F_q of rank exactly r. RankTooLarge if r > min(m, m').
mpz_class rank_locus_count(std::size_t r, std::size_t m, std::size_t mprime, std::uint32_t q);

struct PartitionReport {
  std::size_t h, k, n;
  std::uint32_t q;
  std::vector<CensusRow> rows;  // nonempty strata and any stratum with points
  mpz_class total;
  mpz_class expected;           // N (N - 1) ... (N - h + 1)
  bool support_ok = true;       // points only in nonempty strata

  bool passed() const { return support_ok && total == expected; }
};

PartitionReport partition_check(std::size_t h, std::size_t k, std::size_t n, std::uint32_t q,
                                std::uint64_t budget = kDefaultBudget);

/// Polynomial with exact rational coefficients, lowest degree first.
class CountPolynomial {
 public:
  CountPolynomial() = default;
  explicit CountPolynomial(std::vector<mpq_class> coeffs);

  /// Lagrange interpolation through (xs[j], ys[j]); xs distinct.
  static CountPolynomial interpolate(std::span<const mpq_class> xs, std::span<const mpq_class> ys);

  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  mpq_class operator()(const mpq_class& x) const;

 private:
  std::vector<mpq_class> coeffs_;  // trailing zeros trimmed
};

struct PolynomialFit {
  StratumDescriptor desc;
  std::vector<std::uint32_t> primes;
  std::vector<mpz_class> counts;
  CountPolynomial polynomial;
  std::int64_t expected_degree;
  bool matches_dimension;
  std::uint32_t held_out_q;
  mpz_class held_out_count;
};

std::uint32_t next_prime(std::uint32_t after);
/// The first `count` primes starting at 2.
std::vector<std::uint32_t> first_primes(std::size_t count);

/// Interpolates the point counts of `d` over the given primes and validates
/// the interpolant at the next prime above them. InsufficientPoints if fewer
/// than dimension(d) + 1 primes are given; NonPolynomialFit if the held-out
/// count disagrees.
PolynomialFit fit_count_polynomial(const StratumDescriptor& d, std::span<const std::uint32_t> primes,
                                   std::uint64_t budget = kDefaultBudget);

}  // namespace gstrata
