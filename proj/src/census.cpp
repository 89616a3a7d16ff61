#include "gstrata/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>

#include "gstrata/error.hpp"

namespace gstrata {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("GSTRATA_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return value;
  }
  return kDefaultBudget;
}

namespace {

mpz_class power(std::uint32_t q, std::size_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), q, e);
  return out;
}

void require_prime(std::uint32_t q) {
  if (!is_prime(q)) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not prime");
}

void require_budget(const mpz_class& work, std::uint64_t budget, const std::string& what) {
  if (work > mpz_class(std::to_string(budget)))
    throw Error(ErrorCode::BudgetExceeded,
                what + " needs " + work.get_str() + " visits, budget is " + std::to_string(budget));
}

// Subspaces of F_p^n flattened to k basis vectors of length n each.
struct PackedSubspaces {
  std::size_t n, k;
  std::uint32_t p;
  std::size_t count;
  std::vector<std::uint32_t> data;

  const std::uint32_t* column(std::size_t idx, std::size_t c) const { return &data[(idx * k + c) * n]; }
};

PackedSubspaces pack(const std::vector<Subspace>& subspaces, std::size_t k, std::size_t n,
                     std::uint32_t p) {
  PackedSubspaces out{n, k, p, subspaces.size(), {}};
  out.data.reserve(subspaces.size() * k * n);
  for (const auto& s : subspaces)
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = 0; r < n; ++r)
        out.data.push_back(static_cast<std::uint32_t>(s.basis()(r, c).get_num().get_ui()));
  return out;
}

// Row-echelon basis of a growing span over F_p. Every stored vector has a
// leading 1 and zeros at the pivots of the vectors stored before it, so a new
// vector is reduced by one pass in insertion order.
class SpanAccumulator {
 public:
  SpanAccumulator(std::size_t n, std::uint32_t p) : n_(n), p_(p), rows_(n * n), pivots_(n) {}

  std::size_t dim() const { return dim_; }
  void truncate(std::size_t dim) { dim_ = dim; }

  void add(const std::uint32_t* v) {
    if (dim_ == n_) return;
    std::uint32_t* slot = &rows_[dim_ * n_];
    std::copy(v, v + n_, slot);
    for (std::size_t b = 0; b < dim_; ++b) {
      const std::uint32_t f = slot[pivots_[b]];
      if (f == 0) continue;
      const std::uint32_t* row = &rows_[b * n_];
      for (std::size_t j = 0; j < n_; ++j)
        if (row[j] != 0) slot[j] = modp::sub(slot[j], modp::mul(f, row[j], p_), p_);
    }
    std::size_t lead = 0;
    while (lead < n_ && slot[lead] == 0) ++lead;
    if (lead == n_) return;
    const std::uint32_t inv = modp::inverse(slot[lead], p_);
    for (std::size_t j = lead; j < n_; ++j) slot[j] = modp::mul(slot[j], inv, p_);
    pivots_[dim_++] = lead;
  }

 private:
  std::size_t n_;
  std::uint32_t p_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::size_t> pivots_;
  std::size_t dim_ = 0;
};

struct TupleWalk {
  const PackedSubspaces& subspaces;
  std::size_t h;
  std::optional<std::size_t> target;  // prune towards this sum dimension
  std::vector<std::uint64_t> counts;
  std::vector<std::size_t> chosen;
  SpanAccumulator span;

  TupleWalk(const PackedSubspaces& s, std::size_t h_, std::optional<std::size_t> t)
      : subspaces(s), h(h_), target(t), counts(s.n + 1, 0), span(s.n, s.p) {
    chosen.reserve(h);
  }

  bool pruned(std::size_t placed) const {
    if (!target) return false;
    const std::size_t dim = span.dim();
    return dim > *target || dim + (h - placed) * subspaces.k < *target;
  }

  void place(std::size_t idx) {
    const std::size_t saved = span.dim();
    for (std::size_t c = 0; c < subspaces.k; ++c) span.add(subspaces.column(idx, c));
    chosen.push_back(idx);
    if (!pruned(chosen.size())) descend();
    chosen.pop_back();
    span.truncate(saved);
  }

  void descend() {
    if (chosen.size() == h) {
      ++counts[span.dim()];
      return;
    }
    for (std::size_t idx = 0; idx < subspaces.count; ++idx) {
      if (std::find(chosen.begin(), chosen.end(), idx) != chosen.end()) continue;
      place(idx);
    }
  }
};

std::vector<std::uint64_t> walk_tuples(const PackedSubspaces& subspaces, std::size_t h,
                                       std::optional<std::size_t> target, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(subspaces.count, 1)));

  // Work is split by the index of H_1 (round robin) and merged by addition.
  auto run = [&](unsigned part, std::vector<std::uint64_t>& out) {
    TupleWalk walk(subspaces, h, target);
    for (std::size_t first = part; first < subspaces.count; first += threads) walk.place(first);
    out = std::move(walk.counts);
  };
  std::vector<std::vector<std::uint64_t>> partial(threads);
  if (threads == 1) {
    run(0, partial[0]);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(run, t, std::ref(partial[t]));
  }
  std::vector<std::uint64_t> total(subspaces.n + 1, 0);
  for (const auto& part : partial)
    for (std::size_t i = 0; i < part.size(); ++i) total[i] += part[i];
  return total;
}

PackedSubspaces packed_grassmannian(std::size_t h, std::size_t k, std::size_t n, std::uint32_t q,
                                    std::uint64_t budget) {
  require_prime(q);
  const mpz_class count = grassmannian_count(k, n, q);
  mpz_class visits;
  mpz_pow_ui(visits.get_mpz_t(), count.get_mpz_t(), h);
  require_budget(visits, budget, "census of " + std::to_string(h) + "-tuples in Gr(" +
                                     std::to_string(k) + "," + std::to_string(n) + ")(F_" +
                                     std::to_string(q) + ")");
  return pack(enumerate_grassmannian(k, n, q, budget), k, n, q);
}

}  // namespace

mpz_class grassmannian_count(std::size_t k, std::size_t n, std::uint32_t q) {
  if (k > n) throw Error(ErrorCode::InvalidArgument, "k exceeds n");
  require_prime(q);
  mpz_class num = 1, den = 1;
  for (std::size_t j = 0; j < k; ++j) {
    num *= power(q, n - j) - 1;
    den *= power(q, j + 1) - 1;
  }
  return num / den;
}

std::vector<Subspace> enumerate_grassmannian(std::size_t k, std::size_t n, std::uint32_t q,
                                             std::uint64_t budget) {
  require_budget(grassmannian_count(k, n, q), budget, "enumeration of Gr(" + std::to_string(k) +
                                                          "," + std::to_string(n) + ")");
  std::vector<Subspace> out;
  for_each_subspace(FieldSpec::prime(q), k, n, [&](const Subspace& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<mpz_class> stratum_histogram(std::size_t h, std::size_t k, std::size_t n,
                                         std::uint32_t q, std::uint64_t budget, unsigned threads) {
  if (h == 0) throw Error(ErrorCode::InvalidArgument, "h must be at least 1");
  const auto packed = packed_grassmannian(h, k, n, q, budget);
  std::vector<mpz_class> out;
  for (auto c : walk_tuples(packed, h, std::nullopt, threads)) out.emplace_back(std::to_string(c));
  return out;
}

CensusRow stratum_count(const StratumDescriptor& d, std::uint32_t q, std::uint64_t budget,
                        unsigned threads) {
  const auto packed = packed_grassmannian(d.h(), d.k(), d.n(), q, budget);
  const auto counts = walk_tuples(packed, d.h(), d.i(), threads);
  return CensusRow{d.h(), d.k(), d.n(), d.i(), q, mpz_class(std::to_string(counts[d.i()]))};
}

mpz_class rank_locus_count(std::size_t r, std::size_t m, std::size_t mprime, std::uint32_t q) {
  if (r > std::min(m, mprime)) throw Error(ErrorCode::RankTooLarge, "rank exceeds min(m, m')");
  require_prime(q);
  // (ordered r-frames in F_q^m) x (ordered r-frames in F_q^m') / |GL_r(F_q)|
  mpz_class num = 1, den = 1;
  for (std::size_t j = 0; j < r; ++j) {
    num *= (power(q, m) - power(q, j)) * (power(q, mprime) - power(q, j));
    den *= power(q, r) - power(q, j);
  }
  return num / den;
}

PartitionReport partition_check(std::size_t h, std::size_t k, std::size_t n, std::uint32_t q,
                                std::uint64_t budget) {
  const auto histogram = stratum_histogram(h, k, n, q, budget);
  PartitionReport report{h, k, n, q, {}, 0, 1, true};
  const mpz_class count = grassmannian_count(k, n, q);
  for (std::size_t j = 0; j < h; ++j) report.expected *= count > j ? count - j : mpz_class(0);
  for (std::size_t i = 0; i <= n; ++i) {
    const bool nonempty = is_nonempty(StratumDescriptor(h, k, n, i));
    if (histogram[i] != 0 && !nonempty) report.support_ok = false;
    if (nonempty || histogram[i] != 0) report.rows.push_back(CensusRow{h, k, n, i, q, histogram[i]});
    report.total += histogram[i];
  }
  return report;
}

CountPolynomial::CountPolynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

CountPolynomial CountPolynomial::interpolate(std::span<const mpq_class> xs,
                                             std::span<const mpq_class> ys) {
  if (xs.size() != ys.size()) throw Error(ErrorCode::ShapeMismatch, "xs and ys differ in length");
  std::vector<mpq_class> acc(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    // basis polynomial prod_{l != j} (x - x_l), built ascending
    std::vector<mpq_class> basis{1};
    mpq_class denom = 1;
    for (std::size_t l = 0; l < xs.size(); ++l) {
      if (l == j) continue;
      if (xs[l] == xs[j]) throw Error(ErrorCode::InvalidArgument, "interpolation nodes repeat");
      std::vector<mpq_class> next(basis.size() + 1);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= xs[l] * basis[t];
      }
      basis = std::move(next);
      denom *= xs[j] - xs[l];
    }
    const mpq_class scale = ys[j] / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) acc[t] += scale * basis[t];
  }
  return CountPolynomial(std::move(acc));
}

mpq_class CountPolynomial::operator()(const mpq_class& x) const {
  mpq_class value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * x + *it;
  return value;
}

std::uint32_t next_prime(std::uint32_t after) {
  std::uint32_t c = after + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<std::uint32_t> first_primes(std::size_t count) {
  std::vector<std::uint32_t> out;
  std::uint32_t p = 1;
  while (out.size() < count) out.push_back(p = next_prime(p));
  return out;
}

PolynomialFit fit_count_polynomial(const StratumDescriptor& d, std::span<const std::uint32_t> primes,
                                   std::uint64_t budget) {
  const std::int64_t expected = dimension(d);
  std::vector<std::uint32_t> sorted(primes.begin(), primes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::InvalidArgument, "interpolation primes repeat");
  for (auto q : sorted) require_prime(q);
  if (static_cast<std::int64_t>(sorted.size()) < expected + 1)
    throw Error(ErrorCode::InsufficientPoints,
                "need " + std::to_string(expected + 1) + " primes for degree " +
                    std::to_string(expected) + ", got " + std::to_string(sorted.size()));

  PolynomialFit fit{d, {primes.begin(), primes.end()}, {}, {}, expected, false, 0, 0};
  std::vector<mpq_class> xs, ys;
  for (auto q : fit.primes) {
    fit.counts.push_back(stratum_count(d, q, budget).count);
    xs.emplace_back(q);
    ys.emplace_back(fit.counts.back());
  }
  fit.polynomial = CountPolynomial::interpolate(xs, ys);
  fit.matches_dimension = fit.polynomial.degree() == expected;

  fit.held_out_q = next_prime(sorted.back());
  fit.held_out_count = stratum_count(d, fit.held_out_q, budget).count;
  const mpq_class predicted = fit.polynomial(mpq_class(fit.held_out_q));
  if (predicted != mpq_class(fit.held_out_count))
    throw Error(ErrorCode::NonPolynomialFit,
                d.to_string() + ": interpolant predicts " + predicted.get_str() + " at q=" +
                    std::to_string(fit.held_out_q) + ", census gives " + fit.held_out_count.get_str());
  return fit;
}

}  // namespace gstrata
