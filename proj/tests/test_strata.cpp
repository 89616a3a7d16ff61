#include <doctest.h>

#include <algorithm>

#include "gstrata/chart.hpp"
#include "gstrata/error.hpp"
#include "gstrata/random.hpp"
#include "gstrata/strata.hpp"
#include "oracles.hpp"

using namespace gstrata;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);

using D = StratumDescriptor;
using Kind = Pi1Result::Kind;

Subspace col(FieldSpec f, std::initializer_list<long> v) {
  return Subspace::from_basis(Matrix::from_ints(f, v.size(), 1, v));
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("descriptor ranges") {
  CHECK(code_of([] { D(0, 1, 2, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { D(2, 0, 2, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { D(2, 2, 2, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { D(2, 1, 3, 4); }) == ErrorCode::InvalidArgument);
  CHECK_NOTHROW(D(2, 1, 3, 0));
}

TEST_CASE("nonemptiness") {
  CHECK(is_nonempty(D(1, 2, 4, 2)));
  CHECK_FALSE(is_nonempty(D(1, 2, 4, 3)));
  CHECK_FALSE(is_nonempty(D(2, 2, 4, 2)));
  // i > n is refused outright; i = n is the top stratum.
  CHECK(code_of([] { D(2, 2, 3, 4); }) == ErrorCode::InvalidArgument);
  CHECK(is_nonempty(D(2, 2, 3, 3)));
  CHECK_FALSE(is_nonempty(D(2, 1, 3, 1)));
  CHECK(is_nonempty(D(1, 1, 3, 1)));
  CHECK(is_nonempty(D(3, 1, 3, 3)));
  CHECK_FALSE(is_nonempty(D(2, 1, 3, 3)));  // hk = 2 < 3

  // i = 1 forces k = h = 1.
  for (std::size_t h = 1; h <= 5; ++h)
    for (std::size_t n = 2; n <= 7; ++n)
      for (std::size_t k = 1; k < n; ++k)
        if (is_nonempty(D(h, k, n, 1))) {
          CHECK(k == 1);
          CHECK(h == 1);
        }
}

TEST_CASE("dimension") {
  CHECK(dimension(D(3, 1, 3, 2)) == 5);
  CHECK(dimension(D(2, 1, 2, 2)) == 2);
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t k = 1; k < n; ++k) CHECK(dimension(D(1, k, n, k)) == static_cast<std::int64_t>(k * (n - k)));
  CHECK(code_of([] { dimension(D(2, 1, 3, 1)); }) == ErrorCode::EmptyStratum);
}

TEST_CASE("determinantal dimension") {
  CHECK(determinantal_dimension(0, 3, 4) == 0);
  CHECK(determinantal_dimension(3, 3, 4) == 12);
  CHECK(determinantal_dimension(1, 2, 2) == 3);
  CHECK(code_of([] { determinantal_dimension(3, 2, 5); }) == ErrorCode::RankTooLarge);
}

TEST_CASE("chart local model") {
  const LocalModel m = chart_local_model(D(2, 1, 3, 2));
  CHECK(m == LocalModel{2, 1, 2, 1});
  CHECK(m.total_dim() == 4);
  CHECK(m.total_dim() == dimension(D(2, 1, 3, 2)));
  CHECK(chart_local_model(D(2, 1, 2, 2)) == LocalModel{1, 1, 1, 1});
  CHECK(chart_local_model(D(2, 1, 2, 2)).total_dim() == 2);
  // i = hk <= n: the determinantal factor is the full-rank locus.
  const LocalModel full = chart_local_model(D(2, 2, 5, 4));
  CHECK(full.det_rank == std::min(full.det_rows, full.det_cols));
  CHECK(code_of([] { chart_local_model(D(2, 1, 3, 1)); }) == ErrorCode::EmptyStratum);
  CHECK(code_of([] { chart_local_model(D(1, 1, 3, 1)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("property: dimension formula agrees with the chart model on the desk grid") {
  for (std::size_t h = 2; h <= 5; ++h)
    for (std::size_t n = 2; n <= 7; ++n)
      for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = 0; i <= n; ++i) {
          const D d(h, k, n, i);
          if (!is_nonempty(d)) continue;
          CHECK(chart_local_model(d).total_dim() == dimension(d));
        }
}

TEST_CASE("property: dimension peaks at hk(n-k) exactly at i = n or i = hk") {
  for (std::size_t h = 2; h <= 5; ++h)
    for (std::size_t n = 2; n <= 7; ++n)
      for (std::size_t k = 1; k < n; ++k) {
        const auto peak = static_cast<std::int64_t>(h * k * (n - k));
        for (std::size_t i = 0; i <= n; ++i) {
          const D d(h, k, n, i);
          if (!is_nonempty(d)) continue;
          CHECK(dimension(d) <= peak);
          // Within the nonempty range i <= min(n, hk), so the peak needs i = min(n, hk).
          CHECK((dimension(d) == peak) == (i == n || i == h * k));
          CHECK(codimension_step(d) > 0);
        }
      }
}

TEST_CASE("codimension steps") {
  CHECK(codimension_step(D(3, 1, 3, 3)) == 1);
  CHECK(codimension_step(D(2, 1, 3, 2)) == 2);
  for (std::size_t h = 2; h <= 5; ++h)
    for (std::size_t n = 2; n <= 7; ++n)
      for (std::size_t k = 1; k < n; ++k) {
        const auto hk = static_cast<std::int64_t>(h * k), nn = static_cast<std::int64_t>(n);
        if (is_nonempty(D(h, k, n, n))) CHECK(codimension_step(D(h, k, n, n)) == 1 + hk - nn);
        if (h * k <= n && is_nonempty(D(h, k, n, h * k)))
          CHECK(codimension_step(D(h, k, n, h * k)) == 1 + nn - hk);
      }
  CHECK(code_of([] { codimension_step(D(2, 1, 3, 3)); }) == ErrorCode::EmptyStratum);
}

TEST_CASE("adjacency closure") {
  auto is = [](const std::vector<D>& v) {
    std::vector<std::size_t> out;
    for (const auto& d : v) out.push_back(d.i());
    return out;
  };
  CHECK(is(adjacency_closure(D(2, 1, 3, 2))) == std::vector<std::size_t>{2});
  CHECK(is(adjacency_closure(D(3, 1, 3, 3))) == std::vector<std::size_t>{3, 2});
  CHECK(is(adjacency_closure(D(2, 2, 5, 4))) == std::vector<std::size_t>{4, 3});
  CHECK(code_of([] { adjacency_closure(D(1, 1, 3, 1)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("fundamental group lookup") {
  CHECK(fundamental_group(D(3, 1, 4, 3)) == Pi1Result{Kind::Trivial});
  CHECK(fundamental_group(D(2, 2, 5, 4)) == Pi1Result{Kind::Trivial});
  for (std::size_t h = 2; h <= 4; ++h) CHECK(fundamental_group(D(h, 1, 2, 2)) == Pi1Result{Kind::PureSphereBraid, h});
  CHECK(fundamental_group(D(3, 1, 3, 2)) == Pi1Result{Kind::Unknown});
  CHECK(fundamental_group(D(2, 2, 3, 3)) == Pi1Result{Kind::Trivial});
  CHECK(fundamental_group(D(2, 2, 4, 4)) == Pi1Result{Kind::Unknown});  // n = hk
  CHECK(fundamental_group(D(1, 2, 4, 2)) == Pi1Result{Kind::Trivial});
  CHECK(code_of([] { fundamental_group(D(2, 1, 3, 1)); }) == ErrorCode::EmptyStratum);
  CHECK(fundamental_group(D(3, 1, 2, 2)).to_string() == "PureSphereBraid(3)");
}

TEST_CASE("stratum_of and dual_stratum_of") {
  const Configuration single({col(Q, {1, 2, 3})});
  CHECK(stratum_of(single) == 1);
  CHECK(dual_stratum_of(single) == 1);

  const Configuration axes({col(Q, {1, 0, 0}), col(Q, {0, 1, 0})});
  CHECK(stratum_of(axes) == 2);

  const Matrix plane = Matrix::from_ints(F5, 4, 2, {1, 0, 0, 1, 2, 3, 4, 1});
  const Configuration in_plane({Subspace::from_basis(plane * Matrix::from_ints(F5, 2, 1, {1, 0})),
                                Subspace::from_basis(plane * Matrix::from_ints(F5, 2, 1, {1, 1})),
                                Subspace::from_basis(plane * Matrix::from_ints(F5, 2, 1, {1, 4}))});
  CHECK(stratum_of(in_plane) == 2);

  const Configuration planes({Subspace::from_basis(Matrix::from_ints(Q, 3, 2, {1, 0, 0, 1, 0, 0})),
                              Subspace::from_basis(Matrix::from_ints(Q, 3, 2, {1, 0, 0, 0, 0, 1}))});
  CHECK(dual_stratum_of(planes) == 1);

  // Generic planes in F_3^4 meet trivially: dim sum + dim meet = 2k.
  SeededRng rng(9);
  int seen = 0;
  while (seen < 10) {
    Matrix a = random_field_matrix(rng, F3, 4, 2), b = random_field_matrix(rng, F3, 4, 2);
    if (rank(a) < 2 || rank(b) < 2) continue;
    const Subspace sa = Subspace::from_basis(a), sb = Subspace::from_basis(b);
    if (sa == sb) continue;
    const Configuration pair({sa, sb});
    CHECK(stratum_of(pair) + dual_stratum_of(pair) == 4);
    if (stratum_of(pair) == 4) {
      CHECK(dual_stratum_of(pair) == 0);
      ++seen;
    }
  }
}

TEST_CASE("property: every configuration over F_2, F_3 lands in a nonempty stratum") {
  for (const FieldSpec& f : {F2, F3})
    for (std::size_t n = 2; n <= (f.modulus() == 2 ? 4u : 3u); ++n)
      for (std::size_t k = 1; k < n; ++k) {
        std::vector<Subspace> pool;
        for_each_subspace(f, k, n, [&](const Subspace& s) {
          pool.push_back(s);
          return true;
        });
        for (std::size_t h = 1; h <= 3 && h <= pool.size(); ++h) {
          std::vector<std::size_t> idx;
          auto rec = [&](auto&& self) -> void {
            if (idx.size() == h) {
              std::vector<Subspace> members;
              for (auto j : idx) members.push_back(pool[j]);
              const Configuration config(members);
              REQUIRE(is_nonempty(D(h, k, n, stratum_of(config))));
              if (h == 2) REQUIRE(stratum_of(config) + dual_stratum_of(config) == 2 * k);
              return;
            }
            for (std::size_t j = 0; j < pool.size(); ++j) {
              if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
              idx.push_back(j);
              self(self);
              idx.pop_back();
            }
          };
          rec(rec);
        }
      }
}

TEST_CASE("rank reduction") {
  const Matrix a = Matrix::from_ints(Q, 2, 2, {1, 2, 3, 4});
  const Matrix same[] = {a, a, a};
  CHECK(rank_reduction(same).rank_claim == 2);
  CHECK(rank_reduction(same).differences.size() == 2);

  const Matrix pair[] = {a, a + Matrix::from_ints(Q, 2, 2, {1, 0, 0, 1})};
  CHECK(rank_reduction(pair).rank_claim == 4);

  const Matrix bad[] = {a, Matrix(Q, 2, 3)};
  CHECK(code_of([&] { rank_reduction(bad); }) == ErrorCode::ShapeMismatch);
  const Matrix lonely[] = {a};
  CHECK(code_of([&] { rank_reduction(lonely); }) == ErrorCode::ShapeMismatch);

  SeededRng rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t h = 2 + rng.below(3), n = 2 + rng.below(5), k = 1 + rng.below(n - 1);
    std::vector<Matrix> coords;
    for (std::size_t j = 0; j < h; ++j) coords.push_back(random_field_matrix(rng, F5, n - k, k));
    // Oracle: the block matrix built by hand, ranked by minors when small.
    const Matrix block = chart_block_matrix(coords);
    REQUIRE(block.rows() == n);
    REQUIRE(block.cols() == h * k);
    const std::size_t direct = (n <= 4 && h * k <= 5) ? oracle::minor_rank(block) : rank(block);
    REQUIRE(rank_reduction(coords).rank_claim == direct);
  }
}
