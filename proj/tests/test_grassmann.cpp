#include <doctest.h>

#include <set>

#include "gstrata/chart.hpp"
#include "gstrata/config_json.hpp"
#include "gstrata/error.hpp"
#include "gstrata/random.hpp"
#include "oracles.hpp"

using namespace gstrata;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);

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

std::vector<Subspace> all_subspaces(FieldSpec f, std::size_t k, std::size_t n) {
  std::vector<Subspace> out;
  for_each_subspace(f, k, n, [&](const Subspace& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("canonicalize") {
  const Matrix e12 = Matrix::from_ints(Q, 3, 2, {1, 0, 0, 1, 0, 0});
  CHECK(canonicalize(e12).basis() == e12);
  CHECK(col(Q, {2, 0, 0}).basis() == Matrix::from_ints(Q, 3, 1, {1, 0, 0}));
  CHECK(col(Q, {1, 1, 0}) == col(Q, {2, 2, 0}));
  CHECK(code_of([] { canonicalize(Matrix::from_ints(Q, 3, 2, {1, 2, 1, 2, 0, 0})); }) ==
        ErrorCode::RankDeficient);
}

TEST_CASE("configuration invariants") {
  const Subspace a = col(Q, {1, 0, 0}), b = col(Q, {0, 1, 0});
  CHECK(Configuration({a, b}).size() == 2);
  CHECK(code_of([&] { Configuration({a, a}); }) == ErrorCode::InvalidConfiguration);
  CHECK(code_of([&] { Configuration({a, col(F5, {1, 0, 0})}); }) == ErrorCode::MixedField);
  CHECK(code_of([&] { Configuration({a, col(Q, {1, 0})}); }) == ErrorCode::MixedAmbient);
  CHECK(code_of([&] { Configuration(std::vector<Subspace>{}); }) == ErrorCode::InvalidConfiguration);
  // Ordered tuples: swapping entries gives a different value.
  CHECK_FALSE(Configuration({a, b}) == Configuration({b, a}));
  CHECK(Configuration({a}).size() == 1);
}

TEST_CASE("subspace enumeration order") {
  const auto lines = all_subspaces(F2, 1, 2);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == col(F2, {1, 0}));
  CHECK(lines[1] == col(F2, {1, 1}));
  CHECK(lines[2] == col(F2, {0, 1}));
}

TEST_CASE("find_common_complement") {
  const Configuration single({col(Q, {1, 0})});
  const Chart c1 = find_common_complement(single, 7);
  CHECK(c1.covers(single[0]));

  const Configuration axes({col(Q, {1, 0}), col(Q, {0, 1})});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Chart c = find_common_complement(axes, seed);
    for (const auto& h : axes.subspaces()) {
      const Matrix blocks[] = {h.basis(), c.complement().basis()};
      CHECK(rank(hconcat(blocks)) == 2);
    }
  }
  // Same seed, same chart.
  CHECK(find_common_complement(axes, 3).basis() == find_common_complement(axes, 3).basis());

  // Every line of F_2^2 is occupied, so no line is complementary to all.
  const Configuration all_lines(all_subspaces(F2, 1, 2));
  CHECK(code_of([&] { find_common_complement(all_lines, 0); }) == ErrorCode::NoCommonComplement);

  // Over F_2 with two lines the exhaustive scan finds the third.
  const Configuration two({col(F2, {1, 0}), col(F2, {0, 1})});
  CHECK(find_common_complement(two, 1).complement() == col(F2, {1, 1}));
}

TEST_CASE("chart coordinates") {
  const Chart standard(col(Q, {0, 1}));
  CHECK(standard.basis() == Matrix::identity(Q, 2));
  CHECK(chart_coordinates(col(Q, {1, 3}), standard) == Matrix::from_ints(Q, 1, 1, {3}));
  CHECK(chart_coordinates(col(Q, {1, 0}), standard).is_zero());
  CHECK(code_of([&] { chart_coordinates(col(Q, {0, 5}), standard); }) == ErrorCode::NotInChart);

  // H spanned by the first k basis vectors of the chart has A = 0.
  const Chart c(Subspace::from_basis(Matrix::from_ints(Q, 4, 2, {1, 0, 1, 1, 0, 1, 2, 0})));
  const Subspace w_span = Subspace::from_basis(c.basis().column_block(0, 2));
  CHECK(chart_coordinates(w_span, c).is_zero());
  CHECK(from_chart(Matrix(Q, 2, 2), c) == w_span);

  SeededRng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix raw = random_field_matrix(rng, F5, 4, 2);
    if (rank(raw) < 2) continue;
    const Subspace h = Subspace::from_basis(raw);
    const Configuration config({h});
    const Chart chart = find_common_complement(config, static_cast<std::uint64_t>(trial));
    const Matrix a = chart_coordinates(h, chart);
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 2);
    CHECK(from_chart(a, chart) == h);
  }
}

TEST_CASE("property: charts are bijections onto the complement-free subspaces") {
  for (const FieldSpec& f : {F2, F3}) {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::size_t k = 1; k < n; ++k) {
        if (f.modulus() == 3 && k * (n - k) > 4) continue;  // keep 3^{k(n-k)} small
        const auto grassmannian = all_subspaces(f, k, n);
        const auto complements = all_subspaces(f, n - k, n);
        const Chart chart(complements.back());
        std::set<std::vector<std::string>> images;
        std::size_t covered = 0;
        for (const auto& h : grassmannian) {
          if (!chart.covers(h)) continue;
          ++covered;
          CHECK(from_chart(chart_coordinates(h, chart), chart) == h);
        }
        for (const auto& a : oracle::all_matrices(f, n - k, k)) {
          const Subspace h = from_chart(a, chart);
          CHECK(chart.covers(h));
          CHECK(chart_coordinates(h, chart) == a);
          std::vector<std::string> key;
          for (const auto& e : h.basis().entries()) key.push_back(e.get_str());
          images.insert(key);
        }
        std::size_t qpow = 1;
        for (std::size_t t = 0; t < k * (n - k); ++t) qpow *= f.modulus();
        CHECK(images.size() == qpow);
        // The chart misses exactly |Gr(k,n)(F_q)| - q^{k(n-k)} subspaces.
        CHECK(covered == qpow);
      }
    }
  }
}

TEST_CASE("configuration JSON") {
  const std::string text = R"({"field":{"kind":"rational"},"n":3,"k":1,
      "subspaces":[["2","0","0"],["0","1/2","0"]]})";
  const Configuration config = parse_configuration(text);
  CHECK(config.size() == 2);
  CHECK(config[0] == col(Q, {1, 0, 0}));
  CHECK(config[1] == col(Q, {0, 1, 0}));
  const auto dumped = configuration_to_json(config).dump();
  CHECK(dumped ==
        R"({"field":{"kind":"rational"},"k":1,"n":3,"subspaces":[["1","0","0"],["0","1","0"]]})");
  CHECK(configuration_to_json(parse_configuration(dumped)).dump() == dumped);

  const std::string prime = R"({"field":{"kind":"prime","p":5},"n":2,"k":1,"subspaces":[["1","3"]]})";
  CHECK(parse_configuration(prime)[0] == col(F5, {1, 3}));

  CHECK(code_of([] { parse_configuration("{"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_configuration(R"({"field":{"kind":"prime","p":4},"n":2,"k":1,"subspaces":[]})"); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse_configuration(R"({"field":{"kind":"rational"},"n":2,"k":1,"subspaces":[["1"]]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_configuration(R"({"field":{"kind":"rational"},"n":2,"k":1,"subspaces":[[1,0]]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] {
          parse_configuration(R"({"field":{"kind":"rational"},"n":2,"k":1,"subspaces":[["1","0"],["2","0"]]})");
        }) == ErrorCode::InvalidConfiguration);
}
