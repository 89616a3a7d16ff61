#include "gstrata/duality.hpp"

#include <functional>
#include <string>
#include <vector>

#include "gstrata/error.hpp"

namespace gstrata {

Subspace annihilator(const Subspace& h) { return Subspace::span_of(kernel(h.basis().transpose())); }

Configuration dualize_configuration(const Configuration& config) {
  std::vector<Subspace> dual;
  dual.reserve(config.size());
  for (const auto& h : config.subspaces()) dual.push_back(annihilator(h));
  return Configuration(std::move(dual));
}

namespace {

// Visits ordered h-tuples of distinct indices into `pool`.
void for_each_tuple(const std::vector<Subspace>& pool, std::size_t h,
                    const std::function<void(const std::vector<Subspace>&)>& visit) {
  std::vector<Subspace> current;
  std::vector<bool> used(pool.size(), false);
  std::function<void()> rec = [&] {
    if (current.size() == h) {
      visit(current);
      return;
    }
    for (std::size_t idx = 0; idx < pool.size(); ++idx) {
      if (used[idx]) continue;
      used[idx] = true;
      current.push_back(pool[idx]);
      rec();
      current.pop_back();
      used[idx] = false;
    }
  };
  rec();
}

}  // namespace

DualityCountReport verify_duality_counts(std::size_t k, std::size_t n, std::size_t h, std::size_t i,
                                         std::uint32_t q, std::uint64_t budget) {
  (void)StratumDescriptor(h, k, n, i);  // range checks
  DualityCountReport report{h, k, n, i, q, 0, 0, 0};

  const auto lines = enumerate_grassmannian(k, n, q, budget);
  const auto duals = enumerate_grassmannian(n - k, n, q, budget);
  mpz_class visits;
  mpz_pow_ui(visits.get_mpz_t(), mpz_class(lines.size()).get_mpz_t(), h);
  if (visits > mpz_class(std::to_string(budget)))
    throw Error(ErrorCode::BudgetExceeded, "duality census needs " + visits.get_str() + " visits");

  for_each_tuple(lines, h, [&](const std::vector<Subspace>& tuple) {
    Configuration config(tuple);
    if (stratum_of(config) != i) return;
    ++report.sum_side;
    if (dual_stratum_of(dualize_configuration(config)) == n - i) ++report.mapped;
  });
  for_each_tuple(duals, h, [&](const std::vector<Subspace>& tuple) {
    if (dual_stratum_of(Configuration(tuple)) == n - i) ++report.intersection_side;
  });
  return report;
}

}  // namespace gstrata
