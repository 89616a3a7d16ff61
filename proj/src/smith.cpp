#include "gstrata/smith.hpp"

#include <algorithm>
#include <utility>

namespace gstrata {

IntMatrix::IntMatrix(std::size_t r, std::size_t c, std::initializer_list<long> values)
    : rows(r), cols(c) {
  entries.reserve(values.size());
  for (long v : values) entries.emplace_back(v);
  entries.resize(r * c);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols; ++c) swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows; ++r) swap(m(r, a), m(r, b));
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& relations) {
  IntMatrix m = relations;
  const std::size_t limit = std::min(m.rows, m.cols);
  std::vector<mpz_class> diagonal;

  for (std::size_t t = 0; t < limit; ++t) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    auto find_pivot = [&](std::size_t& pr, std::size_t& pc) {
      bool found = false;
      mpz_class best;
      for (std::size_t r = t; r < m.rows; ++r)
        for (std::size_t c = t; c < m.cols; ++c) {
          if (m(r, c) == 0) continue;
          mpz_class a = abs(m(r, c));
          if (!found || a < best) {
            best = a;
            pr = r;
            pc = c;
            found = true;
          }
        }
      return found;
    };

    std::size_t pr = 0, pc = 0;
    if (!find_pivot(pr, pc)) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows; ++r) {
        if (m(r, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t c = t; c < m.cols; ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < m.cols; ++c) {
        if (m(t, c) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t r = t; r < m.rows; ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) clean = false;
      }
      if (clean) break;
      // A nonzero remainder is smaller than the pivot; move it into place.
      find_pivot(pr, pc);
      swap_rows(m, t, pr);
      swap_cols(m, t, pc);
    }
    diagonal.push_back(abs(m(t, t)));
  }

  // Restore the divisibility chain with gcd/lcm exchanges.
  for (std::size_t i = 0; i < diagonal.size(); ++i)
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      mpz_class g = gcd(diagonal[i], diagonal[j]);
      if (g == 0) continue;
      mpz_class l = diagonal[i] / g * diagonal[j];
      diagonal[i] = g;
      diagonal[j] = l;
    }

  SmithForm out;
  std::size_t nonzero = 0;
  for (const auto& d : diagonal) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) out.divisors.push_back(d);
  }
  out.free_rank = m.cols - nonzero;
  return out;
}

}  // namespace gstrata
