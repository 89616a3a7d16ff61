#include <deque>
#include <vector>

#include "gstrata/braid.hpp"

namespace gstrata::braid {

std::string CosetEnumeration::to_string() const {
  if (status == Status::FiniteOrder) return "FiniteOrder(" + std::to_string(order) + ")";
  return "Exceeded(" + std::to_string(cosets_defined) + " cosets)";
}

namespace {

constexpr int kUndefined = -1;

// Columns 2g and 2g + 1 hold the action of generator g and of its inverse.
class CosetTable {
 public:
  CosetTable(std::size_t generators, std::size_t max_cosets)
      : columns_(2 * generators), max_cosets_(max_cosets) {
    add_row();
  }

  bool exceeded() const { return exceeded_; }
  std::size_t defined() const { return forward_.size(); }
  bool live(int c) const { return forward_[static_cast<std::size_t>(c)] == c; }

  std::size_t live_count() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < forward_.size(); ++c) n += live(static_cast<int>(c));
    return n;
  }

  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * columns_ + static_cast<std::size_t>(x)]; }

  /// New coset d with c.x = d; false once the budget is spent.
  bool define(int c, int x) {
    if (forward_.size() >= max_cosets_) {
      exceeded_ = true;
      return false;
    }
    const int d = add_row();
    at(c, x) = d;
    at(d, x ^ 1) = c;
    return true;
  }

  /// Traces `word` from c in both directions, defining cosets along the way
  /// until the relator closes (HLT scan-and-fill).
  void scan_and_fill(int c, const std::vector<int>& word) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(word.size()) - 1;
    for (;;) {
      while (i <= j && at(f, word[i]) != kUndefined) f = at(f, word[i++]);
      if (i > j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j >= i && at(b, word[j] ^ 1) != kUndefined) b = at(b, word[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        // Deduction: the single missing entry closes the relator.
        at(f, word[i]) = b;
        at(b, word[i] ^ 1) = f;
        return;
      }
      if (!define(f, word[i])) return;
    }
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      for (int x = 0; x < static_cast<int>(columns_); ++x) {
        const int f = at(e, x);
        if (f == kUndefined) continue;
        at(f, x ^ 1) = kUndefined;
        const int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) != kUndefined)
          merge(f1, at(e1, x), queue);
        else if (at(f1, x ^ 1) != kUndefined)
          merge(e1, at(f1, x ^ 1), queue);
        else {
          at(e1, x) = f1;
          at(f1, x ^ 1) = e1;
        }
      }
    }
  }

 private:
  int add_row() {
    const int c = static_cast<int>(forward_.size());
    forward_.push_back(c);
    table_.resize(table_.size() + columns_, kUndefined);
    return c;
  }

  int rep(int c) {
    int r = c;
    while (forward_[static_cast<std::size_t>(r)] != r) r = forward_[static_cast<std::size_t>(r)];
    while (forward_[static_cast<std::size_t>(c)] != r) {
      const int next = forward_[static_cast<std::size_t>(c)];
      forward_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward_[static_cast<std::size_t>(b)] = a;
    queue.push_back(b);
  }

  std::size_t columns_;
  std::size_t max_cosets_;
  bool exceeded_ = false;
  std::vector<int> table_;
  std::vector<int> forward_;  // forward_[c] == c iff c is live
};

}  // namespace

CosetEnumeration todd_coxeter(const Presentation& p, std::size_t max_cosets) {
  std::vector<std::vector<int>> relators;
  for (const auto& r : p.relators) {
    std::vector<int> encoded;
    for (const auto& letter : free_reduce(r))
      encoded.push_back(static_cast<int>(2 * p.index_of(letter.gen)) + (letter.exponent < 0 ? 1 : 0));
    relators.push_back(std::move(encoded));
  }

  CosetTable table(p.generators.size(), max_cosets);
  const int columns = static_cast<int>(2 * p.generators.size());
  for (int c = 0; c < static_cast<int>(table.defined()); ++c) {
    for (const auto& r : relators) {
      if (!table.live(c)) break;
      table.scan_and_fill(c, r);
      if (table.exceeded()) return {CosetEnumeration::Status::Exceeded, 0, table.defined()};
    }
    for (int x = 0; x < columns && table.live(c); ++x)
      if (table.at(c, x) == kUndefined && !table.define(c, x))
        return {CosetEnumeration::Status::Exceeded, 0, table.defined()};
  }
  return {CosetEnumeration::Status::FiniteOrder, table.live_count(), table.defined()};
}

}  // namespace gstrata::braid
