#include "gstrata/braid.hpp"

#include <algorithm>
#include <sstream>

#include "gstrata/error.hpp"

namespace gstrata::braid {

Generator::Generator(std::size_t i_, std::size_t j_) : i(i_), j(j_) {
  if (i_ < 1 || i_ >= j_) throw Error(ErrorCode::InvalidArgument, "generator needs 1 <= i < j");
}

std::string Generator::name() const {
  if (i < 10 && j < 10) return "a" + std::to_string(i) + std::to_string(j);
  return "a" + std::to_string(i) + "_" + std::to_string(j);
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word commutator(const Word& x, const Word& y) {
  return free_reduce(concat(concat(x, y), concat(inverse(x), inverse(y))));
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& letter : w) {
    if (!out.empty() && out.back() == letter.inverse())
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& letter : w) {
    if (!out.empty()) out += ' ';
    out += letter.gen.name();
    if (letter.exponent < 0) out += "^-1";
  }
  return out;
}

namespace {

Letter a(std::size_t i, std::size_t j) { return {Generator(i, j), 1}; }
Letter a_inv(std::size_t i, std::size_t j) { return {Generator(i, j), -1}; }

}  // namespace

Word d_element(std::size_t m) {
  Word out;
  for (std::size_t col = 2; col <= m; ++col)
    for (std::size_t row = 1; row < col; ++row) out.push_back(a(row, col));
  return out;
}

std::vector<Word> yb3_relators(std::size_t m) {
  std::vector<Word> out;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      for (std::size_t k = j + 1; k <= m; ++k) {
        const Word w1{a(i, j), a(i, k), a(j, k)};
        const Word w2{a(i, k), a(j, k), a(i, j)};
        const Word w3{a(j, k), a(i, j), a(i, k)};
        out.push_back(free_reduce(concat(w1, inverse(w2))));
        out.push_back(free_reduce(concat(w2, inverse(w3))));
      }
  return out;
}

std::vector<Word> yb4_relators(std::size_t m) {
  std::vector<Word> out;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      for (std::size_t k = j + 1; k <= m; ++k)
        for (std::size_t l = k + 1; l <= m; ++l) {
          out.push_back(commutator({a(k, l)}, {a(i, j)}));
          out.push_back(commutator({a(i, l)}, {a(j, k)}));
          out.push_back(commutator({a(j, l)}, {a_inv(j, k), a(i, k), a(j, k)}));
          out.push_back(commutator({a(j, l)}, {a(k, l), a(i, k), a_inv(k, l)}));
        }
  return out;
}

std::size_t Presentation::index_of(const Generator& g) const {
  auto it = std::lower_bound(generators.begin(), generators.end(), g);
  if (it == generators.end() || !(*it == g))
    throw Error(ErrorCode::InvalidArgument, "generator " + g.name() + " is not declared");
  return static_cast<std::size_t>(it - generators.begin());
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  for (const auto& g : generators) os << "g " << g.i << ' ' << g.j << '\n';
  for (const auto& r : relators) os << to_string(r) << '\n';
  return os.str();
}

Presentation sphere_pure_braid_presentation(std::size_t h) {
  if (h < 2) throw Error(ErrorCode::InvalidArgument, "the sphere braid presentation needs h >= 2");
  Presentation p;
  p.m = h - 1;
  for (std::size_t i = 1; i <= p.m; ++i)
    for (std::size_t j = i + 1; j <= p.m; ++j) p.generators.emplace_back(i, j);
  auto yb3 = yb3_relators(p.m);
  auto yb4 = yb4_relators(p.m);
  p.yb3_count = yb3.size();
  p.yb4_count = yb4.size();
  p.relators = std::move(yb3);
  p.relators.insert(p.relators.end(), yb4.begin(), yb4.end());
  // D_1 is the empty product, so for h = 2 this relator is the empty word.
  const Word d = d_element(p.m);
  p.relators.push_back(concat(d, d));
  return p;
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const auto& letter : p.relators[r]) m(r, p.index_of(letter.gen)) += letter.exponent;
  return m;
}

SmithForm abelianization(const Presentation& p) { return smith_normal_form(exponent_matrix(p)); }

}  // namespace gstrata::braid
