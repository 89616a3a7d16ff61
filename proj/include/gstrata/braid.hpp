#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gstrata/smith.hpp"

namespace gstrata::braid {

/// alpha_ij with 1 <= i < j.
struct Generator {
  std::size_t i, j;

  Generator(std::size_t i_, std::size_t j_);
  std::string name() const;  // "a12"; "a3_10" once an index exceeds 9
  bool operator==(const Generator&) const = default;
  auto operator<=>(const Generator&) const = default;
};

struct Letter {
  Generator gen;
  int exponent;  // +1 or -1

  Letter inverse() const { return {gen, -exponent}; }
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
/// x y x^-1 y^-1, freely reduced.
Word commutator(const Word& x, const Word& y);
/// Cancels adjacent x x^-1 pairs until none remain.
Word free_reduce(const Word& w);
std::string to_string(const Word& w);

/// alpha_12 (alpha_13 alpha_23) ... (alpha_1m ... alpha_{m-1,m}); empty for m <= 1.
Word d_element(std::size_t m);
/// For each i < j < k <= m: w1 w2^-1 and w2 w3^-1 with w1 = a_ij a_ik a_jk,
/// w2 = a_ik a_jk a_ij, w3 = a_jk a_ij a_ik.
std::vector<Word> yb3_relators(std::size_t m);
/// For each i < j < k < l <= m the four commutators
/// [a_kl, a_ij], [a_il, a_jk], [a_jl, a_jk^-1 a_ik a_jk], [a_jl, a_kl a_ik a_kl^-1].
std::vector<Word> yb4_relators(std::size_t m);

struct Presentation {
  std::size_t m = 0;                  // generators alpha_ij, 1 <= i < j <= m
  std::vector<Generator> generators;  // lexicographic in (i, j)
  std::vector<Word> relators;
  std::size_t yb3_count = 0;
  std::size_t yb4_count = 0;

  /// Position of g in `generators`.
  std::size_t index_of(const Generator& g) const;
  /// Plain-text export: "g i j" lines, then one relator per line as
  /// space-separated tokens such as "a12 a13^-1".
  std::string to_text() const;
};

/// Pure braid group of the sphere on h strands: m = h - 1,
/// relators (YB 3)_m, (YB 4)_m and D_m^2. InvalidArgument for h < 2.
Presentation sphere_pure_braid_presentation(std::size_t h);

/// Relator exponent-sum matrix (rows: relators, columns: generators).
IntMatrix exponent_matrix(const Presentation& p);
SmithForm abelianization(const Presentation& p);

struct CosetEnumeration {
  enum class Status { FiniteOrder, Exceeded };
  Status status;
  std::size_t order = 0;  // group order when FiniteOrder
  std::size_t cosets_defined = 0;

  std::string to_string() const;
};

inline constexpr std::size_t kDefaultMaxCosets = 100'000;

/// Todd-Coxeter enumeration of the cosets of the trivial subgroup
/// (HLT strategy with coincidence processing).
CosetEnumeration todd_coxeter(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace gstrata::braid
