#pragma once

// Brute-force subspace oracle for graded pieces of the free Lie algebra on k
// generators: spans are materialized in the tensor algebra and dimensions
// come out of exact elimination.  This is deliberately formula-free so the
// closed forms elsewhere can be checked against it.

#include "liedim/lie.hpp"
#include "liedim/subspace.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace liedim {

// Word spans grow as k^n; the oracle refuses sizes past these caps with a
// clear error instead of thrashing.
struct OracleBudget {
  int max_alphabet = 6;
  int max_degree = 8;
};

inline void check_budget(int k, int n, const OracleBudget& budget) {
  if (k < 1 || n < 1) throw std::domain_error("oracle: k, n >= 1 required");
  if (k > budget.max_alphabet || n > budget.max_degree)
    throw BudgetError("oracle budget exceeded: alphabet " + std::to_string(k) + ", degree " +
                      std::to_string(n) + " (caps: " + std::to_string(budget.max_alphabet) +
                      ", " + std::to_string(budget.max_degree) + "); raise the budget to proceed");
}

inline std::size_t rank_of(const std::vector<LieMonomial>& monomials, int alphabet) {
  std::vector<WordVec> vecs;
  vecs.reserve(monomials.size());
  for (const auto& m : monomials) vecs.push_back(expand(m, alphabet));
  return rank_of(vecs);
}

namespace detail {

struct LevelPiece {
  Subspace span;
  std::vector<WordVec> basis;  // independent generators, sparse bracket products
};

// Degree-n piece of the r-th derived level.  Convention: level 1 is the
// whole algebra and level r+1 = [level r, level r]; level r is zero below
// degree 2^(r-1).  Level 1 uses the Lyndon basis; level r+1 spans the
// brackets [u, v] of level-r basis elements in complementary degrees, with
// one of each antisymmetric pair.
inline LevelPiece derived_level(int k, int r, int n, const OracleBudget& budget) {
  check_budget(k, n, budget);
  LevelPiece out{Subspace(k, n), {}};
  if (n < (1 << (r - 1))) return out;
  if (r == 1) {
    for (const auto& m : lyndon_basis(k, n)) {
      WordVec w = expand(m, k);
      out.span.insert(w);
      out.basis.push_back(std::move(w));
    }
    return out;
  }
  const int lo = 1 << (r - 2);  // lowest degree where level r-1 is nonzero
  for (int a = lo; 2 * a <= n; ++a) {
    const int b = n - a;
    const auto ua = derived_level(k, r - 1, a, budget).basis;
    const auto vb = (a == b) ? ua : derived_level(k, r - 1, b, budget).basis;
    for (std::size_t i = 0; i < ua.size(); ++i) {
      const std::size_t jstart = (a == b) ? i + 1 : 0;
      for (std::size_t j = jstart; j < vb.size(); ++j) {
        WordVec w = bracket(ua[i], vb[j]);
        if (out.span.insert(w)) out.basis.push_back(std::move(w));
      }
    }
  }
  return out;
}

}  // namespace detail

// Degree-n piece of the r-th derived level of the free Lie algebra on k
// generators, as an exact row space.
inline Subspace derived_piece(int k, int r, int n, const OracleBudget& budget = {}) {
  if (r < 1) throw std::domain_error("derived_piece: r >= 1 required");
  return detail::derived_level(k, r, n, budget).span;
}

// Which generators are paired by the symplectic form: consecutive pairs
// [e1,e2] + [e3,e4] + ..., or the split convention [e_i, e_{g+i}].
enum class SymplecticPairing { consecutive, split };

// The surface relation: sum of the g symplectic generator brackets.
inline WordVec relation_element(int g, SymplecticPairing pairing = SymplecticPairing::consecutive) {
  if (g < 1) throw std::domain_error("relation_element: g >= 1 required");
  const int k = 2 * g;
  WordVec omega(k, 2);
  for (int i = 1; i <= g; ++i) {
    const int a = (pairing == SymplecticPairing::consecutive) ? 2 * i - 1 : i;
    const int b = (pairing == SymplecticPairing::consecutive) ? 2 * i : g + i;
    omega += bracket(WordVec::unit(k, a), WordVec::unit(k, b));
  }
  return omega;
}

// Spanning family for the degree-n piece of the ideal generated by the
// surface relation: iterated brackets [[...[w, x1], x2]...] by generators.
// Bracketing by generators suffices because the algebra is generated by
// them: ad of a bracket monomial expands into compositions of generator ads.
inline std::vector<WordVec> relation_generators(int g, int n,
                                                SymplecticPairing pairing = SymplecticPairing::consecutive,
                                                const OracleBudget& budget = {}) {
  if (n < 2) throw std::domain_error("relation_generators: n >= 2 required");
  const int k = 2 * g;
  check_budget(k, n, budget);
  std::vector<WordVec> out;
  std::vector<WordVec> frontier{relation_element(g, pairing)};
  for (int d = 3; d <= n; ++d) {
    std::vector<WordVec> next;
    next.reserve(frontier.size() * k);
    for (const auto& w : frontier)
      for (int x = 1; x <= k; ++x)
        next.push_back(bracket(w, WordVec::unit(k, x)));
    frontier = std::move(next);
  }
  return frontier;
}

// Degree-n piece of the surface-relation ideal, as an exact row space.
inline Subspace relation_piece(int g, int n,
                               SymplecticPairing pairing = SymplecticPairing::consecutive,
                               const OracleBudget& budget = {}) {
  Subspace s(2 * g, n);
  for (const auto& v : relation_generators(g, n, pairing, budget)) s.insert(v);
  return s;
}

// Debug dump: one row per basis vector, tab-separated word / numerator /
// denominator triples after canonicalization.
inline void write_basis_tsv(Subspace& s, std::ostream& os) {
  s.canonicalize();
  os << "row\tword\tnum\tden\n";
  std::size_t row = 0;
  for (const auto& v : s.basis()) {
    for (const auto& [c, q] : v.terms())
      os << row << '\t' << word_to_string(c, s.alphabet(), s.degree()) << '\t'
         << rat_num(q) << '\t' << rat_den(q) << '\n';
    ++row;
  }
}

}  // namespace liedim
