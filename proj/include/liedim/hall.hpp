#pragma once

// Hall-type basis organized by derived-series level.  Level 0 is the ordered
// generators; level n+1 consists of the left-normed brackets
// [[...[h1,h2],h3],...,hq] with q >= 2, all hi at level n, h1 < h2 and
// h2 >= h3 >= ... >= hq in the level's total order.  Within a level,
// elements are ordered by (degree, bracket structure); across levels, lower
// level means greater element.  The union of levels >= r restricts in each
// degree to a basis of the r+1-st derived level, which verify_hall_spans
// checks against the elimination oracle.

#include "liedim/combinatorics.hpp"
#include "liedim/oracle.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace liedim {

struct HallElement {
  LieMonomial monomial;
  int level;
  int degree;
  std::size_t order_key;  // rank within the level's total order
};

struct HallTable {
  int alphabet = 0;
  int max_degree = 0;
  std::vector<std::vector<HallElement>> levels;  // levels[l], each sorted by order_key

  std::vector<HallElement> slice(int level, int degree) const {
    std::vector<HallElement> out;
    if (level >= 0 && level < static_cast<int>(levels.size()))
      for (const auto& e : levels[level])
        if (e.degree == degree) out.push_back(e);
    return out;
  }

  std::vector<HallElement> of_degree(int degree, int min_level = 0) const {
    std::vector<HallElement> out;
    for (int l = min_level; l < static_cast<int>(levels.size()); ++l)
      for (const auto& e : levels[l])
        if (e.degree == degree) out.push_back(e);
    return out;
  }
};

inline HallTable generate_hall(int k, int max_degree) {
  if (k < 2 || max_degree < 1) throw std::domain_error("generate_hall: k >= 2, max_degree >= 1 required");
  HallTable table{k, max_degree, {}};

  std::vector<HallElement> leaves;
  for (int i = 1; i <= k; ++i)
    leaves.push_back({LieMonomial::leaf(i), 0, 1, static_cast<std::size_t>(i - 1)});
  table.levels.push_back(std::move(leaves));

  int level = 0;
  // Level l elements have degree >= 2^l, so the tower is finite.
  while ((1 << (level + 1)) <= max_degree) {
    const auto& prev = table.levels[level];
    std::vector<HallElement> next;

    // prev is sorted by degree, so fit[b] = number of elements of degree <= b
    // lets the chain growth below visit only candidates that fit the budget.
    std::vector<std::size_t> fit(max_degree + 1, 0);
    for (const auto& e : prev)
      for (int b = e.degree; b <= max_degree; ++b) ++fit[b];

    // Chains are grown left-normed: start from [h1,h2] with h1 < h2, then
    // append tail factors with non-increasing rank.
    struct Grow {
      const std::vector<HallElement>& prev;
      const std::vector<std::size_t>& fit;
      int max_degree, level;
      std::vector<HallElement>& next;
      void operator()(const LieMonomial& m, int degree, std::size_t last) {
        next.push_back({m, level + 1, degree, 0});
        const std::size_t stop = std::min(last + 1, fit[max_degree - degree]);
        for (std::size_t t = 0; t < stop; ++t)
          (*this)(LieMonomial::bracket_of(m, prev[t].monomial), degree + prev[t].degree, t);
      }
    } grow{prev, fit, max_degree, level, next};

    for (std::size_t r2 = 0; r2 < prev.size(); ++r2) {
      const int budget = max_degree - prev[r2].degree;
      if (budget < prev.front().degree) break;  // degrees ascend; nothing pairs
      const std::size_t stop = std::min(r2, fit[budget]);
      for (std::size_t r1 = 0; r1 < stop; ++r1)
        grow(LieMonomial::bracket_of(prev[r1].monomial, prev[r2].monomial),
             prev[r1].degree + prev[r2].degree, r2);
    }

    // Sort by (degree, structure) via cached token streams: tokens() builds a
    // fresh vector per call, too costly inside a comparator at this scale.
    std::vector<std::size_t> order(next.size());
    std::vector<std::vector<int>> keys(next.size());
    for (std::size_t i = 0; i < next.size(); ++i) {
      order[i] = i;
      keys[i] = next[i].monomial.tokens();
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (next[a].degree != next[b].degree) return next[a].degree < next[b].degree;
      return keys[a] < keys[b];
    });
    std::vector<HallElement> sorted;
    sorted.reserve(next.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      sorted.push_back(std::move(next[order[i]]));
      sorted.back().order_key = i;
    }

    table.levels.push_back(std::move(sorted));
    if (table.levels[++level].empty()) break;
  }
  return table;
}

// Level-1 elements of degree n over 2g generators, enumerated directly from
// the index-chain description: [[...[e_i1, e_i2], e_i3], ..., e_in] with
// i1 < i2 >= i3 >= ... >= in.
inline std::vector<LieMonomial> level_one_monomials(int g, int n) {
  if (g < 1 || n < 2) throw std::domain_error("level_one_monomials: g >= 1, n >= 2 required");
  const int k = 2 * g;
  std::vector<LieMonomial> out;
  std::vector<LieMonomial> leaves;
  for (int i = 1; i <= k; ++i) leaves.push_back(LieMonomial::leaf(i));

  struct Grow {
    const std::vector<LieMonomial>& leaves;
    int n;
    std::vector<LieMonomial>& out;
    void operator()(const LieMonomial& m, int depth, int last) {
      if (depth == n) { out.push_back(m); return; }
      for (int t = 1; t <= last; ++t)
        (*this)(LieMonomial::bracket_of(m, leaves[t - 1]), depth + 1, t);
    }
  } grow{leaves, n, out};

  for (int i2 = 2; i2 <= k; ++i2)
    for (int i1 = 1; i1 < i2; ++i1)
      grow(LieMonomial::bracket_of(leaves[i1 - 1], leaves[i2 - 1]), 2, i2);
  return out;
}

struct SpanReport {
  bool ok = false;
  int degree = 0;
  std::size_t rank_all = 0;      // rank of all degree-n Hall elements
  BigCount expected_all = 0;     // witt_dimension(k, n)
  std::size_t rank_deep = 0;     // rank of the level >= 2 slice
  std::size_t rank_derived = 0;  // oracle rank of the 3rd derived level piece
};

// Checks that the degree-n Hall elements span the whole degree-n piece and
// that the level >= 2 slice spans exactly the metabelian kernel.
inline SpanReport verify_hall_spans(int k, int n, const OracleBudget& budget = {}) {
  check_budget(k, n, budget);
  const HallTable table = generate_hall(k, n);
  SpanReport rep;
  rep.degree = n;
  rep.expected_all = witt_dimension(k, n);

  std::vector<WordVec> all, deep;
  for (const auto& e : table.of_degree(n)) all.push_back(expand(e.monomial, k));
  for (const auto& e : table.of_degree(n, 2)) deep.push_back(expand(e.monomial, k));
  rep.rank_all = rank_of(all);
  rep.rank_deep = deep.empty() ? 0 : rank_of(deep);
  rep.rank_derived = derived_piece(k, 3, n, budget).rank();
  rep.ok = BigCount(rep.rank_all) == rep.expected_all && rep.rank_deep == rep.rank_derived;
  return rep;
}

// |H_level(degree)| for all levels and degrees <= max_degree.  The counts in
// each degree add up to the Witt dimension (checked here, since the table is
// meant as a certificate).
struct GradedDimTable {
  int alphabet = 0;
  int max_degree = 0;
  std::map<int, std::map<int, BigCount>> counts;  // degree -> level -> count
};

inline GradedDimTable bigrade_dims(int k, int max_degree) {
  const HallTable table = generate_hall(k, max_degree);
  GradedDimTable out{k, max_degree, {}};
  for (const auto& level : table.levels)
    for (const auto& e : level) ++out.counts[e.degree][e.level];
  for (int n = 1; n <= max_degree; ++n) {
    BigCount sum = 0;
    for (const auto& [lvl, c] : out.counts[n]) sum += c;
    if (sum != witt_dimension(k, n))
      throw std::logic_error("bigrade_dims: level counts disagree with the Witt dimension");
  }
  return out;
}

}  // namespace liedim
