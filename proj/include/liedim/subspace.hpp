#pragma once

// Exact row spaces of sparse word vectors.  Rows are kept as primitive
// integer vectors (content 1, positive leading coefficient) and reduced by
// fraction-free elimination: r <- (lead(p)*r - lead(r)*p) / content.  The
// leading term of a row is its lexicographically smallest word, and pivot
// rows are keyed by leading code, so insertion order is irrelevant to rank
// and membership.  canonicalize() back-substitutes to the unique reduced
// echelon form when rows themselves are wanted.

#include "liedim/words.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace liedim {

namespace detail {

using IntRow = std::vector<std::pair<WordCode, Int>>;

inline void make_primitive(IntRow& r) {
  if (r.empty()) return;
  Int g = 0;
  for (const auto& [c, q] : r) {
    g = boost::multiprecision::gcd(g, q);
    if (g == 1) break;
  }
  const bool flip = r.front().second < 0;
  if (g > 1 || flip) {
    if (flip) g = -g;
    for (auto& [c, q] : r) q /= g;
  }
}

// r <- a*r - b*p, merged over the sorted supports.
inline IntRow row_combine(const IntRow& r, const Int& a, const IntRow& p, const Int& b) {
  IntRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      Int q = a * r[i].second - b * p[j].second;
      if (q != 0) out.emplace_back(r[i].first, std::move(q));
      ++i; ++j;
    }
  }
  return out;
}

}  // namespace detail

class Subspace {
 public:
  Subspace(int alphabet, int degree) : alphabet_(alphabet), degree_(degree) {
    if (alphabet < 1 || degree < 1) throw std::invalid_argument("Subspace: alphabet, degree >= 1");
  }

  int alphabet() const { return alphabet_; }
  int degree() const { return degree_; }
  std::size_t rank() const { return pivots_.size(); }

  // Adds v to the span; returns true when the rank grew.
  bool insert(const WordVec& v) {
    check_compatible(v);
    detail::IntRow r = to_int_row(v);
    while (!r.empty()) {
      auto it = pivots_.find(r.front().first);
      if (it == pivots_.end()) {
        detail::make_primitive(r);
        pivots_.emplace(r.front().first, std::move(r));
        canonical_ = false;
        return true;
      }
      r = detail::row_combine(r, it->second.front().second, it->second, r.front().second);
      detail::make_primitive(r);
    }
    return false;
  }

  bool contains(const WordVec& v) const {
    check_compatible(v);
    detail::IntRow r = to_int_row(v);
    while (!r.empty()) {
      auto it = pivots_.find(r.front().first);
      if (it == pivots_.end()) return false;
      r = detail::row_combine(r, it->second.front().second, it->second, r.front().second);
      detail::make_primitive(r);
    }
    return true;
  }

  // Back-substitution to the reduced echelon form, processing pivot columns
  // from largest to smallest so each pass leaves earlier rows clean.
  void canonicalize() {
    if (canonical_) return;
    for (auto pit = pivots_.rbegin(); pit != pivots_.rend(); ++pit) {
      const WordCode col = pit->first;
      const detail::IntRow& p = pit->second;
      for (auto& [lead, row] : pivots_) {
        if (lead == col) continue;
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (row[i].first != col) continue;
          row = detail::row_combine(row, p.front().second, p, row[i].second);
          detail::make_primitive(row);
          break;
        }
      }
    }
    canonical_ = true;
  }

  // Basis rows normalized to leading coefficient 1; canonical once
  // canonicalize() has run (insertions reset that).
  std::vector<WordVec> basis() const {
    std::vector<WordVec> out;
    out.reserve(pivots_.size());
    for (const auto& [lead, row] : pivots_) {
      WordVec v(alphabet_, degree_);
      const Int& l = row.front().second;
      for (const auto& [c, q] : row) v.push_term(c, Rat(q, l));
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  void check_compatible(const WordVec& v) const {
    if (v.alphabet() != alphabet_ || v.degree() != degree_)
      throw std::invalid_argument("Subspace: degree/alphabet mismatch");
  }

  detail::IntRow to_int_row(const WordVec& v) const {
    Int lcm = 1;
    for (const auto& [c, q] : v.terms())
      lcm = boost::multiprecision::lcm(lcm, rat_den(q));
    detail::IntRow r;
    r.reserve(v.size());
    for (const auto& [c, q] : v.terms())
      r.emplace_back(c, rat_num(q) * (lcm / rat_den(q)));
    detail::make_primitive(r);
    return r;
  }

  int alphabet_;
  int degree_;
  std::map<WordCode, detail::IntRow> pivots_;
  bool canonical_ = true;
};

// Exact rank of a homogeneous family; rejects mixed degrees or alphabets.
inline std::size_t rank_of(const std::vector<WordVec>& vectors) {
  if (vectors.empty()) return 0;
  Subspace s(vectors.front().alphabet(), vectors.front().degree());
  for (const auto& v : vectors) s.insert(v);
  return s.rank();
}

}  // namespace liedim
