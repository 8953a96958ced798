#pragma once

// Lie monomials (bracket trees over generator leaves), their expansion into
// the tensor algebra, and the Lyndon-word basis of the free Lie algebra.

#include "liedim/words.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace liedim {

// Immutable bracket tree with shared subtrees.  A leaf carries a generator
// index >= 1; an internal node is the bracket of its two children.
class LieMonomial {
 public:
  static LieMonomial leaf(int index) {
    if (index < 1) throw std::invalid_argument("LieMonomial: generator index >= 1");
    auto n = std::make_shared<Node>();
    n->leaf = index;
    n->degree = 1;
    return LieMonomial(std::move(n));
  }

  static LieMonomial bracket_of(const LieMonomial& a, const LieMonomial& b) {
    auto n = std::make_shared<Node>();
    n->leaf = 0;
    n->degree = a.degree() + b.degree();
    n->l = a.node_;
    n->r = b.node_;
    return LieMonomial(std::move(n));
  }

  bool is_leaf() const { return node_->leaf != 0; }
  int index() const { return node_->leaf; }
  int degree() const { return node_->degree; }
  LieMonomial left() const { return LieMonomial(node_->l); }
  LieMonomial right() const { return LieMonomial(node_->r); }

  // Flat token stream for deterministic structural comparison: a leaf is its
  // index, a node is -1 <left> <right> -2.  Lexicographic order on tokens
  // orders leaves by index and is total on distinct trees.
  std::vector<int> tokens() const {
    std::vector<int> out;
    append_tokens(node_.get(), out);
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    print(node_.get(), os);
    return os.str();
  }

  friend bool operator==(const LieMonomial& a, const LieMonomial& b) {
    return a.tokens() == b.tokens();
  }

 private:
  struct Node {
    int leaf = 0;
    int degree = 0;
    std::shared_ptr<const Node> l, r;
  };

  explicit LieMonomial(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static void append_tokens(const Node* n, std::vector<int>& out) {
    if (n->leaf) { out.push_back(n->leaf); return; }
    out.push_back(-1);
    append_tokens(n->l.get(), out);
    append_tokens(n->r.get(), out);
    out.push_back(-2);
  }

  static void print(const Node* n, std::ostringstream& os) {
    if (n->leaf) { os << n->leaf; return; }
    os << '[';
    print(n->l.get(), os);
    os << ',';
    print(n->r.get(), os);
    os << ']';
  }

  std::shared_ptr<const Node> node_;
};

inline bool monomial_less(const LieMonomial& a, const LieMonomial& b) {
  return a.tokens() < b.tokens();
}

// Expansion into the degree-n word span over the given alphabet size.
inline WordVec expand(const LieMonomial& m, int alphabet) {
  if (m.is_leaf()) {
    if (m.index() > alphabet) throw std::invalid_argument("expand: leaf outside alphabet");
    return WordVec::unit(alphabet, m.index());
  }
  return bracket(expand(m.left(), alphabet), expand(m.right(), alphabet));
}

// Lyndon words of length n over {1..k} via Duval's generation, each turned
// into its standard bracketing: split at the longest proper Lyndon suffix.
namespace detail {

inline LieMonomial standard_bracketing(const std::vector<int>& w) {
  if (w.size() == 1) return LieMonomial::leaf(w[0]);
  // Split before the longest proper Lyndon suffix, which for a Lyndon word
  // is its lexicographically smallest proper suffix (Duval).
  std::size_t best = 1;
  for (std::size_t i = 2; i < w.size(); ++i) {
    if (std::lexicographical_compare(w.begin() + i, w.end(), w.begin() + best, w.end()))
      best = i;
  }
  const std::vector<int> u(w.begin(), w.begin() + best);
  const std::vector<int> v(w.begin() + best, w.end());
  return LieMonomial::bracket_of(standard_bracketing(u), standard_bracketing(v));
}

}  // namespace detail

// All Lyndon words of length exactly n over {1..k}, in lexicographic order.
inline std::vector<std::vector<int>> lyndon_words(int k, int n) {
  if (k < 1 || n < 1) throw std::domain_error("lyndon_words: k, n >= 1 required");
  std::vector<std::vector<int>> out;
  std::vector<int> w{1};
  while (true) {
    if (static_cast<int>(w.size()) == n) out.push_back(w);
    // Duval step: extend periodically to full length, then increment.
    std::vector<int> next;
    next.reserve(n);
    while (static_cast<int>(next.size()) < n)
      next.push_back(w[next.size() % w.size()]);
    while (!next.empty() && next.back() == k) next.pop_back();
    if (next.empty()) break;
    ++next.back();
    w = std::move(next);
  }
  return out;
}

// Standard bracketings of the length-n Lyndon words: a basis of the degree-n
// piece of the free Lie algebra on k generators.
inline std::vector<LieMonomial> lyndon_basis(int k, int n) {
  std::vector<LieMonomial> out;
  for (const auto& w : lyndon_words(k, n))
    out.push_back(detail::standard_bracketing(w));
  return out;
}

}  // namespace liedim
