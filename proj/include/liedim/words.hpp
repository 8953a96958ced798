#pragma once

// Words in the tensor algebra on k generators and sparse exact-rational
// vectors over them.  A word of fixed degree n is packed into a 64-bit code
// in base k with the first letter most significant, so numeric order on
// codes is lexicographic order on words.

#include "liedim/numeric.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liedim {

using WordCode = std::uint64_t;

inline WordCode encode_word(const std::vector<int>& letters, int k) {
  WordCode code = 0;
  for (int l : letters) {
    if (l < 1 || l > k) throw std::invalid_argument("encode_word: letter out of range");
    code = code * static_cast<WordCode>(k) + static_cast<WordCode>(l - 1);
  }
  return code;
}

inline std::vector<int> decode_word(WordCode code, int k, int degree) {
  std::vector<int> letters(degree);
  for (int pos = degree - 1; pos >= 0; --pos) {
    letters[pos] = static_cast<int>(code % k) + 1;
    code /= k;
  }
  return letters;
}

// Comma-joined generator indices, e.g. "1,2,1".
inline std::string word_to_string(WordCode code, int k, int degree) {
  const auto letters = decode_word(code, k, degree);
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ',';
    os << letters[i];
  }
  return os.str();
}

// Sparse vector in the degree-n word span: sorted (code, coefficient) terms
// with no zero coefficients.  Degree and alphabet are fixed per vector;
// mixing degrees is a caller error and is rejected by the operations.
class WordVec {
 public:
  WordVec(int alphabet, int degree) : alphabet_(alphabet), degree_(degree) {
    if (alphabet < 1 || degree < 1) throw std::invalid_argument("WordVec: alphabet, degree >= 1");
  }

  static WordVec unit(int alphabet, int letter) {
    WordVec v(alphabet, 1);
    v.terms_.emplace_back(encode_word({letter}, alphabet), Rat(1));
    return v;
  }

  int alphabet() const { return alphabet_; }
  int degree() const { return degree_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<std::pair<WordCode, Rat>>& terms() const { return terms_; }

  Rat coeff(WordCode code) const {
    for (const auto& [c, q] : terms_)
      if (c == code) return q;
    return Rat(0);
  }

  bool operator==(const WordVec& o) const {
    return alphabet_ == o.alphabet_ && degree_ == o.degree_ && terms_ == o.terms_;
  }

  WordVec& negate() {
    for (auto& [c, q] : terms_) q = -q;
    return *this;
  }

  WordVec& scale(const Rat& s) {
    if (s == 0) { terms_.clear(); return *this; }
    for (auto& [c, q] : terms_) q *= s;
    return *this;
  }

  // this += s * other, merging sorted term lists.
  WordVec& axpy(const Rat& s, const WordVec& other) {
    check_compatible(other);
    if (s == 0 || other.terms_.empty()) return *this;
    std::vector<std::pair<WordCode, Rat>> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
      if (j == other.terms_.size() ||
          (i < terms_.size() && terms_[i].first < other.terms_[j].first)) {
        merged.push_back(terms_[i++]);
      } else if (i == terms_.size() || other.terms_[j].first < terms_[i].first) {
        merged.emplace_back(other.terms_[j].first, s * other.terms_[j].second);
        ++j;
      } else {
        Rat q = terms_[i].second + s * other.terms_[j].second;
        if (q != 0) merged.emplace_back(terms_[i].first, std::move(q));
        ++i; ++j;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }

  WordVec& operator+=(const WordVec& o) { return axpy(Rat(1), o); }
  WordVec& operator-=(const WordVec& o) { return axpy(Rat(-1), o); }

  // Concatenation product in the tensor algebra.  Terms come out already
  // sorted: code(uv) = code(u)*k^deg(v) + code(v) is monotone in (u, v).
  friend WordVec product(const WordVec& u, const WordVec& v) {
    if (u.alphabet_ != v.alphabet_) throw std::invalid_argument("product: alphabet mismatch");
    WordVec out(u.alphabet_, u.degree_ + v.degree_);
    out.terms_.reserve(u.terms_.size() * v.terms_.size());
    WordCode shift = 1;
    for (int i = 0; i < v.degree_; ++i) shift *= static_cast<WordCode>(u.alphabet_);
    for (const auto& [cu, qu] : u.terms_)
      for (const auto& [cv, qv] : v.terms_)
        out.terms_.emplace_back(cu * shift + cv, qu * qv);
    return out;
  }

  // Lie bracket [u, v] = uv - vu of two elements of the free Lie algebra,
  // computed in the enveloping tensor algebra.
  friend WordVec bracket(const WordVec& u, const WordVec& v) {
    WordVec out = product(u, v);
    out -= product(v, u);
    return out;
  }

  // Used by builders that emit terms in strictly increasing code order.
  void push_term(WordCode code, Rat q) {
    if (q == 0) return;
    if (!terms_.empty() && terms_.back().first >= code)
      throw std::logic_error("push_term: codes must strictly increase");
    terms_.emplace_back(code, std::move(q));
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, q] : terms_) {
      os << (first ? "" : " + ") << rat_to_string(q) << "*(" << word_to_string(c, alphabet_, degree_) << ")";
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  void check_compatible(const WordVec& o) const {
    if (alphabet_ != o.alphabet_ || degree_ != o.degree_)
      throw std::invalid_argument("WordVec: degree/alphabet mismatch");
  }

  int alphabet_;
  int degree_;
  std::vector<std::pair<WordCode, Rat>> terms_;
};

}  // namespace liedim
