#pragma once

// Lattice-point counting behind the obstruction bound: multi-indices of
// weight <= n-2 in 2g coordinates, their fibers under a rational exponent
// matrix, the integer kernel box that caps every fiber, and the simplex /
// cube prefix counts.  Everything is exact; matrix entries are rationals
// stored as integer numerators over one common denominator.

#include "liedim/combinatorics.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liedim {

using MultiIndex = std::vector<int>;

// 2g x d matrix with entries num[i][j] / denominator, required to have full
// column rank over the rationals.
struct ExponentMatrix {
  int rows = 0;  // 2g
  int cols = 0;  // d
  long long denominator = 1;
  std::vector<std::vector<long long>> num;

  ExponentMatrix(int rows_, int cols_, long long denominator_,
                 std::vector<std::vector<long long>> num_)
      : rows(rows_), cols(cols_), denominator(denominator_), num(std::move(num_)) {
    if (rows < 1 || cols < 1 || cols > rows)
      throw std::invalid_argument("ExponentMatrix: need 1 <= cols <= rows");
    if (denominator < 1) throw std::invalid_argument("ExponentMatrix: denominator >= 1 required");
    if (static_cast<int>(num.size()) != rows)
      throw std::invalid_argument("ExponentMatrix: row count mismatch");
    for (const auto& r : num)
      if (static_cast<int>(r.size()) != cols)
        throw std::invalid_argument("ExponentMatrix: column count mismatch");
    if (rank() != cols)
      throw std::invalid_argument("ExponentMatrix: columns must be independent over Q");
  }

  long long max_abs_numerator() const {
    long long m = 0;
    for (const auto& r : num)
      for (long long v : r) m = std::max(m, v < 0 ? -v : v);
    return m;
  }

 private:
  int rank() const {
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a[i][j] = Rat(num[i][j], denominator);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
      int p = -1;
      for (int i = r; i < rows; ++i)
        if (a[i][c] != 0) { p = i; break; }
      if (p < 0) continue;
      std::swap(a[p], a[r]);
      for (int i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        const Rat f = a[i][c] / a[r][c];
        for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      }
      ++r;
    }
    return r;
  }
};

// All alpha in N^(2g) with |alpha| <= n - 2, in lexicographic order.  The
// count C(n-2+2g, 2g) is enforced against a hard cap so a typo in n cannot
// allocate without bound.
inline std::vector<MultiIndex> enumerate_multi_indices(int g, int n) {
  if (g < 1 || n < 2) throw std::domain_error("enumerate_multi_indices: g >= 1, n >= 2 required");
  const int dim = 2 * g, budget = n - 2;
  const BigCount expected = binomial(n - 2 + 2 * g, 2 * g);
  if (expected > 5'000'000)
    throw BudgetError("enumerate_multi_indices: " + expected.str() + " indices exceed the cap");
  std::vector<MultiIndex> out;
  MultiIndex alpha(dim, 0);
  struct Grow {
    int dim, budget;
    std::vector<MultiIndex>& out;
    MultiIndex& alpha;
    void operator()(int pos, int used) {
      if (pos == dim) { out.push_back(alpha); return; }
      for (int v = 0; v <= budget - used; ++v) {
        alpha[pos] = v;
        (*this)(pos + 1, used + v);
      }
      alpha[pos] = 0;
    }
  } grow{dim, budget, out, alpha};
  grow(0, 0);
  if (BigCount(out.size()) != expected)
    throw std::logic_error("enumerate_multi_indices: count disagrees with the closed form");
  return out;
}

struct FiberReport {
  int g = 0;
  int n = 0;
  int cols = 0;
  long long denominator = 1;
  BigCount total = 0;
  std::map<std::vector<long long>, BigCount> fibers;  // delta numerators -> |fiber|
  BigCount max_fiber = 0;
  BigCount kernel_box = 0;
};

// Number of integer vectors mu with |mu_i| <= n-2 for all i and mu D = 0.
// Depth-first over coordinates, pruning a prefix when some column's partial
// sum can no longer return to zero.
inline BigCount kernel_box_count(const ExponentMatrix& D, int n) {
  if (n < 2) throw std::domain_error("kernel_box_count: n >= 2 required");
  const int half = n - 2;
  BigCount count = 0;
  std::vector<long long> partial(D.cols, 0);
  long long nodes = 0;

  struct Search {
    const ExponentMatrix& D;
    int half;
    BigCount& count;
    std::vector<long long>& partial;
    long long& nodes;
    std::vector<std::vector<long long>> reach_below;  // per row index
    void operator()(int row) {
      if (++nodes > 100'000'000)
        throw BudgetError("kernel_box_count: search exceeds the node cap");
      if (row == D.rows) {
        for (long long s : partial)
          if (s != 0) return;
        ++count;
        return;
      }
      for (int j = 0; j < D.cols; ++j) {
        const long long limit = reach_below[row][j];
        if (partial[j] > limit || partial[j] < -limit) return;
      }
      for (long long v = -half; v <= half; ++v) {
        for (int j = 0; j < D.cols; ++j) partial[j] += v * D.num[row][j];
        (*this)(row + 1);
        for (int j = 0; j < D.cols; ++j) partial[j] -= v * D.num[row][j];
      }
    }
  } search{D, half, count, partial, nodes, {}};

  // reach_below[i][j] = sum over rows >= i of half * |num[r][j]|.
  search.reach_below.assign(D.rows + 1, std::vector<long long>(D.cols, 0));
  for (int i = D.rows - 1; i >= 0; --i)
    for (int j = 0; j < D.cols; ++j) {
      const long long a = D.num[i][j] < 0 ? -D.num[i][j] : D.num[i][j];
      search.reach_below[i][j] = search.reach_below[i + 1][j] + static_cast<long long>(half) * a;
    }
  search(0);
  return count;
}

// Partition of the weight <= n-2 multi-indices by their image alpha D,
// recorded by numerator vectors (the common denominator never changes).
// Checks the partition identity, the fiber cap by the kernel box, and the
// image-norm bound |alpha D| <= (n-2) * 2g * |D|.
inline FiberReport fiber_partition(const ExponentMatrix& D, int g, int n) {
  if (2 * g != D.rows) throw std::invalid_argument("fiber_partition: matrix has wrong row count");
  FiberReport rep;
  rep.g = g;
  rep.n = n;
  rep.cols = D.cols;
  rep.denominator = D.denominator;

  const long long norm_cap = static_cast<long long>(n - 2) * 2 * g * D.max_abs_numerator();
  for (const auto& alpha : enumerate_multi_indices(g, n)) {
    std::vector<long long> delta(D.cols, 0);
    for (int i = 0; i < D.rows; ++i) {
      if (alpha[i] == 0) continue;
      for (int j = 0; j < D.cols; ++j) delta[j] += static_cast<long long>(alpha[i]) * D.num[i][j];
    }
    long long norm = 0;
    for (long long v : delta) norm += (v < 0 ? -v : v);
    if (norm > norm_cap) throw std::logic_error("fiber_partition: image norm bound violated");
    ++rep.fibers[delta];
    ++rep.total;
  }

  if (rep.total != binomial(n - 2 + 2 * g, 2 * g))
    throw std::logic_error("fiber_partition: fibers do not partition the index set");
  for (const auto& [delta, size] : rep.fibers)
    if (size > rep.max_fiber) rep.max_fiber = size;
  rep.kernel_box = kernel_box_count(D, n);
  if (rep.max_fiber > rep.kernel_box)
    throw std::logic_error("fiber_partition: a fiber exceeds the kernel box count");
  return rep;
}

// Exact simplex count and cube bound for the d-1 dimensional prefixes of
// image points: H = 2g * (n-2) * M * absD scaled lattice steps.  For d = 1
// both counts are 1 (the empty prefix).
inline std::pair<BigCount, BigCount> prefix_count_bounds(int g, int d, long long M,
                                                         long long absD, int n) {
  if (g < 1 || d < 1 || M < 1 || absD < 0 || n < 2)
    throw std::domain_error("prefix_count_bounds: bad parameters");
  if (d == 1) return {BigCount(1), BigCount(1)};
  const long long H = static_cast<long long>(2 * g) * (n - 2) * M * absD;
  BigCount exact = 0;
  for (long long i = 1; i <= H; ++i) exact += binomial(i + d - 2, d - 2);
  BigCount cube = 1;
  for (int j = 0; j < d - 1; ++j) cube *= BigCount(H + 1);
  return {exact, cube};
}

// Root data for the final coordinate: for each d-1 prefix of an image
// point, at most l values of the last coordinate that a relevant function
// can vanish on (numerator scale throughout).
struct AnnihilatorProfile {
  int l = 1;
  int m = 1;
  std::map<std::vector<long long>, std::set<long long>> roots;

  void validate() const {
    if (l < 1 || m < 1) throw std::invalid_argument("AnnihilatorProfile: l, m >= 1 required");
    for (const auto& [prefix, vals] : roots)
      if (vals.size() > static_cast<std::size_t>(l))
        throw std::invalid_argument("AnnihilatorProfile: a root set exceeds l");
  }
};

// Number of weight <= n-2 multi-indices whose image lands on a root of its
// prefix.  Capped by kernel_box * l * cube over all valid profiles; the cap
// is recomputed and enforced here as a cross-check.
inline BigCount count_vanishing_indices(const ExponentMatrix& D, const AnnihilatorProfile& profile,
                                        int g, int n) {
  if (2 * g != D.rows) throw std::invalid_argument("count_vanishing_indices: matrix has wrong row count");
  profile.validate();
  BigCount count = 0;
  for (const auto& alpha : enumerate_multi_indices(g, n)) {
    std::vector<long long> delta(D.cols, 0);
    for (int i = 0; i < D.rows; ++i) {
      if (alpha[i] == 0) continue;
      for (int j = 0; j < D.cols; ++j) delta[j] += static_cast<long long>(alpha[i]) * D.num[i][j];
    }
    const long long last = delta.back();
    delta.pop_back();
    auto it = profile.roots.find(delta);
    if (it != profile.roots.end() && it->second.count(last)) ++count;
  }

  const long long H = static_cast<long long>(2 * g) * (n - 2) * D.max_abs_numerator();
  BigCount cube = 1;
  for (int j = 0; j < D.cols - 1; ++j) cube *= BigCount(H + 1);
  if (count > kernel_box_count(D, n) * profile.l * cube)
    throw std::logic_error("count_vanishing_indices: bound violated");
  return count;
}

// Flat bound for the accumulated obstruction term through degree n: either a
// direct coefficient B, or m * A + A' from the per-zero multiplicity m and
// slopes A, A', times n^(2g-1).  Rational coefficients round up.
struct ObstructionParams {
  std::optional<Rat> direct;  // B
  struct Split {
    BigCount m;
    Rat A;
    Rat Aprime;
  };
  std::optional<Split> split;
};

inline BigCount obstruction_bound(int g, const ObstructionParams& params, int n) {
  if (g < 1 || n < 1) throw std::domain_error("obstruction_bound: g >= 1, n >= 1 required");
  if (params.direct.has_value() == params.split.has_value())
    throw std::invalid_argument("obstruction_bound: exactly one of B or (m, A, A') required");
  Rat coeff;
  if (params.direct) {
    coeff = *params.direct;
  } else {
    coeff = Rat(params.split->m) * params.split->A + params.split->Aprime;
  }
  if (coeff < 0) throw std::invalid_argument("obstruction_bound: negative coefficient");
  BigCount power = 1;
  for (int i = 0; i < 2 * g - 1; ++i) power *= n;
  return ceil_nonneg(coeff * Rat(power));
}

}  // namespace liedim
