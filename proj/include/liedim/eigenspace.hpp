#pragma once

// Eigenspace dimension counts under the conjugation involution.  The 2g
// basis vectors split into g with eigenvalue +1 (indices 1..g) and g with
// eigenvalue -1 (indices g+1..2g); a symmetric-power monomial picks up the
// sign (-1)^(number of minus factors).  These closed forms feed the upper
// bounds on the minus part, while the flag counts feed the lower bound on
// the part missed by the zeroth filtration step.

#include "liedim/combinatorics.hpp"

#include <stdexcept>

namespace liedim {

// Index split of the conjugation eigenbasis: 1..g plus, g+1..2g minus.
struct ConjugationBasis {
  int g = 0;
  bool is_minus(int index) const { return index > g; }
};

// Membership in the zeroth filtration flag: the first g indices.
struct HodgeFlag {
  int g = 0;
  bool in_flag(int index) const { return index <= g; }
};

struct EigenSplit {
  int m = 0;
  BigCount plus = 0;
  BigCount minus = 0;
};

// Eigenvalue split of the m-th symmetric power: the summand with i plus
// factors has dimension C(i+g-1, g-1) * C(m-i+g-1, g-1) and sign (-1)^(m-i).
inline EigenSplit sym_eigen_dims(int g, int m) {
  if (g < 1 || m < 0) throw std::domain_error("sym_eigen_dims: g >= 1, m >= 0 required");
  EigenSplit out{m, 0, 0};
  for (int i = 0; i <= m; ++i) {
    const BigCount d = binomial(i + g - 1, g - 1) * binomial(m - i + g - 1, g - 1);
    if ((m - i) % 2 == 0) out.plus += d; else out.minus += d;
  }
  return out;
}

// Minus-eigenspace dimension of the degree-n span of brackets with the top
// generator times symmetric powers: g of the brackets are minus and g-1 are
// plus, so the minus part pairs them with the opposite symmetric eigenspace.
inline BigCount minus_span_dim(int g, int n) {
  if (g < 1 || n < 2) throw std::domain_error("minus_span_dim: g >= 1, n >= 2 required");
  const EigenSplit s = sym_eigen_dims(g, n - 2);
  return BigCount(g) * s.plus + BigCount(g - 1) * s.minus;
}

// Exact minus dimension of degrees 1 and 2: degree 1 contributes the g minus
// basis vectors; degree 2 contributes the g*g mixed pairs of the exterior
// square, and the surface relation is conjugation-invariant so quotienting
// by it leaves the minus part alone.
inline BigCount low_degree_minus_dim(int g) {
  if (g < 1) throw std::domain_error("low_degree_minus_dim: g >= 1 required");
  return BigCount(g) + BigCount(g) * g;
}

// Majorant for the total minus dimension through degree n (n >= 2), g >= 2.
inline BigCount minus_partial_sum_bound(int g, int n) {
  if (g < 2) throw std::domain_error("minus_partial_sum_bound: g >= 2 required");
  if (n < 2) throw std::domain_error("minus_partial_sum_bound: n >= 2 required");
  BigCount total = low_degree_minus_dim(g);
  for (int i = 3; i <= n; ++i)
    total += minus_span_dim(g, i) + remainder_dim_bound(g, i);
  return total;
}

// Count of the degree-n level-1 monomials whose indices all lie in the flag:
// the same chain count with alphabet g instead of 2g.
inline BigCount f0_count(int g, int n) {
  if (g < 1 || n < 2) throw std::domain_error("f0_count: g >= 1, n >= 2 required");
  BigCount total = 0;
  for (int i = 1; i <= g; ++i)
    total += BigCount(i - 1) * binomial(n - 3 + i, i - 1);
  return total;
}

// Upper bound for the same count: C(g,2) bracket choices times the multiset
// count of the remaining n-2 flag indices.
inline BigCount f0_upper_bound(int g, int n) {
  if (g < 1 || n < 2) throw std::domain_error("f0_upper_bound: g >= 1, n >= 2 required");
  return binomial(g, 2) * binomial(n + g - 3, g - 1);
}

// Exact dimension of the local quotient in degrees <= 2: the g vectors
// missed by the flag in degree 1, plus the exterior square minus the
// relation line and the C(g,2) flag brackets in degree 2.
inline BigCount local_base_dim(int g) {
  if (g < 1) throw std::domain_error("local_base_dim: g >= 1 required");
  return BigCount(g) + binomial(2 * g, 2) - 1 - binomial(g, 2);
}

// Lower bound for the local quotient dimension through degree n >= 3:
// each degree contributes at least the surface lower bound minus the part
// the flag could absorb.
inline BigCount local_quotient_lower_bound(int g, int n) {
  if (g < 2) throw std::domain_error("local_quotient_lower_bound: g >= 2 required");
  if (n < 3) throw std::domain_error("local_quotient_lower_bound: n >= 3 required");
  BigCount total = local_base_dim(g);
  for (int i = 3; i <= n; ++i) {
    const BigCount lower = surface_graded_lower_bound(g, i);
    const BigCount flagged = f0_upper_bound(g, i);
    if (lower > flagged) total += lower - flagged;
  }
  return total;
}

}  // namespace liedim
