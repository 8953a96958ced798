#pragma once

// Closed-form dimension counts for graded pieces of free Lie algebras and
// their metabelian / surface-relation quotients.  Everything here is a pure
// function of small integer inputs returning exact big integers.

#include "liedim/numeric.hpp"

#include <stdexcept>

namespace liedim {

inline BigCount binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount r = 1;
  for (long long j = 1; j <= k; ++j) {
    r *= (n - k + j);
    r /= j;  // exact: r is C(n-k+j, j) after this step
  }
  return r;
}

// Moebius function by trial division; inputs here are tiny (degree divisors).
inline int mobius(long long n) {
  if (n < 1) throw std::domain_error("mobius: n >= 1 required");
  int primes = 0;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;  // squared factor
    ++primes;
  }
  if (n > 1) ++primes;
  return (primes % 2 == 0) ? 1 : -1;
}

// Dimension of the degree-n piece of the free Lie algebra on k generators:
// (1/n) * sum over d | n of mobius(d) * k^(n/d).
inline BigCount witt_dimension(int k, int n) {
  if (k < 1 || n < 1) throw std::domain_error("witt_dimension: k, n >= 1 required");
  BigCount total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    BigCount term = boost::multiprecision::pow(BigCount(k), static_cast<unsigned>(n / d));
    total += mobius(d) * term;
  }
  return total / n;  // exact by necklace counting
}

// Degree-n dimension of the free metabelian quotient on 2g generators,
// n >= 2: sum over the top generator index i of the left-normed monomials
// [[e_j, e_i], e_*, ...] with j < i and a non-increasing tail, counted as
// (i-1) * C(n-3+i, i-1).
inline BigCount metabelian_graded_dim(int g, int n) {
  if (g < 1) throw std::domain_error("metabelian_graded_dim: g >= 1 required");
  if (n < 2) throw std::domain_error("metabelian_graded_dim: n >= 2 required");
  BigCount total = 0;
  for (int i = 1; i <= 2 * g; ++i)
    total += BigCount(i - 1) * binomial(n - 3 + i, i - 1);
  return total;
}

// Upper bound for the degree-n image of the surface-relation ideal inside the
// metabelian quotient: one generator bracketed n-2 times, C(n-3+2g, 2g-1)
// choices of multiset.
inline BigCount relation_image_bound(int g, int n) {
  if (g < 1 || n < 2) throw std::domain_error("relation_image_bound: g >= 1, n >= 2 required");
  return binomial(n - 3 + 2 * g, 2 * g - 1);
}

// Lower bound for the degree-n piece after imposing the surface relation:
// metabelian count minus the relation-image bound, regrouped so the top
// index contributes (2g-2) copies of the relation-bound term.
inline BigCount surface_graded_lower_bound(int g, int n) {
  if (g < 1 || n < 2) throw std::domain_error("surface_graded_lower_bound: g >= 1, n >= 2 required");
  BigCount total = BigCount(2 * g - 2) * binomial(n - 3 + 2 * g, 2 * g - 1);
  for (int i = 1; i <= 2 * g - 1; ++i)
    total += BigCount(i - 1) * binomial(n - 3 + i, i - 1);
  return total;
}

// Upper bound for the dimension of the remainder block left over once the
// brackets involving the top generator are split off: C(2g,2) bracket choices
// times C(n-4+2g, 2g-2) tails one degree shorter.
inline BigCount remainder_dim_bound(int g, int n) {
  if (g < 1 || n < 2) throw std::domain_error("remainder_dim_bound: g >= 1, n >= 2 required");
  return binomial(2 * g, 2) * binomial(n - 4 + 2 * g, 2 * g - 2);
}

}  // namespace liedim
