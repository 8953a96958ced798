#pragma once

// Assembly of the two sides of the dimension inequality: an upper bound for
// the global (Selmer) side from the minus-eigenspace and remainder counts
// plus the obstruction term, and a lower bound for the local side from the
// surface quotient minus what the flag can absorb.  find_crossover locates
// the degree from which the upper bound stays strictly below the lower one.

#include "liedim/combinatorics.hpp"
#include "liedim/eigenspace.hpp"
#include "liedim/zeros.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liedim {

struct BoundParams {
  int g = 2;
  ObstructionParams obstruction;  // defaults to direct B = 0 if left empty
  BigCount c0 = 0;                // absorbs degrees 1 and 2 of the global side
  int horizon = 200;
};

inline ObstructionParams normalized_obstruction(const ObstructionParams& p) {
  if (!p.direct && !p.split) {
    ObstructionParams q;
    q.direct = Rat(0);
    return q;
  }
  return p;
}

// Upper bound for the global side through degree n >= 3.  The obstruction
// term bounds the accumulated contribution through degree n in one shot, so
// it is added once, not per degree.
inline BigCount selmer_upper(const BoundParams& params, int n) {
  if (n < 3) throw std::domain_error("selmer_upper: n >= 3 required");
  if (params.g < 2) throw std::domain_error("selmer_upper: g >= 2 required");
  BigCount total = params.c0;
  for (int i = 3; i <= n; ++i)
    total += minus_span_dim(params.g, i) + remainder_dim_bound(params.g, i);
  total += obstruction_bound(params.g, normalized_obstruction(params.obstruction), n);
  return total;
}

inline BigCount local_lower(int g, int n) { return local_quotient_lower_bound(g, n); }

// Leading coefficients of the two sides as polynomials in n, both over
// (2g)!: (1/2)(2g-1) on the global side versus 2g-2 on the local side.  The
// strict inequality holds exactly for g >= 2.
inline bool leading_coeff_check(int g) {
  if (g < 1) throw std::domain_error("leading_coeff_check: g >= 1 required");
  return Rat(2 * g - 1, 2) < Rat(2 * g - 2);
}

struct CrossoverRow {
  int n = 0;
  BigCount upper = 0;
  BigCount lower = 0;
  bool holds = false;  // upper < lower
};

struct CrossoverReport {
  int g = 0;
  int horizon = 0;
  std::optional<int> n0;  // least n with upper < lower for every n' in [n, horizon]
  std::vector<CrossoverRow> trace;
  bool leading_ok = false;
  std::string diagnostic;
};

// Scans degrees 3..horizon.  The trace is always emitted; n0 is the start of
// the final all-holding suffix, absent when even the horizon row fails.
inline CrossoverReport find_crossover(const BoundParams& params,
                                      std::function<BigCount(int, int)> lower_fn = {}) {
  if (params.horizon < 3) throw std::domain_error("find_crossover: horizon >= 3 required");
  if (params.g < 2) throw std::domain_error("find_crossover: g >= 2 required");
  if (!lower_fn) lower_fn = [](int g, int n) { return local_lower(g, n); };

  CrossoverReport rep;
  rep.g = params.g;
  rep.horizon = params.horizon;
  rep.leading_ok = leading_coeff_check(params.g);

  const ObstructionParams obstruction = normalized_obstruction(params.obstruction);
  BigCount running = params.c0;  // sum of per-degree terms so far
  for (int n = 3; n <= params.horizon; ++n) {
    running += minus_span_dim(params.g, n) + remainder_dim_bound(params.g, n);
    CrossoverRow row;
    row.n = n;
    row.upper = running + obstruction_bound(params.g, obstruction, n);
    row.lower = lower_fn(params.g, n);
    row.holds = row.upper < row.lower;
    rep.trace.push_back(std::move(row));
  }

  int start = -1;
  for (int i = static_cast<int>(rep.trace.size()) - 1; i >= 0; --i) {
    if (!rep.trace[i].holds) break;
    start = i;
  }
  if (start >= 0) {
    rep.n0 = rep.trace[start].n;
  } else {
    std::ostringstream os;
    os << "no crossover within horizon " << params.horizon
       << ": upper >= lower at n = " << params.horizon;
    rep.diagnostic = os.str();
  }
  return rep;
}

}  // namespace liedim
