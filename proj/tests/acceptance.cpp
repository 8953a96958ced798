// Acceptance gate: exercises every headline guarantee end to end and prints
// one PASS/FAIL line per criterion.  Exits nonzero if any line fails.

#include <liedim/bounds.hpp>
#include <liedim/eigenspace.hpp>
#include <liedim/hall.hpp>
#include <liedim/quotient.hpp>
#include <liedim/zeros.hpp>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

int failures = 0;

// Runs one criterion, timing it and catching stray exceptions so the other
// criteria still report.
void criterion(int index, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over the time budget");
  }
  std::cout << "criterion " << index << ": " << (ok ? "PASS" : "FAIL") << " - " << label
            << " [" << std::fixed << std::setprecision(2) << seconds << "s]";
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(LIEDIM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

int main() {
  using namespace liedim;

  criterion(1, "metabelian dimensions: oracle equals the closed form, g=2, n=2..7", 300,
            [](std::string& detail) {
              const long long expected[] = {6, 20, 45, 84, 140, 216};
              for (int n = 2; n <= 7; ++n) {
                const BigCount exact = metabelian_graded_exact(2, n);
                if (exact != metabelian_graded_dim(2, n) || exact != expected[n - 2]) {
                  detail = "mismatch at n=" + std::to_string(n) + ": " + exact.str();
                  return false;
                }
              }
              return true;
            });

  criterion(2, "generated basis spans every graded piece, 4 generators, n<=7", 300,
            [](std::string& detail) {
              for (int n = 1; n <= 7; ++n) {
                const SpanReport rep = verify_hall_spans(4, n);
                if (!rep.ok) {
                  detail = "span failure at n=" + std::to_string(n);
                  return false;
                }
                if (n == 4 && (rep.rank_all != 60 || rep.rank_deep != 15)) {
                  detail = "degree-4 ranks off: " + std::to_string(rep.rank_all) + "/" +
                           std::to_string(rep.rank_deep);
                  return false;
                }
              }
              return true;
            });

  criterion(3, "surface quotient respects its lower bound and relation-image cap", 300,
            [](std::string& detail) {
              const auto check = [&detail](int g, int n_max) {
                for (int n = 2; n <= n_max; ++n) {
                  const QuotientDimRecord r = check_lower_bound(g, n);
                  if (!r.lower_bound_ok || r.relation_image_exact > r.relation_image_limit) {
                    detail = "violation at g=" + std::to_string(g) + ", n=" + std::to_string(n);
                    return false;
                  }
                  if (g == 2 && n == 2 && r.dim_surface != 5) { detail = "(2,2) != 5"; return false; }
                  if (g == 2 && n == 3 && r.dim_surface != 16) { detail = "(2,3) != 16"; return false; }
                }
                return true;
              };
              return check(2, 7) && check(3, 5);
            });

  criterion(4, "conjugation eigenspace splits: totals, odd balance, enumeration", 60,
            [](std::string& detail) {
              for (int g = 1; g <= 4; ++g)
                for (int m = 0; m <= 21; ++m) {
                  const EigenSplit s = sym_eigen_dims(g, m);
                  if (s.plus + s.minus != binomial(m + 2 * g - 1, 2 * g - 1)) {
                    detail = "total off at g=" + std::to_string(g) + ", m=" + std::to_string(m);
                    return false;
                  }
                  if (m % 2 == 1 && s.plus != s.minus) {
                    detail = "odd split unbalanced at g=" + std::to_string(g) +
                             ", m=" + std::to_string(m);
                    return false;
                  }
                }
              for (int g = 1; g <= 3; ++g)
                for (int m = 0; m <= 10; ++m) {
                  BigCount plus = 0, minus = 0;
                  std::vector<int> a(2 * g, 0);
                  while (true) {
                    int total = 0, flipped = 0;
                    for (int i = 0; i < 2 * g; ++i) total += a[i];
                    for (int i = g; i < 2 * g; ++i) flipped += a[i];
                    if (total == m) ((flipped % 2 == 0) ? plus : minus) += 1;
                    int pos = 2 * g - 1;
                    while (pos >= 0 && a[pos] == m) a[pos--] = 0;
                    if (pos < 0) break;
                    ++a[pos];
                  }
                  const EigenSplit s = sym_eigen_dims(g, m);
                  if (s.plus != plus || s.minus != minus) {
                    detail = "enumeration mismatch at g=" + std::to_string(g) +
                             ", m=" + std::to_string(m);
                    return false;
                  }
                }
              return true;
            });

  criterion(5, "flag-restricted counts stay within their bound, g<=5, n<=30", 60,
            [](std::string& detail) {
              for (int g = 1; g <= 5; ++g)
                for (int n = 2; n <= 30; ++n)
                  if (f0_count(g, n) > f0_upper_bound(g, n)) {
                    detail = "bound broken at g=" + std::to_string(g) + ", n=" + std::to_string(n);
                    return false;
                  }
              if (f0_count(2, 2) != f0_upper_bound(2, 2) ||
                  f0_count(2, 3) != f0_upper_bound(2, 3)) {
                detail = "expected equality cases missed";
                return false;
              }
              return true;
            });

  criterion(6, "fiber partitions, kernel-box cap, random root profiles", 60,
            [](std::string& detail) {
              const ExponentMatrix D(4, 2, 1, {{1, 0}, {0, 1}, {1, 0}, {0, 1}});
              for (int n = 2; n <= 12; ++n) {
                const FiberReport rep = fiber_partition(D, 2, n);
                if (rep.total != binomial(n + 2, 4)) {
                  detail = "partition identity off at n=" + std::to_string(n);
                  return false;
                }
                if (rep.max_fiber > rep.kernel_box) {
                  detail = "fiber cap broken at n=" + std::to_string(n);
                  return false;
                }
                if (n == 5 && rep.kernel_box != 49) {
                  detail = "kernel box at n=5 is " + rep.kernel_box.str();
                  return false;
                }
              }
              std::mt19937 rng(60319);
              const int n = 6;
              const FiberReport rep = fiber_partition(D, 2, n);
              const long long H = 4LL * (n - 2) * D.max_abs_numerator();
              for (int trial = 0; trial < 100; ++trial) {
                AnnihilatorProfile p;
                std::uniform_int_distribution<int> lpick(1, 3);
                p.l = lpick(rng);
                std::uniform_int_distribution<long long> value(-H, H);
                std::uniform_int_distribution<int> howmany(0, p.l);
                for (long long c = -H; c <= H; ++c)
                  for (int i = howmany(rng); i > 0; --i) p.roots[{c}].insert(value(rng));
                for (auto& [prefix, vals] : p.roots)
                  while (vals.size() > static_cast<std::size_t>(p.l)) vals.erase(vals.begin());
                const BigCount got = count_vanishing_indices(D, p, 2, n);
                if (got > rep.kernel_box * p.l * BigCount(H + 1)) {
                  detail = "majorant broken on trial " + std::to_string(trial);
                  return false;
                }
              }
              return true;
            });

  criterion(7, "global-vs-local crossover exists and persists to the horizon", 10,
            [](std::string& detail) {
              BoundParams params;
              params.g = 2;
              params.obstruction.direct = Rat(0);
              params.c0 = 0;
              params.horizon = 200;
              const CrossoverReport rep = find_crossover(params);
              if (!rep.n0) {
                detail = "no crossover found: " + rep.diagnostic;
                return false;
              }
              for (int n = *rep.n0; n <= 200; ++n)
                if (selmer_upper(params, n) >= local_lower(2, n)) {
                  detail = "inequality fails at n=" + std::to_string(n);
                  return false;
                }
              if (leading_coeff_check(1)) {
                detail = "genus-1 leading check should fail";
                return false;
              }
              for (int g = 2; g <= 20; ++g)
                if (!leading_coeff_check(g)) {
                  detail = "leading check fails at g=" + std::to_string(g);
                  return false;
                }
              return true;
            });

  criterion(8, "verification subcommand is deterministic and exits zero", 300,
            [](std::string& detail) {
              const CliRun a = run_cli("verify --g 2 --max-n 6");
              const CliRun b = run_cli("verify --g 2 --max-n 6");
              if (a.code != 0 || b.code != 0) {
                detail = "exit codes " + std::to_string(a.code) + "/" + std::to_string(b.code);
                return false;
              }
              if (a.out != b.out) {
                detail = "reports differ between runs";
                return false;
              }
              if (a.out.find("result\tPASS") == std::string::npos) {
                detail = "missing PASS marker";
                return false;
              }
              return true;
            });

  if (failures == 0)
    std::cout << "all criteria passed" << std::endl;
  else
    std::cout << "criteria failed: " << failures << std::endl;
  return failures == 0 ? 0 : 1;
}
