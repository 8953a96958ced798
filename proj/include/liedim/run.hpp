#pragma once

// Engine behind the command-line tool: a parsed RunConfig goes in, a
// deterministic TSV or JSON report comes out.  Kept in the library so tests
// can drive subcommands in-process and parse the emitted JSON back.

#include "liedim/bounds.hpp"
#include "liedim/hall.hpp"
#include "liedim/quotient.hpp"

#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liedim {

using Json = nlohmann::ordered_json;

enum class Command { hall, dims, bounds, zeros, crossover, verify };
enum class OutputFormat { tsv, json };

struct RunConfig {
  Command cmd = Command::verify;
  OutputFormat format = OutputFormat::tsv;
  OracleBudget budget;
  SymplecticPairing pairing = SymplecticPairing::consecutive;

  int k = 2;           // hall: alphabet size
  int max_degree = 4;  // hall
  int g = 2;           // dims / bounds / zeros / crossover / verify
  int n_lo = 2, n_hi = 2;  // dims / bounds ranges
  int n = 2;               // zeros
  int max_n = 4;           // verify
  std::string matrix_file;   // zeros
  std::string profile_file;  // zeros, optional
  ObstructionParams obstruction;  // crossover
  BigCount c0 = 0;                // crossover
  int horizon = 200;              // crossover
};

// "a..b" or a single "n"; both ends inclusive.
inline std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("range: empty");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed range (expected a..b): " + text);
  }
}

// Exponent matrix from CSV (integer entries, denominator 1) or JSON
// ({"denominator": M, "entries": [[...], ...]}).
inline ExponentMatrix load_exponent_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  std::vector<std::vector<long long>> entries;
  long long denominator = 1;
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    Json j = Json::parse(in);
    denominator = j.value("denominator", 1LL);
    for (const auto& row : j.at("entries"))
      entries.push_back(row.get<std::vector<long long>>());
  } else {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::vector<long long> row;
      std::istringstream ls(line);
      std::string cell;
      while (std::getline(ls, cell, ',')) row.push_back(std::stoll(cell));
      entries.push_back(std::move(row));
    }
  }
  if (entries.empty()) throw std::invalid_argument("matrix file has no rows: " + path);
  const int rows = static_cast<int>(entries.size());
  const int cols = static_cast<int>(entries.front().size());
  return ExponentMatrix(rows, cols, denominator, std::move(entries));
}

// {"l": .., "m": .., "roots": {"c1,c2": [v, ...], ...}}; the key is the
// comma-joined prefix (empty string for one-column matrices).
inline AnnihilatorProfile load_annihilator_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open profile file: " + path);
  Json j = Json::parse(in);
  AnnihilatorProfile p;
  p.l = j.at("l").get<int>();
  p.m = j.at("m").get<int>();
  for (const auto& [key, vals] : j.at("roots").items()) {
    std::vector<long long> prefix;
    if (!key.empty()) {
      std::istringstream ks(key);
      std::string cell;
      while (std::getline(ks, cell, ',')) prefix.push_back(std::stoll(cell));
    }
    auto& slot = p.roots[prefix];
    for (const auto& v : vals) slot.insert(v.get<long long>());
  }
  p.validate();
  return p;
}

namespace emit {

inline std::string str(const BigCount& v) { return v.str(); }

inline Json monomial_json(const LieMonomial& m) {
  if (m.is_leaf()) return Json(m.index());
  return Json::array({monomial_json(m.left()), monomial_json(m.right())});
}

inline std::string join(const std::vector<long long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

}  // namespace emit

inline Json to_json(const QuotientDimRecord& r) {
  return Json{{"g", r.g},
              {"n", r.n},
              {"dim_free", emit::str(r.dim_free)},
              {"dim_kernel", emit::str(r.dim_kernel)},
              {"dim_kernel_plus_rel", emit::str(r.dim_kernel_plus_rel)},
              {"dim_metabelian", emit::str(r.dim_metabelian)},
              {"formula_metabelian", emit::str(r.formula_metabelian)},
              {"dim_surface", emit::str(r.dim_surface)},
              {"lower_bound_surface", emit::str(r.lower_bound_surface)},
              {"relation_image_exact", emit::str(r.relation_image_exact)},
              {"relation_image_limit", emit::str(r.relation_image_limit)},
              {"slack", emit::str(r.slack)},
              {"lower_bound_ok", r.lower_bound_ok},
              {"formula_ok", r.formula_ok}};
}

inline QuotientDimRecord quotient_record_from_json(const Json& j) {
  QuotientDimRecord r;
  r.g = j.at("g").get<int>();
  r.n = j.at("n").get<int>();
  r.dim_free = BigCount(j.at("dim_free").get<std::string>());
  r.dim_kernel = BigCount(j.at("dim_kernel").get<std::string>());
  r.dim_kernel_plus_rel = BigCount(j.at("dim_kernel_plus_rel").get<std::string>());
  r.dim_metabelian = BigCount(j.at("dim_metabelian").get<std::string>());
  r.formula_metabelian = BigCount(j.at("formula_metabelian").get<std::string>());
  r.dim_surface = BigCount(j.at("dim_surface").get<std::string>());
  r.lower_bound_surface = BigCount(j.at("lower_bound_surface").get<std::string>());
  r.relation_image_exact = BigCount(j.at("relation_image_exact").get<std::string>());
  r.relation_image_limit = BigCount(j.at("relation_image_limit").get<std::string>());
  r.slack = BigCount(j.at("slack").get<std::string>());
  r.lower_bound_ok = j.at("lower_bound_ok").get<bool>();
  r.formula_ok = j.at("formula_ok").get<bool>();
  return r;
}

inline Json to_json(const FiberReport& r) {
  Json fibers = Json::array();
  for (const auto& [delta, count] : r.fibers)
    fibers.push_back(Json{{"delta", delta}, {"count", emit::str(count)}});
  return Json{{"g", r.g},
              {"n", r.n},
              {"cols", r.cols},
              {"denominator", r.denominator},
              {"total", emit::str(r.total)},
              {"max_fiber", emit::str(r.max_fiber)},
              {"kernel_box", emit::str(r.kernel_box)},
              {"fibers", fibers}};
}

inline FiberReport fiber_report_from_json(const Json& j) {
  FiberReport r;
  r.g = j.at("g").get<int>();
  r.n = j.at("n").get<int>();
  r.cols = j.at("cols").get<int>();
  r.denominator = j.at("denominator").get<long long>();
  r.total = BigCount(j.at("total").get<std::string>());
  r.max_fiber = BigCount(j.at("max_fiber").get<std::string>());
  r.kernel_box = BigCount(j.at("kernel_box").get<std::string>());
  for (const auto& f : j.at("fibers"))
    r.fibers[f.at("delta").get<std::vector<long long>>()] =
        BigCount(f.at("count").get<std::string>());
  return r;
}

inline Json to_json(const CrossoverReport& r) {
  Json trace = Json::array();
  for (const auto& row : r.trace)
    trace.push_back(Json{{"n", row.n},
                         {"upper", emit::str(row.upper)},
                         {"lower", emit::str(row.lower)},
                         {"holds", row.holds}});
  Json j{{"g", r.g}, {"horizon", r.horizon}};
  if (r.n0) j["n0"] = *r.n0; else j["n0"] = nullptr;
  j["leading_ok"] = r.leading_ok;
  j["diagnostic"] = r.diagnostic;
  j["trace"] = trace;
  return j;
}

inline CrossoverReport crossover_report_from_json(const Json& j) {
  CrossoverReport r;
  r.g = j.at("g").get<int>();
  r.horizon = j.at("horizon").get<int>();
  if (!j.at("n0").is_null()) r.n0 = j.at("n0").get<int>();
  r.leading_ok = j.at("leading_ok").get<bool>();
  r.diagnostic = j.at("diagnostic").get<std::string>();
  for (const auto& t : j.at("trace")) {
    CrossoverRow row;
    row.n = t.at("n").get<int>();
    row.upper = BigCount(t.at("upper").get<std::string>());
    row.lower = BigCount(t.at("lower").get<std::string>());
    row.holds = t.at("holds").get<bool>();
    r.trace.push_back(std::move(row));
  }
  return r;
}

namespace detail {

inline int run_hall(const RunConfig& cfg, std::ostream& out) {
  const HallTable table = generate_hall(cfg.k, cfg.max_degree);
  if (cfg.format == OutputFormat::tsv) {
    out << "level\tdegree\tmonomial\n";
    for (const auto& level : table.levels)
      for (const auto& e : level)
        out << e.level << '\t' << e.degree << '\t' << e.monomial.to_string() << '\n';
    out.flush();
    return 0;
  }
  Json elements = Json::array();
  for (const auto& level : table.levels)
    for (const auto& e : level)
      elements.push_back(Json{{"level", e.level},
                              {"degree", e.degree},
                              {"monomial", emit::monomial_json(e.monomial)}});
  const GradedDimTable dims = bigrade_dims(cfg.k, cfg.max_degree);
  Json counts = Json::array();
  for (const auto& [degree, by_level] : dims.counts)
    for (const auto& [level, count] : by_level)
      counts.push_back(Json{{"degree", degree}, {"level", level}, {"count", emit::str(count)}});
  out << Json{{"alphabet", table.alphabet},
              {"max_degree", table.max_degree},
              {"elements", elements},
              {"counts", counts}}
             .dump(2)
      << '\n';
  out.flush();
  return 0;
}

inline int run_dims(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n_lo < 2) throw std::invalid_argument("dims: range must start at n >= 2");
  bool all_ok = true;
  if (cfg.format == OutputFormat::tsv) {
    out << "g\tn\tdim_free\tdim_kernel\tdim_kernel_plus_rel\tdim_metabelian\t"
           "formula_metabelian\tdim_surface\tlower_bound_surface\trelation_image_exact\t"
           "relation_image_limit\tslack\tlower_bound_ok\tformula_ok\n";
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
      const QuotientDimRecord r = check_lower_bound(cfg.g, n, cfg.pairing, cfg.budget);
      all_ok = all_ok && r.lower_bound_ok && r.formula_ok;
      out << r.g << '\t' << r.n << '\t' << r.dim_free << '\t' << r.dim_kernel << '\t'
          << r.dim_kernel_plus_rel << '\t' << r.dim_metabelian << '\t' << r.formula_metabelian
          << '\t' << r.dim_surface << '\t' << r.lower_bound_surface << '\t'
          << r.relation_image_exact << '\t' << r.relation_image_limit << '\t' << r.slack << '\t'
          << r.lower_bound_ok << '\t' << r.formula_ok << '\n';
      out.flush();  // partial rows survive a later budget error
    }
  } else {
    Json rows = Json::array();
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
      const QuotientDimRecord r = check_lower_bound(cfg.g, n, cfg.pairing, cfg.budget);
      all_ok = all_ok && r.lower_bound_ok && r.formula_ok;
      rows.push_back(to_json(r));
    }
    out << rows.dump(2) << '\n';
    out.flush();
  }
  return all_ok ? 0 : 1;
}

inline int run_bounds(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n_lo < 2) throw std::invalid_argument("bounds: range must start at n >= 2");
  if (cfg.g < 2) throw std::invalid_argument("bounds: g >= 2 required");
  BigCount minus_running = low_degree_minus_dim(cfg.g);
  const bool tsv = cfg.format == OutputFormat::tsv;
  Json rows = Json::array();
  if (tsv)
    out << "n\tsym_plus\tsym_minus\tminus_span\tremainder_bound\tf0_count\tf0_bound\t"
           "minus_sum_bound\tlocal_lower\n";
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    const EigenSplit s = sym_eigen_dims(cfg.g, n - 2);
    const BigCount span = minus_span_dim(cfg.g, n);
    const BigCount rem = remainder_dim_bound(cfg.g, n);
    if (n >= 3) minus_running += span + rem;
    const BigCount local = (n >= 3) ? local_quotient_lower_bound(cfg.g, n) : local_base_dim(cfg.g);
    if (tsv) {
      out << n << '\t' << s.plus << '\t' << s.minus << '\t' << span << '\t' << rem << '\t'
          << f0_count(cfg.g, n) << '\t' << f0_upper_bound(cfg.g, n) << '\t' << minus_running
          << '\t' << local << '\n';
      out.flush();
    } else {
      rows.push_back(Json{{"n", n},
                          {"sym_plus", emit::str(s.plus)},
                          {"sym_minus", emit::str(s.minus)},
                          {"minus_span", emit::str(span)},
                          {"remainder_bound", emit::str(rem)},
                          {"f0_count", emit::str(f0_count(cfg.g, n))},
                          {"f0_bound", emit::str(f0_upper_bound(cfg.g, n))},
                          {"minus_sum_bound", emit::str(minus_running)},
                          {"local_lower", emit::str(local)}});
    }
  }
  if (!tsv) {
    out << rows.dump(2) << '\n';
    out.flush();
  }
  return 0;
}

inline int run_zeros(const RunConfig& cfg, std::ostream& out) {
  const ExponentMatrix D = load_exponent_matrix(cfg.matrix_file);
  if (D.rows != 2 * cfg.g)
    throw std::invalid_argument("zeros: matrix must have 2g rows");
  const FiberReport rep = fiber_partition(D, cfg.g, cfg.n);
  BigCount vanishing = 0;
  bool have_profile = false;
  AnnihilatorProfile profile;
  if (!cfg.profile_file.empty()) {
    profile = load_annihilator_profile(cfg.profile_file);
    vanishing = count_vanishing_indices(D, profile, cfg.g, cfg.n);
    have_profile = true;
  }
  if (cfg.format == OutputFormat::tsv) {
    out << "total\t" << rep.total << '\n'
        << "max_fiber\t" << rep.max_fiber << '\n'
        << "kernel_box\t" << rep.kernel_box << '\n';
    if (have_profile) out << "vanishing\t" << vanishing << '\n';
    for (const auto& [delta, count] : rep.fibers)
      out << "fiber\t" << emit::join(delta) << '\t' << count << '\n';
  } else {
    Json j = to_json(rep);
    if (have_profile) {
      j["vanishing"] = emit::str(vanishing);
      j["profile_l"] = profile.l;
      j["profile_m"] = profile.m;
    }
    out << j.dump(2) << '\n';
  }
  out.flush();
  return 0;
}

inline int run_crossover(const RunConfig& cfg, std::ostream& out) {
  BoundParams params;
  params.g = cfg.g;
  params.obstruction = cfg.obstruction;
  params.c0 = cfg.c0;
  params.horizon = cfg.horizon;
  const CrossoverReport rep = find_crossover(params);
  if (cfg.format == OutputFormat::tsv) {
    out << "g\t" << rep.g << '\n'
        << "horizon\t" << rep.horizon << '\n'
        << "n0\t" << (rep.n0 ? std::to_string(*rep.n0) : std::string("none")) << '\n'
        << "leading_ok\t" << rep.leading_ok << '\n';
    if (!rep.diagnostic.empty()) out << "diagnostic\t" << rep.diagnostic << '\n';
    out << "n\tupper\tlower\tholds\n";
    for (const auto& row : rep.trace)
      out << row.n << '\t' << row.upper << '\t' << row.lower << '\t' << row.holds << '\n';
  } else {
    out << to_json(rep).dump(2) << '\n';
  }
  out.flush();
  return 0;
}

struct VerifyRow {
  std::string check;
  std::string params;
  std::string observed;
  std::string expected;
  bool ok = false;
};

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.max_n < 2) throw std::invalid_argument("verify: max-n >= 2 required");
  std::vector<VerifyRow> rows;
  const int g = cfg.g, k = 2 * g;

  for (int n = 2; n <= cfg.max_n; ++n) {
    const QuotientDimRecord r = check_lower_bound(g, n, cfg.pairing, cfg.budget);
    rows.push_back({"metabelian_formula", "g=" + std::to_string(g) + " n=" + std::to_string(n),
                    r.dim_metabelian.str(), r.formula_metabelian.str(), r.formula_ok});
    rows.push_back({"surface_lower_bound", "g=" + std::to_string(g) + " n=" + std::to_string(n),
                    r.dim_surface.str(), ">= " + r.lower_bound_surface.str(),
                    r.dim_surface >= r.lower_bound_surface});
    rows.push_back({"relation_image", "g=" + std::to_string(g) + " n=" + std::to_string(n),
                    r.relation_image_exact.str(), "<= " + r.relation_image_limit.str(),
                    r.relation_image_exact <= r.relation_image_limit});
    const bool independent = verify_level_one_independence(g, n, cfg.budget);
    rows.push_back({"level_one_independent", "g=" + std::to_string(g) + " n=" + std::to_string(n),
                    independent ? "true" : "false", "true", independent});
    const SpanReport span = verify_hall_spans(k, n, cfg.budget);
    rows.push_back({"hall_spans", "k=" + std::to_string(k) + " n=" + std::to_string(n),
                    std::to_string(span.rank_all) + "/" + std::to_string(span.rank_deep),
                    span.expected_all.str() + "/" + std::to_string(span.rank_derived), span.ok});
    const BigCount identity =
        metabelian_graded_dim(g, n) - surface_graded_lower_bound(g, n) - relation_image_bound(g, n);
    rows.push_back({"count_identity", "g=" + std::to_string(g) + " n=" + std::to_string(n),
                    identity.str(), "0", identity == 0});
  }

  for (int m = 0; m <= 2 * cfg.max_n; ++m) {
    const EigenSplit s = sym_eigen_dims(g, m);
    const BigCount expected = binomial(m + 2 * g - 1, 2 * g - 1);
    const BigCount total = s.plus + s.minus;
    rows.push_back({"eigen_total", "g=" + std::to_string(g) + " m=" + std::to_string(m),
                    total.str(), expected.str(), total == expected});
  }
  for (int n = 2; n <= 30; ++n) {
    const BigCount c = f0_count(g, n), b = f0_upper_bound(g, n);
    rows.push_back({"f0_within_bound", "g=" + std::to_string(g) + " n=" + std::to_string(n),
                    c.str(), "<= " + b.str(), c <= b});
  }

  bool all_ok = true;
  for (const auto& r : rows) all_ok = all_ok && r.ok;
  if (cfg.format == OutputFormat::tsv) {
    out << "check\tparams\tobserved\texpected\tstatus\n";
    for (const auto& r : rows)
      out << r.check << '\t' << r.params << '\t' << r.observed << '\t' << r.expected << '\t'
          << (r.ok ? "OK" : "FAIL") << '\n';
    out << "result\t" << (all_ok ? "PASS" : "FAIL") << '\n';
  } else {
    Json jrows = Json::array();
    for (const auto& r : rows)
      jrows.push_back(Json{{"check", r.check},
                           {"params", r.params},
                           {"observed", r.observed},
                           {"expected", r.expected},
                           {"ok", r.ok}});
    out << Json{{"result", all_ok ? "PASS" : "FAIL"}, {"checks", jrows}}.dump(2) << '\n';
  }
  out.flush();
  return all_ok ? 0 : 1;
}

}  // namespace detail

// Exit code: 0 success, 1 verification failure.  Usage and budget errors
// propagate as exceptions for the caller to map (2 and 3 respectively).
inline int run(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.cmd) {
    case Command::hall: return detail::run_hall(cfg, out);
    case Command::dims: return detail::run_dims(cfg, out);
    case Command::bounds: return detail::run_bounds(cfg, out);
    case Command::zeros: return detail::run_zeros(cfg, out);
    case Command::crossover: return detail::run_crossover(cfg, out);
    case Command::verify: return detail::run_verify(cfg, out);
  }
  throw std::logic_error("run: unknown command");
}

}  // namespace liedim
