#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "radiok/constructions.hpp"
#include "radiok/dispatcher.hpp"
#include "radiok/io.hpp"
#include "radiok/oracle.hpp"
#include "radiok/verifier.hpp"

namespace {

using radiok::u64;

// Exit codes: 0 success, 1 invalid input, 2 verification failure,
// 3 uncovered case, 4 budget exceeded.
constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kVerifyFail = 2;
constexpr int kUncovered = 3;
constexpr int kBudget = 4;

struct Range {
  u64 lo = 0, hi = 0;
};

u64 parse_u64_strict(const std::string& s) {
  std::size_t pos = 0;
  const u64 v = std::stoull(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not an integer: \"" + s + "\"");
  return v;
}

Range parse_range(const std::string& s) {
  const auto dots = s.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_u64_strict(s);
  } else {
    r.lo = parse_u64_strict(s.substr(0, dots));
    r.hi = parse_u64_strict(s.substr(dots + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range \"" + s + "\"");
  return r;
}

// k specification: "diam", "diam+1", "all" (d..n+2), or "a..b"/"a".
struct KSpec {
  enum class Kind { Diam, DiamPlus1, All, Explicit } kind = Kind::All;
  Range range;
};

KSpec parse_kspec(const std::string& s) {
  KSpec spec;
  if (s == "diam") spec.kind = KSpec::Kind::Diam;
  else if (s == "diam+1") spec.kind = KSpec::Kind::DiamPlus1;
  else if (s == "all") spec.kind = KSpec::Kind::All;
  else {
    spec.kind = KSpec::Kind::Explicit;
    spec.range = parse_range(s);
  }
  return spec;
}

Range k_range_for(const KSpec& spec, u64 n) {
  const u64 d = n / 2;
  switch (spec.kind) {
    case KSpec::Kind::Diam: return {d, d};
    case KSpec::Kind::DiamPlus1: return {d + 1, d + 1};
    case KSpec::Kind::All: return {d, n + 2};
    case KSpec::Kind::Explicit: return {std::max(spec.range.lo, d), spec.range.hi};
  }
  return {d, d};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::invalid_argument("cannot open output file " + out_path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string rn_text(u64 n, u64 k, const radiok::RnStatus& st) {
  std::string s;
  if (st.exact()) {
    s = "rn_" + std::to_string(k) + "(C_" + std::to_string(n) + ") = " + std::to_string(st.value) +
        "  [exact; " + st.provenance + "]";
  } else if (st.upper) {
    s = std::to_string(st.lower) + " <= rn_" + std::to_string(k) + "(C_" + std::to_string(n) +
        ") <= " + std::to_string(*st.upper) + "  [bounds; " + st.provenance + "]";
  } else {
    s = std::to_string(st.lower) + " <= rn_" + std::to_string(k) + "(C_" + std::to_string(n) +
        ")  [bounds; " + st.provenance + "]";
  }
  s += st.construction_available ? "  construction: yes" : "  construction: no";
  return s + "\n";
}

struct CommonArgs {
  u64 n = 0, k = 0;
  bool use_oracle = false;
  bool demand_exact = false;
  bool trace = false;
  std::string format;  // empty: per-command default
  std::string out_path;
  u64 budget_nodes = 100'000'000;
  double budget_secs = 60.0;

  radiok::OracleBudget budget() const { return {budget_nodes, budget_secs, 0}; }
  std::string format_or(const char* fallback) const { return format.empty() ? fallback : format; }
};

int cmd_rn(const CommonArgs& a) {
  const std::string fmt = a.format_or("text");
  radiok::RnStatus st = radiok::resolve(a.n, a.k);
  int rc = kOk;
  if (!st.exact() && a.use_oracle) {
    const radiok::OracleResult r = radiok::exact_rn(a.n, a.k, a.budget());
    if (r.complete) {
      st.kind = radiok::RnKind::Exact;
      st.value = r.value;
      st.lower = r.value;
      st.upper = r.value;
      st.provenance = "oracle";
    } else {
      if (r.best_upper && (!st.upper || *r.best_upper < *st.upper)) st.upper = r.best_upper;
      std::cerr << "oracle budget exceeded after " << r.nodes << " nodes\n";
      rc = kBudget;
    }
  } else if (!st.exact() && a.demand_exact) {
    std::cerr << "no exact value is proven for this case; rerun with --oracle\n";
    rc = kUncovered;
  }
  emit(fmt == "json" ? radiok::rn_status_to_json(a.n, a.k, st) : rn_text(a.n, a.k, st),
       a.out_path);
  return rc;
}

int cmd_phi(const CommonArgs& a) {
  emit(std::to_string(radiok::phi(a.n, a.k)) + "\n", a.out_path);
  return kOk;
}

int cmd_bounds(const CommonArgs& a) {
  const radiok::RnStatus st = radiok::resolve(a.n, a.k);
  if (a.format_or("text") == "json") {
    emit(radiok::rn_status_to_json(a.n, a.k, st), a.out_path);
  } else {
    std::string s = "lb: " + std::to_string(radiok::lb(a.n, a.k)) + "\n" + rn_text(a.n, a.k, st);
    emit(s, a.out_path);
  }
  return kOk;
}

int cmd_label(const CommonArgs& a) {
  std::optional<radiok::Labeling> lab;
  if (a.use_oracle) {
    const radiok::OracleResult r = radiok::exact_rn(a.n, a.k, a.budget());
    if (!r.complete) {
      std::cerr << "oracle budget exceeded after " << r.nodes << " nodes\n";
      return kBudget;
    }
    lab = r.witness;
  } else {
    const auto params = radiok::classify(a.n, a.k);
    if (!params) {
      std::cerr << "no construction covers n=" << a.n << " k=" << a.k
                << " (open parity-mismatch case); rerun with --oracle\n";
      return kUncovered;
    }
    lab = radiok::build_labeling(a.n, a.k, *params);
  }
  // Never write an unverified certificate. Full pairwise verification up
  // to n = 2000; the equivalent reduced check beyond that.
  const radiok::Verdict v =
      a.n <= 2000 ? radiok::verify_full(*lab) : radiok::verify_reduced(*lab);
  if (!v.valid) {
    std::cerr << "internal error: labeling failed re-verification\n";
    return kVerifyFail;
  }
  if (a.trace) std::cerr << "schedule: " << radiok::format_schedule(radiok::jumps_of(*lab)) << "\n";
  emit(a.format_or("json") == "csv" ? radiok::labeling_to_csv(*lab)
                                    : radiok::labeling_to_json(*lab),
       a.out_path);
  return kOk;
}

int cmd_verify(const std::string& path, std::optional<u64> expect_n, std::optional<u64> expect_k) {
  const radiok::Labeling lab = radiok::parse_labeling(read_file(path));
  if ((expect_n && *expect_n != lab.n) || (expect_k && *expect_k != lab.k)) {
    std::cerr << "file declares n=" << lab.n << " k=" << lab.k
              << " which differs from the requested instance\n";
    return kBadInput;
  }
  const radiok::Verdict v = radiok::verify_full(lab);
  if (v.valid) {
    std::cout << "valid radio-" << lab.k << "-labeling of C_" << lab.n << ", span " << lab.span()
              << "\n";
    return kOk;
  }
  const radiok::Violation& w = *v.witness;
  std::cout << "invalid: vertices " << w.u << " and " << w.v << " (order positions " << w.i << ","
            << w.j << ") need gap >= " << w.required << ", got " << w.actual << "\n";
  return kVerifyFail;
}

int cmd_table(const std::string& n_range, const std::string& k_spec, const CommonArgs& a) {
  const Range nr = parse_range(n_range);
  const KSpec ks = parse_kspec(k_spec);
  std::vector<radiok::TableRow> rows;
  for (u64 n = std::max<u64>(nr.lo, 3); n <= nr.hi; ++n) {
    const Range kr = k_range_for(ks, n);
    for (u64 k = kr.lo; k <= kr.hi; ++k) {
      radiok::TableRow row;
      row.n = n;
      row.k = k;
      row.parity = radiok::CycleInstance::make(n, k).parity_class;
      row.phi_value = radiok::phi(n, k);
      row.lb_value = radiok::lb(n, k);
      const radiok::RnStatus st = radiok::resolve(n, k);
      row.lower = st.lower;
      row.upper = st.upper;
      if (st.exact()) row.exact = st.value;
      row.provenance = st.provenance;
      if (const auto params = radiok::classify(n, k))
        row.construction_span = radiok::build_labeling(n, k, *params).span();
      rows.push_back(std::move(row));
    }
  }
  emit(a.format_or("csv") == "json" ? radiok::table_to_json(rows) : radiok::table_to_csv(rows),
       a.out_path);
  return kOk;
}

int cmd_scan(const std::string& n_range, const CommonArgs& a) {
  const Range nr = parse_range(n_range);
  const auto rows = radiok::scan_conjecture(nr.lo, nr.hi, a.budget());
  emit(a.format_or("csv") == "json" ? radiok::scan_to_json(rows) : radiok::scan_to_csv(rows),
       a.out_path);
  return kOk;
}

int cmd_audit(u64 n_max, u64 oracle_n_max, const CommonArgs& a) {
  const radiok::AuditReport rep = radiok::consistency_audit(n_max, oracle_n_max, a.budget());
  emit(radiok::audit_to_json(rep), a.out_path);
  std::cerr << "audit: " << rep.instances_checked << " instances, " << rep.contradictions.size()
            << " contradictions\n";
  return rep.clean() ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radio-k-numbers of cycles C_n: exact values, bounds, optimal labelings"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string n_range = "3..30";
  std::string k_spec = "all";
  std::string verify_path;
  u64 audit_n_max = 60;
  u64 audit_oracle_n_max = 0;
  u64 verify_n_raw = 0, verify_k_raw = 0;  // 0: no cross-check requested

  auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--n", args.n, "number of vertices")->required();
    cmd->add_option("--k", args.k, "labeling level (k >= floor(n/2))")->required();
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", args.out_path, "write output to FILE instead of stdout");
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget-nodes", args.budget_nodes, "oracle node budget");
    cmd->add_option("--budget-secs", args.budget_secs, "oracle time budget in seconds");
  };

  CLI::App* phi_cmd = app.add_subcommand("phi", "print phi(n,k) = ceil((3k+3-n)/2)");
  add_instance(phi_cmd);
  phi_cmd->add_option("--out", args.out_path, "write output to FILE");

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "print LB(n,k) and the proven bounds");
  add_instance(bounds_cmd);
  add_output(bounds_cmd);

  CLI::App* rn_cmd = app.add_subcommand("rn", "exact radio-k-number or proven bounds");
  add_instance(rn_cmd);
  add_output(rn_cmd);
  add_budget(rn_cmd);
  rn_cmd->add_flag("--oracle", args.use_oracle, "tighten a bounds-only result exhaustively");
  rn_cmd->add_flag("--exact", args.demand_exact, "fail (exit 3) if only bounds are proven");

  CLI::App* label_cmd = app.add_subcommand("label", "emit an optimal (or best-known) labeling");
  add_instance(label_cmd);
  add_output(label_cmd);
  add_budget(label_cmd);
  label_cmd->add_flag("--oracle", args.use_oracle, "search exhaustively instead of constructing");
  label_cmd->add_flag("--trace", args.trace, "dump the jump schedule to stderr");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a labeling file (exit 0/2)");
  verify_cmd->add_option("file", verify_path, "labeling file (JSON or CSV)")->required();
  verify_cmd->add_option("--n", verify_n_raw, "expected n (cross-check)");
  verify_cmd->add_option("--k", verify_k_raw, "expected k (cross-check)");

  CLI::App* table_cmd = app.add_subcommand("table", "sweep (n,k) and tabulate values and bounds");
  table_cmd->add_option("--n", n_range, "n range, e.g. 3..30")->required();
  table_cmd->add_option("--k", k_spec, "k spec: diam, diam+1, all, or a..b");
  add_output(table_cmd);

  CLI::App* scan_cmd = app.add_subcommand("scan", "oracle-certify the conjectured upper bound");
  scan_cmd->add_option("--n", n_range, "n range, e.g. 8..12")->required();
  add_output(scan_cmd);
  add_budget(scan_cmd);

  CLI::App* audit_cmd = app.add_subcommand("audit", "cross-check every rule against every other");
  audit_cmd->add_option("--n-max", audit_n_max, "sweep n up to this value");
  audit_cmd->add_option("--oracle-n-max", audit_oracle_n_max,
                        "also cross-check with the oracle up to this n (0 = off)");
  audit_cmd->add_option("--out", args.out_path, "write the JSON report to FILE");
  add_budget(audit_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (phi_cmd->parsed()) return cmd_phi(args);
    if (bounds_cmd->parsed()) return cmd_bounds(args);
    if (rn_cmd->parsed()) return cmd_rn(args);
    if (label_cmd->parsed()) return cmd_label(args);
    if (verify_cmd->parsed())
      return cmd_verify(verify_path,
                        verify_n_raw ? std::optional<u64>(verify_n_raw) : std::nullopt,
                        verify_k_raw ? std::optional<u64>(verify_k_raw) : std::nullopt);
    if (table_cmd->parsed()) return cmd_table(n_range, k_spec, args);
    if (scan_cmd->parsed()) return cmd_scan(n_range, args);
    if (audit_cmd->parsed()) return cmd_audit(audit_n_max, audit_oracle_n_max, args);
  } catch (const radiok::ConstructionError& e) {
    std::cerr << "construction integrity error: " << e.what() << "\n";
    return kVerifyFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
