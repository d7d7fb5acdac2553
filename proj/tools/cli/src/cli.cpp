#include "hhl/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hhl/bar.hpp"
#include "hhl/errors.hpp"
#include "hhl/json_io.hpp"

namespace hhl::cli {
namespace {

struct Outcome {
  Json result;
  Json verdict;
  int code = kOk;
  std::string csv;
  std::string summary;
};

Json config_json(const RunConfig& c, std::uint64_t guard) {
  Json j;
  j["command"] = c.command;
  j["n"] = c.n;
  j["q"] = c.q;
  j["field"] = c.field;
  j["out"] = c.out;
  j["format"] = c.format;
  j["guard"] = guard;
  if (c.command == "homology") {
    j["complex"] = c.complex;
    j["assert_acyclic"] = c.assert_acyclic;
    j["jobs"] = c.jobs;
    j["timing"] = c.timing;
    j["export"] = c.export_path;
  }
  if (c.command == "stability") j["d"] = c.d;
  if (c.command == "identities" || c.command == "filtration") j["perturb_xi"] = c.perturb_xi;
  return j;
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
    f << text;
    if (!f.flush()) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

Outcome cmd_homology(const RunConfig& cfg, const ScalarConfig& scalars) {
  LabeledComplex c;
  if (cfg.complex == "C" || cfg.complex == "Cpm") {
    if (cfg.n < 0 || cfg.n > kMaxRank) throw RankError("n out of range");
    c = build_C(cfg.n, cfg.complex == "Cpm", scalars.field);
  } else {
    c = build_D(cfg.n, cfg.complex == "Dpm" ? CoxeterType::B : CoxeterType::A, scalars, false);
  }
  if (!cfg.export_path.empty()) write_atomically(cfg.export_path, dump(to_json(c)));

  HomologyOptions opts;
  opts.jobs = cfg.jobs;
  opts.timing = cfg.timing;
  const HomologyReport rep = homology_dims(c, opts);

  Outcome o;
  o.result = to_json(rep);
  o.csv = betti_csv(rep);
  const int through = cfg.n - 2;
  o.verdict["assert_acyclic"] = cfg.assert_acyclic;
  o.verdict["through_degree"] = through;
  o.verdict["vanishes"] = rep.vanishes_through(through);
  if (cfg.assert_acyclic && !rep.vanishes_through(through)) o.code = kAssertionFailed;

  std::ostringstream s;
  s << "homology " << cfg.complex << " n=" << cfg.n << " betti";
  for (const auto& [r, b] : rep.betti) s << ' ' << r << ':' << b;
  o.summary = s.str();
  return o;
}

Outcome cmd_identities(const RunConfig& cfg, const ScalarConfig& scalars) {
  IdentityOptions opts;
  opts.perturb_xi = cfg.perturb_xi;
  const IdentityReport rep = run_identity_suites(cfg.n, scalars, opts);
  Outcome o;
  o.result = to_json(rep);
  o.verdict["all_passed"] = rep.all_passed();
  if (!rep.all_passed()) o.code = kAssertionFailed;
  std::ostringstream csv;
  csv << "family,checked,failed\n";
  for (const auto& f : rep.families) csv << f.family << ',' << f.checked << ',' << f.failed << '\n';
  o.csv = csv.str();
  o.summary = "identities n<=" + std::to_string(cfg.n) + " checked=" + std::to_string(rep.total_checked()) +
              (rep.all_passed() ? " all hold" : " FAILURES");
  for (const auto& f : rep.families) {
    if (f.failures.empty()) continue;
    const auto& x = f.failures.front();
    o.summary += "\n  " + f.family + " n=" + std::to_string(x.n);
    for (const auto& [k, v] : x.params) o.summary += " " + k + "=" + v;
  }
  return o;
}

Outcome cmd_filtration(const RunConfig& cfg, const ScalarConfig& scalars) {
  StructureOptions opts;
  opts.perturb_xi = cfg.perturb_xi;
  const StructureReport rep = run_structure_checks(cfg.n, scalars, opts);
  Outcome o;
  o.result = to_json(rep);
  o.verdict["all_passed"] = rep.all_passed();
  if (!rep.all_passed()) o.code = kAssertionFailed;
  std::ostringstream csv;
  csv << "check,passed,checked,detail\n";
  for (const auto& c : rep.checks) {
    csv << c.name << ',' << (c.passed ? "true" : "false") << ',' << c.checked << ",\"" << c.detail << "\"\n";
  }
  o.csv = csv.str();
  o.summary = "filtration n=" + std::to_string(cfg.n) + (rep.all_passed() ? " all checks pass" : " FAILURES");
  for (const auto& c : rep.checks) {
    if (!c.passed) o.summary += "\n  " + c.name + ": " + c.detail;
  }
  return o;
}

Outcome cmd_stability(const RunConfig& cfg, const ScalarConfig& scalars, std::uint64_t guard) {
  if (cfg.n < 1) throw RankError("stability needs n >= 1");
  if (cfg.d < 0) throw ConfigError("d must be non-negative");
  check_guard(CoxeterType::B, cfg.n, cfg.d, guard);

  std::vector<std::vector<std::size_t>> tor;
  for (int k = 0; k <= cfg.n; ++k) tor.push_back(bar_tor_dims(CoxeterType::B, k, cfg.d, scalars, guard));

  Outcome o;
  bool all_iso = true;
  bool tor0 = true;
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "n,d,tor_source,tor_target,status,rank,isomorphism\n";
  for (int k = 0; k <= cfg.n; ++k) tor0 = tor0 && tor[static_cast<std::size_t>(k)].at(0) == 1;
  for (int k = 1; k <= cfg.n; ++k) {
    for (int d = 0; d <= cfg.d; ++d) {
      const std::size_t src = tor[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(d)];
      const std::size_t tgt = tor[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)];
      const bool asserted = 2 * d <= k - 1;
      Json row{{"n", k}, {"d", d}, {"tor_source", src}, {"tor_target", tgt},
               {"status", asserted ? "asserted" : "unasserted"}};
      if (asserted) {
        const auto map = stabilization_map(CoxeterType::B, k, d, scalars, guard);
        if (map.dim_source != src || map.dim_target != tgt) {
          throw IntegrityError("stabilization dims disagree with Tor dims at n=" + std::to_string(k) +
                               " d=" + std::to_string(d));
        }
        row["map"] = to_json(map);
        row["isomorphism"] = map.isomorphism();
        all_iso = all_iso && map.isomorphism();
        csv << k << ',' << d << ',' << src << ',' << tgt << ",asserted," << map.rank << ','
            << (map.isomorphism() ? "true" : "false") << '\n';
      } else {
        row["isomorphism"] = nullptr;
        csv << k << ',' << d << ',' << src << ',' << tgt << ",unasserted,,\n";
      }
      rows.push_back(std::move(row));
    }
  }
  Json tor_json = Json::object();
  for (int k = 0; k <= cfg.n; ++k) tor_json[std::to_string(k)] = tor[static_cast<std::size_t>(k)];
  o.result["type"] = "B";
  o.result["tor_dims"] = std::move(tor_json);
  o.result["rows"] = std::move(rows);
  o.verdict["asserted_rows_isomorphic"] = all_iso;
  o.verdict["tor0_is_one"] = tor0;
  if (!all_iso || !tor0) o.code = kAssertionFailed;
  o.csv = csv.str();
  o.summary = "stability n<=" + std::to_string(cfg.n) + " d<=" + std::to_string(cfg.d) +
              (o.code == kOk ? " stable range verified" : " FAILURES");
  return o;
}

std::string render(const RunConfig& cfg, std::uint64_t guard, const Outcome& o) {
  if (cfg.format == "csv") return o.csv;
  Json j;
  j["format_version"] = kFormatVersion;
  j["command"] = cfg.command;
  j["config"] = config_json(cfg, guard);
  j["result"] = o.result;
  j["verdict"] = o.verdict;
  j["exit_code"] = o.code;
  return dump(j);
}

Outcome error_outcome(const std::string& kind, const std::string& message, int code) {
  Outcome o;
  o.result = Json::object();
  o.verdict["error"] = {{"kind", kind}, {"message", message}};
  o.code = code;
  o.csv = "error,message\n" + kind + ",\"" + message + "\"\n";
  o.summary = kind + ": " + message;
  return o;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "Rank n")->required();
  sub->add_option("--q", cfg.q, "Exact value of q: an integer, a fraction a/b, or a residue")->capture_default_str();
  sub->add_option("--field", cfg.field, "Q or Fp:<p>")->capture_default_str();
  sub->add_option("--out", cfg.out, "Report path; stdout when omitted");
  sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--guard", cfg.guard, "Largest bar-complex chain group allowed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Homology of Hecke algebras of types A and B", "hhl"};
  app.require_subcommand(1);

  auto* homology = app.add_subcommand("homology", "Betti numbers of C(n), C±(n), D(n) or D±(n)");
  add_common(homology, cfg);
  homology->add_option("--complex", cfg.complex, "Complex to build")
      ->check(CLI::IsMember({"C", "Cpm", "D", "Dpm"}))
      ->required();
  homology->add_flag("--assert-acyclic", cfg.assert_acyclic, "Fail unless betti(d) = 0 for d <= n-2");
  homology->add_option("--jobs", cfg.jobs, "Threads for the modular pre-pass")->check(CLI::PositiveNumber);
  homology->add_flag("--timing", cfg.timing, "Record elapsed_ms in the report");
  homology->add_option("--export", cfg.export_path, "Also write the complex as JSON to this path");

  auto* identities = app.add_subcommand("identities", "Exhaustive Hecke and Coxeter identity suites");
  add_common(identities, cfg);
  identities->add_flag("--perturb-xi", cfg.perturb_xi)->group("");

  auto* filtration = app.add_subcommand("filtration", "Filtration, quotient and comparison-map checks");
  add_common(filtration, cfg);
  filtration->add_flag("--perturb-xi", cfg.perturb_xi)->group("");

  auto* stability = app.add_subcommand("stability", "Stabilization maps on Tor via the bar complex");
  add_common(stability, cfg);
  stability->add_option("--d", cfg.d, "Largest homological degree")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsageError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  std::uint64_t guard = kDefaultGuard;
  Outcome o;
  try {
    guard = cfg.guard ? *cfg.guard : guard_from_env();
    if (guard == 0) throw ConfigError("guard must be positive");
    const ScalarConfig scalars = ScalarConfig::parse(cfg.q, cfg.field);
    if (cfg.command == "homology") {
      o = cmd_homology(cfg, scalars);
    } else if (cfg.command == "identities") {
      o = cmd_identities(cfg, scalars);
    } else if (cfg.command == "filtration") {
      o = cmd_filtration(cfg, scalars);
    } else {
      o = cmd_stability(cfg, scalars, guard);
    }
  } catch (const GuardError& e) {
    o = error_outcome("guard", e.what(), kGuardExceeded);
    o.verdict["error"]["estimate"] = e.estimate();
    o.verdict["error"]["limit"] = e.limit();
  } catch (const IntegrityError& e) {
    o = error_outcome("integrity", e.what(), kIntegrityFailure);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const std::string text = render(cfg, guard, o);
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_atomically(cfg.out, text);
  }
  err << o.summary << " (exit " << o.code << ")\n";
  return o.code;
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << '\n';
    return kIntegrityFailure;
  }
}

}  // namespace hhl::cli
