// Runs every acceptance criterion through the CLI entry point and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hhl/cli.hpp"
#include "hhl/complexes.hpp"
#include "hhl/structure_checks.hpp"

namespace {

using nlohmann::json;

struct Run {
  int code = -1;
  std::string text;
  json report;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = hhl::cli::run(args, out, err);
  r.text = out.str();
  try {
    r.report = json::parse(r.text);
  } catch (const json::exception&) {
  }
  return r;
}

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> body;
};

// betti(d) = 0 for d <= n-2, read from the report rather than the verdict.
bool acyclic_through(const json& rep, int n, std::string& why) {
  const auto& betti = rep.at("result").at("betti");
  for (int d = -1; d <= n - 2; ++d) {
    const auto b = betti.at(std::to_string(d)).get<std::size_t>();
    if (b != 0) {
      why = "betti(" + std::to_string(d) + ") = " + std::to_string(b);
      return false;
    }
  }
  return true;
}

bool homology_sweep(const std::string& complex, int n_max, const std::vector<std::pair<std::string, std::string>>& qs,
                    std::string& why) {
  for (const auto& [q, field] : qs) {
    for (int n = 1; n <= n_max; ++n) {
      const auto r = invoke({"homology", "--complex", complex, "--n", std::to_string(n), "--q", q, "--field", field,
                             "--assert-acyclic"});
      const std::string where = complex + " n=" + std::to_string(n) + " q=" + q + " " + field;
      if (r.code != 0) {
        why = where + " exit " + std::to_string(r.code);
        return false;
      }
      std::string detail;
      if (!acyclic_through(r.report, n, detail)) {
        why = where + " " + detail;
        return false;
      }
    }
  }
  return true;
}

bool identities_pass(const std::string& q, std::string& why) {
  const auto r = invoke({"identities", "--n", "5", "--q", q});
  if (r.code != 0 || !r.report.at("verdict").at("all_passed").get<bool>()) {
    why = "identities q=" + q + " exit " + std::to_string(r.code);
    return false;
  }
  for (const auto& f : r.report.at("result").at("families")) {
    if (f.at("failed").get<std::size_t>() != 0 || f.at("checked").get<std::size_t>() == 0) {
      why = f.at("family").get<std::string>() + " at q=" + q;
      return false;
    }
  }
  return true;
}

bool structure_pass(const std::string& q, std::string& why) {
  const auto r = invoke({"filtration", "--n", "4", "--q", q});
  if (r.code != 0) {
    why = "filtration q=" + q + " exit " + std::to_string(r.code);
    for (const auto& c : r.report.at("result").at("checks")) {
      if (!c.at("passed").get<bool>()) why += " " + c.at("name").get<std::string>();
    }
    return false;
  }
  return true;
}

bool stability_pass(const std::string& q, std::string& why) {
  const auto r = invoke({"stability", "--n", "3", "--d", "2", "--q", q});
  if (r.code != 0) {
    why = "stability q=" + q + " exit " + std::to_string(r.code);
    return false;
  }
  std::size_t asserted = 0;
  for (const auto& row : r.report.at("result").at("rows")) {
    const int n = row.at("n").get<int>(), d = row.at("d").get<int>();
    if (2 * d > n - 1) continue;
    ++asserted;
    if (row.at("status") != "asserted" || !row.at("isomorphism").get<bool>()) {
      why = "not an isomorphism at n=" + std::to_string(n) + " d=" + std::to_string(d) + " q=" + q;
      return false;
    }
  }
  for (const auto& [k, dims] : r.report.at("result").at("tor_dims").items()) {
    if (dims.at(0).get<std::size_t>() != 1) {
      why = "Tor_0 != 1 at rank " + k;
      return false;
    }
  }
  if (asserted != 4) {
    why = "expected 4 asserted pairs, saw " + std::to_string(asserted);
    return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::string>> rational_one{{"1", "Q"}};
  const std::vector<Criterion> criteria{
      {1, "C(n) acyclic through n-2, n <= 6",
       [&](std::string& why) { return homology_sweep("C", 6, rational_one, why); }},
      {2, "C±(n) acyclic through n-2, n <= 5",
       [&](std::string& why) { return homology_sweep("Cpm", 5, rational_one, why); }},
      {3, "D±(n) acyclic through n-2 over Q and F_10007, n <= 4, plus n = 5 at q = 2",
       [&](std::string& why) {
         return homology_sweep("Dpm", 4,
                               {{"1", "Q"}, {"2", "Q"}, {"1/3", "Q"}, {"-1", "Q"}, {"2", "Fp:10007"},
                                {"10006", "Fp:10007"}},
                               why) &&
                homology_sweep("Dpm", 5, {{"2", "Q"}}, why);
       }},
      {4, "D±(n) equals C±(n) entrywise at q = 1, n <= 4",
       [&](std::string& why) {
         for (int n = 1; n <= 4; ++n) {
           const auto full = hhl::word_model_check(
               hhl::build_D(n, hhl::CoxeterType::B, hhl::ScalarConfig::parse("1", "Q")),
               hhl::build_C(n, true, hhl::Field::rationals()), "Dpm");
           if (!full.passed || full.checked == 0) {
             why = "n=" + std::to_string(n) + " " + full.detail;
             return false;
           }
           // The filtration report repeats the comparison on every quotient.
           const auto r = invoke({"filtration", "--n", std::to_string(n), "--q", "1"});
           bool seen = false;
           for (const auto& c : r.report.at("result").at("checks")) {
             if (c.at("name") != "quotient_matches_signed_words") continue;
             seen = c.at("passed").get<bool>();
           }
           if (!seen) {
             why = "quotient word model fails at n=" + std::to_string(n);
             return false;
           }
         }
         return true;
       }},
      {5, "identity suites, n <= 5, q in {2, 1/3}",
       [&](std::string& why) { return identities_pass("2", why) && identities_pass("1/3", why); }},
      {6, "filtration and comparison-map structure, n <= 4",
       [&](std::string& why) {
         for (const char* q : {"2", "1/3", "1"}) {
           if (!structure_pass(q, why)) return false;
         }
         return true;
       }},
      {7, "stabilization isomorphisms for 2d <= n-1, n <= 3, q in {2, 1/3}",
       [&](std::string& why) { return stability_pass("2", why) && stability_pass("1/3", why); }},
      {8, "byte-identical reports across repeated runs",
       [&](std::string& why) {
         const std::vector<std::vector<std::string>> cmds{
             {"homology", "--complex", "Dpm", "--n", "4", "--q", "1/3"},
             {"homology", "--complex", "C", "--n", "5", "--format", "csv"},
             {"homology", "--complex", "Dpm", "--n", "3", "--q", "2", "--field", "Fp:10007", "--jobs", "4"},
             {"identities", "--n", "4", "--q", "2"},
             {"filtration", "--n", "3", "--q", "1"},
             {"stability", "--n", "2", "--d", "2", "--q", "-1"},
             {"stability", "--n", "6", "--d", "3"},
         };
         for (const auto& c : cmds) {
           const auto a = invoke(c), b = invoke(c);
           if (a.text.empty() || a.text != b.text || a.code != b.code) {
             why = "reports differ for " + c.front();
             return false;
           }
         }
         return true;
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = c.body(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  (" << buf << ")";
    if (!ok) std::cout << "  reason: " << why;
    std::cout << std::endl;
    failures += ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
