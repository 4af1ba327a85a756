#include "vines/checks.hpp"
#include "vines/golden.hpp"
#include "vines/survey.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

using namespace vines;

namespace {

struct Line {
  int id;
  bool passed;
  std::string text;
};

std::string join_longs(const std::vector<long>& v) {
  if (v.empty()) return "None";
  std::ostringstream o;
  for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
  return o.str();
}

IntPoly from_desc(const std::vector<long>& desc) {
  std::vector<Integer> c;
  for (auto it = desc.rbegin(); it != desc.rend(); ++it) c.emplace_back(*it);
  return IntPoly(std::move(c));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance run over the 38 canonical vines"};
  SurveyConfig config;
  config.jobs = std::max(1u, std::thread::hardware_concurrency());
  config.cache_dir = default_cache_dir();
  std::vector<int> known;
  app.add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache", config.cache_dir, "Cache directory (default $VINESIEVE_CACHE, empty disables)");
  app.add_option("--known-failure", known, "Criteria whose failure does not change the exit status");
  CLI11_PARSE(app, argc, argv);

  const auto t0 = std::chrono::steady_clock::now();
  const SurveyResult survey = run_survey(canonical_vines(), config);
  std::map<int, const VineResult*> by_row;
  for (const auto& v : survey.vines) by_row[std::stoi(v.entry.label)] = &v;
  std::vector<Line> lines;

  // 1. Table A constants
  {
    std::vector<std::string> bad;
    for (const auto& g : golden::table_a()) {
      const VineResult& v = *by_row.at(g.row);
      if (!v.profile) {
        bad.push_back(std::to_string(g.row) + ":" + v.error);
        continue;
      }
      const auto& p = *v.profile;
      if (p.s != g.s || p.K != g.K || static_cast<long>(p.Rbound) != g.R || p.N != g.N)
        bad.push_back(std::to_string(g.row));
    }
    std::ostringstream o;
    o << "Table A (s, K, R, N) exact on " << golden::table_a().size() - bad.size() << "/" << golden::table_a().size()
      << " rows, tolerance 0, survey time " << survey.seconds << " s (limit 600 s)";
    if (!bad.empty()) o << "; mismatched rows " << bad.front() << (bad.size() > 1 ? " ..." : "");
    lines.push_back({1, bad.empty() && survey.seconds < 600, o.str()});
  }

  // 2. Cyclotomic exceptions and failing primes
  {
    std::vector<std::string> set_diff;
    std::uint64_t max_first = 0;
    bool all_fail_at_listed = true;
    std::size_t spot_total = 0, spot_in_pair = 0;
    const std::set<int> spot{1, 7, 9, 13};
    for (const auto& g : golden::table_a()) {
      const VineResult& v = *by_row.at(g.row);
      std::vector<long> exc;
      for (const auto& r : v.reports) {
        if (r.cyclotomic.passed) {
          exc.push_back(r.j);
          continue;
        }
        max_first = std::max(max_first, r.cyclotomic.failing_prime);
        if (spot.count(g.row)) {
          ++spot_total;
          if (std::find(g.primes.begin(), g.primes.end(), r.cyclotomic.failing_prime) != g.primes.end())
            ++spot_in_pair;
        }
      }
      if (!v.not_failing_at_listed.empty()) all_fail_at_listed = false;
      if (exc != g.exceptions)
        set_diff.push_back("row " + std::to_string(g.row) + " printed " + join_longs(g.exceptions) + " computed " +
                           join_longs(exc));
    }
    std::ostringstream o;
    o << "exception sets equal the printed column on " << golden::table_a().size() - set_diff.size() << "/"
      << golden::table_a().size() << " rows";
    for (const auto& d : set_diff) o << " [" << d << "]";
    o << "; first failing prime <= 200 everywhere (max " << max_first << ")";
    o << "; first failing prime in the listed pair for " << spot_in_pair << "/" << spot_total
      << " eliminated translates of rows 1, 7, 9, 13";
    o << "; every eliminated translate fails at one of its row's listed primes: " << (all_fail_at_listed ? "yes" : "no");
    lines.push_back({2, set_diff.empty() && max_first <= 200 && spot_in_pair == spot_total, o.str()});
  }

  // 3. 28 cyclotomic survivors
  {
    const auto n = survey.cyclotomic_survivors();
    lines.push_back({3, n == static_cast<std::size_t>(golden::kCyclotomicSurvivors),
                     std::to_string(n) + " translates pass the cyclotomic test at M = 200 (expected 28)"});
  }

  // 4. Table B
  {
    std::set<std::pair<int, long>> got, want;
    std::size_t poly_ok = 0;
    for (const auto& [row, v] : by_row)
      for (const auto& r : v->reports)
        if (r.verdict == Verdict::EliminatedDNumber) got.insert({row, r.j});
    for (const auto& b : golden::table_b()) {
      want.insert({b.row, b.j});
      for (const auto& r : by_row.at(b.row)->reports)
        if (r.j == b.j && r.global_even_minpoly && *r.global_even_minpoly == from_desc(b.coeffs)) ++poly_ok;
    }
    std::ostringstream o;
    o << got.size() << " translates fail the d-number test (expected 15), pair sets "
      << (got == want ? "equal" : "differ") << ", " << poly_ok << "/15 minimal polynomials identical";
    lines.push_back({4, got == want && poly_ok == golden::table_b().size(), o.str()});
  }

  // 5. Non-integral dimensions
  {
    std::size_t ok = 0;
    std::ostringstream o;
    for (const auto& a : golden::non_integral_dimensions()) {
      for (const auto& r : by_row.at(a.row)->reports) {
        if (r.j != a.j) continue;
        const bool match = r.algebraic_integer && r.algebraic_integer->minpoly == from_desc(a.coeffs) &&
                           !r.algebraic_integer->passed && r.verdict == Verdict::EliminatedAlgebraicInteger;
        if (match) ++ok;
        o << " row " << a.row << ": " << (r.algebraic_integer ? r.algebraic_integer->minpoly.to_string() : "-");
      }
    }
    lines.push_back({5, ok == 3, std::to_string(ok) + "/3 bottom depth-3 dimensions match and fail;" + o.str()});
  }

  // 6. Final survivors
  {
    const auto fin = survey.final_survivors();
    std::set<std::pair<int, long>> window, five, want_window, want_five;
    bool five_numeric = true;
    const mpfr_prec_t bits = 512;
    const BigFloat tol = BigFloat::pow10(-20, bits);
    for (const auto& s : fin) {
      const std::pair<int, long> key{std::stoi(s.label), s.j};
      if (s.category == SurvivorClass::IndexWindow) window.insert(key);
      if (s.category == SurvivorClass::IndexFive) {
        five.insert(key);
        if (!((BigFloat(s.norm_sq, bits) - BigFloat(5L, bits)).abs() < tol)) five_numeric = false;
      }
    }
    for (const auto& t : golden::index_window_survivors()) want_window.insert({t.row, t.j});
    for (const auto& t : golden::index_five_survivors()) want_five.insert({t.row, t.j});
    std::size_t external = 0;
    for (const auto& s : survey.survivors())
      if (s.category == SurvivorClass::External) ++external;
    std::ostringstream o;
    o << fin.size() << " survivors (expected 9): " << window.size() << " with norm^2 in (4,5) "
      << (window == want_window ? "matching" : "not matching") << " the survivor table, " << five.size()
      << " at norm^2 = 5 (rows 5, 6 at j=1 " << (five == want_five ? "yes" : "no") << ", |norm^2 - 5| < 1e-20 "
      << (five_numeric ? "yes" : "no") << "); " << external
      << " further translate passing every computed test excluded by the cited formal-codegree argument (row 32 j=1)";
    lines.push_back({6, fin.size() == 9 && window == want_window && five == want_five && five_numeric, o.str()});
  }

  // 7. Derivative bound certificates
  {
    std::size_t holds = 0;
    long worst_min = 0;
    std::set<int> nonsalem;
    for (const auto& [row, v] : by_row)
      if (v->profile && !v->profile->salem) nonsalem.insert(row);
    const std::set<int> want(golden::non_salem_rows().begin(), golden::non_salem_rows().end());
    for (int row : want) {
      const auto& p = *by_row.at(row)->profile;
      if (p.dCertificate && p.dCertificate->status == BoundStatus::Holds && p.dBound && *p.dBound == 200) ++holds;
      worst_min = std::max(worst_min, p.dMinimal ? *p.dMinimal : 100000L);
    }
    std::ostringstream o;
    o << "non-Salem rows " << (nonsalem == want ? "match" : "differ") << ", " << holds
      << "/8 certificates positive at n = 200 (grid minimum above Lipschitz margin plus rounding bound); "
      << "largest minimal certified n = " << worst_min << " (d <= 70 " << (worst_min <= 70 ? "confirmed" : "not confirmed")
      << ")";
    lines.push_back({7, nonsalem == want && holds == 8, o.str()});
  }

  // 8. Property suites
  {
    std::vector<CheckResult> checks;
    checks.push_back(check_recurrence(500, 20240601));
    CheckResult sep("separation identity for every vine, n = s+1 .. s+20");
    for (const auto& [row, v] : by_row) {
      if (!v->profile) continue;
      CheckResult one = check_separation(parse_bigraph(v->entry.graph), *v->profile, 20);
      sep.cases += one.cases;
      if (!one.passed && sep.passed) {
        sep.passed = false;
        sep.detail = "row " + std::to_string(row) + " " + one.detail;
      }
    }
    checks.push_back(sep);
    checks.push_back(check_char_poly_oracle(8, 1));
    checks.push_back(check_char_poly_oracle(6, 2));
    checks.push_back(check_cyclotomic_product(200));
    checks.push_back(check_dnumbers());
    std::vector<Bigraph> graphs;
    for (const auto& g : golden::table_a()) {
      Bigraph b = parse_bigraph(g.graph);
      graphs.push_back(b);
      for (const auto& r : by_row.at(g.row)->reports)
        if (r.cyclotomic.passed) graphs.push_back(parse_bigraph(r.graph));
    }
    checks.push_back(check_perron_residuals(graphs));
    bool all = true;
    std::ostringstream o;
    for (const auto& c : checks) {
      all = all && c.passed;
      o << c.name << " " << (c.passed ? "ok" : "FAILED") << " (" << c.cases << ")";
      if (!c.passed) o << " [" << c.detail << "]";
      o << "; ";
    }
    lines.push_back({8, all, o.str()});
  }

  int status = 0;
  for (const auto& l : lines) {
    std::cout << "criterion " << l.id << " " << (l.passed ? "PASS" : "FAIL") << ": " << l.text << "\n";
    if (!l.passed && std::find(known.begin(), known.end(), l.id) == known.end()) status = 1;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "total time " << total << " s\n";
  return status;
}
