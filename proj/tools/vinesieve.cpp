#include "vines/perron.hpp"
#include "vines/survey.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

namespace fs = std::filesystem;
using namespace vines;

namespace {

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

void print_summary(const SurveyResult& r, std::ostream& o) {
  std::size_t errors = 0;
  for (const auto& v : r.vines)
    if (!v.error.empty()) {
      ++errors;
      o << "vine " << v.entry.label << ": " << v.error << "\n";
    }
  o << "vines: " << r.vines.size() << "  cyclotomic survivors: " << r.cyclotomic_survivors()
    << "  final survivors: " << r.final_survivors().size() << "  time: " << r.seconds << " s\n";
  for (const auto& s : r.survivors())
    o << "  " << s.label << " j=" << s.j << " " << to_string(s.category) << " norm^2=" << s.norm_sq.substr(0, 24)
      << "\n";
}

int report_mismatches(const SurveyResult& r, std::ostream& o) {
  const auto mm = cross_check(r);
  for (const auto& m : mm) o << "mismatch: " << m.where << ": expected " << m.expected << ", got " << m.got << "\n";
  return mm.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Effective elimination bounds and obstruction tests for vines"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Profile one vine");
  std::string graph;
  bool as_json = false, as_csv = false, as_md = false;
  unsigned digits = 64;
  analyze->add_option("graph", graph, "Encoding string, e.g. gbg1v1v1p1p1")->required();
  auto* fj = analyze->add_flag("--json", as_json, "JSON output");
  auto* fc = analyze->add_flag("--csv", as_csv, "CSV output");
  auto* fm = analyze->add_flag("--md", as_md, "Markdown output");
  fj->excludes(fc)->excludes(fm);
  fc->excludes(fm);
  analyze->add_option("--precision", digits, "Digits for the norm squared of the vine")->check(CLI::Range(64u, 100000u));

  auto* survey = app.add_subcommand("survey", "Profile and screen a list of vines");
  std::string vines_file;
  std::string out_dir = "survey_out";
  std::string format = "json";
  SurveyConfig config;
  config.jobs = default_jobs();
  config.cache_dir = default_cache_dir();
  bool no_check = false;
  survey->add_option("--vines", vines_file, "Vine list (label<TAB>graph per line); default: the 38 canonical vines");
  survey->add_option("--prime-bound", config.prime_bound, "Prime bound M of the cyclotomic test")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1000000}));
  survey->add_option("--precision", config.precision, "Digits of reported norms")->check(CLI::Range(64u, 100000u));
  survey->add_option("--out", out_dir, "Output directory");
  survey->add_option("--format", format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md", "markdown"}));
  survey->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  survey->add_option("--cache", config.cache_dir, "Cache directory (default $VINESIEVE_CACHE)");
  survey->add_flag("--no-check", no_check, "Skip the comparison with the built-in tables");

  auto* tables = app.add_subcommand("tables", "Regenerate the vine, d-number and derivative-bound tables");
  std::string tables_out = "tables";
  std::string tables_format = "md";
  SurveyConfig tconfig;
  tconfig.jobs = default_jobs();
  tconfig.cache_dir = default_cache_dir();
  tables->add_option("--out", tables_out, "Output directory");
  tables->add_option("--format", tables_format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md", "markdown"}));
  tables->add_option("--jobs", tconfig.jobs, "Worker threads")->check(CLI::PositiveNumber);
  tables->add_option("--cache", tconfig.cache_dir, "Cache directory (default $VINESIEVE_CACHE)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      Bigraph g = parse_bigraph(graph);
      g.label = graph;
      VineProfile p = analyze_vine(g);
      const std::string norm = norm_squared(g, digits + 10).to_string(digits);
      if (as_json) {
        Json j = to_json(p);
        j["norm_sq"] = norm;
        std::cout << j.dump(2) << "\n";
      } else if (as_csv) {
        std::cout << render_profile(p, OutputFormat::Csv);
      } else {
        std::cout << render_profile(p, OutputFormat::Markdown) << "- **norm squared**: " << norm << "\n";
      }
      return 0;
    }
    if (*survey) {
      const auto list = vines_file.empty() ? canonical_vines() : read_vine_list(vines_file);
      config.format = parse_format(format);
      SurveyResult r = run_survey(list, config);
      fs::create_directories(out_dir);
      switch (config.format) {
        case OutputFormat::Json:
          write_file(fs::path(out_dir) / "survey.json", render_survey(r, OutputFormat::Json));
          break;
        case OutputFormat::Csv:
          write_file(fs::path(out_dir) / "vines.csv", render_survey(r, OutputFormat::Csv));
          write_file(fs::path(out_dir) / "translates.csv", render_translates_csv(r));
          write_file(fs::path(out_dir) / "survivors.csv", render_survivors(r, OutputFormat::Csv));
          break;
        case OutputFormat::Markdown:
          write_file(fs::path(out_dir) / "survey.md", render_survey(r, OutputFormat::Markdown));
          break;
      }
      print_summary(r, std::cout);
      return no_check ? 0 : report_mismatches(r, std::cerr);
    }
    if (*tables) {
      const OutputFormat f = parse_format(tables_format);
      SurveyResult r = run_survey(canonical_vines(), tconfig);
      const std::string ext = f == OutputFormat::Json ? ".json" : f == OutputFormat::Csv ? ".csv" : ".md";
      fs::create_directories(tables_out);
      write_file(fs::path(tables_out) / ("table_a" + ext), render_table_a(r, f));
      write_file(fs::path(tables_out) / ("table_b" + ext), render_table_b(r, f));
      write_file(fs::path(tables_out) / ("non_integral" + ext), render_non_integral(r, f));
      write_file(fs::path(tables_out) / ("table_c" + ext), render_table_c(r, f));
      write_file(fs::path(tables_out) / ("survivors" + ext), render_survivors(r, f));
      print_summary(r, std::cout);
      return report_mismatches(r, std::cerr);
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const UnsupportedVine& e) {
    std::cerr << "unsupported vine: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
