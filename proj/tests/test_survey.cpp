#include "doctest.h"

#include "vines/golden.hpp"
#include "vines/survey.hpp"

#include <filesystem>
#include <fstream>

using namespace vines;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("vines_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::vector<VineEntry> small_list() {
  std::vector<VineEntry> v;
  for (int row : {1, 7, 21}) v.push_back({std::to_string(row), golden::table_a_row(row)->graph});
  return v;
}

}  // namespace

TEST_CASE("reading vine lists") {
  const fs::path dir = scratch_dir("list");
  const fs::path f = dir / "vines.tsv";
  std::ofstream(f) << "row\tgraph\n# comment\n\n7\tgbg1v1v1v1p1v1x0p1x0\ngbg1v1v1p1p1\n";
  const auto v = read_vine_list(f.string());
  REQUIRE(v.size() == 2);
  CHECK(v[0].label == "7");
  CHECK(v[0].graph == "gbg1v1v1v1p1v1x0p1x0");
  CHECK(v[1].graph == "gbg1v1v1p1p1");
  CHECK(canonical_vines().size() == 38);
  CHECK_THROWS(read_vine_list((dir / "missing").string()));
  fs::remove_all(dir);
}

TEST_CASE("polynomial JSON round trip") {
  const IntPoly big(std::vector<Integer>{Integer("123456789012345678901234567890"), -1, 0, 5});
  CHECK(int_poly_from_json(to_json(big)) == big);
  CHECK(int_poly_from_json(to_json(IntPoly{5, -5, 1})) == IntPoly{5, -5, 1});
}

TEST_CASE("survey results round trip and cache") {
  const fs::path dir = scratch_dir("cache");
  SurveyConfig config;
  config.cache_dir = dir.string();
  const SurveyResult fresh = run_survey(small_list(), config);
  for (const auto& v : fresh.vines) CHECK_FALSE(v.from_cache);
  const SurveyResult cached = run_survey(small_list(), config);
  for (const auto& v : cached.vines) CHECK(v.from_cache);
  CHECK(to_json(fresh, false).dump() == to_json(cached, false).dump());
  for (const auto& v : fresh.vines) {
    const VineResult back = vine_result_from_json(to_json(v));
    CHECK(to_json(back, false).dump() == to_json(v, false).dump());
  }
  CHECK(cross_check(fresh).empty());
  fs::remove_all(dir);
}

TEST_CASE("survey is deterministic across worker counts") {
  SurveyConfig one, two;
  two.jobs = 2;
  CHECK(to_json(run_survey(small_list(), one), false).dump() == to_json(run_survey(small_list(), two), false).dump());
}

TEST_CASE("bad entries are reported, not thrown") {
  SurveyConfig config;
  const SurveyResult r = run_survey({{"a", "gbg1v1x2"}, {"b", "gbg1v1"}}, config);
  REQUIRE(r.vines.size() == 2);
  CHECK_FALSE(r.vines[0].error.empty());
  CHECK_FALSE(r.vines[1].error.empty());
  CHECK_FALSE(r.vines[0].profile.has_value());
}

TEST_CASE("cross check flags a wrong label") {
  SurveyConfig config;
  const SurveyResult r = run_survey({{"7", golden::table_a_row(7)->graph}}, config);
  CHECK(cross_check(r).empty());
  CHECK(r.cyclotomic_survivors() == 2);
  const auto s = r.survivors();
  REQUIRE(s.size() == 2);
  for (const auto& x : s) CHECK(x.category == SurvivorClass::IndexWindow);
}

TEST_CASE("renderers") {
  SurveyConfig config;
  const SurveyResult r = run_survey({{"21", golden::table_a_row(21)->graph}}, config);
  const std::string md = render_table_a(r, OutputFormat::Markdown);
  CHECK(md.find("gbg1v1v1v1p1v1x0p1x0v1x0v1") != std::string::npos);
  const std::string csv = render_translates_csv(r);
  CHECK(csv.find('\n') != std::string::npos);
  CHECK(Json::parse(render_survey(r, OutputFormat::Json)).contains("vines"));
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_THROWS(parse_format("xml"));
}
