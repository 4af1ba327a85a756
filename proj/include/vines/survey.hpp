#pragma once

#include "vines/obstructions.hpp"
#include "vines/vine_profile.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vines {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCacheVersion = "vinesieve-cache-4";

struct VineEntry {
  std::string label;
  std::string graph;
};

/// One vine per line: either "label<TAB>graph..." or a bare encoding string.
/// Blank lines, '#' comments and a header line starting with "row" are skipped.
std::vector<VineEntry> read_vine_list(const std::string& path);
std::vector<VineEntry> canonical_vines();

enum class OutputFormat { Json, Csv, Markdown };

OutputFormat parse_format(const std::string& s);

struct SurveyConfig {
  std::uint64_t prime_bound = 200;
  unsigned precision = 64;
  OutputFormat format = OutputFormat::Json;
  /// Empty disables the cache.
  std::string cache_dir;
  unsigned jobs = 1;
};

/// VINESIEVE_CACHE when set, otherwise empty.
std::string default_cache_dir();

struct VineResult {
  VineEntry entry;
  std::optional<VineProfile> profile;
  std::vector<ObstructionReport> reports;
  /// For vines of the built-in table: eliminated j that fail at neither of
  /// the table's primes.
  std::vector<long> not_failing_at_listed;
  /// Set when the vine could not be profiled.
  std::string error;
  double seconds = 0;
  bool from_cache = false;
};

enum class SurvivorClass { IndexWindow, IndexFive, External, Other };

const char* to_string(SurvivorClass c);

struct Survivor {
  std::string label;
  std::string vine;
  long j = 0;
  std::string graph;
  std::string norm_sq;
  SurvivorClass category = SurvivorClass::Other;
  std::string note;
};

struct Mismatch {
  std::string where;
  std::string expected;
  std::string got;
};

struct SurveyResult {
  std::vector<VineResult> vines;
  double seconds = 0;

  std::size_t cyclotomic_survivors() const;
  /// Translates with verdict Survivor, classified by norm squared.
  std::vector<Survivor> survivors() const;
  /// Survivors not excluded externally.
  std::vector<Survivor> final_survivors() const;
};

/// Profiles one vine and screens j = 0 .. N - |vine|.
VineResult survey_vine(const VineEntry& entry, const SurveyConfig& config);

/// Runs survey_vine over the list with `jobs` workers; results are in input order.
SurveyResult run_survey(const std::vector<VineEntry>& vines, const SurveyConfig& config);

/// Compares every vine whose label and graph match a golden row; for the full
/// canonical list also the survivor counts, Table B and the final list.
std::vector<Mismatch> cross_check(const SurveyResult& r);

Json to_json(const IntPoly& p);
IntPoly int_poly_from_json(const Json& j);
Json to_json(const VineProfile& p);
VineProfile profile_from_json(const Json& j);
Json to_json(const ObstructionReport& r);
ObstructionReport report_from_json(const Json& j);
Json to_json(const VineResult& r, bool with_timing = true);
VineResult vine_result_from_json(const Json& j);
Json to_json(const SurveyResult& r, bool with_timing = true);

std::string render_profile(const VineProfile& p, OutputFormat f);
std::string render_survey(const SurveyResult& r, OutputFormat f);
std::string render_translates_csv(const SurveyResult& r);
std::string render_table_a(const SurveyResult& r, OutputFormat f);
std::string render_table_b(const SurveyResult& r, OutputFormat f);
std::string render_table_c(const SurveyResult& r, OutputFormat f);
std::string render_non_integral(const SurveyResult& r, OutputFormat f);
std::string render_survivors(const SurveyResult& r, OutputFormat f);

/// FNV-1a 64-bit.
std::uint64_t fnv1a(const std::string& s);

}  // namespace vines
