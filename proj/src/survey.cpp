#include "vines/survey.hpp"

#include "vines/golden.hpp"
#include "vines/perron.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace vines {

namespace fs = std::filesystem;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep) {
  std::ostringstream o;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) o << sep;
    o << v[i];
  }
  return o.str();
}

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long>());
}

Json laurent_json(const LaurentPoly& a) { return Json{{"low", a.low()}, {"coeffs", to_json(a.body())}}; }

LaurentPoly laurent_from_json(const Json& j) { return LaurentPoly(j.at("low").get<long>(), int_poly_from_json(j.at("coeffs"))); }

// "j1,j2" for exception lists; "None" when empty.
std::string exceptions_string(const std::vector<long>& e) { return e.empty() ? "None" : join(e, ","); }

}  // namespace

std::vector<VineEntry> read_vine_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open vine list " + path);
  std::vector<VineEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("row", 0) == 0) continue;
    auto cols = split(line, '\t');
    if (cols.size() == 1) cols = split(line, ' ');
    VineEntry e;
    if (cols.size() == 1) {
      e.graph = trim(cols[0]);
      e.label = std::to_string(out.size() + 1);
    } else {
      e.label = trim(cols[0]);
      e.graph = trim(cols[1]);
    }
    if (e.graph.empty()) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": missing graph");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<VineEntry> canonical_vines() {
  std::vector<VineEntry> out;
  for (const auto& r : golden::table_a()) out.push_back({std::to_string(r.row), r.graph});
  return out;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "md" || s == "markdown") return OutputFormat::Markdown;
  throw std::invalid_argument("unknown format '" + s + "' (json, csv, md)");
}

std::string default_cache_dir() {
  const char* v = std::getenv("VINESIEVE_CACHE");
  return v ? std::string(v) : std::string();
}

const char* to_string(SurvivorClass c) {
  switch (c) {
    case SurvivorClass::IndexWindow:
      return "index-in-(4,5)";
    case SurvivorClass::IndexFive:
      return "index-5";
    case SurvivorClass::External:
      return "external";
    case SurvivorClass::Other:
      return "other";
  }
  return "?";
}

// ---- JSON ----

Json to_json(const IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(integer_json(c));
  return a;
}

IntPoly int_poly_from_json(const Json& j) {
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return IntPoly(std::move(c));
}

Json to_json(const VineProfile& p) {
  Json j;
  j["label"] = p.label;
  j["graph"] = p.graph;
  j["size"] = p.size;
  j["A"] = laurent_json(p.A);
  j["A_text"] = p.A.to_string();
  j["s"] = p.s;
  j["K"] = integer_json(p.K);
  j["B"] = to_json(p.split.B);
  j["C"] = to_json(p.split.C);
  j["shift"] = p.split.shift;
  j["epsilon"] = p.split.epsilon;
  j["L"] = p.L;
  Json S = Json::array();
  for (const auto& o : p.S)
    S.push_back({{"order", o.order}, {"period", o.period}, {"residue", o.residue}, {"multiplicity", o.multiplicity}});
  j["S"] = S;
  j["ell"] = p.ell;
  j["r"] = {{"r1", p.r.r1}, {"r2", p.r.r2}, {"r3", p.r.r3}, {"r4", p.r.r4}};
  j["R"] = p.Rbound;
  j["N"] = integer_json(p.N);
  j["salem"] = p.salem;
  j["r3_guard"] = {{"passed", p.guard.passed}, {"limit_norm_squared", p.guard.limit_norm_squared}};
  if (p.dCertificate) {
    const auto& c = *p.dCertificate;
    Json d;
    d["n"] = p.dBound ? Json(*p.dBound) : Json();
    d["status"] = to_string(c.status);
    d["grid_points"] = c.grid_points;
    d["sample_minimum"] = c.sample_minimum;
    d["theta_at_minimum"] = c.theta_at_minimum;
    d["lipschitz"] = c.lipschitz;
    d["margin"] = c.margin;
    d["minimal_n"] = p.dMinimal ? Json(*p.dMinimal) : Json();
    j["derivative_bound"] = d;
  } else {
    j["derivative_bound"] = nullptr;
  }
  return j;
}

VineProfile profile_from_json(const Json& j) {
  VineProfile p;
  p.label = j.at("label").get<std::string>();
  p.graph = j.at("graph").get<std::string>();
  p.size = j.at("size").get<long>();
  p.A = laurent_from_json(j.at("A"));
  p.s = j.at("s").get<long>();
  p.K = integer_from_json(j.at("K"));
  p.split.B = int_poly_from_json(j.at("B"));
  p.split.C = int_poly_from_json(j.at("C"));
  p.split.shift = j.at("shift").get<long>();
  p.split.epsilon = j.at("epsilon").get<int>();
  p.L = j.at("L").get<std::uint64_t>();
  for (const auto& o : j.at("S")) {
    RootOrder r;
    r.order = o.at("order").get<std::uint64_t>();
    r.period = o.at("period").get<std::uint64_t>();
    r.residue = o.at("residue").get<std::uint64_t>();
    r.multiplicity = o.at("multiplicity").get<unsigned>();
    p.S.push_back(r);
  }
  p.ell = j.at("ell").get<std::uint64_t>();
  const auto& r = j.at("r");
  p.r.r1 = r.at("r1").get<std::uint64_t>();
  p.r.r2 = r.at("r2").get<std::uint64_t>();
  p.r.r3 = r.at("r3").get<std::uint64_t>();
  p.r.r4 = r.at("r4").get<std::uint64_t>();
  p.Rbound = j.at("R").get<std::uint64_t>();
  p.N = integer_from_json(j.at("N"));
  p.salem = j.at("salem").get<bool>();
  p.guard.passed = j.at("r3_guard").at("passed").get<bool>();
  p.guard.limit_norm_squared = j.at("r3_guard").at("limit_norm_squared").get<double>();
  const auto& d = j.at("derivative_bound");
  if (!d.is_null()) {
    BoundCertificate c;
    const std::string st = d.at("status").get<std::string>();
    c.status = st == to_string(BoundStatus::Holds)   ? BoundStatus::Holds
               : st == to_string(BoundStatus::Fails) ? BoundStatus::Fails
                                                     : BoundStatus::Inconclusive;
    c.grid_points = d.at("grid_points").get<std::size_t>();
    c.sample_minimum = d.at("sample_minimum").get<double>();
    c.theta_at_minimum = d.at("theta_at_minimum").get<double>();
    c.lipschitz = d.at("lipschitz").get<double>();
    c.margin = d.at("margin").get<double>();
    p.dCertificate = c;
    if (!d.at("n").is_null()) p.dBound = d.at("n").get<long>();
    if (!d.at("minimal_n").is_null()) p.dMinimal = d.at("minimal_n").get<long>();
  }
  return p;
}

Json to_json(const ObstructionReport& r) {
  Json j;
  j["j"] = r.j;
  j["n"] = r.n;
  j["graph"] = r.graph;
  j["norm_sq_minpoly"] = to_json(r.norm_sq_minpoly);
  j["cyclotomic"] = {{"passed", r.cyclotomic.passed},
                     {"failing_prime", r.cyclotomic.failing_prime},
                     {"bound", r.cyclotomic.bound},
                     {"primes_tested", r.cyclotomic.primes_tested}};
  j["norm_sq"] = r.norm_sq;
  j["global_even_minpoly"] = r.global_even_minpoly ? to_json(*r.global_even_minpoly) : Json();
  if (r.dnumber) {
    j["dnumber"] = {{"passed", r.dnumber->passed},
                    {"algebraic_integer", r.dnumber->algebraic_integer},
                    {"failing_index", r.dnumber->failing_index}};
  } else {
    j["dnumber"] = nullptr;
  }
  if (r.algebraic_integer) {
    j["algebraic_integer"] = {{"passed", r.algebraic_integer->passed},
                              {"vertex", r.algebraic_integer->vertex},
                              {"minpoly", to_json(r.algebraic_integer->minpoly)}};
  } else {
    j["algebraic_integer"] = nullptr;
  }
  j["verdict"] = to_string(r.verdict);
  j["reason"] = r.reason;
  return j;
}

ObstructionReport report_from_json(const Json& j) {
  ObstructionReport r;
  r.j = j.at("j").get<long>();
  r.n = j.at("n").get<long>();
  r.graph = j.at("graph").get<std::string>();
  r.norm_sq_minpoly = int_poly_from_json(j.at("norm_sq_minpoly"));
  const auto& c = j.at("cyclotomic");
  r.cyclotomic.passed = c.at("passed").get<bool>();
  r.cyclotomic.failing_prime = c.at("failing_prime").get<std::uint64_t>();
  r.cyclotomic.bound = c.at("bound").get<std::uint64_t>();
  r.cyclotomic.primes_tested = c.at("primes_tested").get<std::vector<std::uint64_t>>();
  r.norm_sq = j.at("norm_sq").get<std::string>();
  if (!j.at("global_even_minpoly").is_null()) r.global_even_minpoly = int_poly_from_json(j.at("global_even_minpoly"));
  if (!j.at("dnumber").is_null()) {
    DNumberVerdict d;
    d.passed = j["dnumber"].at("passed").get<bool>();
    d.algebraic_integer = j["dnumber"].at("algebraic_integer").get<bool>();
    d.failing_index = j["dnumber"].at("failing_index").get<std::size_t>();
    r.dnumber = d;
  }
  if (!j.at("algebraic_integer").is_null()) {
    AlgebraicIntegerVerdict a;
    a.passed = j["algebraic_integer"].at("passed").get<bool>();
    a.vertex = j["algebraic_integer"].at("vertex").get<std::size_t>();
    a.minpoly = int_poly_from_json(j["algebraic_integer"].at("minpoly"));
    r.algebraic_integer = a;
  }
  const std::string v = j.at("verdict").get<std::string>();
  for (Verdict x : {Verdict::Survivor, Verdict::EliminatedCyclotomic, Verdict::EliminatedDNumber,
                    Verdict::EliminatedAlgebraicInteger})
    if (v == to_string(x)) r.verdict = x;
  r.reason = j.at("reason").get<std::string>();
  return r;
}

Json to_json(const VineResult& r, bool with_timing) {
  Json j;
  j["label"] = r.entry.label;
  j["graph"] = r.entry.graph;
  if (!r.error.empty()) j["error"] = r.error;
  j["profile"] = r.profile ? to_json(*r.profile) : Json();
  Json reps = Json::array();
  for (const auto& x : r.reports) reps.push_back(to_json(x));
  j["reports"] = reps;
  j["not_failing_at_listed"] = r.not_failing_at_listed;
  if (with_timing) {
    j["seconds"] = r.seconds;
    j["from_cache"] = r.from_cache;
  }
  return j;
}

VineResult vine_result_from_json(const Json& j) {
  VineResult r;
  r.entry.label = j.at("label").get<std::string>();
  r.entry.graph = j.at("graph").get<std::string>();
  if (j.contains("error")) r.error = j["error"].get<std::string>();
  if (!j.at("profile").is_null()) r.profile = profile_from_json(j["profile"]);
  for (const auto& x : j.at("reports")) r.reports.push_back(report_from_json(x));
  r.not_failing_at_listed = j.at("not_failing_at_listed").get<std::vector<long>>();
  if (j.contains("seconds")) r.seconds = j["seconds"].get<double>();
  return r;
}

Json to_json(const SurveyResult& r, bool with_timing) {
  Json j;
  Json vines = Json::array();
  for (const auto& v : r.vines) vines.push_back(to_json(v, with_timing));
  j["vines"] = vines;
  j["cyclotomic_survivors"] = r.cyclotomic_survivors();
  Json surv = Json::array();
  for (const auto& s : r.survivors())
    surv.push_back({{"label", s.label},
                    {"j", s.j},
                    {"graph", s.graph},
                    {"norm_sq", s.norm_sq},
                    {"class", to_string(s.category)},
                    {"note", s.note}});
  j["survivors"] = surv;
  j["final_survivor_count"] = r.final_survivors().size();
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

// ---- survey ----

namespace {

std::string cache_path(const std::string& dir, const VineEntry& e, const SurveyConfig& c) {
  const std::string key = std::string(kCacheVersion) + "|" + e.graph + "|" + std::to_string(c.prime_bound) + "|" +
                          std::to_string(c.precision);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
  return (fs::path(dir) / (std::string(buf) + ".json")).string();
}

std::optional<VineResult> load_cached(const std::string& path, const VineEntry& e) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.value("version", "") != kCacheVersion || j.at("result").at("graph") != e.graph) return std::nullopt;
    VineResult r = vine_result_from_json(j["result"]);
    r.entry.label = e.label;
    if (r.profile) r.profile->label = e.label;
    r.from_cache = true;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_cached(const std::string& path, const VineResult& r) {
  std::error_code ec;
  fs::create_directories(fs::path(path).parent_path(), ec);
  const std::string tmp = path + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    Json j;
    j["version"] = kCacheVersion;
    j["result"] = to_json(r, false);
    out << j.dump();
  }
  fs::rename(tmp, path, ec);
  if (ec) fs::remove(tmp, ec);
}

bool is_exactly(const ObstructionReport& r, long value) {
  const IntPoly& m = r.norm_sq_minpoly;
  return m.degree() == 1 && m[0] == -value * m[1];
}

// Compares a decimal string against an integer; the value is irrational
// unless the minimal polynomial is linear, so ties do not occur.
int compare_decimal(const std::string& s, long v) {
  BigFloat x(s, 256);
  BigFloat y(v, 256);
  if (x < y) return -1;
  if (y < x) return 1;
  return 0;
}

const golden::TableARow* golden_row_for(const VineEntry& e) {
  int row = 0;
  try {
    std::size_t used = 0;
    row = std::stoi(e.label, &used);
    if (used != e.label.size()) return nullptr;
  } catch (const std::exception&) {
    return nullptr;
  }
  const auto* g = golden::table_a_row(row);
  return g && g->graph == e.graph ? g : nullptr;
}

}  // namespace

VineResult survey_vine(const VineEntry& entry, const SurveyConfig& config) {
  std::string path;
  if (!config.cache_dir.empty()) {
    path = cache_path(config.cache_dir, entry, config);
    if (auto hit = load_cached(path, entry)) return *hit;
  }
  const auto t0 = std::chrono::steady_clock::now();
  VineResult out;
  out.entry = entry;
  try {
    Bigraph g = parse_bigraph(entry.graph);
    g.label = entry.label;
    VineProfile p = analyze_vine(g);
    const long base = static_cast<long>(g.vertex_count());
    if (!p.N.fits_slong_p()) throw std::overflow_error("N does not fit in a long");
    const long N = p.N.get_si();
    TranslateScreener screener(g, N, config.prime_bound);
    for (long j = 0; j + base <= N; ++j) {
      ObstructionReport rep = screener.screen(j);
      if (rep.cyclotomic.passed)
        rep.norm_sq = norm_squared(translate(g, static_cast<std::size_t>(j)), config.precision + 10)
                          .to_string(config.precision);
      out.reports.push_back(std::move(rep));
    }
    if (const auto* row = golden_row_for(entry))
      for (const auto& rep : out.reports)
        if (!rep.cyclotomic.passed && !fails_at_any(rep.norm_sq_minpoly, row->primes))
          out.not_failing_at_listed.push_back(rep.j);
    out.profile = std::move(p);
  } catch (const ParseError& e) {
    out.error = std::string("parse error: ") + e.what();
  } catch (const UnsupportedVine& e) {
    out.error = std::string("unsupported vine: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!path.empty()) store_cached(path, out);
  return out;
}

SurveyResult run_survey(const std::vector<VineEntry>& vines, const SurveyConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  SurveyResult result;
  result.vines.resize(vines.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr failure;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= vines.size()) return;
      try {
        result.vines[i] = survey_vine(vines[i], config);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(vines.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

std::size_t SurveyResult::cyclotomic_survivors() const {
  std::size_t n = 0;
  for (const auto& v : vines)
    for (const auto& r : v.reports)
      if (r.cyclotomic.passed) ++n;
  return n;
}

std::vector<Survivor> SurveyResult::survivors() const {
  std::vector<Survivor> out;
  for (const auto& v : vines) {
    const auto* g = golden_row_for(v.entry);
    for (const auto& r : v.reports) {
      if (r.verdict != Verdict::Survivor) continue;
      Survivor s;
      s.label = v.entry.label;
      s.vine = v.entry.graph;
      s.j = r.j;
      s.graph = r.graph;
      s.norm_sq = r.norm_sq;
      if (is_exactly(r, 5)) {
        s.category = SurvivorClass::IndexFive;
      } else if (!is_exactly(r, 4) && compare_decimal(r.norm_sq, 4) > 0 && compare_decimal(r.norm_sq, 5) < 0) {
        s.category = SurvivorClass::IndexWindow;
      }
      if (g) {
        for (const auto& e : golden::external_eliminations())
          if (e.row == g->row && e.j == r.j) {
            s.category = SurvivorClass::External;
            s.note = e.reason;
          }
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Survivor> SurveyResult::final_survivors() const {
  std::vector<Survivor> out;
  for (auto& s : survivors())
    if (s.category != SurvivorClass::External) out.push_back(std::move(s));
  return out;
}

std::vector<Mismatch> cross_check(const SurveyResult& r) {
  std::vector<Mismatch> out;
  std::set<int> seen;
  for (const auto& v : r.vines) {
    const auto* g = golden_row_for(v.entry);
    if (!g) continue;
    const std::string where = "row " + std::to_string(g->row);
    if (!v.profile) {
      out.push_back({where, "profile", v.error});
      continue;
    }
    seen.insert(g->row);
    const auto& p = *v.profile;
    auto cell = [&](const char* name, const std::string& want, const std::string& got) {
      if (want != got) out.push_back({where + " " + name, want, got});
    };
    cell("s", std::to_string(g->s), std::to_string(p.s));
    cell("K", std::to_string(g->K), p.K.get_str());
    cell("R", std::to_string(g->R), std::to_string(p.Rbound));
    cell("N", std::to_string(g->N), p.N.get_str());
    std::vector<long> exc;
    for (const auto& rep : v.reports)
      if (rep.cyclotomic.passed) exc.push_back(rep.j);
    const auto& not_at_listed = v.not_failing_at_listed;
    cell("exceptions", exceptions_string(golden::corrected_exceptions(*g)), exceptions_string(exc));
    if (!not_at_listed.empty())
      out.push_back({where + " primes", "every other j fails at " + join(g->primes, " or "),
                     "j = " + join(not_at_listed, ",")});
  }
  if (seen.size() != golden::table_a().size()) return out;

  auto count = [&](const char* what, std::size_t want, std::size_t got) {
    if (want != got) out.push_back({what, std::to_string(want), std::to_string(got)});
  };
  count("cyclotomic survivors", golden::kCyclotomicSurvivors, r.cyclotomic_survivors());

  std::map<std::pair<int, long>, const ObstructionReport*> by_translate;
  for (const auto& v : r.vines)
    if (const auto* g = golden_row_for(v.entry))
      for (const auto& rep : v.reports) by_translate[{g->row, rep.j}] = &rep;
  auto poly_of = [](const std::vector<long>& desc) {
    std::vector<Integer> c;
    for (auto it = desc.rbegin(); it != desc.rend(); ++it) c.emplace_back(*it);
    return IntPoly(std::move(c));
  };
  std::size_t dnum = 0;
  for (const auto& [key, rep] : by_translate)
    if (rep->verdict == Verdict::EliminatedDNumber) ++dnum;
  count("d-number eliminations", golden::table_b().size(), dnum);
  for (const auto& b : golden::table_b()) {
    const std::string where = "Table B row " + std::to_string(b.row) + " j=" + std::to_string(b.j);
    auto it = by_translate.find({b.row, b.j});
    if (it == by_translate.end() || it->second->verdict != Verdict::EliminatedDNumber) {
      out.push_back({where, "eliminated by the d-number test",
                     it == by_translate.end() ? "missing" : to_string(it->second->verdict)});
      continue;
    }
    const IntPoly want = poly_of(b.coeffs);
    const IntPoly& got = *it->second->global_even_minpoly;
    if (!(got == want)) out.push_back({where, want.to_string(), got.to_string()});
  }
  for (const auto& a : golden::non_integral_dimensions()) {
    const std::string where = "non-integral row " + std::to_string(a.row) + " j=" + std::to_string(a.j);
    auto it = by_translate.find({a.row, a.j});
    if (it == by_translate.end() || it->second->verdict != Verdict::EliminatedAlgebraicInteger) {
      out.push_back({where, "eliminated by the algebraic-integer test",
                     it == by_translate.end() ? "missing" : to_string(it->second->verdict)});
      continue;
    }
    const IntPoly want = poly_of(a.coeffs);
    const IntPoly& got = it->second->algebraic_integer->minpoly;
    if (!(got == want)) out.push_back({where, want.to_string(), got.to_string()});
  }
  const auto fin = r.final_survivors();
  count("final survivors", golden::kFinalSurvivors, fin.size());
  auto set_of = [&](SurvivorClass c) {
    std::set<std::pair<int, long>> s;
    for (const auto& x : fin)
      if (x.category == c) s.insert({std::stoi(x.label), x.j});
    return s;
  };
  auto want_set = [](const std::vector<golden::Translate>& t) {
    std::set<std::pair<int, long>> s;
    for (const auto& x : t) s.insert({x.row, x.j});
    return s;
  };
  auto fmt = [](const std::set<std::pair<int, long>>& s) {
    std::vector<std::string> parts;
    for (const auto& [row, j] : s) parts.push_back(std::to_string(row) + "/" + std::to_string(j));
    return join(parts, " ");
  };
  const auto win = set_of(SurvivorClass::IndexWindow);
  const auto five = set_of(SurvivorClass::IndexFive);
  if (win != want_set(golden::index_window_survivors()))
    out.push_back({"survivors in (4,5)", fmt(want_set(golden::index_window_survivors())), fmt(win)});
  if (five != want_set(golden::index_five_survivors()))
    out.push_back({"survivors at index 5", fmt(want_set(golden::index_five_survivors())), fmt(five)});
  return out;
}

// ---- rendering ----

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_field(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string render(const Table& t, OutputFormat f) {
  std::ostringstream o;
  switch (f) {
    case OutputFormat::Csv:
      for (std::size_t i = 0; i < t.header.size(); ++i) o << (i ? "," : "") << csv_field(t.header[i]);
      o << "\n";
      for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) o << (i ? "," : "") << csv_field(r[i]);
        o << "\n";
      }
      break;
    case OutputFormat::Markdown:
      o << "|";
      for (const auto& h : t.header) o << " " << md_field(h) << " |";
      o << "\n|";
      for (std::size_t i = 0; i < t.header.size(); ++i) o << "---|";
      o << "\n";
      for (const auto& r : t.rows) {
        o << "|";
        for (const auto& c : r) o << " " << md_field(c) << " |";
        o << "\n";
      }
      break;
    case OutputFormat::Json: {
      Json a = Json::array();
      for (const auto& r : t.rows) {
        Json obj;
        for (std::size_t i = 0; i < r.size(); ++i) obj[t.header[i]] = r[i];
        a.push_back(obj);
      }
      o << a.dump(2) << "\n";
      break;
    }
  }
  return o.str();
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string render_profile(const VineProfile& p, OutputFormat f) {
  if (f == OutputFormat::Json) return to_json(p).dump(2) + "\n";
  std::vector<std::string> orders;
  for (const auto& o : p.S)
    orders.push_back(std::to_string(o.order) + "@" + std::to_string(o.residue) + "mod" + std::to_string(o.period) +
                     (o.multiplicity > 1 ? "^" + std::to_string(o.multiplicity) : ""));
  Table t;
  t.header = {"label", "graph", "size", "A", "s", "K", "B", "C", "L", "S", "ell",
              "r1", "r2", "r3", "r4", "R", "N", "salem", "d"};
  std::string d = "-";
  if (p.dCertificate) {
    d = std::string(to_string(p.dCertificate->status)) + (p.dBound ? " at n=" + std::to_string(*p.dBound) : "");
    if (p.dMinimal) d += ", minimal n=" + std::to_string(*p.dMinimal);
  }
  t.rows.push_back({p.label, p.graph, std::to_string(p.size), p.A.to_string("t"), std::to_string(p.s), p.K.get_str(),
                    p.split.B.to_string("t"), p.split.C.to_string("t"), std::to_string(p.L), join(orders, " "),
                    std::to_string(p.ell), std::to_string(p.r.r1), std::to_string(p.r.r2), std::to_string(p.r.r3),
                    std::to_string(p.r.r4), std::to_string(p.Rbound), p.N.get_str(), p.salem ? "yes" : "no", d});
  if (f == OutputFormat::Csv) return render(t, f);
  std::ostringstream o;
  for (std::size_t i = 0; i < t.header.size(); ++i) o << "- **" << t.header[i] << "**: " << t.rows[0][i] << "\n";
  return o.str();
}

std::string render_table_a(const SurveyResult& r, OutputFormat f) {
  Table t;
  t.header = {"row", "graph", "s", "K", "R", "N", "max first failing prime", "exceptions"};
  for (const auto& v : r.vines) {
    if (!v.profile) {
      t.rows.push_back({v.entry.label, v.entry.graph, "-", "-", "-", "-", "-", v.error});
      continue;
    }
    const auto& p = *v.profile;
    std::uint64_t maxp = 0;
    std::vector<long> exc;
    for (const auto& rep : v.reports) {
      if (rep.cyclotomic.passed) {
        exc.push_back(rep.j);
      } else {
        maxp = std::max(maxp, rep.cyclotomic.failing_prime);
      }
    }
    t.rows.push_back({v.entry.label, v.entry.graph, std::to_string(p.s), p.K.get_str(), std::to_string(p.Rbound),
                      p.N.get_str(), std::to_string(maxp), exceptions_string(exc)});
  }
  return render(t, f);
}

std::string render_table_b(const SurveyResult& r, OutputFormat f) {
  Table t;
  t.header = {"row", "j", "graph", "global even dimension minimal polynomial", "reason"};
  for (const auto& v : r.vines)
    for (const auto& rep : v.reports)
      if (rep.verdict == Verdict::EliminatedDNumber)
        t.rows.push_back({v.entry.label, std::to_string(rep.j), rep.graph, rep.global_even_minpoly->to_string(),
                          rep.reason});
  return render(t, f);
}

std::string render_non_integral(const SurveyResult& r, OutputFormat f) {
  Table t;
  t.header = {"row", "j", "graph", "vertex", "dimension minimal polynomial"};
  for (const auto& v : r.vines)
    for (const auto& rep : v.reports)
      if (rep.verdict == Verdict::EliminatedAlgebraicInteger)
        t.rows.push_back({v.entry.label, std::to_string(rep.j), rep.graph,
                          std::to_string(rep.algebraic_integer->vertex), rep.algebraic_integer->minpoly.to_string()});
  return render(t, f);
}

std::string render_table_c(const SurveyResult& r, OutputFormat f) {
  Table t;
  t.header = {"row", "graph", "s", "deg B", "n", "status", "grid points", "sample minimum", "margin",
              "minimal certified n"};
  for (const auto& v : r.vines) {
    if (!v.profile || !v.profile->dCertificate) continue;
    const auto& p = *v.profile;
    const auto& c = *p.dCertificate;
    t.rows.push_back({v.entry.label, v.entry.graph, std::to_string(p.s), std::to_string(std::max(p.split.B.degree(), 0)),
                      p.dBound ? std::to_string(*p.dBound) : "-", to_string(c.status), std::to_string(c.grid_points),
                      fmt_double(c.sample_minimum), fmt_double(c.margin),
                      p.dMinimal ? std::to_string(*p.dMinimal) : "-"});
  }
  return render(t, f);
}

std::string render_survivors(const SurveyResult& r, OutputFormat f) {
  Table t;
  t.header = {"row", "j", "graph", "norm squared", "class", "note"};
  for (const auto& s : r.survivors())
    t.rows.push_back({s.label, std::to_string(s.j), s.graph, s.norm_sq, to_string(s.category), s.note});
  return render(t, f);
}

std::string render_translates_csv(const SurveyResult& r) {
  Table t;
  t.header = {"row", "j", "n", "graph", "verdict", "failing prime", "norm squared", "reason"};
  for (const auto& v : r.vines)
    for (const auto& rep : v.reports)
      t.rows.push_back({v.entry.label, std::to_string(rep.j), std::to_string(rep.n), rep.graph, to_string(rep.verdict),
                        rep.cyclotomic.passed ? "" : std::to_string(rep.cyclotomic.failing_prime), rep.norm_sq,
                        rep.reason});
  return render(t, OutputFormat::Csv);
}

std::string render_survey(const SurveyResult& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json:
      return to_json(r).dump(2) + "\n";
    case OutputFormat::Csv:
      return render_table_a(r, f);
    case OutputFormat::Markdown: {
      std::ostringstream o;
      o << "# Survey\n\n## Vines\n\n" << render_table_a(r, f);
      o << "\n## Eliminated by the d-number test\n\n" << render_table_b(r, f);
      o << "\n## Dimensions that are not algebraic integers\n\n" << render_non_integral(r, f);
      o << "\n## Derivative bound certificates\n\n" << render_table_c(r, f);
      o << "\n## Survivors\n\n" << render_survivors(r, f);
      o << "\nCyclotomic survivors: " << r.cyclotomic_survivors() << "\n";
      o << "Final survivors: " << r.final_survivors().size() << "\n";
      return o.str();
    }
  }
  return {};
}

}  // namespace vines
