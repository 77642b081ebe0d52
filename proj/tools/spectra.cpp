// Command-line front end: enumerate, check, monad, curves, gin, report.
//
// Exit codes: 0 success, 1 the query's answer is "violation found",
// 2 usage or input error, 3 internal error.  Errors are written to stderr as
// {"error": "..."}.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectra/spectra.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace spectra;

namespace {

struct Config {
  std::int64_t max_c2 = 21;
  std::string field = "rationals";
  std::uint64_t seed = 42;
  int trials = 3;
  std::string output = "json";
  std::string cache_dir = ".spectra-cache";
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::int64_t> parse_tail(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + text + "'");
    }
    if (used != item.size()) throw UsageError("not an integer list: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty spectrum tail");
  return out;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string seq_text(const FinSuppSeq& f) {
  auto v = f.values();
  return std::to_string(f.offset()) + ":" + join({v.begin(), v.end()});
}

json stamped(json j) {
  j["schema_version"] = kSchemaVersion;
  return j;
}

void emit(const Config& cfg, const json& j, const std::string& tsv_row) {
  if (cfg.output == "json") std::cout << stamped(j).dump() << "\n";
  else std::cout << tsv_row << "\n";
}

json tail_search_json(const Spectrum& s, std::int64_t max_c2) {
  if (s(0) != 1 && s(0) != 2) return "n/a";
  auto hits = tail_search(s.tail(), max_c2);
  json arr = json::array();
  for (auto& h : hits) arr.push_back({{"family", family_json(h.family)}, {"route", route_name(h.route)}});
  return {{"matches", hits.size()}, {"hits", arr}};
}

std::string tail_search_cell(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j["matches"].get<std::size_t>() ? "match" : "no-match";
}

int cmd_enumerate(const Config& cfg, std::int64_t c2, const std::vector<std::string>& filters, bool only_failing) {
  auto want = [&](const std::string& f) { return std::find(filters.begin(), filters.end(), f) != filters.end(); };
  if (cfg.output == "tsv") std::cout << "c2\ttail\tm\taxioms\texcess_bound\ttail_search\n";
  int status = 0;
  for (auto& s : enumerate(c2)) {
    json rec = {{"tail", s.values()}, {"c2", s.c2()}, {"m", s.m()}, {"verdicts", {{"axioms", "ok"}}}};
    std::string excess_cell = "-", search_cell = "-";
    bool failing = false;
    if (want("excess-bound")) {
      auto v = excess_bound(s);
      rec["verdicts"]["excess_bound"] = verdict_name(v);
      excess_cell = verdict_name(v);
      failing = failing || v == ExcessVerdict::Violated;
    }
    if (want("tail-search")) {
      json ts = tail_search_json(s, s.c2() + 1);
      rec["verdicts"]["tail_search"] = ts;
      search_cell = tail_search_cell(ts);
      failing = failing || search_cell == "no-match";
    }
    if (only_failing && !failing) continue;
    if (failing) status = 1;
    emit(cfg, rec,
         std::to_string(s.c2()) + "\t" + s.to_string() + "\t" + std::to_string(s.m()) + "\tok\t" + excess_cell + "\t" +
             search_cell);
  }
  return only_failing ? status : 0;
}

int cmd_check(const Config& cfg, const std::string& text) {
  auto tail = parse_tail(text);
  for (auto v : tail)
    if (v < 0) throw UsageError("spectrum values must be nonnegative");
  Validation val = validate(tail);
  json rec = {{"tail", tail}, {"axioms", axioms_json(val)}};
  std::string excess_cell = "-", search_cell = "-";
  int status = val.ok() ? 0 : 1;
  if (val.ok()) {
    const Spectrum& s = val.value();
    auto v = excess_bound(s);
    rec["c2"] = s.c2();
    rec["excess_bound"] = verdict_name(v);
    excess_cell = verdict_name(v);
    json ts = tail_search_json(s, std::max<std::int64_t>(cfg.max_c2, s.c2() + 1));
    rec["tail_search"] = ts;
    search_cell = tail_search_cell(ts);
    if (v == ExcessVerdict::Violated) status = 1;
  }
  if (cfg.output == "tsv") std::cout << "tail\taxioms\texcess_bound\ttail_search\n";
  emit(cfg, rec, join(tail) + "\t" + (val.ok() ? "ok" : "violated") + "\t" + excess_cell + "\t" + search_cell);
  return status;
}

int cmd_monad(const Config& cfg, const std::string& text) {
  Validation val = validate(parse_tail(text));
  if (!val.ok()) throw UsageError("not a spectrum: " + axioms_json(val).dump());
  if (cfg.output == "tsv") std::cout << "rho\tb0\tb\tstatus\n";
  for (auto& p : enumerate_admissible(val.value())) {
    json rec = monad_json(p);
    rec["status"] = "not excluded";
    emit(cfg, rec,
         seq_text(p.rho.rho) + "\t" + std::to_string(p.shape.b0()) + "\t" +
             seq_text(rec["b"].get<FinSuppSeq>()) + "\tnot excluded");
  }
  return 0;
}

struct FamilyArgs {
  std::string kind;
  std::int64_t a = 1, b = 1, d = 1, d0 = 1, d1 = 1, r = 1, r0 = 0, r1 = 0, mneg = 1, sigma = 1;
  std::vector<std::int64_t> lambdas;
};

CurveFamily make_family(const FamilyArgs& f) {
  if (f.kind == "quadric") return QuadricDivisor{f.a, f.b};
  if (f.kind == "cone") return ConeCurve{f.d};
  if (f.kind == "twoplanes") return TwoPlanesNoLine{f.d0, f.d1, f.r};
  if (f.kind == "xpp") return TwoPlanesWithLine{f.r0, f.d0, f.r1, f.d1, Xpp{}};
  if (f.kind == "xprime-line") return TwoPlanesWithLine{f.r0, f.d0, f.r1, f.d1, XprimePlusLine{f.mneg}};
  return DoublePlane{f.sigma, f.lambdas, f.r0, f.r};
}

int cmd_curves_delta2(const Config& cfg, const FamilyArgs& args) {
  CurveFamily fam = make_family(args);
  FinSuppSeq d2 = delta2_h0(fam);
  json rec = {{"family", family_json(fam)}, {"delta2", d2}, {"degree", degree(fam)}};
  if (cfg.output == "tsv") std::cout << "family\tdelta2\tdegree\n";
  emit(cfg, rec, family_json(fam).dump() + "\t" + seq_text(d2) + "\t" + std::to_string(degree(fam)));
  return 0;
}

int cmd_curves_search(const Config& cfg, const std::string& text) {
  auto tail = parse_tail(text);
  auto hits = tail_search(FinSuppSeq(0, tail), cfg.max_c2);
  if (cfg.output == "tsv") std::cout << "family\troute\n";
  for (auto& h : hits)
    emit(cfg, {{"family", family_json(h.family)}, {"route", route_name(h.route)}},
         family_json(h.family).dump() + "\t" + route_name(h.route));
  return hits.empty() ? 1 : 0;
}

template <class K>
int gin_points_in(const Config& cfg, const std::vector<gb::PlanePoint>& pts) {
  auto I = gb::points_ideal<K>(pts, cfg.seed);
  auto G = gb::gin(I, cfg.trials, cfg.seed);
  auto res = gb::standard_resolution(G);
  std::vector<std::int64_t> hilbert = G.hilbert_range(0, static_cast<int>(res.d.back() + 2));
  json rec = {{"gin", G.to_json()},
              {"sigma", res.sigma},
              {"lambdas", res.lambdas},
              {"degree", res.degGamma},
              {"hilbert", hilbert}};
  if (cfg.output == "tsv") std::cout << "gin\tsigma\tlambdas\tdegree\thilbert\n";
  emit(cfg, rec,
       G.to_json().dump() + "\t" + std::to_string(res.sigma) + "\t" + join(res.lambdas) + "\t" +
           std::to_string(res.degGamma) + "\t" + join(hilbert));
  return 0;
}

int cmd_gin_points(const Config& cfg, const std::string& file) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read " + file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad points file: ") + e.what());
  }
  std::vector<gb::PlanePoint> pts;
  try {
    for (auto& p : j) {
      auto v = p.get<std::vector<std::int64_t>>();
      if (v.size() != 3) throw UsageError("each point needs 3 homogeneous coordinates");
      pts.push_back({v[0], v[1], v[2]});
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad points file: ") + e.what());
  }
  if (cfg.field == "rationals") return gin_points_in<mpq_class>(cfg, pts);
  return gin_points_in<gb::F32003>(cfg, pts);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int cmd_report(const Config& cfg, std::int64_t c2_max) {
  fs::path dir = fs::path(cfg.cache_dir) / ("report-c2max-" + std::to_string(c2_max) + "-v" + kVersion);
  fs::path md = dir / "report.md", tsv = dir / "report.tsv", js = dir / "report.json";
  if (!(fs::exists(md) && fs::exists(tsv) && fs::exists(js))) {
    Report rep = build_report(c2_max);
    json summary = {{"c2_max", c2_max}, {"version", kVersion}};
    json excluded = json::array(), asserts = json::array();
    for (auto& x : rep.excluded)
      excluded.push_back({{"c2", x.c2}, {"tail", x.spectrum.values()}, {"verdict", verdict_name(x.verdict)}});
    for (auto& a : rep.assertions) asserts.push_back({{"label", a.label}, {"holds", a.holds}});
    summary["excluded"] = excluded;
    summary["assertions"] = asserts;
    summary["markdown"] = md.string();
    summary["tsv"] = tsv.string();
    fs::create_directories(dir);
    // write to temporaries, then rename, so a partial run never looks like a hit
    auto put = [&](const fs::path& p, const std::string& text) {
      fs::path tmp = p;
      tmp += ".tmp";
      std::ofstream(tmp, std::ios::binary) << text;
      fs::rename(tmp, p);
    };
    put(md, report_markdown(rep));
    put(tsv, report_tsv(rep));
    put(js, stamped(summary).dump() + "\n");
  }
  json summary = json::parse(slurp(js));
  if (cfg.output == "json") std::cout << slurp(js);
  else std::cout << slurp(tsv);
  for (auto& a : summary["assertions"])
    if (!a["holds"].get<bool>()) return 1;
  return 0;
}

void emit_error(const std::string& msg) { std::cerr << json{{"error", msg}}.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Necessary-condition checks for spectra of stable rank 2 bundles on P^3"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--output", cfg.output, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--seed", cfg.seed, "seed for random coordinate changes");
  app.add_option("--trials", cfg.trials, "independent draws that must agree in gin")->check(CLI::Range(1, 1000000));
  app.add_option("--field", cfg.field, "rationals or prime:32003")
      ->check(CLI::IsMember({"rationals", "prime:32003"}));
  app.add_option("--max-c2", cfg.max_c2, "degree bound for curve searches")->check(CLI::Range(1, 1000000));
  app.add_option("--cache-dir", cfg.cache_dir, "report cache (SPECTRA_CACHE overrides)");

  auto* en = app.add_subcommand("enumerate", "all spectra with a given c2");
  std::int64_t en_c2 = 0;
  std::vector<std::string> filters{"axioms"};
  bool only_failing = false;
  en->add_option("--c2", en_c2)->required()->check(CLI::Range(1, 1000000));
  en->add_option("--filter", filters, "axioms, excess-bound, tail-search")
      ->check(CLI::IsMember({"axioms", "excess-bound", "tail-search"}));
  en->add_flag("--only-failing", only_failing, "keep only rows failing a requested check (exit 1 if any)");

  auto* ck = app.add_subcommand("check", "verdicts for one spectrum tail, e.g. 1,2,2,4,2");
  std::string ck_tail;
  ck->add_option("tail", ck_tail)->required();

  auto* mo = app.add_subcommand("monad", "(rho, b) pairs not excluded for a spectrum");
  mo->alias("monad-shapes");
  std::string mo_tail;
  auto* mo_pos = mo->add_option("tail", mo_tail);
  mo->add_option("--spectrum", mo_tail)->excludes(mo_pos);

  auto* cu = app.add_subcommand("curves", "curve Hilbert-function profiles");
  cu->require_subcommand(1);
  auto* cd = cu->add_subcommand("delta2", "second difference of h0(O_X(i)) for a family instance");
  FamilyArgs fa;
  cd->add_option("--family", fa.kind)
      ->required()
      ->check(CLI::IsMember({"quadric", "cone", "twoplanes", "xpp", "xprime-line", "doubleplane"}));
  cd->add_option("--a", fa.a);
  cd->add_option("--b", fa.b);
  cd->add_option("--d", fa.d);
  cd->add_option("--d0", fa.d0);
  cd->add_option("--d1", fa.d1);
  cd->add_option("--r", fa.r);
  cd->add_option("--r0", fa.r0);
  cd->add_option("--r1", fa.r1);
  cd->add_option("--mneg", fa.mneg);
  cd->add_option("--sigma", fa.sigma);
  cd->add_option("--lambda", fa.lambdas)->delimiter(',');
  auto* cs = cu->add_subcommand("search", "curve families whose profile gives a spectrum tail");
  std::string cs_tail;
  cs->add_option("--tail", cs_tail)->required();

  auto* gi = app.add_subcommand("gin", "generic initial ideals");
  gi->require_subcommand(1);
  auto* gp = gi->add_subcommand("points", "gin and standard resolution of points in P^2");
  std::string pts_file;
  gp->add_option("--file", pts_file, "JSON [[x,y,z],...]")->required();

  auto* rp = app.add_subcommand("report", "excess-bound survey with labeled assertions");
  std::int64_t rp_c2 = 21;
  rp->add_option("--c2-max", rp_c2)->check(CLI::Range(1, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    emit_error(e.what());
    return 2;
  }
  if (const char* env = std::getenv("SPECTRA_CACHE"); env && *env) cfg.cache_dir = env;

  try {
    if (*en) return cmd_enumerate(cfg, en_c2, filters, only_failing);
    if (*ck) return cmd_check(cfg, ck_tail);
    if (*mo) {
      if (mo_tail.empty()) throw UsageError("monad: give a spectrum tail");
      return cmd_monad(cfg, mo_tail);
    }
    if (*cd) return cmd_curves_delta2(cfg, fa);
    if (*cs) return cmd_curves_search(cfg, cs_tail);
    if (*gp) return cmd_gin_points(cfg, pts_file);
    if (*rp) return cmd_report(cfg, rp_c2);
  } catch (const std::invalid_argument& e) {
    emit_error(e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error(e.what());
    return 3;
  }
  return 2;
}
