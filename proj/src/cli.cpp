#include "realenum/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "realenum/cache.hpp"
#include "realenum/checks.hpp"
#include "realenum/common.hpp"
#include "realenum/floors.hpp"
#include "realenum/mod2.hpp"
#include "realenum/sumformula.hpp"
#include "realenum/table_io.hpp"

namespace realenum {

namespace {

std::vector<long long> parse_class(const std::string& text) {
  std::vector<long long> coords;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      coords.push_back(std::stoll(part));
    } catch (const std::exception&) {
      throw input_error("bad class coordinate '" + part + "'");
    }
  }
  if (coords.empty()) throw input_error("empty class");
  return coords;
}

std::string class_to_string(const std::vector<long long>& coords) {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i];
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct WelschingerMeta {
  std::string real_structure;
  std::string L;
};

WelschingerMeta welschinger_meta(const std::string& surface_name) {
  if (surface_name == "cp2") return {"conj", "RP2"};
  if (surface_name == "f0") return {"tau_hy", "torus"};
  if (surface_name == "f2") return {"standard", "RF2"};
  return {"standard", "RX"};
}

InvariantTable one_entry_table(const std::string& kind, const SurfaceModel& m,
                               const DivisorClass& cls, const Integer& value) {
  InvariantTable t;
  t.meta.surface = m.name;
  t.meta.source = "computed";
  if (kind == "gw") {
    t.meta.real_structure = "complex";
    t.meta.convention = "complex-count";
  } else {
    WelschingerMeta wm = welschinger_meta(m.name);
    t.meta.real_structure = wm.real_structure;
    t.meta.L = wm.L;
    t.meta.F = "complement-of-L";
    t.meta.convention = "mass-F";
  }
  t.entries.push_back(TableEntry{cls, 0, value});
  return t;
}

void emit_table(const InvariantTable& t, const std::string& kind, const std::string& format,
                std::ostream& out) {
  if (format == "json") {
    out << table_to_json(t);
  } else if (format == "csv") {
    out << table_to_csv(t, kind);
  } else {
    for (const TableEntry& e : t.entries) {
      out << kind << " " << t.meta.surface << " [" << class_to_string(e.cls.coords)
          << "] s=" << e.s << " value=" << e.value.to_string() << "\n";
    }
  }
}

// ---------------------------------------------------------------- compute

struct ComputeOptions {
  std::string surface = "cp2";
  std::string cls;
  int degree = 0;
  long long k_max = -1;
  std::string cache_dir;
  std::string format = "text";
};

DivisorClass class_from_options(const SurfaceModel& m, const ComputeOptions& opt) {
  if (!opt.cls.empty()) return m.cls(parse_class(opt.cls));
  if (m.rank == 1) return m.cls({opt.degree});
  throw input_error("surface " + m.name + " needs --class a,b");
}

int run_compute_value(const std::string& kind, const ComputeOptions& opt, std::ostream& out) {
  const SurfaceModel* m = nullptr;
  DivisorClass cls{"", {}};
  if (kind == "ellipsoid") {
    if (opt.degree < 1) throw input_error("ellipsoid needs --degree d >= 1");
    // the class d(l1+l2) on the quadric with spherical real locus; the count
    // is carried out on the f2 model for the trapezoid class (d, 0)
    m = &surface("f0");
    cls = m->cls({opt.degree, opt.degree});
  } else {
    m = &surface(opt.surface);
    cls = class_from_options(*m, opt);
  }

  ResultCache cache(ResultCache::resolve_dir(opt.cache_dir));
  std::string key =
      ResultCache::compute_key(m->name, class_to_string(cls.coords), kind);

  std::string payload;
  if (auto hit = cache.load(key)) {
    try {
      table_from_json(*hit);  // reject corrupted records
    } catch (const input_error& e) {
      throw internal_error("cache record " + key + " is corrupted: " + e.what());
    }
    payload = *hit;
  } else {
    Integer value;
    if (kind == "gw") {
      value = gw_toric(*m, cls);
    } else if (kind == "welschinger") {
      value = welschinger_toric(*m, cls);
    } else {  // ellipsoid
      value = welschinger_ellipsoid(opt.degree);
    }
    InvariantTable t = one_entry_table(kind == "gw" ? "gw" : "welschinger", *m, cls, value);
    if (kind == "ellipsoid") {
      t.meta.real_structure = "tau_el";
      t.meta.L = "S2";
    }
    payload = table_to_json(t);
    cache.store(key, payload);
  }
  emit_table(table_from_json(payload), kind == "gw" ? "gw" : "welschinger", opt.format, out);
  return 0;
}

int run_compute_strata(const ComputeOptions& opt, std::ostream& out) {
  if (opt.cls.empty()) throw input_error("strata needs --class a,b (a class on the glued surface)");
  const SurfaceModel& f0 = surface("f0");
  DivisorClass cls = f0.cls(parse_class(opt.cls));
  std::optional<long long> kmax;
  if (opt.k_max >= 0) kmax = opt.k_max;

  ResultCache cache(ResultCache::resolve_dir(opt.cache_dir));
  std::string key = ResultCache::compute_key(
      "f0", class_to_string(cls.coords) + "|kmax=" + std::to_string(opt.k_max), "strata");

  std::string payload;
  if (auto hit = cache.load(key)) {
    try {
      nlohmann::json parsed = nlohmann::json::parse(*hit);
      if (!parsed.contains("entries")) throw input_error("missing entries");
    } catch (const std::exception& e) {
      throw internal_error("cache record " + key + " is corrupted: " + e.what());
    }
    payload = *hit;
  } else {
    StratifiedCounts counts = relative_real_counts_f2(cls, kmax);
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [sk, value] : counts.entries) {
      entries.push_back(
          {{"k", sk.k}, {"a", sk.a}, {"b", sk.b}, {"value", value.to_string()}});
    }
    nlohmann::json j;
    j["schema"] = 1;
    j["kind"] = "strata";
    j["surface"] = "f0";
    j["class"] = cls.coords;
    j["d_dot_e"] = counts.d_dot_e;
    j["entries"] = entries;
    payload = j.dump(2) + "\n";
    cache.store(key, payload);
  }

  if (opt.format == "json") {
    out << payload;
  } else {
    nlohmann::json j = nlohmann::json::parse(payload);
    if (opt.format == "csv") {
      out << "surface,class,s,kind,value\n";
      for (const auto& e : j.at("entries")) {
        out << "f2," << class_to_string(cls.coords) << "+k=" << e.at("k").get<long long>()
            << ",0,stratum," << e.at("value").get<std::string>() << "\n";
      }
    } else {
      for (const auto& e : j.at("entries")) {
        out << "stratum k=" << e.at("k").get<long long>() << " a=" << e.at("a").get<long long>()
            << " b=" << e.at("b").get<long long>() << " value=" << e.at("value").get<std::string>()
            << "\n";
      }
    }
  }
  return 0;
}

// ------------------------------------------------------------------ check

int run_check_abv_complex(int max_total, std::ostream& out) {
  const SurfaceModel& f0 = surface("f0");
  const SurfaceModel& f2 = surface("f2");
  bool ok = true;
  for (int a = 0; a <= max_total; ++a) {
    for (int b = 0; a + b <= max_total; ++b) {
      if (a + b == 0) continue;
      DivisorClass d = f0.cls({a, b});
      Integer lhs = gw_toric(f0, d);
      long long de = intersect(d, f0.named("E")).to_long_long();
      std::map<long long, Integer> counts;
      for (long long k = 0; k <= a; ++k) {
        if (de + 2 * k < 0) continue;  // no curve meets E negatively often
        DivisorClass ck = glued_to_f2(d, k);
        Integer n(0);
        if (ck.coords[0] >= 0 && ck.coords[1] >= 0 && !(ck.coords[0] == 0 && ck.coords[1] == 0)) {
          n = gw_toric(f2, ck);
        }
        counts[k] = n;
      }
      Integer rhs = combine_complex(de, counts);
      bool match = lhs == rhs;
      ok = ok && match;
      out << "abv-complex (" << a << "," << b << "): " << lhs.to_string() << " vs "
          << rhs.to_string() << " " << (match ? "PASS" : "FAIL") << "\n";
    }
  }
  return ok ? 0 : 1;
}

int run_check_abv_real(int max_total, std::ostream& out) {
  const SurfaceModel& f0 = surface("f0");
  CombinationMode mode{Hypothesis::H1, 0, kCalibratedGammaHyperboloid};
  bool ok = true;
  for (int a = 0; a <= max_total; ++a) {
    for (int b = 0; a + b <= max_total; ++b) {
      if (a + b == 0) continue;
      DivisorClass d = f0.cls({a, b});
      Integer lhs = welschinger_toric(f0, d);
      Integer rhs = combine_real(mode, relative_real_counts_f2(d));
      bool match = lhs == rhs;
      ok = ok && match;
      out << "abv-real (" << a << "," << b << ") gamma=" << mode.gamma << ": " << lhs.to_string()
          << " vs " << rhs.to_string() << " " << (match ? "PASS" : "FAIL") << "\n";
    }
  }
  return ok ? 0 : 1;
}

int run_check_class_trop(int max_degree, std::ostream& out) {
  const SurfaceModel& f0 = surface("f0");
  const SurfaceModel& f2 = surface("f2");
  bool ok = true;
  for (int d = 1; d <= max_degree; ++d) {
    Integer ell = welschinger_ellipsoid(d);
    Integer direct = welschinger_toric(f2, f2.cls({d, 0}));
    StratifiedCounts strata = relative_real_counts_f2(f0.cls({d, d}));
    CombinationMode mode{Hypothesis::H1, 2, 0};
    Integer combined = combine_real(mode, strata);
    bool higher_vanish = true;
    for (const auto& [key, value] : strata.entries) {
      if (key.b != 0) higher_vanish = false;  // all-real strata only
      if (key.k > 0 && !mu2(key.k, key.a, key.b, 0, 0).is_zero()) higher_vanish = false;
    }
    bool match = ell == direct && ell == combined && higher_vanish;
    ok = ok && match;
    out << "class-trop d=" << d << ": ellipsoid=" << ell.to_string()
        << " direct=" << direct.to_string() << " combined=" << combined.to_string() << " "
        << (match ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int run_check_table(const std::vector<std::string>& files, const std::string& format,
                    std::ostream& out) {
  bool any_fail = false;
  for (const std::string& file : files) {
    InvariantTable table = table_from_json(read_file(file));
    Report all;
    for (const Report& r :
         {check_vanishing(table), check_divisibility(table), check_sign(table)}) {
      all.results.insert(all.results.end(), r.results.begin(), r.results.end());
    }
    if (format == "json") {
      out << all.to_json() << "\n";
    } else {
      out << "table " << file << ":\n" << all.to_text();
    }
    any_fail = any_fail || all.any_fail();
  }
  return any_fail ? 1 : 0;
}

int run_check_monotonicity(const std::string& file, const std::string& format, std::ostream& out) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(file));
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("malformed series file: ") + e.what());
  }
  std::vector<std::pair<long long, Integer>> series;
  try {
    for (const auto& item : j) {
      series.push_back({item.at(0).get<long long>(),
                        Integer::from_string(item.at(1).is_string()
                                                 ? item.at(1).get<std::string>()
                                                 : std::to_string(item.at(1).get<long long>()))});
    }
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("series must be [[chi, value], ...]: ") + e.what());
  }
  Report report = check_monotonicity(series);
  out << (format == "json" ? report.to_json() + "\n" : report.to_text());
  return report.any_fail() ? 1 : 0;
}

int run_check_homology(std::ostream& out) {
  struct Expectation {
    std::string model;
    int quotient;
  };
  const std::vector<Expectation> expectations = {
      {"conic_bundle(1)", 0}, {"conic_bundle(2)", 1}, {"conic_bundle(3)", 2},
      {"conic_bundle(4)", 3}, {"conic_bundle(5)", 4}, {"dp2", 5},
      {"dp1_S1", 7},          {"dp1_S7", 7},          {"dp1_N", 7},
      {"f0_el", 0},           {"f0_hy", 0},           {"cp2", 0}};
  bool ok = true;
  for (const Expectation& e : expectations) {
    RealHomologyModel model = builtin_model(e.model);
    int q = quotient_dimension(model);
    bool basis_ok = verify_claimed_basis(model);
    bool full_ok = model.full_pairing.rows() == 0 ||
                   model.full_pairing.rank() == model.full_pairing.rows();
    bool match = q == e.quotient && basis_ok && full_ok;
    ok = ok && match;
    out << "homology " << e.model << ": dim=" << q << " expected=" << e.quotient
        << " basis=" << (basis_ok ? "ok" : "bad") << " pairing-rank="
        << (full_ok ? "ok" : "degenerate") << " " << (match ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

// ------------------------------------------------------------------ ingest

int run_ingest(const std::string& file, const std::string& cache_dir, std::ostream& out) {
  std::string text = read_file(file);
  InvariantTable table = table_from_json_strict(text);
  std::string canonical = table_to_json(table);
  ResultCache cache(ResultCache::resolve_dir(cache_dir));
  std::string key = sha256_hex("ingest|" + canonical);
  cache.store(key, canonical);
  out << "ingested " << table.entries.size() << " entries from " << table.meta.source
      << " as " << key << "\n";
  return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact curve counts and theorem checks for rational surfaces"};
  app.require_subcommand(1);

  ComputeOptions opt;
  std::string check_format = "text";
  std::vector<std::string> table_files;
  std::string mono_file;
  int max_total_complex = 5;
  int max_total_real = 4;
  int max_degree_trop = 3;

  CLI::App* compute = app.add_subcommand("compute", "compute an invariant");
  compute->require_subcommand(1);
  for (const char* kind : {"gw", "welschinger", "ellipsoid", "strata"}) {
    CLI::App* sub = compute->add_subcommand(kind);
    sub->add_option("--surface", opt.surface, "cp2, f0 or f2");
    sub->add_option("--class", opt.cls, "class coordinates a,b");
    sub->add_option("--degree", opt.degree, "degree for rank-1 models");
    sub->add_option("--k-max", opt.k_max, "stratum cutoff (strata only)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--cache-dir", opt.cache_dir, "result cache directory");
    sub->add_option("--format", opt.format, "text, json or csv");
  }

  CLI::App* check = app.add_subcommand("check", "verify identities and tables");
  check->require_subcommand(1);
  CLI::App* abv_c = check->add_subcommand("abv-complex", "trade identity, complex counts");
  abv_c->add_option("--max-total", max_total_complex, "check classes with a+b up to this");
  CLI::App* abv_r = check->add_subcommand("abv-real", "trade identity, real counts");
  abv_r->add_option("--max-total", max_total_real, "check classes with a+b up to this");
  CLI::App* trop = check->add_subcommand("class-trop", "ellipsoid vs trapezoid counts");
  trop->add_option("--max-degree", max_degree_trop, "check degrees up to this");
  CLI::App* table_cmd = check->add_subcommand("table", "run theorem checks on table files");
  table_cmd->add_option("files", table_files, "table JSON files")->required();
  table_cmd->add_option("--format", check_format, "text or json");
  CLI::App* mono = check->add_subcommand("monotonicity", "chi-monotone series check");
  mono->add_option("file", mono_file, "JSON series [[chi, value], ...]")->required();
  mono->add_option("--format", check_format, "text or json");
  CLI::App* homology = check->add_subcommand("homology", "verify built-in homology models");

  std::string ingest_file, ingest_cache;
  CLI::App* ingest = app.add_subcommand("ingest", "validate and store an external table");
  ingest->add_option("file", ingest_file, "table JSON file")->required();
  ingest->add_option("--cache-dir", ingest_cache, "result cache directory");

  std::string cache_dir_opt;
  CLI::App* cache_cmd = app.add_subcommand("cache", "manage the result cache");
  cache_cmd->require_subcommand(1);
  CLI::App* cache_ls = cache_cmd->add_subcommand("ls", "list cached records");
  cache_ls->add_option("--cache-dir", cache_dir_opt, "result cache directory");
  CLI::App* cache_clear = cache_cmd->add_subcommand("clear", "remove cached records");
  cache_clear->add_option("--cache-dir", cache_dir_opt, "result cache directory");

  std::vector<const char*> argv;
  argv.push_back("realenum");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (compute->parsed()) {
      for (const char* kind : {"gw", "welschinger", "ellipsoid"}) {
        if (compute->get_subcommand(kind)->parsed()) return run_compute_value(kind, opt, out);
      }
      return run_compute_strata(opt, out);
    }
    if (check->parsed()) {
      if (abv_c->parsed()) return run_check_abv_complex(max_total_complex, out);
      if (abv_r->parsed()) return run_check_abv_real(max_total_real, out);
      if (trop->parsed()) return run_check_class_trop(max_degree_trop, out);
      if (table_cmd->parsed()) return run_check_table(table_files, check_format, out);
      if (mono->parsed()) return run_check_monotonicity(mono_file, check_format, out);
      if (homology->parsed()) return run_check_homology(out);
    }
    if (ingest->parsed()) return run_ingest(ingest_file, ingest_cache, out);
    if (cache_cmd->parsed()) {
      ResultCache cache(ResultCache::resolve_dir(cache_dir_opt));
      if (cache_ls->parsed()) {
        for (const std::string& k : cache.list()) out << k << "\n";
      } else {
        out << "removed " << cache.clear() << " records\n";
      }
      return 0;
    }
    err << "no command given\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace realenum
