#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "realenum/cache.hpp"
#include "realenum/cli.hpp"
#include "realenum/common.hpp"
#include "realenum/table_io.hpp"

using namespace realenum;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("realenum-test-" + std::to_string(std::rand()) + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream f(p);
  f << content;
}

}  // namespace

TEST_CASE("table JSON round trip") {
  InvariantTable t;
  t.meta.surface = "f0";
  t.meta.real_structure = "tau_hy";
  t.meta.L = "torus";
  t.meta.F = "complement-of-L";
  t.meta.convention = "mass-F";
  t.meta.source = "unit-test";
  t.meta.chain_of_spheres = false;
  t.entries.push_back({DivisorClass{"f0", {2, 2}}, 0, Integer::from_string("123456789012345678901")});
  t.entries.push_back({DivisorClass{"f0", {1, 1}}, 1, Integer(-8)});

  InvariantTable back = table_from_json(table_to_json(t));
  CHECK(back.meta.surface == t.meta.surface);
  CHECK(back.meta.convention == t.meta.convention);
  CHECK(back.meta.chain_of_spheres == t.meta.chain_of_spheres);
  CHECK(!back.meta.F_nontrivial.has_value());
  REQUIRE(back.entries.size() == 2);
  CHECK(back.entries[0].value.to_string() == "123456789012345678901");
  CHECK(back.entries[1].value == Integer(-8));
  CHECK(table_to_json(back) == table_to_json(t));

  std::string csv = table_to_csv(t, "welschinger");
  CHECK(csv.find("surface,class,s,kind,value") == 0);
  CHECK(csv.find("f0,2;2,0,welschinger,123456789012345678901") != std::string::npos);
}

TEST_CASE("compute commands") {
  TempDir tmp;
  std::string cache = "--cache-dir=" + tmp.path.string();

  RunResult gw = run({"compute", "gw", "--surface", "cp2", "--degree", "3", cache});
  CHECK(gw.code == 0);
  CHECK(gw.out.find("value=12") != std::string::npos);

  RunResult w = run({"compute", "welschinger", "--surface", "f2", "--class", "2,0", cache});
  CHECK(w.code == 0);
  CHECK(w.out.find("value=6") != std::string::npos);

  RunResult el = run({"compute", "ellipsoid", "--degree", "2", cache, "--format", "json"});
  CHECK(el.code == 0);
  CHECK(el.out.find("\"tau_el\"") != std::string::npos);
  CHECK(el.out.find("\"6\"") != std::string::npos);

  RunResult bad = run({"compute", "gw", "--surface", "cp2", "--degree", "0", cache});
  CHECK(bad.code == 2);

  RunResult strata = run({"compute", "strata", "--class", "1,1", cache});
  CHECK(strata.code == 0);
  CHECK(strata.out.find("stratum k=0 a=0 b=0 value=1") != std::string::npos);
  RunResult strata_warm = run({"compute", "strata", "--class", "1,1", cache});
  CHECK(strata_warm.code == 0);
  CHECK(strata_warm.out == strata.out);
}

TEST_CASE("warm cache returns byte-identical output") {
  TempDir tmp;
  std::string cache = "--cache-dir=" + tmp.path.string();
  std::vector<std::string> cmd = {"compute", "gw", "--surface", "f0",
                                  "--class", "2,2", cache,       "--format", "json"};
  RunResult cold = run(cmd);
  RunResult warm = run(cmd);
  CHECK(cold.code == 0);
  CHECK(warm.code == 0);
  CHECK(cold.out == warm.out);
  CHECK(!ResultCache(tmp.path).list().empty());
}

TEST_CASE("corrupted cache records give an internal error") {
  TempDir tmp;
  std::string cache = "--cache-dir=" + tmp.path.string();
  std::vector<std::string> cmd = {"compute", "gw", "--surface", "cp2", "--degree", "2", cache};
  CHECK(run(cmd).code == 0);
  ResultCache rc(tmp.path);
  auto keys = rc.list();
  REQUIRE(keys.size() == 1);
  write_file(tmp.path / (keys[0] + ".json"), "{ not json");
  RunResult broken = run(cmd);
  CHECK(broken.code == 3);
  CHECK(broken.err.find("internal error") != std::string::npos);
}

TEST_CASE("cache ls and clear") {
  TempDir tmp;
  std::string cache = "--cache-dir=" + tmp.path.string();
  CHECK(run({"compute", "gw", "--surface", "cp2", "--degree", "1", cache}).code == 0);
  CHECK(run({"compute", "gw", "--surface", "cp2", "--degree", "2", cache}).code == 0);
  RunResult ls = run({"cache", "ls", cache});
  CHECK(ls.code == 0);
  CHECK(std::count(ls.out.begin(), ls.out.end(), '\n') == 2);
  RunResult cleared = run({"cache", "clear", cache});
  CHECK(cleared.code == 0);
  CHECK(cleared.out.find("removed 2") != std::string::npos);
  CHECK(run({"cache", "ls", cache}).out.empty());
}

TEST_CASE("cache directory from the environment") {
  TempDir tmp;
  setenv("REAL_ENUM_CACHE", tmp.path.c_str(), 1);
  CHECK(run({"compute", "gw", "--surface", "cp2", "--degree", "1"}).code == 0);
  unsetenv("REAL_ENUM_CACHE");
  CHECK(!ResultCache(tmp.path).list().empty());
}

TEST_CASE("ingest") {
  TempDir tmp;
  std::string cache = "--cache-dir=" + tmp.path.string();

  // computed JSON output round-trips through ingest without loss
  RunResult computed =
      run({"compute", "welschinger", "--surface", "cp2", "--degree", "3", cache, "--format",
           "json"});
  REQUIRE(computed.code == 0);
  write_file(tmp.path / "computed.json", computed.out);
  CHECK(run({"ingest", (tmp.path / "computed.json").string(), cache}).code == 0);

  std::string dup = R"({"schema":1,
    "meta":{"surface":"f0","real_structure":"tau_hy","L":"torus","F":"complement-of-L",
            "flags":{},"convention":"mass-F","source":"somewhere"},
    "entries":[{"class":[1,1],"s":0,"value":"1"},{"class":[1,1],"s":0,"value":"2"}]})";
  write_file(tmp.path / "dup.json", dup);
  RunResult dup_run = run({"ingest", (tmp.path / "dup.json").string(), cache});
  CHECK(dup_run.code == 2);
  CHECK(dup_run.err.find("duplicate") != std::string::npos);

  std::string no_convention = R"({"schema":1,
    "meta":{"surface":"f0","real_structure":"tau_hy","L":"torus","F":"complement-of-L",
            "flags":{},"source":"somewhere"},
    "entries":[{"class":[1,1],"s":0,"value":"1"}]})";
  write_file(tmp.path / "noconv.json", no_convention);
  RunResult noconv = run({"ingest", (tmp.path / "noconv.json").string(), cache});
  CHECK(noconv.code == 2);
  CHECK(noconv.err.find("convention") != std::string::npos);
}

TEST_CASE("check table command") {
  TempDir tmp;
  std::string violating = R"({"schema":1,
    "meta":{"surface":"f0","real_structure":"tau_hy","L":"torus","F":"complement-of-L",
            "flags":{"chain_of_spheres":true,"F_nontrivial":true},
            "convention":"mass-F","source":"synthetic"},
    "entries":[{"class":[2,2],"s":0,"value":"5"}]})";
  write_file(tmp.path / "bad.json", violating);
  RunResult bad = run({"check", "table", (tmp.path / "bad.json").string()});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("fail") != std::string::npos);

  std::string unflagged = R"({"schema":1,
    "meta":{"surface":"f0","real_structure":"tau_hy","L":"torus","F":"complement-of-L",
            "flags":{},"convention":"mass-F","source":"synthetic"},
    "entries":[{"class":[2,2],"s":0,"value":"5"}]})";
  write_file(tmp.path / "na.json", unflagged);
  RunResult na = run({"check", "table", (tmp.path / "na.json").string()});
  CHECK(na.code == 0);
  CHECK(na.out.find("n/a") != std::string::npos);

  RunResult as_json =
      run({"check", "table", (tmp.path / "na.json").string(), "--format", "json"});
  CHECK(as_json.code == 0);
  CHECK(as_json.out.find("\"status\": \"n/a\"") != std::string::npos);
}

TEST_CASE("check monotonicity command") {
  TempDir tmp;
  write_file(tmp.path / "series.json", R"([[-5,"10"],[-3,"4"],[-1,"0"]])");
  CHECK(run({"check", "monotonicity", (tmp.path / "series.json").string()}).code == 0);
  write_file(tmp.path / "bad_series.json", R"([[-5,"2"],[-3,"4"]])");
  CHECK(run({"check", "monotonicity", (tmp.path / "bad_series.json").string()}).code == 1);
}

TEST_CASE("identity and homology check commands") {
  CHECK(run({"check", "abv-complex", "--max-total", "3"}).code == 0);
  CHECK(run({"check", "abv-real", "--max-total", "3"}).code == 0);
  CHECK(run({"check", "class-trop", "--max-degree", "2"}).code == 0);
  CHECK(run({"check", "homology"}).code == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({"compute", "gw", "--surface", "f0"}).code == 2);          // missing class
  CHECK(run({"compute", "gw", "--surface", "nope", "--degree", "1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"compute", "strata"}).code == 2);
}
