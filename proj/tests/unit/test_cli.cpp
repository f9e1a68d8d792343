#include <algorithm>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "germ/cli/report.hpp"
#include "germ/poly/parse.hpp"

using namespace germ;

namespace {

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(GERM_CORPUS_DIR)) {
    if (e.path().extension() == ".germ") out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Line and column of the error raised for `text`, or (0, 0) when it parses.
std::pair<std::size_t, std::size_t> error_at(const std::string& text, std::string* message = nullptr) {
  try {
    parse_germ_file(text);
  } catch (const GermFileError& e) {
    if (message != nullptr) *message = e.message();
    return {e.line(), e.column()};
  }
  return {0, 0};
}

const char* kPlanes = R"(# coordinate planes
name: planes
field: R
vars: x y z
map: x*y, z^2
stratum: closure = z; exclude = x*y
numeric.starts: 12
numeric.radius_ladder: geometric 0.1 0.5 4
numeric.policy: serial
expect.tame: yes/symbolic
expect.nmg: yes
)";

}  // namespace

TEST_CASE("germ files parse into specs") {
  GermSpec s = parse_germ_file(kPlanes);
  CHECK(s.name == "planes");
  CHECK(s.field == Field::Real);
  CHECK(s.kind == GermKind::General);
  CHECK(s.vars == std::vector<std::string>{"x", "y", "z"});
  REQUIRE(s.components.size() == 2);
  Variables v(s.vars);
  CHECK(s.components[0] == parse_polynomial("x*y", v));
  REQUIRE(s.strata.size() == 1);
  CHECK(s.strata[0].closure.size() == 1);
  CHECK(s.strata[0].excluded.size() == 1);
  CHECK(s.expect.at("tame").value == "yes");
  CHECK(*s.expect.at("tame").provenance == "symbolic");
  CHECK(!s.expect.at("nmg").provenance);

  NumericConfig cfg = numeric_config(s);
  CHECK(cfg.starts == 12);
  CHECK(cfg.policy == ExecutionPolicy::Serial);
  REQUIRE(cfg.radius_ladder.size() == 4);
  CHECK(cfg.radius_ladder[0] == doctest::Approx(0.1));
  CHECK(cfg.radius_ladder[3] == doctest::Approx(0.1 * 0.125));

  auto strat = stratification(s);
  REQUIRE(strat);
  CHECK(strat->provenance == Stratification::Provenance::UserSupplied);
  for (const auto& st : strat->strata) CHECK(st.generic_rank >= 0);

  GermSpec pair = parse_germ_file("name: p\nfield: C\nkind: fbarg\nvars: z w\nrealvars: a b c d\nf: z*(1 + w)\ng: z\n");
  CHECK(pair.kind == GermKind::Fbarg);
  CHECK(pair.germ().components.size() == 2);
  CHECK(pair.strata_vars().size() == 4);
}

TEST_CASE("germ file errors carry line and column") {
  std::string msg;
  auto at = error_at("name: a\nfield: R\nvars: x y\nmap: x*y, q + x\n", &msg);
  CHECK(at.first == 4);
  CHECK(at.second == 11);
  CHECK(msg.find("unknown variable") != std::string::npos);

  at = error_at("name: a\nfield: R\nvars: x y\nmap: x + 1\n", &msg);
  CHECK(at.first == 4);
  CHECK(msg.find("does not vanish at origin") != std::string::npos);

  at = error_at("name: a\nfield: Q\nvars: x\nmap: x\n", &msg);
  CHECK(at.first == 2);
  CHECK(msg.find("R or C") != std::string::npos);

  at = error_at("name: a\nfield: R\nvars: x\nmap: x\nbogus: 1\n", &msg);
  CHECK(at.first == 5);
  CHECK(msg.find("unknown key") != std::string::npos);

  at = error_at("name: a\nfield: R\nvars: x\n", &msg);
  CHECK(at.first > 0);
  CHECK(msg.find("missing") != std::string::npos);

  at = error_at("name: a\nfield: R\nvars: x y\nmap: x*y\nstratum: closure = x; exclude = \n", &msg);
  CHECK(at.first == 5);

  at = error_at("name: a\nfield: R\nvars: x\nmap: x\nexpect.nmg: yes/maybe\n", &msg);
  CHECK(at.first == 5);
  CHECK(msg.find("provenance") != std::string::npos);

  CHECK(error_at("name: a\nfield: R\nvars: x\nmap: x\nnumeric.warp: 3\n").first == 5);
  CHECK(error_at("name: a\nfield: C\nkind: pair\nvars: x\nmap: x\n").first > 0);
  CHECK(error_at("name: a\nfield: R\nvars: x\nmap: x\n").first == 0);
}

TEST_CASE("load_germ_file prefixes the path") {
  auto path = std::filesystem::temp_directory_path() / "germ_cli_bad.germ";
  {
    std::ofstream out(path);
    out << "name: bad\nfield: R\nvars: x\nmap: x + 1\n";
  }
  try {
    load_germ_file(path.string());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind(path.string() + ":4:", 0) == 0);
  }
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_germ_file("/nonexistent/file.germ"), Error);
}

TEST_CASE("render and parse round-trip every corpus file") {
  for (const auto& f : corpus_files()) {
    GermSpec s = load_germ_file(f);
    std::string text = render_germ_file(s);
    GermSpec back = parse_germ_file(text);
    CHECK_MESSAGE(same_spec(s, back), f);
    CHECK(render_germ_file(back) == text);
  }
  GermSpec s = parse_germ_file(kPlanes);
  CHECK(same_spec(s, parse_germ_file(render_germ_file(s))));
}

TEST_CASE("text and JSON reports carry the same verdicts") {
  for (const auto& f : corpus_files()) {
    GermSpec spec = load_germ_file(f);
    AnalyzeOptions opts;
    opts.stratification = stratification(spec);
    VerdictReport r = analyze(spec.germ(), opts);
    nlohmann::json j = to_json(r);
    std::string text = render_text(r);
    for (const auto& [name, v] : verdict_fields(r)) {
      const nlohmann::json* node = &j["verdicts"];
      std::string key = name;
      if (auto dot = key.find('.'); dot != std::string::npos) {
        node = &(*node)[key.substr(0, dot)];
        key = key.substr(dot + 1);
      }
      const auto& jv = (*node)[key];
      std::string line = name + ": " + jv["value"].get<std::string>() + " [" + jv["provenance"].get<std::string>() + "]";
      CHECK_MESSAGE(text.find(line) != std::string::npos, spec.name, " ", line);
      CHECK(j["provenance"][name] == jv["provenance"]);
      CHECK(jv["value"] == v->value);
    }
    CHECK(j["invariant_violations"].empty());
    CHECK(j["germ"]["name"] == spec.name);
  }
}

TEST_CASE("fixture runs compare expectations") {
  GermSpec s = parse_germ_file("name: sub\nfield: R\nvars: x y z\nmap: x, y\nexpect.image_germ: yes/symbolic\n");
  auto ok = run_fixture(s, {});
  CHECK(ok.passed);
  CHECK(ok.mismatches.empty());
  s.expect["image_germ"] = {"no", std::nullopt};
  s.expect["tame"] = {"yes", std::string("empirical")};
  auto bad = run_fixture(s, {});
  CHECK(!bad.passed);
  CHECK(bad.mismatches.size() == 2);
  s.expect.clear();
  s.expect["singular_values_dim"] = {"0", std::nullopt};
  CHECK(run_fixture(s, {}).mismatches.front().find("absent") != std::string::npos);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  GermSpec s = load_germ_file(std::string(GERM_CORPUS_DIR) + "/blowup.germ");
  AnalyzeOptions opts;
  opts.numeric = true;
  auto a = run_fixture(s, opts);
  auto b = run_fixture(s, opts);
  REQUIRE(a.report);
  REQUIRE(b.report);
  CHECK(to_json(*a.report).dump() == to_json(*b.report).dump());
  CHECK(a.report->numeric_ran);
}
