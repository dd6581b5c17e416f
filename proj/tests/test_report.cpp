#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ihull/report.hpp"
#include "support.hpp"

using namespace ihull;

namespace {

InputDocument fixture(const std::string& name) { return load_input("fixture:" + name); }
InputDocument file(const std::string& f) { return load_input(std::string(IHULL_DATA_DIR) + "/" + f); }

const Table& table(const Report& r, const std::string& title) {
  for (const auto& t : r.tables)
    if (t.title == title) return t;
  FAIL("no table " << title);
  throw 0;
}

std::vector<std::string> column(const Table& t, std::size_t i) {
  std::vector<std::string> out;
  for (const auto& row : t.rows) out.push_back(row[i].is_string() ? row[i].get<std::string>() : row[i].dump());
  return out;
}

bool keys_sorted(const nlohmann::ordered_json& j) {
  if (j.is_object()) {
    std::string prev;
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first && it.key() < prev) return false;
      prev = it.key();
      first = false;
      if (!keys_sorted(it.value())) return false;
    }
  }
  if (j.is_array())
    for (const auto& v : j)
      if (!keys_sorted(v)) return false;
  return true;
}

}  // namespace

TEST_CASE("constructible table for fixture A") {
  Report r = cmd_constructible(fixture("A"), {});
  const Table& t = table(r, "constructible sets");
  REQUIRE(t.rows.size() == 7);
  std::vector<json> sets;
  for (const auto& row : t.rows) sets.push_back(row[0]);
  CHECK(sets == std::vector<json>{json::array(), {"1"}, {"a"}, {"aa"}, {"1", "a"}, {"a", "aa"}, {"1", "a", "aa"}});
  CHECK(t.rows[4][1] == json{"F_a"});
  CHECK(t.rows[5][1] == json{"E_a"});
  for (const auto& row : t.rows) CHECK_FALSE(row[2].get<std::string>().empty());
}

TEST_CASE("strings table for fixture A") {
  Report r = cmd_strings(fixture("A"), {});
  const Table& t = table(r, "strings");
  CHECK(column(t, 0) == std::vector<std::string>{"δ_1", "δ_a", "δ_aa"});
  CHECK(t.rows[1][3] == false);
  CHECK(t.rows[2][3] == true);
  const Table& d = table(r, "star domains");
  REQUIRE(d.rows.size() == 3);
  CHECK(d.rows[1][0] == "a");
  CHECK(d.rows[1][1] == json{"δ_1", "δ_a"});
  CHECK(d.rows[1][2] == json{"δ_a", "δ_aa"});
}

TEST_CASE("census of the language") {
  Report r = cmd_census(fixture("lang-ab"), {});
  CHECK(table(r, "open ultracharacters").rows.empty());
  const Table& n = table(r, "non-open ultracharacters");
  CHECK(column(n, 0) == std::vector<std::string>{"1*", "a", "b"});
  CHECK(r.notes.back() == "3 ultracharacters, 0 open, 3 non-open");

  Report a = cmd_census(fixture("A"), {});
  CHECK(table(a, "open ultracharacters").rows.size() == 3);
  const Table& q = table(a, "quasi-maximal strings");
  bool delta_a = false;
  for (const auto& row : q.rows)
    if (row[1] == "δ_a") delta_a = row[2] == false;
  CHECK(delta_a);

  CHECK_THROWS_AS(cmd_census(fixture("cat2"), {}), Error);
}

TEST_CASE("the unit marker is rendered as 1*") {
  Report r = cmd_hull(fixture("lang-ab"), {});
  const Table& t = table(r, "inverse hull");
  bool marker = false;
  for (const auto& row : t.rows) marker = marker || row[5] == "1*";
  CHECK(marker);
}

TEST_CASE("verify on fixture A and on the length-two words") {
  Report a = cmd_verify(fixture("A"), {});
  CHECK(a.status == 0);
  for (const auto& row : table(a, "suites").rows) CHECK(row[1] != "FAIL");

  Report w = cmd_verify(fixture("words2"), {});
  CHECK(w.status == 0);
  std::vector<std::string> skipped;
  for (const auto& row : table(w, "suites").rows) {
    CHECK(row[1] != "FAIL");
    if (row[1] == "SKIPPED") skipped.push_back(row[0].get<std::string>() + ": " + row[3].get<std::string>());
  }
  CHECK(skipped == std::vector<std::string>{"orthogonal-idempotents: needs right reductive",
                                            "constructible-ideals: needs categorical at zero",
                                            "categorical-hull-shape: needs categorical at zero"});

  Options one;
  one.suite = "associativity,tight-ultra";
  CHECK(table(cmd_verify(fixture("A"), one), "suites").rows.size() == 2);
  one.suite = "no-such-suite";
  CHECK_THROWS_AS(cmd_verify(fixture("A"), one), Error);
}

TEST_CASE("caps surface as errors") {
  Options o;
  o.max_hull = 3;
  try {
    cmd_hull(fixture("A"), o);
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Cap);
  }
  Options c;
  c.max_cover = 2;
  try {
    cmd_spectrum(fixture("A"), c);
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Budget);
  }
}

TEST_CASE("oracle cross-checks agree on every fixture") {
  Options o;
  o.oracle = true;
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    InputDocument d = fixture(f.name);
    const bool cancellative = property_flags(d.semigroup).zero_left_cancellative;
    Report s = cmd_strings(d, o);
    CHECK(s.status == 0);
    if (!cancellative) continue;
    CHECK(cmd_constructible(d, o).status == 0);
    CHECK(cmd_spectrum(d, o).status == 0);
  }
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
  for (const auto& f : fixtures::all()) {
    for (const auto& cmd : command_names()) {
      CAPTURE(f.name);
      CAPTURE(cmd);
      Report r;
      try {
        r = run_command(cmd, fixture(f.name), {});
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Precondition);
        continue;
      }
      const std::string text = render_json(r);
      CHECK(render_json(run_command(cmd, fixture(f.name), {})) == text);
      CHECK(render_text(run_command(cmd, fixture(f.name), {})) == render_text(r));
      Report back = report_from_json(json::parse(text));
      CHECK(render_json(back) == text);
      CHECK(render_text(back) == render_text(r));
      CHECK(keys_sorted(nlohmann::ordered_json::parse(text)));
    }
  }
  CHECK_THROWS_AS(report_from_json(json{{"command", "x"}}), Error);
  CHECK_THROWS_AS(run_command("nonsense", fixture("A"), {}), Error);
}

TEST_CASE("free product reports") {
  Report z = cmd_freeprod(file("z2.txt"), file("z2.txt"), {"g.M * g.M"}, {});
  CHECK(table(z, "normal forms").rows[0][1] == "1");

  Report d = cmd_freeprod(file("dual_a.txt"), file("dual_b.txt"), {"a.M * a.M", "a.M | a.M b.N", "a.M b.N | b.N"}, {});
  CHECK(table(d, "normal forms").rows[0][1] == "0");
  const Table& q = table(d, "queries");
  CHECK(q.rows[0][2] == true);
  CHECK(q.rows[0][3] == "a.M b.N");
  CHECK(q.rows[1][3] == "0");

  CHECK_THROWS_AS(cmd_freeprod(file("dual_a.txt"), file("dual_b.txt"), {"a.Q"}, {}), Error);
  CHECK_THROWS_AS(cmd_freeprod(fixture("nilpotent"), file("dual_b.txt"), {"1"}, {}), Error);
}

TEST_CASE("text rendering") {
  const std::string t = render_text(cmd_props(fixture("B"), {}));
  CHECK(t.rfind("props: fixture:B\n", 0) == 0);
  CHECK(t.find("\nproperties (9)\n") != std::string::npos);
  CHECK(t.find("0-left cancellative") != std::string::npos);
}
