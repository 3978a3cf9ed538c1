#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "leibniz/fixtures.hpp"

using namespace leibniz;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(LEIBNIZ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// a per-process scratch directory for CLI inputs
const std::string& testing_dir() {
  static const std::string dir = [] {
    char tmpl[] = "/tmp/leibniz_cli_XXXXXX";
    return std::string(mkdtemp(tmpl));
  }();
  return dir;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = testing_dir() + "/" + name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

}  // namespace

TEST_CASE("validate accepts every fixture with exit 0") {
  for (const Fixture& f : all_fixtures()) {
    const std::string path = write_temp("fix.json", serialize(f.doc));
    const RunResult r = run_cli("validate " + path);
    INFO(f.name);
    CHECK(r.exit_code == 0);
  }
}

TEST_CASE("validate reports failure with exit 1") {
  const FieldSpec g2 = FieldSpec::gf(2);
  const Document d{DocKind::algebra, kSchemaVersion,
                   LeibnizAlgebra::candidate(g2, 1, {g2.one()})};
  const std::string path = write_temp("bad_algebra.json", serialize(d));
  const RunResult r = run_cli("validate " + path + " --json");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"leibniz_ok\": false") != std::string::npos);
}

TEST_CASE("malformed input and usage errors exit 2") {
  const std::string path = write_temp("garbage.json", "{ not json");
  CHECK(run_cli("validate " + path).exit_code == 2);
  CHECK(run_cli("validate /nonexistent/file.json").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("fixtures --name NoSuchFixture").exit_code == 2);
}

TEST_CASE("fixtures output is deterministic and parseable") {
  const RunResult a = run_cli("fixtures --name \"PairGpd(A2)\"");
  const RunResult b = run_cli("fixtures --name \"PairGpd(A2)\"");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const Document d = parse_document(a.out);
  CHECK(d.kind == DocKind::groupoid);
  CHECK(serialize(d) == a.out);
}

TEST_CASE("fixtures without a name lists all names") {
  const RunResult r = run_cli("fixtures");
  CHECK(r.exit_code == 0);
  for (const Fixture& f : all_fixtures())
    CHECK(r.out.find(f.name + "\n") != std::string::npos);
}

TEST_CASE("check covering on the identity covering exits 0") {
  const std::string path = write_temp(
      "idcover.json", serialize(fixture("IdCover(PairGpd(A2))")));
  const RunResult r = run_cli("check covering " + path + " --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"covering\": true") != std::string::npos);
}

TEST_CASE("convert delta then validate round-trips with exit 0") {
  const std::string path = write_temp("idx.json", serialize(fixture("IdX(A2)")));
  const RunResult converted = run_cli("convert delta " + path);
  REQUIRE(converted.exit_code == 0);
  const std::string out_path = write_temp("delta.json", converted.out);
  CHECK(run_cli("validate " + out_path).exit_code == 0);
  // and back through eta
  const RunResult back = run_cli("convert eta " + out_path);
  REQUIRE(back.exit_code == 0);
  const std::string back_path = write_temp("eta.json", back.out);
  CHECK(run_cli("validate " + back_path).exit_code == 0);
}

TEST_CASE("build semidirect emits a valid extension document") {
  const Document action_doc{DocKind::action, kSchemaVersion,
                            LeibnizAction::by_bracket(fixtures::a2())};
  const std::string path = write_temp("action.json", serialize(action_doc));
  const RunResult r = run_cli("build semidirect " + path);
  REQUIRE(r.exit_code == 0);
  const Document d = parse_document(r.out);
  CHECK(d.kind == DocKind::extension);
  CHECK(validate_split_extension(std::get<SplitExtension>(d.body)));
  const std::string out_path = write_temp("ext.json", r.out);
  CHECK(run_cli("validate " + out_path).exit_code == 0);
}

TEST_CASE("roundtrip on an xmod fixture verifies the isomorphism") {
  const std::string path = write_temp("idx2.json", serialize(fixture("IdX(A2)")));
  const RunResult r = run_cli("roundtrip " + path + " --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"verified\": true") != std::string::npos);
}

TEST_CASE("lift through the identity covering returns the arrow itself") {
  const std::string path = write_temp(
      "idcover2.json", serialize(fixture("IdCover(PairGpd(A2))")));
  const RunResult r =
      run_cli("lift " + path + " --arrow 1,2,3,4 --at 1,2 --json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("[\n    \"1\",\n    \"2\",\n    \"3\",\n    \"4\"\n  ]") !=
        std::string::npos);
  // mismatched base point is a usage error
  CHECK(run_cli("lift " + path + " --arrow 1,2,3,4 --at 0,0").exit_code == 2);
}

TEST_CASE("enumerate streams one canonical line per algebra") {
  const RunResult r = run_cli("enumerate --kind leibniz --dim 1 --p 2");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    ++count;
    const Document d = parse_document(line);
    CHECK(std::get<LeibnizAlgebra>(d.body).validate().leibniz_ok);
  }
  CHECK(count == 1);
  // determinism
  CHECK(run_cli("enumerate --kind leibniz --dim 1 --p 2").out == r.out);
  // budget violations are usage errors
  CHECK(run_cli("enumerate --kind leibniz --dim 3 --p 2").exit_code == 2);
}

TEST_CASE("build action-groupoid emits the covering projection") {
  // canonical action of PairGpd(A2) on its objects
  const GroupoidAction a = GroupoidAction::canonical(fixtures::pair_gpd_a2());
  const std::string path = write_temp(
      "gpd_action.json", serialize(Document{DocKind::gpd_action, kSchemaVersion, a}));
  CHECK(run_cli("validate " + path).exit_code == 0);
  const RunResult r = run_cli("build action-groupoid " + path);
  REQUIRE(r.exit_code == 0);
  const Document d = parse_document(r.out);
  CHECK(d.kind == DocKind::gpd_morphism);
  CHECK(check_covering(std::get<GroupoidMorphism>(d.body)));
  const std::string out_path = write_temp("ag.json", r.out);
  CHECK(run_cli("validate " + out_path).exit_code == 0);
  CHECK(run_cli("check covering " + out_path).exit_code == 0);
}

TEST_CASE("check covering-xmod on the identity morphism of IdX(A2)") {
  const std::string xmod_path = write_temp("cx_src.json", serialize(fixture("IdX(A2)")));
  const LeibnizAlgebra a2 = fixtures::a2();
  const Document f1{DocKind::morphism, kSchemaVersion, LinearMorphism::identity(a2)};
  const std::string f1_path = write_temp("cx_f1.json", serialize(f1));
  const RunResult r = run_cli("check covering-xmod " + xmod_path + " " + xmod_path +
                              " " + f1_path + " " + f1_path);
  CHECK(r.exit_code == 0);
}
