#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cuntz/commands.hpp"
#include "cuntz/random_gen.hpp"
#include "cuntz/text.hpp"
#include "fixtures.hpp"

using namespace cuntz;
using nlohmann::json;

namespace {

struct Run {
  int code;
  json out;
  std::string raw_out, raw_err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  Run r{code, json(), out.str(), err.str()};
  if (!r.raw_out.empty()) r.out = json::parse(r.raw_out);
  return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "cuntz_cli_tests";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::ofstream(p) << content;
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("unitary files parse and round-trip") {
  PolyUnitary s = parse_unitary("n=2\n11:121\n121:11\n122:122\n2:2\n");
  CHECK(s == fixtures::superu());
  PolyUnitary id = parse_unitary("n=2\n1:1\n2:2\n");
  CHECK(id == fixtures::identity2());

  try {
    parse_unitary("n=2\n11:1\n12:21\n2:21\n");
    FAIL("expected partition failure");
  } catch (const NotAPartitionError& e) {
    CHECK(e.side == "right");
    CHECK(e.witness == "21");
  }

  CHECK_THROWS_AS(parse_unitary("1:1\n"), ParseError);
  CHECK_THROWS_AS(parse_unitary("n=2\n13:1\n"), ParseError);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    PolyUnitary u = random_unitary(2 + static_cast<int>(seed % 2), 5, 4, seed);
    CHECK(parse_unitary(format_unitary(u)) == u);
  }
}

TEST_CASE("word formats include brackets for wide alphabets") {
  CHECK(format_word(Word(), 2) == "e");
  CHECK(format_word(fixtures::W("121"), 2) == "121");
  Word wide(std::vector<int>{1, 12, 3});
  CHECK(format_word(wide, 12) == "[1,12,3]");
  CHECK(parse_word("[1,12,3]", 12) == wide);
  CHECK(parse_word("e", 12) == Word());
}

TEST_CASE("diag command emits the verdict with the cycle") {
  auto file = write_temp("example35.u", "n=2\n1:22\n21:21\n22:1\n");
  Run r = run({"diag", file.string()});
  CHECK(r.code == 0);
  CHECK(r.out["schema"] == "1");
  CHECK(r.out["verdict"] == "not_automorphism");
  json expected_cycle = json::array({json::array({"1"}), "2", json::array({"21", "22"}), "2",
                                     json::array({"1"})});
  CHECK(r.out["cycle"] == expected_cycle);
  CHECK(r.out["vertices"] == 5);
  CHECK(r.out["edges"] == 5);

  auto dot_path = write_temp("example35.dot", "");
  run({"diag", file.string(), "--dot", dot_path.string()});
  CHECK(slurp(dot_path).find("\"1\" -> \"21,22\" [label=\"(2)\"]") != std::string::npos);
}

TEST_CASE("invert command on the involutive example") {
  auto file = write_temp("superu.u", "n=2\n11:121\n121:11\n122:122\n2:2\n");
  Run r = run({"invert", file.string(), "--depth", "12"});
  CHECK(r.code == 0);
  CHECK(r.out["verdict"] == "invertible");
  CHECK(r.out["certificates"].size() == 56);
  CHECK(r.out["budget"]["depth"] == 12);
}

TEST_CASE("dim command reproduces the one-dimensional corner") {
  auto file = write_temp("example33a.u", "n=2\n11:1\n12:21\n2:22\n");
  Run r = run({"dim", file.string(), "--corner", "2", "--level", "6"});
  CHECK(r.code == 0);
  CHECK(r.out["dimension"] == 1);
}

TEST_CASE("stabilize exit codes distinguish certificates from budgets") {
  auto good = write_temp("id.u", "n=2\n1:1\n2:2\n");
  Run ok = run({"stabilize", good.string(), "--word", "121", "--max-k", "50"});
  CHECK(ok.code == 0);
  CHECK(ok.out["verdict"] == "stabilized");
  CHECK(ok.out["k"] == 3);

  auto bad = write_temp("example33b.u", "n=2\n21:1\n22:21\n1:22\n");
  Run ex = run({"stabilize", bad.string(), "--word", "12", "--max-k", "50"});
  CHECK(ex.code == 2);
  CHECK(ex.out["verdict"] == "budget_exceeded");
}

TEST_CASE("check-level command") {
  auto file = write_temp("example36.u",
                         "n=2\n12:21\n11:221\n21:222\n2222:11\n2221:122\n221:121\n");
  Run r = run({"check-level", file.string(), "--max-k", "50"});
  CHECK(r.code == 0);
  CHECK(r.out["verdict"] == "all_stabilized");
  CHECK(r.out["level"] == 4);

  auto bad = write_temp("example33a.u", "n=2\n11:1\n12:21\n2:22\n");
  Run f = run({"check-level", bad.string(), "--max-k", "50"});
  CHECK(f.code == 2);
  CHECK(f.out["verdict"] == "failures");
}

TEST_CASE("compose and adjoint write unitary files") {
  auto file = write_temp("superu.u", "n=2\n11:121\n121:11\n122:122\n2:2\n");
  auto out = write_temp("square.u", "");
  Run r = run({"compose", file.string(), file.string(), "-o", out.string()});
  CHECK(r.code == 0);
  CHECK(parse_unitary(slurp(out)) ==
        PolyUnitary::check_unitary(PolyMap::identity(2)));

  auto adj = write_temp("adj.u", "");
  Run a = run({"adjoint", file.string(), "-o", adj.string()});
  CHECK(a.code == 0);
  CHECK(parse_unitary(slurp(adj)) == fixtures::superu().adjoint_unitary());
}

TEST_CASE("fixed-points command") {
  auto file = write_temp("superu.u", "n=2\n11:121\n121:11\n122:122\n2:2\n");
  Run r = run({"fixed-points", file.string(), "--depth", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.contains("fixed_approx"));

  auto a33 = write_temp("example33a.u", "n=2\n11:1\n12:21\n2:22\n");
  Run cls = run({"fixed-points", a33.string(), "--depth", "4", "--ad-classify"});
  CHECK(cls.code == 0);
  CHECK(cls.out["ad"]["attractors"].size() == 1);
  CHECK(cls.out["ad"]["repellers"].size() == 1);
  CHECK(cls.out["fixed_approx"].is_null());

  Run err = run({"fixed-points", a33.string(), "--depth", "4"});
  CHECK(err.code == 1);
}

TEST_CASE("orbit command walks the point map") {
  auto a33 = write_temp("example33a.u", "n=2\n11:1\n12:21\n2:22\n");
  Run r = run({"orbit", a33.string(), "--point", "1112:1", "--steps", "3"});
  CHECK(r.code == 0);
  REQUIRE(r.out["points"].size() == 4);
  // the preperiod grows one letter of 1s per step toward the attractor
  CHECK(r.out["points"][0]["preperiod"] == "1112");
  CHECK(r.out["points"][1]["preperiod"] == "11112");
}

TEST_CASE("random command is deterministic per seed") {
  auto out1 = write_temp("r1.u", "");
  auto out2 = write_temp("r2.u", "");
  Run a = run({"random", "--n", "2", "--pairs", "3", "--max-len", "3", "--seed", "7", "-o",
               out1.string()});
  Run b = run({"random", "--n", "2", "--pairs", "3", "--max-len", "3", "--seed", "7", "-o",
               out2.string()});
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(slurp(out1) == slurp(out2));
  PolyUnitary u = parse_unitary(slurp(out1));
  CHECK(u.pairs().size() == 3);

  // size adjustment and infeasibility
  CHECK(random_unitary(2, 2, 3, 5).pairs().size() == 2);
  CHECK(random_unitary(3, 2, 3, 5).pairs().size() == 3);
  CHECK(random_unitary(3, 4, 3, 5).pairs().size() == 4);
  CHECK_THROWS_AS(random_unitary(2, 100, 2, 5), InfeasibleSizeError);
}

TEST_CASE("verify and error exit codes") {
  auto file = write_temp("ok.u", "n=2\n1:1\n2:2\n");
  Run r = run({"verify", file.string()});
  CHECK(r.code == 0);
  CHECK(r.out["valid"] == true);
  CHECK(r.out["ell_prime"] == 1);

  auto bad = write_temp("bad.u", "n=2\n11:1\n12:21\n2:21\n");
  Run e = run({"verify", bad.string()});
  CHECK(e.code == 1);
  CHECK(e.raw_err.find("right") != std::string::npos);

  Run missing = run({"verify", "/nonexistent/nowhere.u"});
  CHECK(missing.code == 1);
}
