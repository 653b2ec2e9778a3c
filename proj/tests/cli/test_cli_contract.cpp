#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "ckron/ckron.hpp"

using namespace ckron;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string cli_path() {
  const char* env = std::getenv("CKRON_CLI");
  REQUIRE_MESSAGE(env != nullptr, "CKRON_CLI must point at the built binary");
  return env;
}

RunResult run_cli(const std::string& args) {
  const std::string command = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class TempDir {
public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("ckron-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string file(const std::string& name, const CMatrix& m) const {
    const std::string p = (path_ / name).string();
    write_matrix_file(p, m);
    return p;
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

private:
  fs::path path_;
};

const double kSqrt2 = std::sqrt(2.0);

}  // namespace

TEST_CASE("t3 subcommand: constructed positive holds with case SingleA") {
  TempDir dir;
  const auto a = dir.file("negI2.json", -1.0 * CMatrix::identity(2));
  const auto b = dir.file("onePlusSqrt2I2.json", (1.0 + kSqrt2) * CMatrix::identity(2));

  const auto run = run_cli("t3 --a " + a + " --b " + b);
  CHECK(run.exit_code == 0);
  const json doc = json::parse(run.output);
  CHECK(doc.at("verdict") == "holds");
  CHECK(doc.at("case") == "SingleA");
  CHECK(doc.at("residuals").at("direct_residual").get<double>() <= 1e-9);
  CHECK(doc.at("tolerances").at("tol_eq").get<double>() == 1e-9);
}

TEST_CASE("classify subcommand: the diag(1,0) pair fails with exit 1") {
  TempDir dir;
  const auto a = dir.file("diag10.json", CMatrix::diagonal(std::vector<double>{1.0, 0.0}));

  const auto run = run_cli("classify --a " + a + " --b " + a);
  CHECK(run.exit_code == 1);
  const json doc = json::parse(run.output);
  CHECK(doc.at("verdict") == "fails");
  CHECK(doc.at("case") == "NotFactorable");
}

TEST_CASE("idpow subcommand: parity of the identity power") {
  CHECK(run_cli("idpow --m 2 --k 5").exit_code == 0);
  CHECK(run_cli("idpow --m 2 --k 2").exit_code == 1);
  CHECK(run_cli("idpow --m 3 --k 1").exit_code == 0);
}

TEST_CASE("reports are byte-stable across consecutive runs") {
  TempDir dir;
  const auto a = dir.file("a.json", -1.0 * CMatrix::identity(2));
  const auto b = dir.file("b.json", (1.0 - kSqrt2) * CMatrix::identity(2));

  for (const std::string& command :
       {"t3 --a " + a + " --b " + b, "classify --a " + a + " --b " + b,
        std::string("idpow --m 2 --k 5"), "cayley --a " + a,
        std::string("companion --value -1")}) {
    const auto first = run_cli(command);
    const auto second = run_cli(command);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.output == second.output);
    CHECK_FALSE(first.output.empty());
  }
}

TEST_CASE("cayley then inv-cayley round trip through files") {
  TempDir dir;
  const CMatrix a{{cdouble{0.7, 0.0}, cdouble{0.2, 0.4}}, {cdouble{0.2, -0.4}, cdouble{-1.1, 0.0}}};
  const auto a_path = dir.file("a.json", a);
  const auto u_path = dir.path("u.json");
  const auto back_path = dir.path("back.json");

  CHECK(run_cli("cayley --a " + a_path + " --out " + u_path).exit_code == 0);
  CHECK(run_cli("inv-cayley --a " + u_path + " --out " + back_path).exit_code == 0);

  const CMatrix back = read_matrix_file(back_path);
  CHECK(max_abs_diff(back, a) <= 1e-9);
}

TEST_CASE("gmap subcommand: in-domain pair holds, zero pair is an error") {
  TempDir dir;
  const auto one = dir.file("one.json", CMatrix{{1.0}});
  const auto zero1 = dir.file("zero1.json", CMatrix{{0.0}});
  const auto zero2 = dir.file("zero2.json", CMatrix::zero(2, 2));

  const auto good = run_cli("gmap --a " + one + " --b " + zero1);
  CHECK(good.exit_code == 0);
  const json doc = json::parse(good.output);
  CHECK(doc.at("residuals").at("defining_identity").get<double>() <= 1e-9);
  CHECK(doc.at("outputs").at("result").at("data")[0][0].get<double>() ==
        doctest::Approx(-1.0));

  const auto bad = run_cli("gmap --a " + zero2 + " --b " + zero2);
  CHECK(bad.exit_code == 2);
  CHECK(json::parse(bad.output).at("verdict") == "error");
}

TEST_CASE("factorize and hfactor subcommands") {
  TempDir dir;
  const auto d10 = dir.file("diag10.json", CMatrix::diagonal(std::vector<double>{1.0, 0.0}));
  const auto a = dir.file("a.json", CMatrix::diagonal(std::vector<double>{2.0, 0.5}));
  const auto b = dir.file("b.json", CMatrix::diagonal(std::vector<double>{3.0, 1.0 / 3.0}));

  const auto blocked = run_cli("factorize --a " + d10 + " --b " + d10);
  CHECK(blocked.exit_code == 1);
  CHECK(json::parse(blocked.output).at("case") == "NotRankOne");

  const auto c_path = dir.path("c.json");
  const auto d_path = dir.path("d.json");
  const auto split =
      run_cli("factorize --a " + a + " --b " + b + " --out-c " + c_path + " --out-d " + d_path);
  CHECK(split.exit_code == 0);
  const CMatrix c_mat = read_matrix_file(c_path);
  const CMatrix d_mat = read_matrix_file(d_path);
  const Tolerances tol;
  const CMatrix u = cayley(kron(read_matrix_file(a), read_matrix_file(b)), tol);
  CHECK(max_abs_diff(kron(c_mat, d_mat), u) <= 1e-7);

  const auto refactored = run_cli("hfactor --a " + a + " --b " + b);
  CHECK(refactored.exit_code == 0);
  CHECK(json::parse(refactored.output).at("residuals").at("identity").get<double>() <= 1e-8);

  CHECK(run_cli("hfactor --a " + d10 + " --b " + d10).exit_code == 1);
}

TEST_CASE("companion subcommand: two roots for -1, none for 1") {
  const auto good = run_cli("companion --value -1");
  CHECK(good.exit_code == 0);
  const json doc = json::parse(good.output);
  CHECK(doc.at("residuals").at("b1").get<double>() == doctest::Approx(1.0 - kSqrt2));
  CHECK(doc.at("residuals").at("b2").get<double>() == doctest::Approx(1.0 + kSqrt2));

  const auto none = run_cli("companion --value 1");
  CHECK(none.exit_code == 1);
  CHECK(json::parse(none.output).at("case") == "NoRealCompanion");

  CHECK(run_cli("companion --value 0").exit_code == 2);
}

TEST_CASE("multi subcommand: five identity factors hold, two fail") {
  TempDir dir;
  const auto id = dir.file("id2.json", CMatrix::identity(2));

  const auto five = run_cli("multi --inputs " + id + " " + id + " " + id + " " + id + " " + id);
  CHECK(five.exit_code == 0);
  CHECK(json::parse(five.output).at("verdict") == "holds");

  const auto two = run_cli("multi --inputs " + id + " " + id);
  CHECK(two.exit_code == 1);
}

TEST_CASE("phase2x2 subcommand") {
  const auto hit = run_cli("phase2x2 --params 1 0 0 0");
  CHECK(hit.exit_code == 0);
  const json doc = json::parse(hit.output);
  CHECK(doc.at("residuals").at("phase").get<double>() ==
        doctest::Approx(-std::numbers::pi / 2.0));

  CHECK(run_cli("phase2x2 --params 2 0 0 0").exit_code == 1);
}

TEST_CASE("matrices can arrive on standard input") {
  TempDir dir;
  const auto zero = dir.file("zero.json", CMatrix::zero(1, 1));
  const auto run = run_cli("cayley --a - < " + zero);
  CHECK(run.exit_code == 0);
  const json parsed = json::parse(run.output);
  CHECK(parsed.at("outputs").at("result").at("data")[0][0].get<double>() ==
        doctest::Approx(-1.0));
}

TEST_CASE("operational failures exit with 2") {
  TempDir dir;
  CHECK(run_cli("cayley --a /nonexistent.json").exit_code == 2);
  CHECK(run_cli("nonsense-subcommand").exit_code == 2);
  CHECK(run_cli("t3 --a missing-b.json").exit_code == 2);

  // Mathematical falsity stays exit 1 even with scaled tolerances.
  const auto a = dir.file("a.json", CMatrix::identity(2));
  const auto run = run_cli("t3 --a " + a + " --b " + a + " --tol 1e-7");
  CHECK(run.exit_code == 1);
  CHECK(json::parse(run.output).at("tolerances").at("tol_eq").get<double>() == 1e-7);

  // Malformed matrix file.
  const auto bad_path = dir.path("bad.json");
  std::ofstream(bad_path) << "{\"rows\":1}";
  CHECK(run_cli("cayley --a " + bad_path).exit_code == 2);

  // Non-Hermitian input to a Hermitian-only command.
  const auto nonherm = dir.file("nonherm.json", CMatrix{{0.0, 1.0}, {0.0, 0.0}});
  CHECK(run_cli("cayley --a " + nonherm).exit_code == 2);
}
