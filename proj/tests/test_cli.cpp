#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "corpus_runner.hpp"
#include "zfarkas/cli.hpp"

using namespace zfarkas;
using zfarkas::json_io::Json;
using zfarkas::testing::run_cli;
using zfarkas::testing::slurp;

namespace {

const std::string kCorpus = ZFARKAS_CORPUS_DIR;
const std::string kExe = ZFARKAS_CLI_PATH;

Json cli_json(const std::vector<std::string>& args) {
  const auto r = run_cli(kExe, args);
  EXPECT_EQ(r.exit_code, 0);
  return Json::parse(r.out);
}

Json run_in_process(const std::string& name, const Json& input, cli::Method method = cli::Method::Cert) {
  cli::Command cmd;
  cmd.name = name;
  cmd.method = method;
  return cli::execute(cmd, input);
}

}  // namespace

TEST(Cli, WorkedBoxInstance) {
  const std::string input = kCorpus + "/worked/box_worked.json";
  for (const char* m : {"cert", "recursive", "oracle"}) {
    const Json feasible = cli_json({"feasible", "-m", m, input});
    EXPECT_EQ(feasible, Json({{"feasible", true}})) << m;
    const Json solve = cli_json({"solve", "-m", m, input});
    EXPECT_EQ(solve.at("witness"), Json({"0", "0", "0"})) << m;
  }
  EXPECT_EQ(cli_json({"certs", input}).at("exprs").size(), 6u);
}

TEST(Cli, WorkedCertification) {
  const Json out = cli_json({"certify", kCorpus + "/worked/certify_worked.json"});
  EXPECT_EQ(out.at("in_class"), true);
  EXPECT_EQ(out.at("chain_length"), 2);
  EXPECT_EQ(out.at("certificate").at("v"), Json({"2", "4"}));
  EXPECT_EQ(out.at("certificate").at("child").at("v"), Json({"2"}));
  EXPECT_TRUE(out.at("certificate").at("child").at("child").is_null());
}

TEST(Cli, WorkedRefinement) {
  const Json out = cli_json({"qpsolve", kCorpus + "/worked/qp_worked.json"});
  EXPECT_EQ(out.at("solvable"), true);
  EXPECT_TRUE(out.at("reason").is_null());
  EXPECT_EQ(out.at("solution"), Json({"1/2", "0"}));
  EXPECT_EQ(out.at("prime_set"), Json({"2", "3"}));
  EXPECT_TRUE(out.at("trace").at("steps").is_array());
}

TEST(Cli, WorkedCircuits) {
  const Json out = cli_json({"circuits", kCorpus + "/worked/circuits_worked.json"});
  ASSERT_EQ(out.at("circuits").size(), 1u);
  EXPECT_EQ(out.at("circuits")[0].at("support"), Json({1, 2}));
  EXPECT_EQ(out.at("circuits")[0].at("coeffs"), Json({"3", "-2"}));
  EXPECT_EQ(out.at("prime_set"), Json({"2", "3"}));
}

TEST(Cli, QpFailureReasons) {
  EXPECT_EQ(cli_json({"qpsolve", kCorpus + "/worked/qp_not_in_span.json"}).at("reason"), "not-in-span");
  EXPECT_EQ(cli_json({"qpsolve", kCorpus + "/worked/qp_no_rational.json"}).at("reason"), "no-rational-solution");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli(kExe, {"certify", kCorpus + "/worked/malformed.json"}).exit_code, cli::kMalformedInput);
  EXPECT_EQ(run_cli(kExe, {"certify", kCorpus + "/does-not-exist.json"}).exit_code, cli::kMalformedInput);
  EXPECT_EQ(run_cli(kExe, {"feasible", "-m", "cert", kCorpus + "/worked/not_in_class.json"}).exit_code,
            cli::kMalformedInput);
  EXPECT_EQ(run_cli(kExe, {"feasible", "-m", "bogus", kCorpus + "/worked/box_worked.json"}).exit_code,
            cli::kMalformedInput);
  EXPECT_EQ(run_cli(kExe, {"feasible", "-m", "oracle", "--cap", "3", kCorpus + "/worked/box_worked.json"}).exit_code,
            cli::kResourceLimit);
  EXPECT_EQ(run_cli(kExe, {"feasible", "-m", "oracle", kCorpus + "/worked/not_in_class.json"}).exit_code, cli::kOk);
}

TEST(Cli, RunMapsExceptionsToExitCodes) {
  std::ostringstream out, err;
  cli::Command cmd;
  cmd.name = "frobnicate";
  cmd.input_path = kCorpus + "/worked/box_worked.json";
  EXPECT_EQ(cli::run(cmd, out, err), cli::kMalformedInput);
  EXPECT_NE(err.str().find("unknown command"), std::string::npos);
  EXPECT_TRUE(out.str().empty());
}

TEST(Cli, SchemaErrors) {
  EXPECT_THROW(run_in_process("certify", Json::parse(R"({"ambient_dim": 2})")), json_io::SchemaError);
  EXPECT_THROW(run_in_process("certify", Json::parse(R"({"ambient_dim": 2, "generators": [["1"]]})")),
               json_io::SchemaError);
  EXPECT_THROW(run_in_process("certify", Json::parse(R"({"ambient_dim": 1, "generators": [[1.5]]})")),
               json_io::SchemaError);
  EXPECT_THROW(
      run_in_process("feasible", Json::parse(R"({"ambient_dim": 1, "generators": [["1"]], "lower": ["0"]})")),
      json_io::SchemaError);
  EXPECT_THROW(run_in_process("qpsolve", Json::parse(R"({"vectors": [["1"]], "target": ["1"],
                                                         "lower": ["1/3"], "upper": ["1"]})")),
               BoundsNotInQp);
  EXPECT_THROW(run_in_process("certify", Json::parse(R"({"ambient_dim": 1, "generators": [["0"]]})")),
               cli::NotInClass);
  // Plain JSON integers are accepted alongside strings.
  EXPECT_EQ(run_in_process("certify", Json::parse(R"({"ambient_dim": 1, "generators": [[4], ["6"]]})"))
                .at("certificate")
                .at("v"),
            Json::parse(R"(["2"])"));
}

TEST(Cli, ModLinJsonRoundTrip) {
  const Json lattice = Json::parse(R"({"ambient_dim": 2, "generators": [["2", "4"], ["0", "8"]]})");
  const Json certs = run_in_process("certs", lattice);
  const CertificateSet set = json_io::certificate_set_from_json(certs);
  EXPECT_EQ(json_io::to_json(set), certs);
  EXPECT_EQ(set.rank, 2);
  for (const auto& e : set.exprs) EXPECT_LE(e.order(), 2);
  EXPECT_THROW(json_io::modlin_from_json(Json::parse(R"({"op": "floordiv", "m": "0", "arg": {"op": "a", "i": 1}})")),
               DivisionByZero);
  EXPECT_THROW(json_io::modlin_from_json(Json::parse(R"({"op": "a", "i": 0})")), json_io::SchemaError);
}

TEST(Cli, GeneratedQpSolutionsAreValid) {
  int checked = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kCorpus + "/generated")) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("qp_", 0) != 0) continue;
    const Json in = Json::parse(slurp(entry.path().string()));
    const QpBoxInstance inst = json_io::qp_instance_from_json(in);
    const Json out = cli_json({"qpsolve", entry.path().string()});
    ASSERT_EQ(out.at("solvable"), true) << name;
    const RatVector y = json_io::rat_vector_from_json(out.at("solution"));
    EXPECT_EQ(RatVector(inst.vectors * y), inst.target) << name;
    for (Index i = 0; i < y.size(); ++i) {
      EXPECT_GE(y(i), inst.lower(i));
      EXPECT_LE(y(i), inst.upper(i));
      EXPECT_TRUE(in_qp(y(i), inst.primes));
    }
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Cli, GenCorpusIsSeedDeterministic) {
  const auto tmp = std::filesystem::temp_directory_path() / "zfarkas-gen-test";
  std::filesystem::remove_all(tmp);
  const auto a = cli::generate_corpus((tmp / "a").string(), 7, 12);
  const auto b = cli::generate_corpus((tmp / "b").string(), 7, 12);
  ASSERT_EQ(a, b);
  for (const auto& name : a) {
    EXPECT_EQ(slurp((tmp / "a" / name).string()), slurp((tmp / "b" / name).string()));
    // The shipped corpus was produced with the same seed and count.
    EXPECT_EQ(slurp((tmp / "a" / name).string()), slurp(kCorpus + "/generated/" + name)) << name;
  }
  std::filesystem::remove_all(tmp);
}

TEST(Corpus, EveryCaseReproduces) {
  for (const auto& c : zfarkas::testing::load_manifest(kCorpus)) {
    EXPECT_EQ(zfarkas::testing::check_case(kExe, kCorpus, c), "");
  }
}
