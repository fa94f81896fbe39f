#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "entroplex/entroplex.hpp"

using namespace entroplex;

namespace {

const std::string kCli = ENTROPLEX_CLI_PATH;

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

void write_json(const std::string& path, const json& doc) {
  std::ofstream out(path);
  out << doc.dump(2);
}

json read_json(const std::string& path) { return load_json_file(path); }

std::string tmp(const std::string& name) { return "/tmp/entroplex_cli_" + name; }

}  // namespace

TEST_CASE("cli requires a subcommand") {
  CHECK(run("") != 0);
  CHECK(run("frobnicate") != 0);
}

TEST_CASE("cli bounds on a basis pair") {
  auto [x, z] = example1_bases();
  write_json(tmp("x.json"), json{{"unitary", matrix_to_json(x.unitary)}});
  write_json(tmp("z.json"), json{{"unitary", matrix_to_json(z.unitary)}});
  write_json(tmp("state.json"),
             json{{"dims", {3}}, {"data", matrix_to_json(identity(3) / 3.0)}});

  REQUIRE(run("bounds " + tmp("x.json") + " " + tmp("z.json") + " --state " +
              tmp("state.json") + " -o " + tmp("report.json")) == 0);
  json report = read_json(tmp("report.json"));
  CHECK(report["schema"] == kReportSchema);
  CHECK(report["results"]["q_mu"].get<double>() == Catch::Approx(std::log2(1.5)));
  CHECK(report["results"]["r"].get<double>() == Catch::Approx(std::log2(4.5)).margin(1e-9));
  CHECK(report["results"]["q_state"].get<double>() ==
        Catch::Approx(2.0 / 3 * std::log2(3.0)).margin(1e-9));
  CHECK(report["results"].contains("r_hall"));
  CHECK(report.contains("timing_ms"));
  CHECK(report["inputs"]["x"].get<std::string>().size() == 16);
}

TEST_CASE("cli bounds accepts POVM files and X = Z") {
  RandomSource rng(311);
  Povm p = random_povm(2, 3, rng);
  json doc{{"elements", json::array()}};
  for (const auto& e : p.elements) doc["elements"].push_back(matrix_to_json(e));
  write_json(tmp("povm.json"), doc);

  REQUIRE(run("bounds " + tmp("povm.json") + " " + tmp("povm.json") + " -o " +
              tmp("povm_report.json")) == 0);
  json report = read_json(tmp("povm_report.json"));
  // measuring the same POVM twice: c_max = max ||X_j|| can reach 1, q_mu >= 0
  CHECK(report["results"]["q_mu"].get<double>() >= -1e-9);
  CHECK(!report["results"].contains("r_hall"));
}

TEST_CASE("cli exit codes") {
  write_file(tmp("broken.json"), "{this is not json");
  CHECK(run("bounds " + tmp("broken.json") + " " + tmp("broken.json")) == 2);

  // valid JSON, invalid unitary -> validation error
  write_json(tmp("skew.json"), json{{"unitary", matrix_to_json(2.0 * identity(2))}});
  CHECK(run("bounds " + tmp("skew.json") + " " + tmp("skew.json")) == 3);

  // missing file -> parse-level failure
  CHECK(run("bounds /tmp/entroplex_no_such.json /tmp/entroplex_no_such.json") == 2);

  // unknown suite -> usage error
  CHECK(run("verify no-such-suite --trials 1") == 2);

  // dimension mismatch between files -> validation error
  write_json(tmp("u2.json"), json{{"unitary", matrix_to_json(identity(2))}});
  write_json(tmp("u3.json"), json{{"unitary", matrix_to_json(identity(3))}});
  CHECK(run("bounds " + tmp("u2.json") + " " + tmp("u3.json")) == 3);
}

TEST_CASE("cli verify runs a small suite") {
  REQUIRE(run("verify sum-norm --trials 5 -o " + tmp("verify.json")) == 0);
  json report = read_json(tmp("verify.json"));
  CHECK(report["results"]["all_pass"] == true);
  CHECK(report["results"]["suites"].size() == 1);
  CHECK(report["results"]["suites"][0]["suite"] == "sum-norm");
  CHECK(report["results"]["suites"][0]["records"].size() == 5);

  REQUIRE(run("verify ur-bipartite --trials 3 --dims 2x2 --preset max-entangled -o " +
              tmp("preset.json")) == 0);
  json preset = read_json(tmp("preset.json"));
  CHECK(preset["results"]["all_pass"] == true);

  // an absurdly strict tolerance flips strict-equality records to failures
  CHECK(run("verify ur-bipartite --trials 2 --dims 2x2 --tol -1") == 1);
}

TEST_CASE("cli example1 report") {
  REQUIRE(run("example1 -o " + tmp("ex1.json")) == 0);
  json report = read_json(tmp("ex1.json"));
  CHECK(report["results"]["q_mu"].get<double>() == Catch::Approx(0.5849625).margin(1e-6));
  CHECK(report["results"]["q_prime"].get<double>() == Catch::Approx(0.6230429).margin(1e-4));
  CHECK(report["results"]["q"].get<double>() == Catch::Approx(0.6410395).margin(1e-4));
  CHECK(report["results"]["r_hall"].get<double>() == Catch::Approx(std::log2(6.0)).margin(1e-9));
  CHECK(report["results"]["r_grudka"].get<double>() == Catch::Approx(std::log2(5.0)).margin(1e-9));
}

TEST_CASE("cli fig1 csv output") {
  REQUIRE(run("fig1 --points 11 --csv " + tmp("fig1.csv") + " -o " + tmp("fig1.json")) == 0);
  json report = read_json(tmp("fig1.json"));
  CHECK(report["results"]["points"] == 11);
  CHECK(report["results"]["endpoint_p0"].get<double>() ==
        Catch::Approx(std::log2(1.5)).margin(1e-9));
  CHECK(!report["results"].contains("curve"));

  std::ifstream csv(tmp("fig1.csv"));
  std::string line;
  REQUIRE(std::getline(csv, line));
  CHECK(line == "p,lambda_min_delta");
  int rows = 0;
  while (std::getline(csv, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 11);

  // without --csv the curve is inlined
  REQUIRE(run("fig1 --points 5 -o " + tmp("fig1_inline.json")) == 0);
  CHECK(read_json(tmp("fig1_inline.json"))["results"]["curve"].size() == 5);
}

TEST_CASE("cli gap scan") {
  REQUIRE(run("gap --dims 8,16 --csv " + tmp("gap.csv") + " -o " + tmp("gap.json")) == 0);
  json report = read_json(tmp("gap.json"));
  REQUIRE(report["results"]["points"].size() == 2);
  CHECK(report["results"]["points"][0]["d"] == 8);
  CHECK(report["results"]["points"][1]["delta"].get<double>() >
        report["results"]["points"][0]["delta"].get<double>());

  std::ifstream csv(tmp("gap.csv"));
  std::string line;
  REQUIRE(std::getline(csv, line));
  CHECK(line == "d,theta,c_max,c_2,delta,predicted_delta");

  CHECK(run("gap --dims 8 --theta 3.0") == 3);  // theta outside (0, pi/2)
}

TEST_CASE("cli capacity witness") {
  write_json(tmp("id_chan.json"),
             json{{"kraus", {matrix_to_json(identity(2))}}});
  write_json(tmp("comp.json"),
             json{{"unitary", matrix_to_json(OrthonormalBasis::standard(2).unitary)}});
  write_json(tmp("had.json"),
             json{{"unitary", matrix_to_json(OrthonormalBasis::fourier(2).unitary)}});
  REQUIRE(run("capacity " + tmp("id_chan.json") + " " + tmp("comp.json") + " " +
              tmp("comp.json") + " " + tmp("had.json") + " " + tmp("had.json") +
              " -o " + tmp("cap.json")) == 0);
  json report = read_json(tmp("cap.json"));
  CHECK(report["results"]["witness"].get<double>() == Catch::Approx(1.0).margin(1e-9));
  CHECK(report["results"]["coherent_information"].get<double>() ==
        Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("cli seed handling is deterministic") {
  REQUIRE(run("--seed 7 verify ur-bipartite --trials 3 --dims 2x2 -o " + tmp("seed_a.json")) == 0);
  REQUIRE(run("--seed 7 verify ur-bipartite --trials 3 --dims 2x2 -o " + tmp("seed_b.json")) == 0);
  json a = read_json(tmp("seed_a.json"));
  json b = read_json(tmp("seed_b.json"));
  a.erase("timing_ms");
  b.erase("timing_ms");
  CHECK(a == b);

  // env fallback
  const std::string cmd = "ENTROPLEX_SEED=7 " + kCli +
                          " verify ur-bipartite --trials 3 --dims 2x2 -o " +
                          tmp("seed_env.json") + " > /dev/null 2>&1";
  REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  json env = read_json(tmp("seed_env.json"));
  env.erase("timing_ms");
  CHECK(env == a);
}
