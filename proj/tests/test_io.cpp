#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "entroplex/entroplex.hpp"
#include "test_helpers.hpp"

using namespace entroplex;

TEST_CASE("matrix json round trip") {
  RandomSource rng(211);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMatrix m = ginibre_matrix(2 + trial % 4, 2 + (trial + 1) % 4, rng);
    ComplexMatrix back = matrix_from_json(matrix_to_json(m));
    REQUIRE(max_abs(back - m) <= 1e-15);
  }
}

TEST_CASE("matrix json accepts plain numbers for real entries") {
  json doc = json::parse(R"([[1, 0.5], [[0, 1], -2]])");
  ComplexMatrix m = matrix_from_json(doc);
  CHECK(m(0, 0) == Complex(1, 0));
  CHECK(m(0, 1) == Complex(0.5, 0));
  CHECK(m(1, 0) == Complex(0, 1));
  CHECK(m(1, 1) == Complex(-2, 0));
}

TEST_CASE("matrix json error paths") {
  CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), ValidationError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[]]")), ValidationError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,2],[3]]")), ValidationError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"([["x"]])")), ValidationError);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[[1,2,3]]]")), ValidationError);
}

TEST_CASE("state document") {
  json doc = {{"dims", {2, 2}}, {"data", matrix_to_json(maximally_entangled_state(2).mat)}};
  DensityMatrix rho = state_from_json(doc);
  CHECK(rho.dims == std::vector<int>{2, 2});
  CHECK(rho.dim() == 4);

  // dims defaults to a single subsystem
  json flat = {{"data", matrix_to_json(identity(3) / 3.0)}};
  CHECK(state_from_json(flat).dims == std::vector<int>{3});

  CHECK_THROWS_AS(state_from_json(json{{"dims", {2}}}), ValidationError);

  // invalid states are rejected on load
  json bad = {{"dims", {2}}, {"data", matrix_to_json(identity(2))}};  // trace 2
  CHECK_THROWS_AS(state_from_json(bad), ValidationError);
  json mismatched = {{"dims", {3}}, {"data", matrix_to_json(identity(2) / 2.0)}};
  CHECK_THROWS_AS(state_from_json(mismatched), ValidationError);
}

TEST_CASE("basis, povm and channel documents") {
  json basis_doc = {{"unitary", matrix_to_json(OrthonormalBasis::fourier(3).unitary)}};
  OrthonormalBasis b = basis_from_json(basis_doc);
  CHECK(b.dim() == 3);
  CHECK_THROWS_AS(basis_from_json(json::object()), ValidationError);
  json skewed = {{"unitary", matrix_to_json(2.0 * identity(2))}};
  CHECK_THROWS_AS(basis_from_json(skewed), ValidationError);

  RandomSource rng(223);
  Povm p = random_povm(2, 3, rng);
  json povm_doc = {{"elements", json::array()}};
  for (const auto& e : p.elements) povm_doc["elements"].push_back(matrix_to_json(e));
  Povm back = povm_from_json(povm_doc);
  REQUIRE(back.size() == 3);
  for (int i = 0; i < 3; ++i) REQUIRE(max_abs(back.elements[i] - p.elements[i]) <= 1e-15);
  CHECK_THROWS_AS(povm_from_json(json::object()), ValidationError);

  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  json chan_doc = {{"kraus", {matrix_to_json(p0), matrix_to_json(p1)}}};
  KrausChannel ch = channel_from_json(chan_doc);
  CHECK(ch.kraus.size() == 2);
  CHECK_THROWS_AS(channel_from_json(json::object()), ValidationError);
  json not_tp = {{"kraus", {matrix_to_json(p0)}}};
  CHECK_THROWS_AS(channel_from_json(not_tp), ValidationError);
}

TEST_CASE("measurement documents accept either form") {
  json basis_doc = {{"unitary", matrix_to_json(OrthonormalBasis::standard(2).unitary)}};
  Measurement mb = measurement_from_json(basis_doc);
  CHECK(mb.is_basis());
  CHECK(mb.dim() == 2);
  CHECK(mb.as_povm().size() == 2);

  RandomSource rng(227);
  Povm p = random_povm(2, 4, rng);
  json povm_doc = {{"elements", json::array()}};
  for (const auto& e : p.elements) povm_doc["elements"].push_back(matrix_to_json(e));
  Measurement mp = measurement_from_json(povm_doc);
  CHECK(!mp.is_basis());
  CHECK(mp.as_povm().size() == 4);

  CHECK_THROWS_AS(measurement_from_json(json::object()), ValidationError);
}

TEST_CASE("file loading and digests") {
  const std::string path = "/tmp/entroplex_io_test.json";
  {
    std::ofstream out(path);
    out << R"({"unitary": [[1, 0], [0, 1]]})";
  }
  json doc = load_json_file(path);
  CHECK(basis_from_json(doc).dim() == 2);

  std::string d1 = file_digest(path);
  CHECK(d1.size() == 16);
  CHECK(file_digest(path) == d1);
  {
    std::ofstream out(path);
    out << R"({"unitary": [[0, 1], [1, 0]]})";
  }
  CHECK(file_digest(path) != d1);
  std::remove(path.c_str());

  CHECK_THROWS(load_json_file("/tmp/entroplex_does_not_exist.json"));
  CHECK_THROWS(file_digest("/tmp/entroplex_does_not_exist.json"));
}

TEST_CASE("malformed json raises a parse error") {
  const std::string path = "/tmp/entroplex_io_bad.json";
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(load_json_file(path), json::parse_error);
  std::remove(path.c_str());
}

TEST_CASE("record and suite serialization") {
  VerificationRecord rec = VerificationRecord::make("demo", 2.0, 1.5);
  rec.seed = 99;
  rec.dims = {2, 3};
  json j = record_to_json(rec);
  CHECK(j["label"] == "demo");
  CHECK(j["seed"] == 99);
  CHECK(j["dims"] == json({2, 3}));
  CHECK(j["lhs"] == 2.0);
  CHECK(j["rhs"] == 1.5);
  CHECK(j["slack"] == 0.5);
  CHECK(j["pass"] == true);
  CHECK(!j.contains("skipped"));

  SuiteResult suite = run_suite("sum-norm", 5, 3);
  json sj = suite_to_json(suite);
  CHECK(sj["suite"] == "sum-norm");
  CHECK(sj["records"].size() == suite.records.size());
  CHECK(sj["all_pass"] == true);
}

TEST_CASE("bound report serialization") {
  BoundReport rep = example1_report();
  json j = bound_report_to_json(rep);
  CHECK(j["q_mu"].get<double>() == Catch::Approx(std::log2(1.5)));
  CHECK(j.contains("q_prime"));
  CHECK(j.contains("lambda_half"));
  CHECK(j.contains("q"));
  CHECK(j.contains("p_star"));
  CHECK(j.contains("r"));
  CHECK(j.contains("r_hall"));
  CHECK(j.contains("r_grudka"));
  CHECK(j.contains("q_state"));

  json header = make_report_document(7);
  CHECK(header["schema"] == kReportSchema);
  CHECK(header["seed"] == 7);
}

TEST_CASE("csv numbers") {
  CHECK(csv_number(0.5) == "0.5");
  CHECK(csv_number(1.0 / 3.0) == "0.333333333333");
  CHECK(csv_number(-2.0) == "-2");
  CHECK(csv_number(1e-12) == "1e-12");
}
