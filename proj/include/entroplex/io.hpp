#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "entroplex/bounds.hpp"
#include "entroplex/states.hpp"
#include "entroplex/suites.hpp"

namespace entroplex {

using nlohmann::json;

inline constexpr const char* kReportSchema = "entroplex-report/1";
inline constexpr const char* kToolVersion = "0.1.0";

// --- matrix documents --------------------------------------------------------

// Each complex entry is a two-element [re, im] array.
inline json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ComplexMatrix matrix_from_json(const json& data) {
  if (!data.is_array() || data.empty())
    throw ValidationError("matrix document: data must be a nonempty array of rows");
  const size_t rows = data.size();
  const size_t cols = data[0].size();
  if (cols == 0) throw ValidationError("matrix document: empty row");
  ComplexMatrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (!data[i].is_array() || data[i].size() != cols)
      throw ValidationError("matrix document: ragged rows");
    for (size_t j = 0; j < cols; ++j) {
      const json& e = data[i][j];
      if (e.is_number()) {
        m(i, j) = Complex(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2) {
        m(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
      } else {
        throw ValidationError("matrix document: entry must be a number or [re, im]");
      }
    }
  }
  return m;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return json::parse(in);  // nlohmann parse_error carries byte position
}

// --- typed documents ----------------------------------------------------------
// States carry "dims" + "data", bases carry "unitary", POVMs carry "elements",
// channels carry "kraus".

inline DensityMatrix state_from_json(const json& doc) {
  if (!doc.contains("data")) throw ValidationError("state document: missing \"data\"");
  ComplexMatrix m = matrix_from_json(doc["data"]);
  std::vector<int> dims;
  if (doc.contains("dims"))
    dims = doc["dims"].get<std::vector<int>>();
  else if (doc.contains("dim"))
    dims = {doc["dim"].get<int>()};
  else
    dims = {static_cast<int>(m.rows())};
  return DensityMatrix::make(std::move(m), std::move(dims));
}

inline OrthonormalBasis basis_from_json(const json& doc) {
  if (!doc.contains("unitary")) throw ValidationError("basis document: missing \"unitary\"");
  return OrthonormalBasis::make(matrix_from_json(doc["unitary"]));
}

inline Povm povm_from_json(const json& doc) {
  if (!doc.contains("elements")) throw ValidationError("povm document: missing \"elements\"");
  std::vector<ComplexMatrix> elements;
  for (const auto& e : doc["elements"]) elements.push_back(matrix_from_json(e));
  return Povm::make(std::move(elements));
}

inline KrausChannel channel_from_json(const json& doc) {
  if (!doc.contains("kraus")) throw ValidationError("channel document: missing \"kraus\"");
  std::vector<ComplexMatrix> ops;
  for (const auto& k : doc["kraus"]) ops.push_back(matrix_from_json(k));
  return KrausChannel::make(std::move(ops));
}

// A measurement file holds either a basis ("unitary") or a POVM ("elements").
struct Measurement {
  std::optional<OrthonormalBasis> basis;
  std::optional<Povm> povm_opt;

  bool is_basis() const { return basis.has_value(); }
  Povm as_povm() const { return basis ? basis_as_povm(*basis) : *povm_opt; }
  int dim() const { return basis ? basis->dim() : povm_opt->dim; }
};

inline Measurement measurement_from_json(const json& doc) {
  Measurement m;
  if (doc.contains("unitary"))
    m.basis = basis_from_json(doc);
  else if (doc.contains("elements"))
    m.povm_opt = povm_from_json(doc);
  else
    throw ValidationError("measurement document: needs \"unitary\" or \"elements\"");
  return m;
}

// --- reports ------------------------------------------------------------------

inline std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline json record_to_json(const VerificationRecord& rec) {
  json j{{"label", rec.label}, {"seed", rec.seed},   {"dims", rec.dims},
         {"lhs", rec.lhs},     {"rhs", rec.rhs},     {"slack", rec.slack},
         {"pass", rec.pass}};
  if (rec.skipped) j["skipped"] = true;
  return j;
}

inline json suite_to_json(const SuiteResult& suite) {
  json records = json::array();
  for (const auto& r : suite.records) records.push_back(record_to_json(r));
  return json{{"suite", suite.suite},
              {"records", std::move(records)},
              {"skipped", suite.skipped},
              {"all_pass", suite.all_pass()}};
}

inline json bound_report_to_json(const BoundReport& rep) {
  json j{{"q_mu", rep.q_mu},           {"q_prime", rep.q_prime},
         {"lambda_half", rep.lambda_half}, {"q", rep.q_opt},
         {"p_star", rep.p_star},       {"r", rep.r}};
  if (rep.r_hall) j["r_hall"] = *rep.r_hall;
  if (rep.r_grudka) j["r_grudka"] = *rep.r_grudka;
  if (rep.q_state) j["q_state"] = *rep.q_state;
  return j;
}

inline json make_report_document(std::uint64_t seed) {
  return json{{"schema", kReportSchema}, {"version", kToolVersion}, {"seed", seed}};
}

// --- CSV ------------------------------------------------------------------------

// Decimal numbers with 12 significant digits, locale-independent.
inline std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace entroplex
