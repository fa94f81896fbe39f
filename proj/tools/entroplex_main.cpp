// Command-line surface for the entropic uncertainty / information exclusion
// toolkit: computes bounds for measurement pairs from JSON files, runs
// verification sweeps, and emits machine-readable reports and CSV plot data.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entroplex/entroplex.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitValidationError = 3;

using entroplex::json;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ENTROPLEX_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 12345;
}

// "2x2,3x3" -> {{2,2},{3,3}}; "8,16,32" -> {{8},{16},{32}}.
std::vector<std::vector<int>> parse_dims(const std::string& spec) {
  std::vector<std::vector<int>> out;
  std::stringstream groups(spec);
  std::string group;
  while (std::getline(groups, group, ',')) {
    std::vector<int> dims;
    std::stringstream parts(group);
    std::string part;
    while (std::getline(parts, part, 'x')) dims.push_back(std::stoi(part));
    if (dims.empty()) throw entroplex::ValidationError("empty dims group in: " + spec);
    out.push_back(std::move(dims));
  }
  if (out.empty()) throw entroplex::ValidationError("empty dims spec");
  return out;
}

void emit(const json& doc, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(output_path);
    if (!out) throw std::runtime_error("cannot write: " + output_path);
    out << doc.dump(2) << "\n";
  }
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path);
  out << header << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << entroplex::csv_number(row[i]);
    out << "\n";
  }
}

struct BoundsArgs {
  std::string x_file, z_file, state_file, output;
};

int cmd_bounds(const BoundsArgs& args, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  entroplex::Measurement x = entroplex::measurement_from_json(entroplex::load_json_file(args.x_file));
  entroplex::Measurement z = entroplex::measurement_from_json(entroplex::load_json_file(args.z_file));

  std::optional<entroplex::DensityMatrix> rho;
  json report = entroplex::make_report_document(seed);
  report["inputs"] = {{"x", entroplex::file_digest(args.x_file)},
                      {"z", entroplex::file_digest(args.z_file)}};
  if (!args.state_file.empty()) {
    rho = entroplex::state_from_json(entroplex::load_json_file(args.state_file));
    report["inputs"]["state"] = entroplex::file_digest(args.state_file);
  }

  entroplex::BoundReport bounds;
  if (x.is_basis() && z.is_basis()) {
    bounds = entroplex::bound_report(*x.basis, *z.basis, rho);
  } else {
    entroplex::Povm px = x.as_povm();
    entroplex::Povm pz = z.as_povm();
    bounds = entroplex::bound_report(px, pz, entroplex::complementarity_matrix(px, pz), rho);
  }
  report["results"] = entroplex::bound_report_to_json(bounds);
  report["timing_ms"] = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0).count();
  emit(report, args.output);
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::string dims_spec;
  std::string preset;
  std::string output;
  int trials = 50;
  double tol = entroplex::kVerifyTol;
};

int cmd_verify(const VerifyArgs& args, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  if (args.suite != "all") {
    const auto& names = entroplex::suite_names();
    if (std::find(names.begin(), names.end(), args.suite) == names.end())
      throw std::runtime_error("unknown suite: " + args.suite);  // usage error
  }
  std::vector<std::vector<int>> dims;
  if (!args.dims_spec.empty()) dims = parse_dims(args.dims_spec);

  std::vector<entroplex::SuiteResult> results;
  if (args.preset == "max-entangled") {
    if (args.suite != "ur-bipartite")
      throw entroplex::ValidationError("preset max-entangled only applies to ur-bipartite");
    const int d = dims.empty() ? 3 : dims[0][0];
    entroplex::RandomSource rng(seed);
    entroplex::SuiteResult suite{"ur-bipartite", {}, 0};
    for (int i = 0; i < args.trials; ++i) {
      entroplex::RandomSource child = rng.child(i);
      auto recs = entroplex::verify_bipartite_ur(entroplex::maximally_entangled_state(d),
                                                 entroplex::haar_unitary(d, child),
                                                 entroplex::haar_unitary(d, child));
      suite.add(recs.improved, child.seed(), {d, d});
      suite.add(recs.maassen_uffink, child.seed(), {d, d});
    }
    results.push_back(std::move(suite));
  } else if (args.suite == "all") {
    for (const auto& name : entroplex::suite_names())
      results.push_back(entroplex::run_suite(name, seed, args.trials, dims));
  } else {
    results.push_back(entroplex::run_suite(args.suite, seed, args.trials, dims));
  }

  for (auto& s : results)
    for (auto& rec : s.records)
      if (!rec.skipped) rec.pass = rec.slack >= -args.tol;

  bool all_pass = true;
  json suites = json::array();
  for (const auto& s : results) {
    all_pass = all_pass && s.all_pass();
    suites.push_back(entroplex::suite_to_json(s));
  }
  json report = entroplex::make_report_document(seed);
  report["results"] = {{"suites", std::move(suites)}, {"all_pass", all_pass}};
  report["timing_ms"] = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0).count();
  emit(report, args.output);
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_example1(const std::string& output, std::uint64_t seed) {
  json report = entroplex::make_report_document(seed);
  report["results"] = entroplex::bound_report_to_json(entroplex::example1_report());
  emit(report, output);
  return kExitOk;
}

int cmd_fig1(int points, const std::string& csv_path, const std::string& output,
             std::uint64_t seed) {
  auto curve = entroplex::fig1_curve(points);
  std::vector<std::vector<double>> rows;
  double max_val = curve.front().second;
  for (const auto& [p, v] : curve) {
    rows.push_back({p, v});
    max_val = std::max(max_val, v);
  }
  if (!csv_path.empty()) write_csv(csv_path, "p,lambda_min_delta", rows);
  json report = entroplex::make_report_document(seed);
  report["results"] = {{"points", points},
                       {"endpoint_p0", curve.front().second},
                       {"endpoint_p1", curve.back().second},
                       {"maximum", max_val}};
  if (csv_path.empty()) {
    json pts = json::array();
    for (const auto& row : rows) pts.push_back({row[0], row[1]});
    report["results"]["curve"] = std::move(pts);
  }
  emit(report, output);
  return kExitOk;
}

int cmd_gap(const std::string& dims_spec, double theta, const std::string& csv_path,
            const std::string& output, std::uint64_t seed) {
  std::vector<int> dims;
  for (const auto& group : parse_dims(dims_spec)) dims.push_back(group[0]);
  auto points = entroplex::gap_scan(dims, theta);
  std::vector<std::vector<double>> rows;
  json rows_json = json::array();
  for (const auto& pt : points) {
    rows.push_back({double(pt.d), pt.theta, pt.c_max, pt.c_2, pt.delta, pt.predicted_delta});
    rows_json.push_back({{"d", pt.d},
                         {"theta", pt.theta},
                         {"c_max", pt.c_max},
                         {"c_2", pt.c_2},
                         {"delta", pt.delta},
                         {"predicted_delta", pt.predicted_delta}});
  }
  if (!csv_path.empty())
    write_csv(csv_path, "d,theta,c_max,c_2,delta,predicted_delta", rows);
  json report = entroplex::make_report_document(seed);
  report["results"] = {{"points", std::move(rows_json)}};
  emit(report, output);
  return kExitOk;
}

struct CapacityArgs {
  std::string channel_file, x_file, xb_file, z_file, zb_file, output;
};

int cmd_capacity(const CapacityArgs& args, std::uint64_t seed) {
  entroplex::KrausChannel ch =
      entroplex::channel_from_json(entroplex::load_json_file(args.channel_file));
  auto basis = [](const std::string& path) {
    return entroplex::basis_from_json(entroplex::load_json_file(path));
  };
  entroplex::CapacityWitness w = entroplex::capacity_witness(
      ch, basis(args.x_file), basis(args.xb_file), basis(args.z_file), basis(args.zb_file));
  json report = entroplex::make_report_document(seed);
  report["inputs"] = {{"channel", entroplex::file_digest(args.channel_file)},
                      {"x", entroplex::file_digest(args.x_file)},
                      {"x_b", entroplex::file_digest(args.xb_file)},
                      {"z", entroplex::file_digest(args.z_file)},
                      {"z_b", entroplex::file_digest(args.zb_file)}};
  report["results"] = {{"i_x", w.i_x},
                       {"i_z", w.i_z},
                       {"r", w.r},
                       {"witness", w.witness},
                       {"coherent_information",
                        entroplex::coherent_information(ch, ch.input_dim())}};
  emit(report, args.output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entroplex: entropic uncertainty and information exclusion bounds"};
  app.require_subcommand(1);

  std::uint64_t seed = default_seed();
  app.add_option("--seed", seed, "random seed (env ENTROPLEX_SEED as fallback)");

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "compute bounds for a measurement pair");
  bounds->add_option("x", bounds_args.x_file, "X basis/POVM JSON file")->required();
  bounds->add_option("z", bounds_args.z_file, "Z basis/POVM JSON file")->required();
  bounds->add_option("--state", bounds_args.state_file, "optional density matrix JSON file");
  bounds->add_option("-o,--output", bounds_args.output, "write report to file");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("suite", verify_args.suite, "suite name or 'all'")->required();
  verify->add_option("--trials", verify_args.trials, "instances per suite");
  verify->add_option("--dims", verify_args.dims_spec, "dimension grid, e.g. 2x2,3x3");
  verify->add_option("--tol", verify_args.tol, "slack tolerance in bits");
  verify->add_option("--preset", verify_args.preset, "input preset (max-entangled)");
  verify->add_option("-o,--output", verify_args.output, "write report to file");

  std::string example1_output;
  auto* example1 = app.add_subcommand("example1", "reproduce the worked qutrit example");
  example1->add_option("-o,--output", example1_output, "write report to file");

  int fig1_points = 101;
  std::string fig1_csv, fig1_output;
  auto* fig1 = app.add_subcommand("fig1", "lambda_min[Delta(p)] curve for the worked example");
  fig1->add_option("--points", fig1_points, "number of curve samples");
  fig1->add_option("--csv", fig1_csv, "write (p, lambda) pairs as CSV");
  fig1->add_option("-o,--output", fig1_output, "write report to file");

  std::string gap_dims = "8,16,32,64,128", gap_csv, gap_output;
  double gap_theta = 0.7853981633974483;
  auto* gap = app.add_subcommand("gap", "log d gap construction scan");
  gap->add_option("--dims", gap_dims, "comma-separated dimensions");
  gap->add_option("--theta", gap_theta, "rotation angle in (0, pi/2)");
  gap->add_option("--csv", gap_csv, "write scan rows as CSV");
  gap->add_option("-o,--output", gap_output, "write report to file");

  CapacityArgs capacity_args;
  auto* capacity = app.add_subcommand("capacity", "quantum capacity witness for a channel");
  capacity->add_option("channel", capacity_args.channel_file, "Kraus channel JSON")->required();
  capacity->add_option("x", capacity_args.x_file, "input X basis JSON")->required();
  capacity->add_option("xb", capacity_args.xb_file, "output X basis JSON")->required();
  capacity->add_option("z", capacity_args.z_file, "input Z basis JSON")->required();
  capacity->add_option("zb", capacity_args.zb_file, "output Z basis JSON")->required();
  capacity->add_option("-o,--output", capacity_args.output, "write report to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(bounds_args, seed);
    if (verify->parsed()) return cmd_verify(verify_args, seed);
    if (example1->parsed()) return cmd_example1(example1_output, seed);
    if (fig1->parsed()) return cmd_fig1(fig1_points, fig1_csv, fig1_output, seed);
    if (gap->parsed()) return cmd_gap(gap_dims, gap_theta, gap_csv, gap_output, seed);
    if (capacity->parsed()) return cmd_capacity(capacity_args, seed);
  } catch (const entroplex::json::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const entroplex::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitOk;
}
