#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entroplex/experiments.hpp"

namespace entroplex {

struct SuiteResult {
  std::string suite;
  std::vector<VerificationRecord> records;
  int skipped = 0;

  bool all_pass() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }

  void add(VerificationRecord rec, std::uint64_t seed, std::vector<int> dims) {
    rec.seed = seed;
    rec.dims = std::move(dims);
    if (rec.skipped) ++skipped;
    records.push_back(std::move(rec));
  }
};

namespace detail {

inline int pick(RandomSource& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.uniform() * (hi - lo + 1)) % (hi - lo + 1);
}

inline DensityMatrix random_tripartite_pure(const std::vector<int>& dims, RandomSource& rng) {
  DensityMatrix psi = random_pure_state(product(dims), rng);
  return DensityMatrix{psi.mat, dims};
}

// cq state on A (x) Y: mixture of random states of A tagged by the register.
inline DensityMatrix random_cq_state(int da, int dy, RandomSource& rng) {
  std::vector<double> weights(dy);
  double total = 0.0;
  for (double& w : weights) {
    w = rng.uniform() + 1e-3;
    total += w;
  }
  ComplexMatrix out = ComplexMatrix::Zero(da * dy, da * dy);
  for (int y = 0; y < dy; ++y) {
    DensityMatrix rho = random_density_matrix(da, rng);
    ComplexMatrix tag = ComplexMatrix::Zero(dy, dy);
    tag(y, y) = weights[y] / total;
    out += tensor_product(rho.mat, tag);
  }
  return DensityMatrix{out, {da, dy}};
}

inline ComplexMatrix random_psd(int d, RandomSource& rng) {
  ComplexMatrix a = ginibre_matrix(d, d, rng);
  ComplexMatrix g = a * a.adjoint() / d;
  return 0.5 * (g + g.adjoint());
}

}  // namespace detail

inline SuiteResult run_ur_bipartite(std::uint64_t seed, int trials,
                                    const std::vector<std::vector<int>>& dims_list) {
  RandomSource master(seed);
  SuiteResult out{"ur-bipartite", {}, 0};
  for (int i = 0; i < trials; ++i) {
    RandomSource rng = master.child(i);
    const std::vector<int>& dims = dims_list[i % dims_list.size()];
    DensityMatrix rho = random_density_matrix(dims, rng);
    OrthonormalBasis x = haar_unitary(dims[0], rng);
    OrthonormalBasis z = haar_unitary(dims[0], rng);
    BipartiteUrRecords recs = verify_bipartite_ur(rho, x, z);
    out.add(recs.improved, rng.seed(), dims);
    out.add(recs.maassen_uffink, rng.seed(), dims);
  }
  return out;
}

inline SuiteResult run_ur_tripartite(std::uint64_t seed, int trials,
                                     const std::vector<std::vector<int>>& dims_list) {
  RandomSource master(seed);
  SuiteResult out{"ur-tripartite", {}, 0};
  for (int i = 0; i < trials; ++i) {
    RandomSource rng = master.child(i);
    const std::vector<int>& dims = dims_list[i % dims_list.size()];
    DensityMatrix rho = detail::random_tripartite_pure(dims, rng);
    Povm x = random_povm(dims[0], detail::pick(rng, 2, 5), rng);
    Povm z = random_povm(dims[0], detail::pick(rng, 2, 5), rng);
    out.add(verify_tripartite_ur(rho, x, z), rng.seed(), dims);
  }
  return out;
}

inline SuiteResult run_ur_povm(std::uint64_t seed, int trials,
                               const std::vector<std::vector<int>>& dims_list) {
  RandomSource master(seed);
  SuiteResult out{"ur-povm", {}, 0};
  for (int i = 0; i < trials; ++i) {
    RandomSource rng = master.child(i);
    const std::vector<int>& dims = dims_list[i % dims_list.size()];
    DensityMatrix rho = random_density_matrix(dims, rng);
    Povm x = random_povm(dims[0], detail::pick(rng, 2, 5), rng);
    Povm z = random_povm(dims[0], detail::pick(rng, 2, 5), rng);
    out.add(verify_bipartite_povm_ur(rho, x, z), rng.seed(), dims);
  }
  return out;
}

// Emits one bipartite, one tripartite, and one classical-register record per
// trial (plus Hall's weaker bipartite bound for comparison).
inline SuiteResult run_ier(std::uint64_t seed, int trials,
                           const std::vector<std::vector<int>>& dims_list) {
  RandomSource master(seed);
  SuiteResult out{"ier", {}, 0};
  for (int i = 0; i < trials; ++i) {
    RandomSource rng = master.child(i);
    const std::vector<int>& dims = dims_list[i % dims_list.size()];
    const int d = dims[0];

    DensityMatrix rho_ab = random_density_matrix({d, d}, rng);
    OrthonormalBasis x = haar_unitary(d, rng);
    OrthonormalBasis z = haar_unitary(d, rng);
    BipartiteIerRecords bi = verify_ier_bipartite(rho_ab, x, z);
    out.add(bi.improved, rng.seed(), {d, d});
    out.add(bi.hall, rng.seed(), {d, d});

    std::vector<int> tri{d, 2, 2};
    DensityMatrix rho_abc = detail::random_tripartite_pure(tri, rng);
    Povm px = random_povm(d, detail::pick(rng, 2, 4), rng);
    Povm pz = random_povm(d, detail::pick(rng, 2, 4), rng);
    out.add(verify_ier_tripartite(rho_abc, px, pz), rng.seed(), tri);

    const int dy = detail::pick(rng, 2, 4);
    DensityMatrix rho_ay = detail::random_cq_state(d, dy, rng);
    out.add(verify_ier_classical(rho_ay, px, pz), rng.seed(), {d, dy});
  }
  return out;
}

// Pinching inequality plus the h-vs-c_max bound it implies, on random pairs.
inline SuiteResult run_pinching(std::uint64_t seed, int trials,
                                const std::vector<std::vector<int>>& dims_list) {
  RandomSource master(seed);
  SuiteResult out{"pinching", {}, 0};
  for (int i = 0; i < trials; ++i) {
    RandomSource rng = master.child(i);
    const int d = dims_list[i % dims_list.size()][0];
    Povm z = random_povm(d, detail::pick(rng, 2, 6), rng);
    out.add(pinching_lemma_check(detail::random_psd(d, rng), z), rng.seed(), {d});
    Povm x = random_povm(d, detail::pick(rng, 2, 6), rng);
    out.add(tomamichel_bound_check(x, z), rng.seed(), {d});
  }
  return out;
}

inline SuiteResult run_sum_norm(std::uint64_t seed, int trials,
                                const std::vector<std::vector<int>>& dims_list) {
  RandomSource master(seed);
  SuiteResult out{"sum-norm", {}, 0};
  for (int i = 0; i < trials; ++i) {
    RandomSource rng = master.child(i);
    const int d = dims_list[i % dims_list.size()][0];
    out.add(sum_norm_lemma_check(detail::random_psd(d, rng), detail::random_psd(d, rng)),
            rng.seed(), {d});
  }
  return out;
}

inline SuiteResult run_rel_entropy(std::uint64_t seed, int trials,
                                   const std::vector<std::vector<int>>& dims_list) {
  RandomSource master(seed);
  SuiteResult out{"rel-entropy", {}, 0};
  for (int i = 0; i < trials; ++i) {
    RandomSource rng = master.child(i);
    const std::vector<int>& dims = dims_list[i % dims_list.size()];
    DensityMatrix rho = random_density_matrix(dims, rng);
    Povm z = basis_as_povm(haar_unitary(dims[0], rng));
    out.add(relative_entropy_lemma_check(rho, z), rng.seed(), dims);
  }
  return out;
}

inline SuiteResult run_generic_unitary(std::uint64_t seed, int trials, int d = 3) {
  RandomSource rng(seed);
  UnitaryScanResult scan = generic_unitary_scan(d, trials, rng);
  SuiteResult out{"generic-unitary", {}, 0};
  VerificationRecord rec =
      VerificationRecord::make("generic-unitary", scan.distinct_fraction, 1.0, 0.0);
  out.add(rec, seed, {d});
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "ur-bipartite", "ur-tripartite", "ur-povm",     "ier",
      "pinching",     "sum-norm",      "rel-entropy", "generic-unitary"};
  return names;
}

inline std::vector<std::vector<int>> default_dims(const std::string& suite) {
  if (suite == "ur-bipartite" || suite == "ier")
    return {{2, 2}, {3, 3}, {4, 4}};
  if (suite == "ur-tripartite") return {{2, 2, 2}, {3, 2, 2}, {3, 3, 3}};
  if (suite == "ur-povm") return {{2, 2}, {3, 3}};
  if (suite == "pinching") return {{2}, {3}, {4}, {5}};
  if (suite == "sum-norm") return {{2}, {3}, {4}, {5}, {6}};
  if (suite == "rel-entropy") return {{2, 2}, {3, 2}, {3, 3}};
  if (suite == "generic-unitary") return {{3}};
  throw ValidationError("unknown suite: " + suite);
}

inline SuiteResult run_suite(const std::string& suite, std::uint64_t seed, int trials,
                             std::vector<std::vector<int>> dims_list = {}) {
  if (dims_list.empty()) dims_list = default_dims(suite);
  if (suite == "ur-bipartite") return run_ur_bipartite(seed, trials, dims_list);
  if (suite == "ur-tripartite") return run_ur_tripartite(seed, trials, dims_list);
  if (suite == "ur-povm") return run_ur_povm(seed, trials, dims_list);
  if (suite == "ier") return run_ier(seed, trials, dims_list);
  if (suite == "pinching") return run_pinching(seed, trials, dims_list);
  if (suite == "sum-norm") return run_sum_norm(seed, trials, dims_list);
  if (suite == "rel-entropy") return run_rel_entropy(seed, trials, dims_list);
  if (suite == "generic-unitary") return run_generic_unitary(seed, trials, dims_list[0][0]);
  throw ValidationError("unknown suite: " + suite);
}

}  // namespace entroplex
