#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "entroplex/bounds.hpp"
#include "entroplex/entropy.hpp"
#include "entroplex/measurement.hpp"
#include "entroplex/states.hpp"

namespace entroplex {

inline constexpr double kVerifyTol = 1e-7;

// One checked inequality instance: pass iff lhs - rhs >= -tolerance, where
// the inequality under test is lhs >= rhs.
struct VerificationRecord {
  std::string label;
  std::uint64_t seed = 0;
  std::vector<int> dims;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
  bool skipped = false;

  static VerificationRecord make(std::string label, double lhs, double rhs,
                                 double tol = kVerifyTol) {
    VerificationRecord rec;
    rec.label = std::move(label);
    rec.lhs = lhs;
    rec.rhs = rhs;
    rec.slack = lhs - rhs;
    rec.pass = rec.slack >= -tol;
    return rec;
  }
};

// --- uncertainty relations -------------------------------------------------

// H(X|B) + H(Z|B) >= q(rho_A) + H(A|B), plus the weaker q_MU record.
struct BipartiteUrRecords {
  VerificationRecord improved;
  VerificationRecord maassen_uffink;
};

inline BipartiteUrRecords verify_bipartite_ur(const DensityMatrix& rho_ab,
                                              const OrthonormalBasis& x,
                                              const OrthonormalBasis& z) {
  if (rho_ab.dims.size() != 2 || rho_ab.dims[0] != x.dim() || x.dim() != z.dim())
    throw ValidationError("verify_bipartite_ur: dimension mismatch");
  const Povm px = basis_as_povm(x);
  const Povm pz = basis_as_povm(z);
  const double hxb = conditional_entropy(measurement_channel(rho_ab, px), {1});
  const double hzb = conditional_entropy(measurement_channel(rho_ab, pz), {1});
  const double hab = conditional_entropy(rho_ab, {1});
  const DensityMatrix rho_a = rho_ab.reduce({0});
  const double lhs = hxb + hzb;

  BipartiteUrRecords out;
  out.improved = VerificationRecord::make("ur-bipartite", lhs, q_state(rho_a, px, pz) + hab);
  out.maassen_uffink = VerificationRecord::make(
      "ur-bipartite-mu", lhs, q_mu(complementarity_matrix(x, z)) + hab);
  return out;
}

// H(X|B) + H(Z|C) >= q(rho_A) for POVMs on A of a tripartite state.
inline VerificationRecord verify_tripartite_ur(const DensityMatrix& rho_abc, const Povm& x,
                                               const Povm& z) {
  if (rho_abc.dims.size() != 3 || rho_abc.dims[0] != x.dim || x.dim != z.dim)
    throw ValidationError("verify_tripartite_ur: dimension mismatch");
  const DensityMatrix rho_ab = rho_abc.reduce({0, 1});
  const DensityMatrix rho_ac = rho_abc.reduce({0, 2});
  const double hxb = conditional_entropy(measurement_channel(rho_ab, x), {1});
  const double hzc = conditional_entropy(measurement_channel(rho_ac, z), {1});
  return VerificationRecord::make("ur-tripartite", hxb + hzc,
                                  q_state(rho_abc.reduce({0}), x, z));
}

// H(X|B) + H(Z|B) >= q(rho_A) + H(A|B) - f with
// f = min{H(A|BX), H(A|BZ)} from the post-measurement states that keep A.
inline VerificationRecord verify_bipartite_povm_ur(const DensityMatrix& rho_ab, const Povm& x,
                                                   const Povm& z) {
  if (rho_ab.dims.size() != 2 || rho_ab.dims[0] != x.dim || x.dim != z.dim)
    throw ValidationError("verify_bipartite_povm_ur: dimension mismatch");
  const double hxb = conditional_entropy(measurement_channel(rho_ab, x), {1});
  const double hzb = conditional_entropy(measurement_channel(rho_ab, z), {1});
  const double hab = conditional_entropy(rho_ab, {1});

  // measured_joint_state returns X (x) A (x) B; condition on {B, X} = {2, 0}.
  const DensityMatrix rho_xab = measured_joint_state(rho_ab, x);
  const DensityMatrix rho_zab = measured_joint_state(rho_ab, z);
  const double f = std::min(conditional_entropy(rho_xab, {0, 2}),
                            conditional_entropy(rho_zab, {0, 2}));
  return VerificationRecord::make("ur-povm-bipartite", hxb + hzb,
                                  q_state(rho_ab.reduce({0}), x, z) + hab - f);
}

// --- information exclusion relations ---------------------------------------

// I(X:B) + I(Z:B) <= r - H(A|B), plus Hall's r_H record for comparison.
struct BipartiteIerRecords {
  VerificationRecord improved;
  VerificationRecord hall;
};

inline BipartiteIerRecords verify_ier_bipartite(const DensityMatrix& rho_ab,
                                                const OrthonormalBasis& x,
                                                const OrthonormalBasis& z) {
  if (rho_ab.dims.size() != 2 || rho_ab.dims[0] != x.dim() || x.dim() != z.dim())
    throw ValidationError("verify_ier_bipartite: dimension mismatch");
  const Povm px = basis_as_povm(x);
  const Povm pz = basis_as_povm(z);
  const double ixb = mutual_information(measurement_channel(rho_ab, px), {0});
  const double izb = mutual_information(measurement_channel(rho_ab, pz), {0});
  const double hab = conditional_entropy(rho_ab, {1});
  const double lhs = ixb + izb;

  BipartiteIerRecords out;
  // Upper bounds: record as (bound, sum) so slack >= 0 means the bound holds.
  out.improved =
      VerificationRecord::make("ier-bipartite", r_bound(px, pz) - hab, lhs);
  out.hall = VerificationRecord::make(
      "ier-bipartite-hall", r_hall(complementarity_matrix(x, z), x.dim()) - hab, lhs);
  return out;
}

// I(X:B) + I(Z:C) <= r for POVMs on A of a tripartite state.
inline VerificationRecord verify_ier_tripartite(const DensityMatrix& rho_abc, const Povm& x,
                                                const Povm& z) {
  if (rho_abc.dims.size() != 3 || rho_abc.dims[0] != x.dim || x.dim != z.dim)
    throw ValidationError("verify_ier_tripartite: dimension mismatch");
  const double ixb =
      mutual_information(measurement_channel(rho_abc.reduce({0, 1}), x), {0});
  const double izc =
      mutual_information(measurement_channel(rho_abc.reduce({0, 2}), z), {0});
  return VerificationRecord::make("ier-tripartite", r_bound(x, z), ixb + izc);
}

inline bool is_classical_on_last(const DensityMatrix& rho) {
  const int dy = rho.dims.back();
  const int rest = rho.dim() / dy;
  ComplexMatrix dephased = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (int y = 0; y < dy; ++y) {
    ComplexMatrix proj = ComplexMatrix::Zero(dy, dy);
    proj(y, y) = 1.0;
    ComplexMatrix pi = tensor_product(identity(rest), proj);
    dephased += pi * rho.mat * pi;
  }
  return max_abs(dephased - rho.mat) <= kHermitianTol;
}

// I(X:Y) + I(Z:Y) <= r for a classical register Y (a cq state on A (x) Y).
inline VerificationRecord verify_ier_classical(const DensityMatrix& rho_ay, const Povm& x,
                                               const Povm& z) {
  if (rho_ay.dims.size() != 2 || rho_ay.dims[0] != x.dim || x.dim != z.dim)
    throw ValidationError("verify_ier_classical: dimension mismatch");
  if (!is_classical_on_last(rho_ay))
    throw ValidationError("verify_ier_classical: Y register is not classical");
  const double ixy = mutual_information(measurement_channel(rho_ay, x), {0});
  const double izy = mutual_information(measurement_channel(rho_ay, z), {0});
  return VerificationRecord::make("ier-classical", r_bound(x, z), ixy + izy);
}

// --- lemma checks -----------------------------------------------------------

// || sum_k Z_k sigma Z_k ||_inf <= max_k || sqrt(Z_k) sigma sqrt(Z_k) ||_inf.
inline VerificationRecord pinching_lemma_check(const ComplexMatrix& sigma, const Povm& z) {
  if (sigma.rows() != z.dim || sigma.cols() != z.dim)
    throw ValidationError("pinching_lemma_check: dimension mismatch");
  ComplexMatrix pinched = ComplexMatrix::Zero(z.dim, z.dim);
  double rhs_max = 0.0;
  for (const auto& zk : z.elements) {
    pinched += zk * sigma * zk;
    ComplexMatrix root = psd_sqrt(zk);
    rhs_max = std::max(rhs_max, operator_norm_inf(root * sigma * root));
  }
  return VerificationRecord::make("pinching", rhs_max, operator_norm_inf(pinched), 1e-9);
}

// || S + T ||_inf <= max{||S||, ||T||} + || sqrt(S) sqrt(T) ||_inf.
inline VerificationRecord sum_norm_lemma_check(const ComplexMatrix& s, const ComplexMatrix& t) {
  const double lhs = std::max(operator_norm_inf(s), operator_norm_inf(t)) +
                     operator_norm_inf(psd_sqrt(s) * psd_sqrt(t));
  return VerificationRecord::make("sum-norm", lhs, operator_norm_inf(s + t), 1e-9);
}

// max_j h_j(X,Z) <= max_jk c_jk (the pinching lemma applied to POVM pairs).
inline VerificationRecord tomamichel_bound_check(const Povm& x, const Povm& z) {
  HFactors h = h_factors(x, z);
  double max_h = 0.0;
  for (double v : h.h_xz) max_h = std::max(max_h, v);
  return VerificationRecord::make("h-vs-cmax", complementarity_matrix(x, z).c_max, max_h, 1e-9);
}

// H(Z|C) >= D(rho_AB || sum_k Z_k rho_AB Z_k) with C the purifier of rho_AB.
inline VerificationRecord relative_entropy_lemma_check(const DensityMatrix& rho_ab,
                                                       const Povm& z) {
  if (rho_ab.dims.size() != 2 || rho_ab.dims[0] != z.dim)
    throw ValidationError("relative_entropy_lemma_check: dimension mismatch");
  const DensityMatrix rho_abc = purify(rho_ab);
  const DensityMatrix rho_ac = rho_abc.reduce({0, 2});
  const double hzc = conditional_entropy(measurement_channel(rho_ac, z), {1});

  ComplexMatrix dephased = ComplexMatrix::Zero(rho_ab.dim(), rho_ab.dim());
  const int db = rho_ab.dims[1];
  for (const auto& zk : z.elements) {
    ComplexMatrix lifted = tensor_product(zk, identity(db));
    dephased += lifted * rho_ab.mat * lifted;
  }
  const double rhs = relative_entropy(rho_ab.mat, dephased);
  VerificationRecord rec = VerificationRecord::make("rel-entropy", hzc, rhs);
  if (std::isinf(rhs)) {
    rec.pass = true;
    rec.skipped = true;
  }
  return rec;
}

// --- generic unitary scan (entry moduli of Haar samples) --------------------

struct UnitaryScanResult {
  int d = 0;
  int samples = 0;
  double min_gap = 0.0;            // smallest gap seen across all samples
  int distinct_count = 0;          // samples whose min pairwise gap > threshold
  double distinct_fraction = 0.0;
  double threshold = 1e-6;
};

inline UnitaryScanResult generic_unitary_scan(int d, int samples, RandomSource& rng,
                                              double threshold = 1e-6) {
  UnitaryScanResult res;
  res.d = d;
  res.samples = samples;
  res.threshold = threshold;
  res.min_gap = std::numeric_limits<double>::infinity();
  if (d < 2) {
    res.distinct_count = samples;
    res.distinct_fraction = 1.0;
    res.min_gap = 0.0;
    return res;
  }
  for (int s = 0; s < samples; ++s) {
    OrthonormalBasis u = haar_unitary(d, rng);
    std::vector<double> moduli;
    moduli.reserve(d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) moduli.push_back(std::abs(u.unitary(i, j)));
    std::sort(moduli.begin(), moduli.end());
    double gap = std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < moduli.size(); ++i) gap = std::min(gap, moduli[i] - moduli[i - 1]);
    res.min_gap = std::min(res.min_gap, gap);
    if (gap > threshold) ++res.distinct_count;
  }
  res.distinct_fraction = double(res.distinct_count) / samples;
  return res;
}

// --- log d gap construction --------------------------------------------------

struct GapScanPoint {
  int d = 0;
  double theta = 0.0;
  double c_max = 0.0;
  double c_2 = 0.0;
  double delta = 0.0;            // q' - q_MU measured on the constructed pair
  double predicted_delta = 0.0;  // large-d asymptote (1 - cos t) log2(d cos^2 t) / 2
};

namespace detail {

// Constant-amplitude vector whose discrete Fourier transform is also flat
// (Zadoff-Chu quadratic phases), i.e. unbiased to both the standard and the
// Fourier basis in dimension m.
inline ComplexVector biunbiased_vector(int m) {
  ComplexVector y(m);
  for (int j = 0; j < m; ++j) {
    const double phase = (m % 2 == 0) ? std::numbers::pi * j * j / m
                                      : std::numbers::pi * j * (j + 1) / m;
    y(j) = std::polar(1.0 / std::sqrt(double(m)), phase);
  }
  return y;
}

}  // namespace detail

// Basis pair U = U_r (1 (+) F_{d-1}) whose q' - q_MU gap grows as log2 d.
inline ComplexMatrix gap_unitary(int d, double theta) {
  if (d < 3) throw ValidationError("gap_unitary: requires d >= 3");
  if (theta <= 0.0 || theta >= std::numbers::pi / 2)
    throw ValidationError("gap_unitary: theta must lie in (0, pi/2)");
  const int m = d - 1;
  ComplexVector y0 = detail::biunbiased_vector(m);

  // check the unbiasedness this construction relies on
  const OrthonormalBasis fourier = OrthonormalBasis::fourier(m);
  ComplexVector in_fourier = fourier.unitary.adjoint() * y0;
  for (int j = 0; j < m; ++j) {
    if (std::abs(std::norm(y0(j)) - 1.0 / m) > 1e-9 ||
        std::abs(std::norm(in_fourier(j)) - 1.0 / m) > 1e-9)
      throw ValidationError("gap_unitary: unbiased vector construction failed");
  }

  ComplexMatrix u0 = ComplexMatrix::Zero(d, d);
  u0(0, 0) = 1.0;
  u0.block(1, 1, m, m) = fourier.unitary;

  ComplexVector y0_embedded = ComplexVector::Zero(d);
  y0_embedded.tail(m) = y0;
  ComplexVector e0 = ComplexVector::Zero(d);
  e0(0) = 1.0;
  ComplexMatrix h_r = y0_embedded * e0.adjoint() + e0 * y0_embedded.adjoint();
  ComplexMatrix h_r2 = h_r * h_r;
  ComplexMatrix u_r = (identity(d) - h_r2) + h_r2 * std::cos(theta) -
                      Complex(0.0, 1.0) * h_r * std::sin(theta);
  return u_r * u0;
}

inline GapScanPoint gap_construction(int d, double theta) {
  ComplexMatrix u = gap_unitary(d, theta);
  ComplementaritySummary cs = ComplementaritySummary::from_matrix(u.cwiseAbs2());
  GapScanPoint pt;
  pt.d = d;
  pt.theta = theta;
  pt.c_max = cs.c_max;
  pt.c_2 = cs.c_2;
  pt.delta = q_prime(cs) - q_mu(cs);
  pt.predicted_delta =
      0.5 * (1.0 - std::cos(theta)) * std::log2(d * std::cos(theta) * std::cos(theta));
  return pt;
}

inline std::vector<GapScanPoint> gap_scan(const std::vector<int>& dims, double theta) {
  std::vector<GapScanPoint> points;
  for (int d : dims) points.push_back(gap_construction(d, theta));
  return points;
}

// --- worked example ----------------------------------------------------------

// The qutrit basis pair whose bounds are all known in closed form. Z is the
// standard basis; the X basis vectors are chosen so the c-matrix reads
// {1/3,1/3,1/3; 1/2,0,1/2; 1/6,2/3,1/6} row by row.
inline std::pair<OrthonormalBasis, OrthonormalBasis> example1_bases() {
  ComplexMatrix u(3, 3);
  const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
  u << 1 / s3, 1 / s3, 1 / s3,
       1 / s2, 0, -1 / s2,
       1 / s6, -s2 / s3, 1 / s6;
  return {OrthonormalBasis::make(u.transpose()), OrthonormalBasis::standard(3)};
}

inline BoundReport example1_report() {
  auto [x, z] = example1_bases();
  DensityMatrix maximally_mixed{ComplexMatrix::Identity(3, 3) / 3.0, {3}};
  return bound_report(x, z, maximally_mixed);
}

// (p, lambda_min[Delta(p)]) samples over [0, 1] for the worked example.
inline std::vector<std::pair<double, double>> fig1_curve(int n_points) {
  if (n_points < 2) throw ValidationError("fig1_curve: need at least two points");
  auto [x, z] = example1_bases();
  DeltaFamily df = make_delta_family(basis_as_povm(x), basis_as_povm(z));
  std::vector<std::pair<double, double>> curve;
  for (int i = 0; i < n_points; ++i) {
    const double p = double(i) / (n_points - 1);
    curve.emplace_back(p, lambda_min_delta(df, p));
  }
  return curve;
}

struct MonteCarloMean {
  double mean = 0.0;
  double std_error = 0.0;
  int samples = 0;
};

// Haar average of q(|psi>) over pure states for a fixed measurement pair.
inline MonteCarloMean haar_q_state_average(const Povm& x, const Povm& z, int samples,
                                           RandomSource& rng) {
  HFactors h = h_factors(x, z);
  double sum = 0.0, sum_sq = 0.0;
  for (int s = 0; s < samples; ++s) {
    DensityMatrix psi = random_pure_state(x.dim, rng);
    double qxz = 0.0, qzx = 0.0;
    for (int j = 0; j < x.size(); ++j)
      qxz += (x.elements[j] * psi.mat).trace().real() * detail::safe_neg_log2(h.h_xz[j]);
    for (int k = 0; k < z.size(); ++k)
      qzx += (z.elements[k] * psi.mat).trace().real() * detail::safe_neg_log2(h.h_zx[k]);
    const double q = std::max(qxz, qzx);
    sum += q;
    sum_sq += q * q;
  }
  MonteCarloMean mc;
  mc.samples = samples;
  mc.mean = sum / samples;
  const double var = (sum_sq - sum * sum / samples) / (samples - 1);
  mc.std_error = std::sqrt(std::max(0.0, var) / samples);
  return mc;
}

}  // namespace entroplex
