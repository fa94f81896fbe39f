#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "entroplex/entropy.hpp"
#include "entroplex/golden_section.hpp"
#include "entroplex/linalg.hpp"
#include "entroplex/measurement.hpp"
#include "entroplex/states.hpp"

namespace entroplex {

// Overlap matrix c_jk with its derived scalars. Entries are clamped to [0, 1].
struct ComplementaritySummary {
  Eigen::MatrixXd c;
  double c_max = 0.0;
  double c_2 = 0.0;  // second entry of the descending multiset; equals c_max under ties
  Eigen::VectorXd row_max;
  Eigen::VectorXd col_max;

  static ComplementaritySummary from_matrix(Eigen::MatrixXd c) {
    for (Eigen::Index j = 0; j < c.rows(); ++j)
      for (Eigen::Index k = 0; k < c.cols(); ++k) {
        if (c(j, k) < -1e-12 || c(j, k) > 1.0 + kHermitianTol)
          throw ValidationError("ComplementaritySummary: overlap outside [0, 1]");
        c(j, k) = std::clamp(c(j, k), 0.0, 1.0);
      }
    ComplementaritySummary cs;
    cs.row_max = c.rowwise().maxCoeff();
    cs.col_max = c.colwise().maxCoeff().transpose();
    std::vector<double> flat(c.data(), c.data() + c.size());
    std::sort(flat.begin(), flat.end(), std::greater<>());
    cs.c_max = flat[0];
    cs.c_2 = flat.size() > 1 ? flat[1] : flat[0];
    cs.c = std::move(c);
    return cs;
  }

  // Sum of the `n` largest entries.
  double sum_largest(int n) const {
    std::vector<double> flat(c.data(), c.data() + c.size());
    std::sort(flat.begin(), flat.end(), std::greater<>());
    double s = 0.0;
    for (int i = 0; i < n && i < static_cast<int>(flat.size()); ++i) s += flat[i];
    return s;
  }
};

// c_jk = |<x_j|z_k>|^2 for orthonormal bases.
inline ComplementaritySummary complementarity_matrix(const OrthonormalBasis& x,
                                                     const OrthonormalBasis& z) {
  if (x.dim() != z.dim())
    throw ValidationError("complementarity_matrix: basis dimensions differ");
  ComplexMatrix overlaps = x.unitary.adjoint() * z.unitary;
  return ComplementaritySummary::from_matrix(overlaps.cwiseAbs2());
}

// c_jk = || sqrt(Z_k) X_j sqrt(Z_k) ||_inf for general POVMs.
inline ComplementaritySummary complementarity_matrix(const Povm& x, const Povm& z) {
  if (x.dim != z.dim)
    throw ValidationError("complementarity_matrix: POVM dimensions differ");
  std::vector<ComplexMatrix> z_roots;
  for (const auto& zk : z.elements) z_roots.push_back(psd_sqrt(zk));
  Eigen::MatrixXd c(x.size(), z.size());
  for (int j = 0; j < x.size(); ++j)
    for (int k = 0; k < z.size(); ++k)
      c(j, k) = operator_norm_inf(z_roots[k] * x.elements[j] * z_roots[k]);
  return ComplementaritySummary::from_matrix(std::move(c));
}

inline double q_mu(const ComplementaritySummary& cs) {
  if (cs.c_max <= 0.0)
    throw ValidationError("q_mu: c_max = 0 is impossible for valid POVM pairs");
  return std::log2(1.0 / cs.c_max);
}

// q' = q_MU + (1 - sqrt(c_max)) log2(c_max / c_2) / 2.
inline double q_prime(const ComplementaritySummary& cs) {
  if (cs.c_2 <= 0.0)
    throw ValidationError("q_prime: undefined for c_2 = 0");
  return q_mu(cs) + 0.5 * (1.0 - std::sqrt(cs.c_max)) * std::log2(cs.c_max / cs.c_2);
}

// h_j(X,Z) = || sum_k Z_k X_j Z_k ||_inf and the X<->Z mirror. For rank-one
// projective POVMs this equals the row/column maxima of the c-matrix.
struct HFactors {
  std::vector<double> h_xz;  // indexed by j
  std::vector<double> h_zx;  // indexed by k
};

inline HFactors h_factors(const Povm& x, const Povm& z) {
  if (x.dim != z.dim) throw ValidationError("h_factors: POVM dimensions differ");
  HFactors h;
  for (int j = 0; j < x.size(); ++j) {
    ComplexMatrix sum = ComplexMatrix::Zero(x.dim, x.dim);
    for (const auto& zk : z.elements) sum += zk * x.elements[j] * zk;
    h.h_xz.push_back(operator_norm_inf(sum));
  }
  for (int k = 0; k < z.size(); ++k) {
    ComplexMatrix sum = ComplexMatrix::Zero(x.dim, x.dim);
    for (const auto& xj : x.elements) sum += xj * z.elements[k] * xj;
    h.h_zx.push_back(operator_norm_inf(sum));
  }
  return h;
}

namespace detail {

// h-factors can only vanish through numerical degeneracy; floor before the log.
inline double safe_neg_log2(double h) { return std::log2(1.0 / std::max(h, 1e-300)); }

}  // namespace detail

// Delta_XZ = sum_j log2(1/h_j) X_j and Delta_ZX = sum_k log2(1/h_k) Z_k.
struct DeltaFamily {
  ComplexMatrix delta_xz;
  ComplexMatrix delta_zx;

  ComplexMatrix at(double p) const { return p * delta_xz + (1.0 - p) * delta_zx; }
};

inline DeltaFamily make_delta_family(const Povm& x, const Povm& z) {
  HFactors h = h_factors(x, z);
  DeltaFamily df;
  df.delta_xz = ComplexMatrix::Zero(x.dim, x.dim);
  df.delta_zx = ComplexMatrix::Zero(x.dim, x.dim);
  for (int j = 0; j < x.size(); ++j)
    df.delta_xz += detail::safe_neg_log2(h.h_xz[j]) * x.elements[j];
  for (int k = 0; k < z.size(); ++k)
    df.delta_zx += detail::safe_neg_log2(h.h_zx[k]) * z.elements[k];
  return df;
}

inline ComplexMatrix delta_of_p(const DeltaFamily& df, double p) { return df.at(p); }

inline double lambda_min_delta(const DeltaFamily& df, double p) {
  return min_eigenvalue(df.at(p));
}

struct StateIndependentBound {
  double q;
  double p_star;
};

// q = max_p lambda_min[Delta(p)]; the objective is concave, so golden-section
// over a grid-selected bracket finds the maximum. Any evaluated p gives a
// certified lower bound.
inline StateIndependentBound q_opt(const DeltaFamily& df) {
  auto objective = [&df](double p) { return lambda_min_delta(df, p); };
  ScalarMaximum best = grid_seeded_maximize(objective, 0.0, 1.0);
  return {best.value, best.x};
}

inline StateIndependentBound q_opt(const Povm& x, const Povm& z) {
  return q_opt(make_delta_family(x, z));
}

// State-dependent bound q(rho_A) = max of the two directional averages of
// -log2 h over the outcome distributions.
inline double q_state(const DensityMatrix& rho_a, const Povm& x, const Povm& z) {
  if (rho_a.dim() != x.dim)
    throw ValidationError("q_state: state dimension does not match POVMs");
  HFactors h = h_factors(x, z);
  double qxz = 0.0;
  for (int j = 0; j < x.size(); ++j) {
    const double p = (x.elements[j] * rho_a.mat).trace().real();
    if (p > 0.0) qxz += p * detail::safe_neg_log2(h.h_xz[j]);
  }
  double qzx = 0.0;
  for (int k = 0; k < z.size(); ++k) {
    const double p = (z.elements[k] * rho_a.mat).trace().real();
    if (p > 0.0) qzx += p * detail::safe_neg_log2(h.h_zx[k]);
  }
  return std::max(qxz, qzx);
}

inline double q_state(const DensityMatrix& rho_a, const OrthonormalBasis& x,
                      const OrthonormalBasis& z) {
  return q_state(rho_a, basis_as_povm(x), basis_as_povm(z));
}

// r_H = log2(d^2 c_max); orthonormal bases only.
inline double r_hall(const ComplementaritySummary& cs, int d) {
  return std::log2(double(d) * d * cs.c_max);
}

// r_G = log2(d * sum of the d largest c entries); defined only for the
// square c-matrix of an orthonormal basis pair.
inline double r_grudka(const ComplementaritySummary& cs, int d) {
  if (cs.c.rows() != cs.c.cols() || cs.c.rows() != d)
    throw ValidationError("r_grudka: defined only for square basis c-matrices");
  return std::log2(double(d) * cs.sum_largest(d));
}

// r = min over directions of log2(|Z| sum_j h_j(X,Z)); reduces to
// log2(d sum_j max_k c_jk) for orthonormal bases.
inline double r_bound(const Povm& x, const Povm& z) {
  HFactors h = h_factors(x, z);
  double sum_xz = 0.0, sum_zx = 0.0;
  for (double v : h.h_xz) sum_xz += v;
  for (double v : h.h_zx) sum_zx += v;
  return std::min(std::log2(z.size() * sum_xz), std::log2(x.size() * sum_zx));
}

inline double r_bound(const OrthonormalBasis& x, const OrthonormalBasis& z) {
  return r_bound(basis_as_povm(x), basis_as_povm(z));
}

// All computed bounds for one measurement pair; r_hall / r_grudka are only
// present for orthonormal-basis inputs.
struct BoundReport {
  double q_mu = 0.0;
  double q_prime = 0.0;
  double lambda_half = 0.0;
  double q_opt = 0.0;
  double p_star = 0.0;
  std::optional<double> r_hall;
  std::optional<double> r_grudka;
  double r = 0.0;
  std::optional<double> q_state;
};

inline BoundReport bound_report(const Povm& x, const Povm& z,
                                const ComplementaritySummary& cs,
                                const std::optional<DensityMatrix>& rho_a = std::nullopt) {
  BoundReport rep;
  rep.q_mu = q_mu(cs);
  rep.q_prime = q_prime(cs);
  DeltaFamily df = make_delta_family(x, z);
  rep.lambda_half = lambda_min_delta(df, 0.5);
  StateIndependentBound opt = q_opt(df);
  rep.q_opt = opt.q;
  rep.p_star = opt.p_star;
  rep.r = r_bound(x, z);
  if (rho_a) rep.q_state = q_state(*rho_a, x, z);
  return rep;
}

inline BoundReport bound_report(const OrthonormalBasis& x, const OrthonormalBasis& z,
                                const std::optional<DensityMatrix>& rho_a = std::nullopt) {
  ComplementaritySummary cs = complementarity_matrix(x, z);
  BoundReport rep = bound_report(basis_as_povm(x), basis_as_povm(z), cs, rho_a);
  rep.r_hall = r_hall(cs, x.dim());
  rep.r_grudka = r_grudka(cs, x.dim());
  return rep;
}

struct CapacityWitness {
  double i_x = 0.0;
  double i_z = 0.0;
  double r = 0.0;
  double witness = 0.0;
};

namespace detail {

inline double classical_mutual_information(const Eigen::MatrixXd& joint) {
  Eigen::VectorXd px = joint.rowwise().sum();
  Eigen::VectorXd py = joint.colwise().sum().transpose();
  double mi = 0.0;
  for (Eigen::Index i = 0; i < joint.rows(); ++i)
    for (Eigen::Index j = 0; j < joint.cols(); ++j) {
      const double p = joint(i, j);
      if (p > kEntropyFloor) mi += p * std::log2(p / (px(i) * py(j)));
    }
  return mi;
}

}  // namespace detail

// Capacity witness W = I(X:X_B) + I(Z:Z_B) - r: Alice sends basis states with
// equal probability, Bob measures in the matching output basis; the joint
// outcome distribution gives each mutual information.
inline CapacityWitness capacity_witness(const KrausChannel& ch, const OrthonormalBasis& x,
                                        const OrthonormalBasis& x_b, const OrthonormalBasis& z,
                                        const OrthonormalBasis& z_b) {
  const int d = x.dim();
  if (ch.input_dim() != d || z.dim() != d || x_b.dim() != ch.output_dim() ||
      z_b.dim() != ch.output_dim())
    throw ValidationError("capacity_witness: basis dimensions do not match the channel");

  auto joint = [&](const OrthonormalBasis& in, const OrthonormalBasis& out) {
    Eigen::MatrixXd p(d, out.dim());
    for (int j = 0; j < d; ++j) {
      ComplexVector v = in.vec(j);
      DensityMatrix sent = apply_channel(ch, DensityMatrix{v * v.adjoint(), {d}});
      for (int jp = 0; jp < out.dim(); ++jp)
        p(j, jp) = std::max(
            0.0, (out.vec(jp).adjoint() * sent.mat * out.vec(jp))(0, 0).real() / d);
    }
    return p;
  };

  CapacityWitness w;
  w.i_x = detail::classical_mutual_information(joint(x, x_b));
  w.i_z = detail::classical_mutual_information(joint(z, z_b));
  w.r = r_bound(x, z);
  w.witness = w.i_x + w.i_z - w.r;
  return w;
}

}  // namespace entroplex
