#pragma once

#include <cmath>
#include <limits>

#include "entroplex/linalg.hpp"
#include "entroplex/states.hpp"

namespace entroplex {

inline double log2_clamped(double x) { return std::log2(x); }

// Shannon entropy of an eigenvalue list in bits; eigenvalues below the floor
// contribute zero (the 0 log 0 = 0 limit).
inline double entropy_of_spectrum(const Eigen::VectorXd& lambda) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double p = lambda(i);
    if (p > kEntropyFloor) h -= p * std::log2(p);
  }
  return h;
}

inline double von_neumann_entropy(const ComplexMatrix& rho) {
  return entropy_of_spectrum(hermitian_eig(rho).values);
}

inline double von_neumann_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy(rho.mat);
}

// H(S|C) = H(SC) - H(C) for the full state on S (x) C; `cond` lists the
// subsystems of C. May be negative for entangled states.
inline double conditional_entropy(const DensityMatrix& rho, const std::vector<int>& cond) {
  if (cond.empty() || cond.size() >= rho.dims.size())
    throw ValidationError("conditional_entropy: conditioning set must be a proper nonempty subset");
  return von_neumann_entropy(rho) - von_neumann_entropy(rho.reduce(cond));
}

// I(S:C) = H(S) + H(C) - H(SC); `first` lists the subsystems of S, the rest
// form C.
inline double mutual_information(const DensityMatrix& rho, const std::vector<int>& first) {
  std::vector<char> in_first(rho.dims.size(), 0);
  for (int s : first) in_first.at(s) = 1;
  std::vector<int> rest;
  for (int s = 0; s < static_cast<int>(rho.dims.size()); ++s)
    if (!in_first[s]) rest.push_back(s);
  if (first.empty() || rest.empty())
    throw ValidationError("mutual_information: bipartition must be proper and nonempty");
  return von_neumann_entropy(rho.reduce(first)) + von_neumann_entropy(rho.reduce(rest)) -
         von_neumann_entropy(rho);
}

// D(rho || sigma) in bits; +infinity when supp(rho) is not inside supp(sigma).
inline double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw ValidationError("relative_entropy: dimension mismatch");
  HermitianEigen er = hermitian_eig(rho);
  HermitianEigen es = hermitian_eig(sigma);

  double tr_rho_log_rho = 0.0;
  for (Eigen::Index i = 0; i < er.values.size(); ++i)
    if (er.values(i) > kEntropyFloor) tr_rho_log_rho += er.values(i) * std::log2(er.values(i));

  double tr_rho_log_sigma = 0.0;
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    const double mu = es.values(k);
    const double weight = (es.vectors.col(k).adjoint() * rho * es.vectors.col(k))(0, 0).real();
    if (mu > kEntropyFloor) {
      tr_rho_log_sigma += weight * std::log2(mu);
    } else if (weight > 1e-10) {
      return std::numeric_limits<double>::infinity();  // support violation
    }
  }
  return tr_rho_log_rho - tr_rho_log_sigma;
}

inline double relative_entropy(const DensityMatrix& rho, const ComplexMatrix& sigma) {
  return relative_entropy(rho.mat, sigma);
}

}  // namespace entroplex
