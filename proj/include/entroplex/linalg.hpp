#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "entroplex/matrix.hpp"

namespace entroplex {

// Eigenvalues ascending; columns of `vectors` are the matching eigenvectors.
struct HermitianEigen {
  Eigen::VectorXd values;
  ComplexMatrix vectors;
};

// Symmetrizes as (M + M^dag)/2 after the Hermiticity check, then decomposes.
inline HermitianEigen hermitian_eig(const ComplexMatrix& m) {
  require_hermitian(m, "hermitian_eig");
  ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw ValidationError("hermitian_eig: eigendecomposition failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// Largest singular value. For Hermitian PSD input this is the largest
// eigenvalue; computed as sqrt(lambda_max(M^dag M)) in general.
inline double operator_norm_inf(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  ComplexMatrix gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (gram + gram.adjoint()));
  double top = solver.eigenvalues().maxCoeff();
  return std::sqrt(std::max(0.0, top));
}

inline double min_eigenvalue(const ComplexMatrix& m) {
  return hermitian_eig(m).values(0);
}

// PSD square root. Eigenvalues in (-kEigClamp, 0) are clamped to 0; anything
// below -kEigClamp is a genuine PSD violation.
inline ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  HermitianEigen eig = hermitian_eig(m);
  Eigen::VectorXd roots(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    double lam = eig.values(i);
    if (lam < -kEigClamp)
      throw ValidationError("psd_sqrt: input has a negative eigenvalue beyond tolerance");
    roots(i) = std::sqrt(std::max(0.0, lam));
  }
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace entroplex
