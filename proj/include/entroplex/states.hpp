#pragma once

#include <Eigen/QR>
#include <utility>
#include <vector>

#include "entroplex/linalg.hpp"
#include "entroplex/matrix.hpp"
#include "entroplex/random.hpp"

namespace entroplex {

inline constexpr double kTraceTol = 1e-9;

// Unit-trace PSD operator with subsystem dimension metadata.
struct DensityMatrix {
  ComplexMatrix mat;
  std::vector<int> dims;

  int dim() const { return static_cast<int>(mat.rows()); }

  static DensityMatrix make(ComplexMatrix m, std::vector<int> dims) {
    DensityMatrix rho{std::move(m), std::move(dims)};
    rho.validate();
    return rho;
  }

  void validate() const {
    if (dims.empty() || detail::product(dims) != mat.rows())
      throw ValidationError("DensityMatrix: product of dims does not match matrix dimension");
    require_hermitian(mat, "DensityMatrix");
    if (std::abs(mat.trace().real() - 1.0) > kTraceTol || std::abs(mat.trace().imag()) > kTraceTol)
      throw ValidationError("DensityMatrix: trace is not 1 within tolerance");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (mat + mat.adjoint()),
                                                        Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kEigClamp)
      throw ValidationError("DensityMatrix: negative eigenvalue beyond clamp tolerance");
  }

  DensityMatrix reduce(const std::vector<int>& keep) const {
    std::vector<int> kept_dims;
    for (int k : keep) kept_dims.push_back(dims.at(k));
    return DensityMatrix{partial_trace(mat, dims, keep), kept_dims};
  }
};

// Finite list of PSD effects summing to the identity.
struct Povm {
  int dim = 0;
  std::vector<ComplexMatrix> elements;

  int size() const { return static_cast<int>(elements.size()); }

  static Povm make(std::vector<ComplexMatrix> elements) {
    if (elements.empty()) throw ValidationError("Povm: needs at least one element");
    Povm povm{static_cast<int>(elements[0].rows()), std::move(elements)};
    povm.validate();
    return povm;
  }

  void validate() const {
    if (elements.empty()) throw ValidationError("Povm: needs at least one element");
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (const auto& e : elements) {
      if (e.rows() != dim || e.cols() != dim)
        throw ValidationError("Povm: element dimension mismatch");
      require_hermitian(e, "Povm element");
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (e + e.adjoint()),
                                                          Eigen::EigenvaluesOnly);
      if (solver.eigenvalues().minCoeff() < -kEigClamp)
        throw ValidationError("Povm: element has a negative eigenvalue beyond tolerance");
      sum += e;
    }
    if (max_abs(sum - identity(dim)) > kHermitianTol)
      throw ValidationError("Povm: elements do not sum to the identity within tolerance");
  }
};

// Column j of `unitary` is the basis vector |x_j>.
struct OrthonormalBasis {
  ComplexMatrix unitary;

  int dim() const { return static_cast<int>(unitary.rows()); }
  ComplexVector vec(int j) const { return unitary.col(j); }

  static OrthonormalBasis make(ComplexMatrix u) {
    OrthonormalBasis b{std::move(u)};
    b.validate();
    return b;
  }

  void validate() const {
    if (unitary.rows() != unitary.cols() || unitary.rows() < 1)
      throw ValidationError("OrthonormalBasis: matrix must be square and nonempty");
    if (max_abs(unitary.adjoint() * unitary - identity(dim())) > kHermitianTol)
      throw ValidationError("OrthonormalBasis: columns are not orthonormal within tolerance");
  }

  static OrthonormalBasis standard(int d) { return OrthonormalBasis{identity(d)}; }

  static OrthonormalBasis fourier(int d) {
    ComplexMatrix f(d, d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        f(j, k) = std::polar(1.0 / std::sqrt(double(d)),
                             2.0 * std::numbers::pi * j * k / d);
    return OrthonormalBasis{f};
  }
};

// Trace-preserving channel in Kraus form; each operator maps in -> out.
struct KrausChannel {
  std::vector<ComplexMatrix> kraus;

  int input_dim() const { return static_cast<int>(kraus.at(0).cols()); }
  int output_dim() const { return static_cast<int>(kraus.at(0).rows()); }

  static KrausChannel make(std::vector<ComplexMatrix> ops) {
    KrausChannel ch{std::move(ops)};
    ch.validate();
    return ch;
  }

  void validate() const {
    if (kraus.empty()) throw ValidationError("KrausChannel: needs at least one Kraus operator");
    const int din = input_dim();
    const int dout = output_dim();
    ComplexMatrix sum = ComplexMatrix::Zero(din, din);
    for (const auto& k : kraus) {
      if (k.cols() != din || k.rows() != dout)
        throw ValidationError("KrausChannel: Kraus operator shape mismatch");
      sum += k.adjoint() * k;
    }
    if (max_abs(sum - identity(din)) > kHermitianTol)
      throw ValidationError("KrausChannel: sum K^dag K is not the identity within tolerance");
  }
};

// Haar-distributed unitary: QR of a complex Ginibre matrix with the phase
// correction Q -> Q diag(R_jj/|R_jj|) that makes the distribution exactly Haar.
inline OrthonormalBasis haar_unitary(int d, RandomSource& rng) {
  if (d < 1) throw ValidationError("haar_unitary: dimension must be >= 1");
  ComplexMatrix g = ginibre_matrix(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    Complex diag = r(j, j);
    double mag = std::abs(diag);
    q.col(j) *= (mag > 0.0) ? diag / mag : Complex(1.0, 0.0);
  }
  return OrthonormalBasis{q};
}

inline DensityMatrix random_pure_state(int d, RandomSource& rng) {
  ComplexVector v = ginibre_matrix(d, 1, rng);
  v.normalize();
  return DensityMatrix{v * v.adjoint(), {d}};
}

// Hilbert-Schmidt measure: partial trace of a Haar pure state on a doubled
// space (purifier dimension equals the system dimension).
inline DensityMatrix random_density_matrix(const std::vector<int>& dims, RandomSource& rng) {
  const int d = detail::product(dims);
  ComplexMatrix g = ginibre_matrix(d, d, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix{0.5 * (rho + rho.adjoint()), dims};
}

inline DensityMatrix random_density_matrix(int d, RandomSource& rng) {
  return random_density_matrix(std::vector<int>{d}, rng);
}

// X_i = S^{-1/2} G_i S^{-1/2} with random PSD G_i and S = sum G_i.
inline Povm random_povm(int d, int n, RandomSource& rng) {
  if (n < 1) throw ValidationError("random_povm: element count must be >= 1");
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<ComplexMatrix> gs;
    ComplexMatrix s = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < n; ++i) {
      ComplexMatrix a = ginibre_matrix(d, d, rng);
      gs.push_back(a * a.adjoint());
      s += gs.back();
    }
    HermitianEigen eig = hermitian_eig(0.5 * (s + s.adjoint()));
    if (eig.values(0) < 1e-8) continue;  // singular S, retry
    Eigen::VectorXd inv_roots = eig.values.cwiseSqrt().cwiseInverse();
    ComplexMatrix s_inv_sqrt = eig.vectors * inv_roots.asDiagonal() * eig.vectors.adjoint();
    std::vector<ComplexMatrix> elements;
    for (auto& g : gs) {
      ComplexMatrix x = s_inv_sqrt * g * s_inv_sqrt;
      elements.push_back(0.5 * (x + x.adjoint()));
    }
    return Povm::make(std::move(elements));
  }
  throw ValidationError("random_povm: singular element sum after 10 retries");
}

// Random channel from a Haar isometry V: H_d -> H_env (x) H_dout,
// K_e = (<e| (x) I) V.
inline KrausChannel random_channel(int d_in, int d_out, int env, RandomSource& rng) {
  OrthonormalBasis w = haar_unitary(env * d_out, rng);
  std::vector<ComplexMatrix> kraus;
  for (int e = 0; e < env; ++e) {
    ComplexMatrix k(d_out, d_in);
    for (int i = 0; i < d_out; ++i)
      for (int j = 0; j < d_in; ++j) k(i, j) = w.unitary(e * d_out + i, j);
    kraus.push_back(std::move(k));
  }
  return KrausChannel::make(std::move(kraus));
}

}  // namespace entroplex
