#pragma once

#include <vector>

#include "entroplex/entropy.hpp"
#include "entroplex/states.hpp"

namespace entroplex {

inline Povm basis_as_povm(const OrthonormalBasis& basis) {
  basis.validate();
  std::vector<ComplexMatrix> elements;
  for (int j = 0; j < basis.dim(); ++j) {
    ComplexVector v = basis.vec(j);
    elements.push_back(v * v.adjoint());
  }
  return Povm{basis.dim(), std::move(elements)};
}

// Measures subsystem 0 with X and records the outcome in a classical
// register: rho on A (x) R maps to sum_j |j><j| (x) Tr_A(X_j rho). With no R
// the output is the diagonal outcome distribution.
inline DensityMatrix measurement_channel(const DensityMatrix& rho, const Povm& x) {
  if (rho.dims.at(0) != x.dim)
    throw ValidationError("measurement_channel: POVM dimension does not match subsystem A");
  const int n = x.size();

  if (rho.dims.size() == 1) {
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (int j = 0; j < n; ++j)
      out(j, j) = (x.elements[j] * rho.mat).trace().real();
    return DensityMatrix{out, {n}};
  }

  std::vector<int> rest_dims(rho.dims.begin() + 1, rho.dims.end());
  const int dr = detail::product(rest_dims);
  std::vector<int> rest_idx(rest_dims.size());
  for (size_t s = 0; s < rest_dims.size(); ++s) rest_idx[s] = static_cast<int>(s) + 1;

  ComplexMatrix out = ComplexMatrix::Zero(n * dr, n * dr);
  for (int j = 0; j < n; ++j) {
    ComplexMatrix weighted =
        tensor_product(x.elements[j], identity(dr)) * rho.mat;
    out.block(j * dr, j * dr, dr, dr) = partial_trace(weighted, rho.dims, rest_idx);
  }
  std::vector<int> out_dims{n};
  out_dims.insert(out_dims.end(), rest_dims.begin(), rest_dims.end());
  return DensityMatrix{out, out_dims};
}

// Post-measurement state that keeps the measured system:
// sum_j |j><j| (x) (sqrt(X_j) (x) I) rho (sqrt(X_j) (x) I), on X (x) A (x) R.
inline DensityMatrix measured_joint_state(const DensityMatrix& rho, const Povm& x) {
  if (rho.dims.at(0) != x.dim)
    throw ValidationError("measured_joint_state: POVM dimension does not match subsystem A");
  const int n = x.size();
  const int d = rho.dim();
  std::vector<int> rest_dims(rho.dims.begin() + 1, rho.dims.end());
  const int dr = rest_dims.empty() ? 1 : detail::product(rest_dims);

  ComplexMatrix out = ComplexMatrix::Zero(n * d, n * d);
  for (int j = 0; j < n; ++j) {
    ComplexMatrix root = tensor_product(psd_sqrt(x.elements[j]), identity(dr));
    out.block(j * d, j * d, d, d) = root * rho.mat * root;
  }
  std::vector<int> out_dims{n, x.dim};
  out_dims.insert(out_dims.end(), rest_dims.begin(), rest_dims.end());
  return DensityMatrix{out, out_dims};
}

inline DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.input_dim())
    throw ValidationError("apply_channel: channel input dimension mismatch");
  const int dout = ch.output_dim();
  ComplexMatrix out = ComplexMatrix::Zero(dout, dout);
  for (const auto& k : ch.kraus) out += k * rho.mat * k.adjoint();
  return DensityMatrix{0.5 * (out + out.adjoint()), {dout}};
}

inline DensityMatrix maximally_entangled_state(int d) {
  ComplexVector phi = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) phi(i * d + i) = 1.0 / std::sqrt(double(d));
  return DensityMatrix{phi * phi.adjoint(), {d, d}};
}

// Sends the B half of the maximally entangled state through the channel.
inline DensityMatrix choi_state(const KrausChannel& ch, int d) {
  if (ch.input_dim() != d)
    throw ValidationError("choi_state: channel input dimension mismatch");
  const int dout = ch.output_dim();
  DensityMatrix phi = maximally_entangled_state(d);
  ComplexMatrix out = ComplexMatrix::Zero(d * dout, d * dout);
  for (const auto& k : ch.kraus) {
    ComplexMatrix lifted = tensor_product(identity(d), k);
    out += lifted * phi.mat * lifted.adjoint();
  }
  return DensityMatrix{0.5 * (out + out.adjoint()), {d, dout}};
}

// -H(A|B) of the Choi state; lower bound on quantum capacity.
inline double coherent_information(const KrausChannel& ch, int d) {
  DensityMatrix choi = choi_state(ch, d);
  return -conditional_entropy(choi, {1});
}

// Purification on S (x) P with purifier dimension equal to dim(S); the
// purifier is appended as the last subsystem.
inline DensityMatrix purify(const DensityMatrix& rho) {
  const int d = rho.dim();
  HermitianEigen eig = hermitian_eig(rho.mat);
  ComplexVector psi = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) {
    const double lam = std::max(0.0, eig.values(i));
    if (lam <= 0.0) continue;
    const double root = std::sqrt(lam);
    for (int s = 0; s < d; ++s) psi(s * d + i) += root * eig.vectors(s, i);
  }
  std::vector<int> out_dims = rho.dims;
  out_dims.push_back(d);
  return DensityMatrix{psi * psi.adjoint(), out_dims};
}

}  // namespace entroplex
