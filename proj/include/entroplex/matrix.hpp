#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace entroplex {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Tolerances used throughout. Hermiticity is checked entrywise; eigenvalues
// in (-kEigClamp, 0) are treated as exact zeros.
inline constexpr double kHermitianTol = 1e-9;
inline constexpr double kEigClamp = 1e-10;
inline constexpr double kEntropyFloor = 1e-12;

// Thrown when an input violates a documented invariant (maps to CLI exit 3).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

inline void require_hermitian(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols())
    throw ValidationError(std::string(who) + ": matrix is not square");
  if (!is_hermitian(m))
    throw ValidationError(std::string(who) + ": matrix is not Hermitian within tolerance");
}

// Kronecker product, subsystem 0 is the leftmost factor:
// (a (x) b)[i*rowsB + k, j*colsB + l] = a[i,j] * b[k,l].
inline ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

namespace detail {

inline int product(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
}

// Unravels a flat index into per-subsystem indices (subsystem 0 leftmost,
// i.e. most significant).
inline void unravel(int flat, const std::vector<int>& dims, std::vector<int>& out) {
  out.resize(dims.size());
  for (int s = static_cast<int>(dims.size()) - 1; s >= 0; --s) {
    out[s] = flat % dims[s];
    flat /= dims[s];
  }
}

}  // namespace detail

// Reduced operator on the kept subsystems; `keep` holds subsystem indices
// (ascending output ordering follows `keep` order as given).
inline ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                                   const std::vector<int>& keep) {
  const int total = detail::product(dims);
  if (m.rows() != total || m.cols() != total)
    throw ValidationError("partial_trace: product of dims does not match matrix dimension");
  if (keep.empty()) throw ValidationError("partial_trace: keep set is empty");
  for (int k : keep)
    if (k < 0 || k >= static_cast<int>(dims.size()))
      throw ValidationError("partial_trace: keep index out of range");

  std::vector<int> keep_dims;
  for (int k : keep) keep_dims.push_back(dims[k]);
  std::vector<char> kept(dims.size(), 0);
  for (int k : keep) kept[k] = 1;
  std::vector<int> traced;
  for (int s = 0; s < static_cast<int>(dims.size()); ++s)
    if (!kept[s]) traced.push_back(s);
  std::vector<int> traced_dims;
  for (int t : traced) traced_dims.push_back(dims[t]);

  const int dk = detail::product(keep_dims);
  const int dt = traced.empty() ? 1 : detail::product(traced_dims);
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);

  std::vector<int> ki, kj, ti, full(dims.size());
  for (int a = 0; a < dk; ++a) {
    detail::unravel(a, keep_dims, ki);
    for (int b = 0; b < dk; ++b) {
      detail::unravel(b, keep_dims, kj);
      Complex acc = 0.0;
      for (int t = 0; t < dt; ++t) {
        detail::unravel(t, traced_dims, ti);
        int row = 0, col = 0;
        for (size_t s = 0; s < dims.size(); ++s) full[s] = 0;
        for (size_t s = 0; s < keep.size(); ++s) full[keep[s]] = ki[s];
        for (size_t s = 0; s < traced.size(); ++s) full[traced[s]] = ti[s];
        for (size_t s = 0; s < dims.size(); ++s) row = row * dims[s] + full[s];
        for (size_t s = 0; s < keep.size(); ++s) full[keep[s]] = kj[s];
        for (size_t s = 0; s < dims.size(); ++s) col = col * dims[s] + full[s];
        acc += m(row, col);
      }
      out(a, b) = acc;
    }
  }
  return out;
}

}  // namespace entroplex
