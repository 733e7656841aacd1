/*
Copyright 2026 The QCT Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef QCT_DENSITY_MATRIX_HPP
#define QCT_DENSITY_MATRIX_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cstdint>
#include <vector>

#include "qct/common.hpp"
#include "qct/state_vector.hpp"

namespace qct {

/// Dense 2^n x 2^n density operator. Construction paths (pure-state
/// projector, partial trace) preserve Hermiticity, unit trace and positivity
/// by construction; `validate()` re-checks them numerically.
class DensityMatrix {
public:
  DensityMatrix(std::size_t n_qubits, Eigen::MatrixXcd entries)
      : n_qubits_(n_qubits), entries_(std::move(entries)) {
    const auto dim = static_cast<Eigen::Index>(check_capacity(n_qubits));
    if (entries_.rows() != dim || entries_.cols() != dim)
      throw std::invalid_argument("density matrix dimension mismatch");
  }

  /// |psi><psi|
  static DensityMatrix from_state(const StateVector &psi) {
    const auto dim = static_cast<Eigen::Index>(check_capacity(psi.num_qubits()));
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      v(i) = psi[static_cast<std::size_t>(i)];
    return DensityMatrix(psi.num_qubits(), v * v.adjoint());
  }

  /// Reduce a pure state directly to the density matrix over `keep`,
  /// without materializing the full projector first.
  static DensityMatrix reduced_from_state(const StateVector &psi,
                                          const std::vector<std::size_t> &keep) {
    const auto [keep_off, rest_off, m] =
        trace_tables(psi.num_qubits(), keep);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << m);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t i = 0; i < keep_off.size(); ++i)
      for (std::size_t j = 0; j < keep_off.size(); ++j) {
        complex_t acc(0);
        for (std::uint64_t r : rest_off)
          acc += psi[keep_off[i] | r] * std::conj(psi[keep_off[j] | r]);
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
      }
    return DensityMatrix(m, std::move(out));
  }

  std::size_t num_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const Eigen::MatrixXcd &entries() const { return entries_; }
  Eigen::MatrixXcd &entries() { return entries_; }

  double trace_real() const { return entries_.trace().real(); }

  /// Trace out everything outside `keep`. Kept qubits map to the output
  /// index in ascending order (smallest kept index becomes output qubit 0).
  DensityMatrix partial_trace(const std::vector<std::size_t> &keep) const {
    const auto [keep_off, rest_off, m] = trace_tables(n_qubits_, keep);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << m);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t i = 0; i < keep_off.size(); ++i)
      for (std::size_t j = 0; j < keep_off.size(); ++j) {
        complex_t acc(0);
        for (std::uint64_t r : rest_off)
          acc += entries_(static_cast<Eigen::Index>(keep_off[i] | r),
                          static_cast<Eigen::Index>(keep_off[j] | r));
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
      }
    return DensityMatrix(m, std::move(out));
  }

  bool is_hermitian(double tol = kUnitaryTol) const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
  }

  double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(entries_,
                                                       Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }

  void validate(double tol = kUnitaryTol, double psd_tol = 1e-9) const {
    if (!is_hermitian(tol))
      throw std::invalid_argument("density matrix not Hermitian");
    if (std::abs(trace_real() - 1.0) > tol)
      throw std::invalid_argument("density matrix trace != 1");
    if (min_eigenvalue() < -psd_tol)
      throw std::invalid_argument("density matrix not positive semidefinite");
  }

private:
  static std::size_t check_capacity(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxDenseMatrixQubits)
      throw CapacityError("dense matrix qubit count out of range [1, " +
                          std::to_string(kMaxDenseMatrixQubits) + "]");
    return std::size_t{1} << n_qubits;
  }

  struct TraceTables {
    std::vector<std::uint64_t> keep_off;
    std::vector<std::uint64_t> rest_off;
    std::size_t m;
  };

  static TraceTables trace_tables(std::size_t n_qubits,
                                  std::vector<std::size_t> keep) {
    if (keep.empty())
      throw std::invalid_argument("keep set is empty");
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
      throw std::invalid_argument("keep set has duplicates");
    if (keep.back() >= n_qubits)
      throw std::invalid_argument("keep qubit out of range");

    std::vector<std::size_t> rest;
    for (std::size_t q = 0, i = 0; q < n_qubits; ++q) {
      if (i < keep.size() && keep[i] == q)
        ++i;
      else
        rest.push_back(q);
    }

    const std::size_t m = keep.size();
    TraceTables t;
    t.m = m;
    t.keep_off.assign(std::size_t{1} << m, 0);
    for (std::size_t i = 0; i < t.keep_off.size(); ++i)
      for (std::size_t l = 0; l < m; ++l)
        if ((i >> l) & 1u)
          t.keep_off[i] |= std::uint64_t{1} << keep[l];
    t.rest_off.assign(std::size_t{1} << rest.size(), 0);
    for (std::size_t i = 0; i < t.rest_off.size(); ++i)
      for (std::size_t l = 0; l < rest.size(); ++l)
        if ((i >> l) & 1u)
          t.rest_off[i] |= std::uint64_t{1} << rest[l];
    return t;
  }

  std::size_t n_qubits_;
  Eigen::MatrixXcd entries_;
};

/// Convenience free functions matching the operation names used throughout.
inline DensityMatrix density_from_state(const StateVector &psi) {
  return DensityMatrix::from_state(psi);
}

inline DensityMatrix partial_trace(const DensityMatrix &rho,
                                   const std::vector<std::size_t> &keep) {
  return rho.partial_trace(keep);
}

} // namespace qct

#endif // QCT_DENSITY_MATRIX_HPP
