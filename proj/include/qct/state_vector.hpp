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

#ifndef QCT_STATE_VECTOR_HPP
#define QCT_STATE_VECTOR_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "qct/common.hpp"
#include "qct/gates.hpp"

namespace qct {

/*******************************************************************************
 *
 * StateVector
 *
 * Dense amplitude array over n qubits. Qubit 0 is the least significant bit
 * of the amplitude index throughout. Gates are applied in place with
 * stride-based bit indexing (O(2^n) per small gate, never a full-matrix
 * multiply).
 *
 ******************************************************************************/

class StateVector {
public:
  /// |0...0> on n qubits. 1 <= n <= kMaxQubits.
  explicit StateVector(std::size_t n_qubits)
      : n_qubits_(n_qubits), amps_(check_capacity(n_qubits), complex_t(0)) {
    amps_[0] = complex_t(1);
  }

  static StateVector zero_state(std::size_t n_qubits) {
    return StateVector(n_qubits);
  }

  std::size_t num_qubits() const { return n_qubits_; }
  std::size_t size() const { return amps_.size(); }
  const cvector_t &amplitudes() const { return amps_; }
  cvector_t &amplitudes() { return amps_; }
  complex_t operator[](std::size_t i) const { return amps_[i]; }
  complex_t &operator[](std::size_t i) { return amps_[i]; }

  double norm() const {
    double s = 0.0;
    for (const complex_t &a : amps_)
      s += std::norm(a);
    return std::sqrt(s);
  }

  void apply(const GateOp &op) {
    op.validate(n_qubits_);
    std::uint64_t cmask = 0, cval = 0;
    for (const ControlBit &c : op.controls) {
      cmask |= std::uint64_t{1} << c.qubit;
      if (c.on_one)
        cval |= std::uint64_t{1} << c.qubit;
    }
    switch (op.kind) {
    case GateKind::H:
      apply_matrix(op.targets, hadamard_matrix(), cmask, cval);
      break;
    case GateKind::X:
      apply_matrix(op.targets, pauli_x_matrix(), cmask, cval);
      break;
    case GateKind::RY:
    case GateKind::CRY:
      apply_matrix(op.targets, ry_matrix(op.theta), cmask, cval);
      break;
    case GateKind::BellPrep: {
      // H on the first target, then CNOT onto the second. Controlling each
      // factor controls the product.
      apply_matrix({op.targets[0]}, hadamard_matrix(), cmask, cval);
      const std::uint64_t abit = std::uint64_t{1} << op.targets[0];
      apply_matrix({op.targets[1]}, pauli_x_matrix(), cmask | abit,
                   cval | abit);
      break;
    }
    case GateKind::RawUnitary:
      apply_matrix(op.targets, op.matrix, cmask, cval);
      break;
    }
  }

  void apply(const Circuit &circuit) {
    if (circuit.n_qubits != n_qubits_)
      throw std::invalid_argument("circuit/state qubit count mismatch");
    for (const GateOp &op : circuit.ops)
      apply(op);
  }

  /// Apply an explicit unitary on the given targets (no controls). The
  /// matrix dimension must be 2^targets and unitary within kUnitaryTol.
  void apply_unitary(const Eigen::MatrixXcd &u,
                     std::span<const std::size_t> targets) {
    apply(GateOp::raw_unitary(
        u, std::vector<std::size_t>(targets.begin(), targets.end())));
  }

private:
  static std::size_t check_capacity(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
      throw CapacityError("qubit count out of range [1, " +
                          std::to_string(kMaxQubits) + "]");
    return std::size_t{1} << n_qubits;
  }

  // Generic m-target controlled kernel: iterate over base indices whose
  // target bits are all zero and whose control bits match, then mix the
  // 2^m-amplitude block through the matrix.
  void apply_matrix(const std::vector<std::size_t> &targets,
                    const Eigen::MatrixXcd &u, std::uint64_t cmask,
                    std::uint64_t cval) {
    const std::size_t m = targets.size();
    const std::size_t dim = std::size_t{1} << m;
    std::uint64_t tmask = 0;
    for (std::size_t t : targets)
      tmask |= std::uint64_t{1} << t;

    // offsets[j]: bit pattern of local index j spread onto target positions
    std::vector<std::uint64_t> offsets(dim, 0);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t l = 0; l < m; ++l)
        if ((j >> l) & 1u)
          offsets[j] |= std::uint64_t{1} << targets[l];

    std::vector<complex_t> in(dim), out(dim);
    const std::uint64_t n_states = amps_.size();
    for (std::uint64_t base = 0; base < n_states; ++base) {
      if (base & tmask)
        continue;
      if ((base & cmask) != cval)
        continue;
      for (std::size_t j = 0; j < dim; ++j)
        in[j] = amps_[base | offsets[j]];
      for (std::size_t row = 0; row < dim; ++row) {
        complex_t acc(0);
        for (std::size_t col = 0; col < dim; ++col)
          acc += u(static_cast<Eigen::Index>(row),
                   static_cast<Eigen::Index>(col)) *
                 in[col];
        out[row] = acc;
      }
      for (std::size_t j = 0; j < dim; ++j)
        amps_[base | offsets[j]] = out[j];
    }
  }

  std::size_t n_qubits_;
  cvector_t amps_;
};

/// <a|b>
inline complex_t inner_product(const StateVector &a, const StateVector &b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("inner product size mismatch");
  complex_t acc(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += std::conj(a[i]) * b[i];
  return acc;
}

/// Alias matching the discrimination vocabulary.
inline complex_t overlap(const StateVector &a, const StateVector &b) {
  return inner_product(a, b);
}

} // namespace qct

#endif // QCT_STATE_VECTOR_HPP
