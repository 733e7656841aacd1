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

#ifndef QCT_GATES_HPP
#define QCT_GATES_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "qct/common.hpp"

namespace qct {

enum class GateKind { H, X, RY, CRY, BellPrep, RawUnitary };

inline const char *to_string(GateKind kind) {
  switch (kind) {
  case GateKind::H:
    return "H";
  case GateKind::X:
    return "X";
  case GateKind::RY:
    return "RY";
  case GateKind::CRY:
    return "CRY";
  case GateKind::BellPrep:
    return "BELL_PREP";
  case GateKind::RawUnitary:
    return "RAW_UNITARY";
  }
  return "?";
}

/// A control qubit with polarity: the gate fires when the qubit reads
/// `on_one` (true: control-on-1, false: control-on-0).
struct ControlBit {
  std::size_t qubit = 0;
  bool on_one = true;

  friend bool operator==(const ControlBit &, const ControlBit &) = default;
};

inline Eigen::Matrix2cd hadamard_matrix() {
  const double s = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd m;
  m << s, s, s, -s;
  return m;
}

inline Eigen::Matrix2cd pauli_x_matrix() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

// RY(theta) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]; RY(2pi) = -I.
inline Eigen::Matrix2cd ry_matrix(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return m;
}

inline bool is_unitary(const Eigen::MatrixXcd &u, double tol = kUnitaryTol) {
  if (u.rows() != u.cols() || u.rows() == 0)
    return false;
  const Eigen::MatrixXcd delta =
      u.adjoint() * u -
      Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return delta.cwiseAbs().maxCoeff() <= tol;
}

/// One circuit operation: a named gate (or explicit unitary) on ordered
/// target qubits, optionally conditioned on polarity controls.
struct GateOp {
  GateKind kind = GateKind::H;
  std::vector<std::size_t> targets;
  std::vector<ControlBit> controls;
  double theta = 0.0;            // meaningful for RY/CRY only
  Eigen::MatrixXcd matrix;       // RawUnitary only

  static GateOp h(std::size_t q) { return {GateKind::H, {q}, {}, 0.0, {}}; }
  static GateOp x(std::size_t q) { return {GateKind::X, {q}, {}, 0.0, {}}; }
  static GateOp ry(std::size_t q, double theta) {
    return {GateKind::RY, {q}, {}, theta, {}};
  }
  static GateOp cry(std::size_t control, std::size_t q, double theta) {
    return {GateKind::CRY, {q}, {{control, true}}, theta, {}};
  }
  static GateOp bell_prep(std::size_t a, std::size_t b) {
    return {GateKind::BellPrep, {a, b}, {}, 0.0, {}};
  }
  static GateOp raw_unitary(Eigen::MatrixXcd u,
                            std::vector<std::size_t> targets) {
    return {GateKind::RawUnitary, std::move(targets), {}, 0.0, std::move(u)};
  }

  GateOp &add_control(std::size_t q, bool on_one = true) {
    controls.push_back({q, on_one});
    return *this;
  }
  GateOp &add_controls(const std::vector<ControlBit> &more) {
    controls.insert(controls.end(), more.begin(), more.end());
    return *this;
  }

  bool has_theta() const {
    return kind == GateKind::RY || kind == GateKind::CRY;
  }

  void validate(std::size_t n_qubits) const {
    const std::size_t expected_targets =
        (kind == GateKind::BellPrep) ? 2
        : (kind == GateKind::RawUnitary)
            ? targets.size()
            : 1;
    if (targets.size() != expected_targets || targets.empty())
      throw std::invalid_argument("gate has wrong target count");
    std::vector<bool> seen(n_qubits, false);
    for (std::size_t t : targets) {
      if (t >= n_qubits)
        throw std::invalid_argument("gate target out of range");
      if (seen[t])
        throw std::invalid_argument("gate targets not distinct");
      seen[t] = true;
    }
    for (const ControlBit &c : controls) {
      if (c.qubit >= n_qubits)
        throw std::invalid_argument("gate control out of range");
      if (seen[c.qubit])
        throw std::invalid_argument("gate controls overlap targets/controls");
      seen[c.qubit] = true;
    }
    if (kind == GateKind::CRY && controls.empty())
      throw std::invalid_argument("CRY requires at least one control");
    if (kind == GateKind::RawUnitary) {
      const auto dim = static_cast<Eigen::Index>(1ull << targets.size());
      if (matrix.rows() != dim || matrix.cols() != dim)
        throw std::invalid_argument("raw unitary dimension mismatch");
      if (!is_unitary(matrix))
        throw std::invalid_argument("raw matrix is not unitary");
    }
  }

  /// Inverse as a short gate sequence (BellPrep has no single-op inverse in
  /// the gate set; it expands to CX then H).
  std::vector<GateOp> inverse_ops() const {
    switch (kind) {
    case GateKind::H:
    case GateKind::X:
      return {*this};
    case GateKind::RY:
    case GateKind::CRY: {
      GateOp inv = *this;
      inv.theta = -theta;
      return {inv};
    }
    case GateKind::BellPrep: {
      GateOp cx = GateOp::x(targets[1]);
      cx.add_control(targets[0], true);
      cx.add_controls(controls);
      GateOp h = GateOp::h(targets[0]);
      h.add_controls(controls);
      return {cx, h};
    }
    case GateKind::RawUnitary: {
      GateOp inv = *this;
      inv.matrix = matrix.adjoint();
      return {inv};
    }
    }
    return {};
  }
};

/// An ordered gate list over a fixed qubit count.
struct Circuit {
  std::size_t n_qubits = 0;
  std::vector<GateOp> ops;

  Circuit() = default;
  explicit Circuit(std::size_t n) : n_qubits(n) {}

  void append(GateOp op) {
    op.validate(n_qubits);
    ops.push_back(std::move(op));
  }

  std::size_t size() const { return ops.size(); }

  /// Reversed, inverted gate list; applying `c` then `c.adjoint()` is the
  /// identity.
  Circuit adjoint() const {
    Circuit out(n_qubits);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
      for (GateOp &inv : it->inverse_ops())
        out.ops.push_back(std::move(inv));
    return out;
  }

  /// Same gate list re-homed on a wider register with all indices shifted.
  Circuit shifted(std::size_t offset, std::size_t new_n_qubits) const {
    Circuit out(new_n_qubits);
    for (GateOp op : ops) {
      for (std::size_t &t : op.targets)
        t += offset;
      for (ControlBit &c : op.controls)
        c.qubit += offset;
      out.append(std::move(op));
    }
    return out;
  }
};

} // namespace qct

#endif // QCT_GATES_HPP
