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

#ifndef QCT_CIRCUIT_BUILDERS_HPP
#define QCT_CIRCUIT_BUILDERS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "qct/gates.hpp"
#include "qct/layout.hpp"

namespace qct {

/*******************************************************************************
 * Permutation strategy
 ******************************************************************************/

/// r pairing configurations: pairings[j] maps A-variable i to B-variable
/// pairings[j][i]. Each pairing must be a bijection on {0..k-1} and the
/// configurations pairwise distinct.
struct PermutationStrategy {
  std::vector<std::vector<std::size_t>> pairings;

  std::size_t r() const { return pairings.size(); }

  void validate(const RegisterLayout &layout) const {
    if (pairings.empty())
      throw std::invalid_argument("strategy needs at least one configuration");
    if (pairings.size() > layout.ref_dim())
      throw std::invalid_argument("r exceeds 2^N_ref");
    std::set<std::vector<std::size_t>> distinct;
    for (const auto &p : pairings) {
      if (p.size() != layout.k())
        throw std::invalid_argument("pairing arity mismatch");
      std::vector<bool> hit(layout.k(), false);
      for (std::size_t b : p) {
        if (b >= layout.k() || hit[b])
          throw std::invalid_argument("pairing is not a bijection");
        hit[b] = true;
      }
      if (!distinct.insert(p).second)
        throw std::invalid_argument("pairings are not pairwise distinct");
    }
  }

  /// Canonical choice: pairing j is the cyclic shift by j
  /// (A variable i pairs with B variable (i+j) mod k). Distinct shifts
  /// require r <= k; the reference register bounds r <= 2^N_ref.
  static PermutationStrategy cyclic(const RegisterLayout &layout,
                                    std::size_t r) {
    if (r < 1)
      throw std::invalid_argument("at least one configuration required");
    if (r > layout.ref_dim())
      throw std::invalid_argument("r exceeds 2^N_ref");
    if (r > layout.k())
      throw std::invalid_argument(
          "cyclic strategy has only k distinct pairings");
    PermutationStrategy s;
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<std::size_t> p(layout.k());
      for (std::size_t i = 0; i < layout.k(); ++i)
        p[i] = (i + j) % layout.k();
      s.pairings.push_back(std::move(p));
    }
    return s;
  }
};

/*******************************************************************************
 * Resource accounting
 ******************************************************************************/

/// Gate budget of U_per under the constructive decomposition used by
/// build_u_per. One "controlled Bell unitary" is one Bell-pair wiring on an
/// (A,B) qubit pair carrying its full control pattern; total_primitive_gates
/// is the budget after expanding every multi-controlled operation into
/// {1-qubit, CNOT} primitives.
struct ResourceCount {
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t r = 0;
  std::size_t subsystem_qubits = 0;        // N_A
  std::uint64_t subsystem_dimension = 0;   // 2^N_A
  std::uint64_t controlled_bell_count = 0;
  std::uint64_t total_primitive_gates = 0;

  friend bool operator==(const ResourceCount &, const ResourceCount &) =
      default;
};

namespace detail {

// Primitive cost of an m-controlled single-qubit unitary after reduction to
// {1-qubit, CNOT}: 1 uncontrolled, otherwise 3*2^m - 2 (ancilla-free
// recursive construction). A singly controlled X is a native CNOT.
inline std::uint64_t primitive_cost_1q(std::size_t m_controls) {
  if (m_controls == 0)
    return 1;
  return 3 * (std::uint64_t{1} << m_controls) - 2;
}

inline std::uint64_t primitive_cost_x(std::size_t m_controls) {
  if (m_controls <= 1)
    return 1;
  return primitive_cost_1q(m_controls);
}

// One Bell-pair wiring unit (H on the A qubit + CNOT onto the B qubit)
// under m controls.
inline std::uint64_t primitive_cost_bell_unit(std::size_t m_controls) {
  return primitive_cost_1q(m_controls) + primitive_cost_x(m_controls + 1);
}

} // namespace detail

/// Closed-form ResourceCount for U_per with r configurations, matching the
/// emission of build_u_per gate for gate. Per configuration, each of the N_A
/// qubit-level wirings is un-paired and re-paired, and each of those Bell
/// units is multiplexed over the 2^(N_A - 1) basis states of the remaining
/// A qubits, so
///   controlled_bell_count = r * N_A * 2^N_A.
/// Every unit carries N_ref + N_A - 1 controls.
inline ResourceCount count_controlled_bell(const RegisterLayout &layout,
                                           std::size_t r) {
  if (r < 1)
    throw std::invalid_argument("at least one configuration required");
  if (r > layout.ref_dim())
    throw std::invalid_argument("r exceeds 2^N_ref");
  const std::size_t n_a = layout.n_a();
  const std::uint64_t units_per_config = std::uint64_t{n_a}
                                         << n_a; // N_A * 2^N_A
  const std::size_t controls = layout.n_ref() + n_a - 1;
  ResourceCount rc;
  rc.k = layout.k();
  rc.d = layout.var_qubits();
  rc.r = r;
  rc.subsystem_qubits = n_a;
  rc.subsystem_dimension = std::uint64_t{1} << n_a;
  rc.controlled_bell_count = r * units_per_config;
  rc.total_primitive_gates =
      rc.controlled_bell_count * detail::primitive_cost_bell_unit(controls);
  return rc;
}

/*******************************************************************************
 * U_in
 ******************************************************************************/

namespace detail {

// Prepare, from |0..0> on `qubits` (LSB first), the uniform superposition
// over the first r computational basis states, conditioned on
// `controls_so_far`. Recursive split on the most significant qubit.
inline void emit_uniform_prefix(Circuit &circuit,
                                const std::vector<std::size_t> &qubits,
                                std::size_t r,
                                std::vector<ControlBit> controls_so_far) {
  if (r <= 1 || qubits.empty())
    return;
  const std::size_t m = qubits.size();
  const std::size_t full = std::size_t{1} << m;
  if (r == full) {
    for (std::size_t q : qubits) {
      GateOp h = GateOp::h(q);
      h.add_controls(controls_so_far);
      circuit.append(std::move(h));
    }
    return;
  }
  const std::size_t hi = full >> 1;
  const std::size_t msb = qubits[m - 1];
  std::vector<std::size_t> lower(qubits.begin(), qubits.end() - 1);
  if (r <= hi) {
    emit_uniform_prefix(circuit, lower, r, std::move(controls_so_far));
    return;
  }
  // Split amplitude: P(msb=0) = hi/r.
  const double theta =
      2.0 * std::atan2(std::sqrt(static_cast<double>(r - hi)),
                       std::sqrt(static_cast<double>(hi)));
  GateOp rot = controls_so_far.empty()
                   ? GateOp::ry(msb, theta)
                   : GateOp{GateKind::CRY, {msb}, {}, theta, {}};
  rot.add_controls(controls_so_far);
  circuit.append(std::move(rot));
  // msb=0 branch: uniform over all lower states.
  for (std::size_t q : lower) {
    GateOp h = GateOp::h(q);
    h.add_controls(controls_so_far);
    h.add_control(msb, false);
    circuit.append(std::move(h));
  }
  // msb=1 branch: uniform over the first r-hi lower states.
  controls_so_far.push_back({msb, true});
  emit_uniform_prefix(circuit, lower, r - hi, std::move(controls_so_far));
}

} // namespace detail

/// Initialization stage: uniform superposition over the first r reference
/// basis states, plus a Bell pair across every corresponding (A_q, B_q)
/// qubit pair.
inline Circuit build_u_in(const RegisterLayout &layout, std::size_t r) {
  if (r < 1)
    throw std::invalid_argument("at least one configuration required");
  if (r > layout.ref_dim())
    throw std::invalid_argument("r exceeds 2^N_ref");
  Circuit circuit(layout.total_qubits());
  detail::emit_uniform_prefix(circuit, layout.ref_qubits(), r, {});
  for (std::size_t q = 0; q < layout.n_a(); ++q)
    circuit.append(GateOp::bell_prep(layout.a_flat(q), layout.b_flat(q)));
  return circuit;
}

/*******************************************************************************
 * U_per
 ******************************************************************************/

namespace detail {

inline std::vector<ControlBit> ref_controls(const RegisterLayout &layout,
                                            std::size_t j) {
  std::vector<ControlBit> ctrls;
  ctrls.reserve(layout.n_ref());
  for (std::size_t t = 0; t < layout.n_ref(); ++t)
    ctrls.push_back({layout.ref_qubit(t), ((j >> t) & 1u) != 0});
  return ctrls;
}

// Control patterns selecting each basis state of the A qubits other than
// `a`; the selected projectors sum to the identity, so emitting one unit per
// pattern composes to the unit conditioned on the REF controls alone.
inline std::vector<std::vector<ControlBit>>
selector_patterns(const RegisterLayout &layout, std::size_t a) {
  std::vector<std::size_t> others;
  for (std::size_t q = 0; q < layout.n_a(); ++q)
    if (layout.a_flat(q) != a)
      others.push_back(layout.a_flat(q));
  std::vector<std::vector<ControlBit>> patterns;
  patterns.reserve(std::size_t{1} << others.size());
  for (std::size_t s = 0; s < (std::size_t{1} << others.size()); ++s) {
    std::vector<ControlBit> sel;
    sel.reserve(others.size());
    for (std::size_t l = 0; l < others.size(); ++l)
      sel.push_back({others[l], ((s >> l) & 1u) != 0});
    patterns.push_back(std::move(sel));
  }
  return patterns;
}

} // namespace detail

/// Reference-controlled permutation stage. For each configuration j < r,
/// conditioned on REF = j, every identity Bell link (A_q, B_q) is un-paired
/// and the link (A_q, B at pairings[j]) is re-paired; REF is control-only
/// and the circuit is the identity on reference values >= r. Returns the
/// circuit together with its resource count (equal to
/// count_controlled_bell(layout, strategy.r())).
inline std::pair<Circuit, ResourceCount>
build_u_per(const RegisterLayout &layout, const PermutationStrategy &strategy) {
  strategy.validate(layout);
  Circuit circuit(layout.total_qubits());
  ResourceCount rc;
  rc.k = layout.k();
  rc.d = layout.var_qubits();
  rc.r = strategy.r();
  rc.subsystem_qubits = layout.n_a();
  rc.subsystem_dimension = std::uint64_t{1} << layout.n_a();

  for (std::size_t j = 0; j < strategy.r(); ++j) {
    const std::vector<ControlBit> ref = detail::ref_controls(layout, j);
    // Phase 1: un-pair every identity link (Bell-prep adjoint: CX then H).
    for (std::size_t q = 0; q < layout.n_a(); ++q) {
      const std::size_t a = layout.a_flat(q);
      const std::size_t b = layout.b_flat(q);
      for (const auto &sel : detail::selector_patterns(layout, a)) {
        GateOp cx = GateOp::x(b);
        cx.add_control(a, true);
        cx.add_controls(ref);
        cx.add_controls(sel);
        circuit.append(std::move(cx));
        GateOp h = GateOp::h(a);
        h.add_controls(ref);
        h.add_controls(sel);
        circuit.append(std::move(h));
        rc.controlled_bell_count += 1;
        rc.total_primitive_gates +=
            detail::primitive_cost_bell_unit(ref.size() + sel.size());
      }
    }
    // Phase 2: re-pair according to the configuration's bijection.
    for (std::size_t var = 0; var < layout.k(); ++var) {
      const std::size_t partner = strategy.pairings[j][var];
      for (std::size_t off = 0; off < layout.var_qubits(); ++off) {
        const std::size_t a = layout.a_qubit(var, off);
        const std::size_t b = layout.b_qubit(partner, off);
        for (const auto &sel : detail::selector_patterns(layout, a)) {
          GateOp bell = GateOp::bell_prep(a, b);
          bell.add_controls(ref);
          bell.add_controls(sel);
          circuit.append(std::move(bell));
          rc.controlled_bell_count += 1;
          rc.total_primitive_gates +=
              detail::primitive_cost_bell_unit(ref.size() + sel.size());
        }
      }
    }
  }
  return {std::move(circuit), rc};
}

/*******************************************************************************
 * Oracles
 ******************************************************************************/

/// Null hypothesis: identity on A and B (empty gate list).
inline Circuit build_null_oracle(const RegisterLayout &layout) {
  return Circuit(layout.total_qubits());
}

/// Alternate hypothesis: RY(theta) on every B qubit, each controlled on all
/// A qubits reading 1. Acts as the identity on B for every A basis state
/// other than |1...1>, which totalizes the two defining cases
/// (A = |0...0> -> identity on B, A = |1...1> -> RY(theta) on each B qubit).
inline Circuit build_alternate_oracle(const RegisterLayout &layout,
                                      double theta) {
  Circuit circuit(layout.total_qubits());
  for (std::size_t q = 0; q < layout.n_b(); ++q) {
    GateOp g{GateKind::CRY, {layout.b_flat(q)}, {}, theta, {}};
    for (std::size_t aq = 0; aq < layout.n_a(); ++aq)
      g.add_control(layout.a_flat(aq), true);
    circuit.append(std::move(g));
  }
  return circuit;
}

} // namespace qct

#endif // QCT_CIRCUIT_BUILDERS_HPP
