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

#ifndef QCT_LAYOUT_HPP
#define QCT_LAYOUT_HPP

#include <bit>
#include <cstddef>
#include <numeric>
#include <vector>

#include "qct/common.hpp"

namespace qct {

/// ceil(log2(x)) for x >= 1.
inline std::size_t ceil_log2(std::size_t x) {
  if (x == 0)
    throw std::invalid_argument("ceil_log2(0)");
  return static_cast<std::size_t>(std::bit_width(x - 1));
}

/// Raw register sizes for k variables of d qubits each, with no capacity
/// check (the `info` command reports oversized layouts instead of failing).
struct LayoutDims {
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::size_t n_ref = 0;
  std::size_t total = 0;
};

inline LayoutDims layout_dims(std::size_t k, std::size_t d) {
  if (k < 1 || d < 1)
    throw std::invalid_argument("layout requires k >= 1 and d >= 1");
  LayoutDims dims;
  dims.n_a = k * d;
  dims.n_b = k * d;
  dims.n_ref = ceil_log2(k * d);
  dims.total = dims.n_a + dims.n_b + dims.n_ref;
  return dims;
}

/*******************************************************************************
 *
 * RegisterLayout
 *
 * Global qubit numbering for the discrimination circuit:
 *   A   = [0, N_A)           causes, k variables of d qubits
 *   B   = [N_A, 2*N_A)       effects, same shape
 *   REF = [2*N_A, total)     pairing-configuration index, ceil(log2(k*d))
 *
 * Putting REF last keeps oracle circuits (which touch A and B only) directly
 * reusable as channel circuits on 2*N_A qubits.
 *
 ******************************************************************************/

class RegisterLayout {
public:
  RegisterLayout(std::size_t k, std::size_t d)
      : k_(k), d_(d), dims_(layout_dims(k, d)) {
    if (dims_.total > kMaxQubits)
      throw CapacityError("layout needs " + std::to_string(dims_.total) +
                          " qubits, cap is " + std::to_string(kMaxQubits));
  }

  std::size_t k() const { return k_; }
  std::size_t var_qubits() const { return d_; }
  std::size_t n_a() const { return dims_.n_a; }
  std::size_t n_b() const { return dims_.n_b; }
  std::size_t n_ref() const { return dims_.n_ref; }
  std::size_t total_qubits() const { return dims_.total; }

  /// Number of reference basis states, 2^N_ref.
  std::size_t ref_dim() const { return std::size_t{1} << dims_.n_ref; }

  std::size_t a_qubit(std::size_t var, std::size_t offset) const {
    return var * d_ + offset;
  }
  std::size_t b_qubit(std::size_t var, std::size_t offset) const {
    return dims_.n_a + var * d_ + offset;
  }
  std::size_t ref_qubit(std::size_t i) const { return 2 * dims_.n_a + i; }

  /// A qubit by flat position q in [0, N_A).
  std::size_t a_flat(std::size_t q) const { return q; }
  std::size_t b_flat(std::size_t q) const { return dims_.n_a + q; }

  std::vector<std::size_t> a_qubits() const { return iota(0, dims_.n_a); }
  std::vector<std::size_t> b_qubits() const {
    return iota(dims_.n_a, 2 * dims_.n_a);
  }
  std::vector<std::size_t> ref_qubits() const {
    return iota(2 * dims_.n_a, dims_.total);
  }
  std::vector<std::size_t> ab_qubits() const {
    return iota(0, 2 * dims_.n_a);
  }

private:
  static std::vector<std::size_t> iota(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> v(hi - lo);
    std::iota(v.begin(), v.end(), lo);
    return v;
  }

  std::size_t k_;
  std::size_t d_;
  LayoutDims dims_;
};

inline RegisterLayout make_layout(std::size_t k, std::size_t d) {
  return RegisterLayout(k, d);
}

} // namespace qct

#endif // QCT_LAYOUT_HPP
