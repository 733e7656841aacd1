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

#ifndef QCT_COMMON_HPP
#define QCT_COMMON_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qct {

using complex_t = std::complex<double>;
using cvector_t = std::vector<complex_t>;

// Hard caps. Dense statevectors stop being "desk scale" past 24 qubits;
// Choi construction doubles the qubit count, so channels are capped at 8.
inline constexpr std::size_t kMaxQubits = 24;
inline constexpr std::size_t kMaxChoiChannelQubits = 8;
// Largest qubit count for which a dense 2^n x 2^n matrix is materialized.
inline constexpr std::size_t kMaxDenseMatrixQubits = 12;

inline constexpr double kUnitaryTol = 1e-10;

/// Thrown when a request exceeds the simulator's hard capacity caps.
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thrown on file read/write failures.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace qct

#endif // QCT_COMMON_HPP
