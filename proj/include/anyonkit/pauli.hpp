// Copyright 2026 The anyonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANYONKIT_PAULI_HPP
#define ANYONKIT_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace anyonkit {

/// Phase-tracked n-qubit Pauli operator i^p * prod X_j^{x_j} * prod Z_j^{z_j}.
/// The X part is written to the left of the Z part, so multiplication picks up
/// (-1)^{<z_lhs, x_rhs>} when the Z block of the left factor crosses the X block
/// of the right factor.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(int n);

  int num_qubits() const { return n_; }
  int phase_power() const { return phase_; }  // power of i, mod 4
  void set_phase_power(int p) { phase_ = ((p % 4) + 4) % 4; }

  bool x(int j) const { return (x_[j >> 6] >> (j & 63)) & 1; }
  bool z(int j) const { return (z_[j >> 6] >> (j & 63)) & 1; }
  void set_x(int j, bool v);
  void set_z(int j, bool v);
  void flip_x(int j) { x_[j >> 6] ^= 1ull << (j & 63); }
  void flip_z(int j) { z_[j >> 6] ^= 1ull << (j & 63); }

  const std::vector<uint64_t>& x_words() const { return x_; }
  const std::vector<uint64_t>& z_words() const { return z_; }

  int weight() const;  // qubits with x or z set
  bool is_identity() const;        // identity Pauli with phase +1
  bool is_identity_pauli() const;  // identity Pauli, any phase
  bool same_pauli(const PauliOperator& o) const;  // equal up to phase

  PauliOperator times(const PauliOperator& rhs) const;
  PauliOperator inverse() const;
  // (-1)^{<x1,z2> + <z1,x2>}: +1 when commuting, -1 when anticommuting.
  static int commutation_sign(const PauliOperator& a, const PauliOperator& b);
  bool commutes_with(const PauliOperator& o) const { return commutation_sign(*this, o) == 1; }

  // Parity of the overlap between this operator's Z support and a word mask,
  // and likewise for X; used by syndrome extraction.
  static int overlap_parity(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);

  std::string serialize() const;  // "i^p|x-hex|z-hex"
  static PauliOperator deserialize(const std::string& text, int n);

  bool operator==(const PauliOperator& o) const = default;

 private:
  int n_ = 0;
  int phase_ = 0;
  std::vector<uint64_t> x_, z_;
};

}  // namespace anyonkit

#endif  // ANYONKIT_PAULI_HPP
