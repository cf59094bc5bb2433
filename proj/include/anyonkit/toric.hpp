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

#ifndef ANYONKIT_TORIC_HPP
#define ANYONKIT_TORIC_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "anyonkit/pauli.hpp"

namespace anyonkit {

/// TOR(k): qubits on the 2k^2 edges of the k x k torus. Horizontal edge (r,c)
/// points east from vertex (r,c); vertical edge (r,c) points north from (r,c);
/// indices are h(r,c) = r*k + c and v(r,c) = k^2 + r*k + c.
class ToricCode {
 public:
  explicit ToricCode(int k);  // k >= 2

  int k() const { return k_; }
  int num_qubits() const { return 2 * k_ * k_; }
  int num_vertices() const { return k_ * k_; }
  int num_faces() const { return k_ * k_; }

  int h_edge(int r, int c) const { return mod(r) * k_ + mod(c); }
  int v_edge(int r, int c) const { return k_ * k_ + mod(r) * k_ + mod(c); }
  int vertex(int r, int c) const { return mod(r) * k_ + mod(c); }
  int face(int r, int c) const { return mod(r) * k_ + mod(c); }

  const std::array<int, 4>& star(int vertex) const { return stars_[vertex]; }
  const std::array<int, 4>& boundary(int face) const { return plaquettes_[face]; }

  PauliOperator vertex_operator(int vertex) const;  // A_s: X on the star
  PauliOperator face_operator(int face) const;      // B_p: Z on the boundary
  // Logical representatives: Z1 = Z on row-0 horizontal loop, Z2 = Z on
  // column-0 vertical loop, X1 = X on column-0 horizontal edges (dual cut),
  // X2 = X on row-0 vertical edges.
  PauliOperator logical_z(int which) const;
  PauliOperator logical_x(int which) const;

  struct Syndrome {
    std::vector<int> violated_vertices;
    std::vector<int> violated_faces;
    bool empty() const { return violated_vertices.empty() && violated_faces.empty(); }
  };
  Syndrome syndrome(const PauliOperator& e) const;

  struct HomologyClass {
    int z1 = 0, z2 = 0;  // winding bits of the Z part
    int x1 = 0, x2 = 0;  // winding bits of the X part
    bool trivial() const { return !(z1 | z2 | x1 | x2); }
    bool operator==(const HomologyClass&) const = default;
  };
  // Only meaningful for operators with empty syndrome.
  HomologyClass homology_class(const PauliOperator& e) const;

  enum class ErrorKind { Stabilizer, Logical, Detectable };
  ErrorKind classify(const PauliOperator& e) const;

  struct CodeParameters {
    int n = 0;
    int m = 0;  // GF(2) rank of the stacked check matrix
    uint64_t logical_dim = 0;
  };
  CodeParameters parameters() const;

  enum class StringKind { ZOnLattice, XOnDual };
  // Product of sigma^z (resp sigma^x) along a connected edge path; consecutive
  // edges must share a vertex (resp a face). Throws on disconnected paths.
  PauliOperator string_operator(const std::vector<int>& path, StringKind kind) const;

  // Phase of X1^-1 Z1^-1 X1 Z1 as +1 or -1.
  int einarsson_phase() const;

  // Minimum weight of a logical (syndrome-free, homologically nontrivial)
  // operator, found by enumerating the Z-sector cycle space; the X sector
  // matches by lattice duality but is searched too.
  int min_logical_weight() const;

 private:
  int mod(int a) const { return ((a % k_) + k_) % k_; }
  int k_;
  std::vector<std::array<int, 4>> stars_;
  std::vector<std::array<int, 4>> plaquettes_;
  // Edge sets of the reference loops/cuts as qubit masks.
  std::vector<uint64_t> z1_mask_, z2_mask_, x1_mask_, x2_mask_;
  std::vector<uint64_t> make_mask(const std::vector<int>& edges) const;
};

// GF(2) rank of a bit matrix with `cols` columns, rows packed 64 bits per word.
int gf2_rank(std::vector<std::vector<uint64_t>> rows, int cols);

}  // namespace anyonkit

#endif  // ANYONKIT_TORIC_HPP
