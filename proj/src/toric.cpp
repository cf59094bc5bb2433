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

#include "anyonkit/toric.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace anyonkit {

ToricCode::ToricCode(int k) : k_(k) {
  if (k < 2) throw std::invalid_argument("toric code needs k >= 2");
  stars_.resize(num_vertices());
  plaquettes_.resize(num_faces());
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      stars_[vertex(r, c)] = {h_edge(r, c), h_edge(r, c - 1), v_edge(r, c), v_edge(r - 1, c)};
      // Face (r,c) has corners (r,c),(r,c+1),(r+1,c+1),(r+1,c).
      plaquettes_[face(r, c)] = {h_edge(r, c), v_edge(r, c + 1), h_edge(r + 1, c), v_edge(r, c)};
    }
  }
  std::vector<int> z1, z2, x1, x2;
  for (int c = 0; c < k; ++c) z1.push_back(h_edge(0, c));
  for (int r = 0; r < k; ++r) z2.push_back(v_edge(r, 0));
  for (int r = 0; r < k; ++r) x1.push_back(h_edge(r, 0));
  for (int c = 0; c < k; ++c) x2.push_back(v_edge(0, c));
  z1_mask_ = make_mask(z1);
  z2_mask_ = make_mask(z2);
  x1_mask_ = make_mask(x1);
  x2_mask_ = make_mask(x2);
}

std::vector<uint64_t> ToricCode::make_mask(const std::vector<int>& edges) const {
  std::vector<uint64_t> mask((num_qubits() + 63) / 64, 0);
  for (int e : edges) mask[e >> 6] |= 1ull << (e & 63);
  return mask;
}

PauliOperator ToricCode::vertex_operator(int v) const {
  PauliOperator p(num_qubits());
  for (int e : stars_[v]) p.flip_x(e);
  return p;
}

PauliOperator ToricCode::face_operator(int f) const {
  PauliOperator p(num_qubits());
  for (int e : plaquettes_[f]) p.flip_z(e);
  return p;
}

PauliOperator ToricCode::logical_z(int which) const {
  PauliOperator p(num_qubits());
  const auto& mask = which == 1 ? z1_mask_ : z2_mask_;
  for (int e = 0; e < num_qubits(); ++e)
    if ((mask[e >> 6] >> (e & 63)) & 1) p.flip_z(e);
  return p;
}

PauliOperator ToricCode::logical_x(int which) const {
  PauliOperator p(num_qubits());
  const auto& mask = which == 1 ? x1_mask_ : x2_mask_;
  for (int e = 0; e < num_qubits(); ++e)
    if ((mask[e >> 6] >> (e & 63)) & 1) p.flip_x(e);
  return p;
}

ToricCode::Syndrome ToricCode::syndrome(const PauliOperator& e) const {
  if (e.num_qubits() != num_qubits()) throw std::invalid_argument("pauli length mismatch");
  Syndrome s;
  for (int v = 0; v < num_vertices(); ++v) {
    int parity = 0;
    for (int edge : stars_[v]) parity ^= e.z(edge);
    if (parity) s.violated_vertices.push_back(v);
  }
  for (int f = 0; f < num_faces(); ++f) {
    int parity = 0;
    for (int edge : plaquettes_[f]) parity ^= e.x(edge);
    if (parity) s.violated_faces.push_back(f);
  }
  return s;
}

ToricCode::HomologyClass ToricCode::homology_class(const PauliOperator& e) const {
  HomologyClass h;
  h.z1 = PauliOperator::overlap_parity(e.z_words(), x1_mask_);
  h.z2 = PauliOperator::overlap_parity(e.z_words(), x2_mask_);
  h.x1 = PauliOperator::overlap_parity(e.x_words(), z1_mask_);
  h.x2 = PauliOperator::overlap_parity(e.x_words(), z2_mask_);
  return h;
}

ToricCode::ErrorKind ToricCode::classify(const PauliOperator& e) const {
  if (!syndrome(e).empty()) return ErrorKind::Detectable;
  return homology_class(e).trivial() ? ErrorKind::Stabilizer : ErrorKind::Logical;
}

ToricCode::CodeParameters ToricCode::parameters() const {
  CodeParameters out;
  out.n = num_qubits();
  // Symplectic check matrix: A_s rows carry X bits, B_p rows carry Z bits.
  int cols = 2 * out.n;
  int words = (cols + 63) / 64;
  std::vector<std::vector<uint64_t>> rows;
  for (int v = 0; v < num_vertices(); ++v) {
    std::vector<uint64_t> row(words, 0);
    for (int e : stars_[v]) row[e >> 6] |= 1ull << (e & 63);
    rows.push_back(std::move(row));
  }
  for (int f = 0; f < num_faces(); ++f) {
    std::vector<uint64_t> row(words, 0);
    for (int e : plaquettes_[f]) {
      int bit = e + out.n;
      row[bit >> 6] |= 1ull << (bit & 63);
    }
    rows.push_back(std::move(row));
  }
  out.m = gf2_rank(std::move(rows), cols);
  out.logical_dim = 1ull << (out.n - out.m);
  return out;
}

PauliOperator ToricCode::string_operator(const std::vector<int>& path, StringKind kind) const {
  PauliOperator p(num_qubits());
  if (path.empty()) return p;
  const int n = num_qubits();
  auto endpoints = [&](int e) -> std::array<int, 2> {
    bool vertical = e >= k_ * k_;
    int r = (e % (k_ * k_)) / k_, c = e % k_;
    if (kind == StringKind::ZOnLattice) {
      if (vertical) return {vertex(r, c), vertex(r + 1, c)};
      return {vertex(r, c), vertex(r, c + 1)};
    }
    // Dual path: an edge joins its two adjacent faces.
    if (vertical) return {face(r, c - 1), face(r, c)};
    return {face(r - 1, c), face(r, c)};
  };
  for (size_t i = 0; i < path.size(); ++i) {
    if (path[i] < 0 || path[i] >= n) throw std::invalid_argument("edge out of range");
    if (i > 0) {
      auto a = endpoints(path[i - 1]);
      auto b = endpoints(path[i]);
      bool connected = a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1];
      if (!connected) throw std::invalid_argument("string path is disconnected");
    }
    if (kind == StringKind::ZOnLattice)
      p.flip_z(path[i]);
    else
      p.flip_x(path[i]);
  }
  return p;
}

int ToricCode::einarsson_phase() const {
  PauliOperator x1 = logical_x(1);
  PauliOperator z1 = logical_z(1);
  PauliOperator w = x1.inverse().times(z1.inverse()).times(x1).times(z1);
  if (!w.is_identity_pauli() || (w.phase_power() & 1))
    throw std::logic_error("einarsson operator is not a real scalar");
  return w.phase_power() == 0 ? 1 : -1;
}

int ToricCode::min_logical_weight() const {
  // The Z-sector cycle space is spanned by k^2 - 1 plaquette boundaries plus
  // the two reference loops; a combination is logical iff it uses at least one
  // loop. The X sector is carried onto this one by lattice duality, but run it
  // explicitly with star boundaries and the two cuts.
  int best = num_qubits() + 1;
  auto run_sector = [&](bool z_sector) {
    int words = (num_qubits() + 63) / 64;
    std::vector<std::vector<uint64_t>> basis;
    for (int f = 0; f < (z_sector ? num_faces() - 1 : num_vertices() - 1); ++f) {
      std::vector<uint64_t> row(words, 0);
      const auto& cell = z_sector ? plaquettes_[f] : stars_[f];
      for (int e : cell) row[e >> 6] ^= 1ull << (e & 63);
      basis.push_back(std::move(row));
    }
    std::vector<std::vector<uint64_t>> loops = z_sector
                                                   ? std::vector<std::vector<uint64_t>>{z1_mask_, z2_mask_}
                                                   : std::vector<std::vector<uint64_t>>{x1_mask_, x2_mask_};
    basis.push_back(loops[0]);
    basis.push_back(loops[1]);
    size_t nb = basis.size();
    // Gray-code sweep over all combinations.
    std::vector<uint64_t> cur(words, 0);
    uint64_t prev = 0;
    for (uint64_t i = 1; i < (1ull << nb); ++i) {
      uint64_t gray = i ^ (i >> 1);
      uint64_t changed = gray ^ prev;
      prev = gray;
      int bit = std::countr_zero(changed);
      for (int w = 0; w < words; ++w) cur[w] ^= basis[bit][w];
      bool nontrivial = (gray >> (nb - 2)) & 3;  // uses a loop generator
      if (!nontrivial) continue;
      int weight = 0;
      for (int w = 0; w < words; ++w) weight += std::popcount(cur[w]);
      best = std::min(best, weight);
    }
  };
  run_sector(true);
  run_sector(false);
  return best;
}

int gf2_rank(std::vector<std::vector<uint64_t>> rows, int cols) {
  int rank = 0;
  size_t nrows = rows.size();
  for (int col = 0; col < cols && rank < static_cast<int>(nrows); ++col) {
    int pivot = -1;
    for (size_t r = rank; r < nrows; ++r) {
      if ((rows[r][col >> 6] >> (col & 63)) & 1) {
        pivot = static_cast<int>(r);
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < nrows; ++r) {
      if (static_cast<int>(r) != rank && ((rows[r][col >> 6] >> (col & 63)) & 1))
        for (size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[rank][w];
    }
    ++rank;
  }
  return rank;
}

}  // namespace anyonkit
