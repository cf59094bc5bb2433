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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <complex>
#include <random>
#include <vector>

#include "anyonkit/toric.hpp"

using namespace anyonkit;
using Cd = std::complex<double>;

TEST_CASE("build code basics") {
  ToricCode c3(3);
  CHECK(c3.num_qubits() == 18);
  ToricCode c2(2);
  CHECK(c2.num_qubits() == 8);
  CHECK(c2.num_vertices() == 4);
  CHECK(c2.num_faces() == 4);
  CHECK_THROWS(ToricCode(1));

  for (int v = 0; v < c3.num_vertices(); ++v) CHECK(c3.vertex_operator(v).weight() == 4);
  for (int f = 0; f < c3.num_faces(); ++f) CHECK(c3.face_operator(f).weight() == 4);

  // All pairs of stabilizers commute (k=3: 36 choose 2 pairs).
  std::vector<PauliOperator> stabs;
  for (int v = 0; v < c3.num_vertices(); ++v) stabs.push_back(c3.vertex_operator(v));
  for (int f = 0; f < c3.num_faces(); ++f) stabs.push_back(c3.face_operator(f));
  for (size_t i = 0; i < stabs.size(); ++i)
    for (size_t j = i + 1; j < stabs.size(); ++j) CHECK(stabs[i].commutes_with(stabs[j]));

  // star and boundary share 0 or 2 edges.
  for (int v = 0; v < c3.num_vertices(); ++v)
    for (int f = 0; f < c3.num_faces(); ++f) {
      int common = 0;
      for (int a : c3.star(v))
        for (int b : c3.boundary(f))
          if (a == b) ++common;
      CHECK((common == 0 || common == 2));
    }
}

TEST_CASE("code parameters") {
  for (int k : {2, 3, 5}) {
    ToricCode code(k);
    auto p = code.parameters();
    CHECK(p.n == 2 * k * k);
    CHECK(p.m == 2 * k * k - 2);
    CHECK(p.logical_dim == 4);
  }
}

TEST_CASE("syndromes of single qubit errors") {
  ToricCode code(3);
  PauliOperator id(code.num_qubits());
  CHECK(code.syndrome(id).empty());

  PauliOperator ze(code.num_qubits());
  ze.flip_z(code.h_edge(1, 1));
  auto s = code.syndrome(ze);
  CHECK(s.violated_vertices.size() == 2);  // endpoints of the edge
  CHECK(s.violated_faces.empty());

  PauliOperator xe(code.num_qubits());
  xe.flip_x(code.v_edge(2, 0));
  auto s2 = code.syndrome(xe);
  CHECK(s2.violated_faces.size() == 2);
  CHECK(s2.violated_vertices.empty());
}

TEST_CASE("classification") {
  ToricCode code(3);
  CHECK(code.classify(code.face_operator(4)) == ToricCode::ErrorKind::Stabilizer);
  CHECK(code.classify(code.vertex_operator(2)) == ToricCode::ErrorKind::Stabilizer);

  PauliOperator z1 = code.logical_z(1);
  CHECK(code.classify(z1) == ToricCode::ErrorKind::Logical);
  auto h = code.homology_class(z1);
  CHECK(h.z1 == 1);
  CHECK(h.z2 == 0);
  CHECK(h.x1 == 0);
  CHECK(h.x2 == 0);

  PauliOperator single(code.num_qubits());
  single.flip_z(0);
  CHECK(code.classify(single) == ToricCode::ErrorKind::Detectable);
}

TEST_CASE("no operator of weight k-1 or less is logical (k <= 4, exhaustive supports)") {
  for (int k : {2, 3, 4}) {
    ToricCode code(k);
    int n = code.num_qubits();
    int w = k - 1;
    // Enumerate supports of size <= w and all X/Z/Y assignments on them.
    std::vector<int> support(w);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth > 0) {
        int m = depth;
        std::vector<int> choice(m, 0);
        while (true) {
          PauliOperator p(n);
          for (int i = 0; i < m; ++i) {
            if (choice[i] == 0 || choice[i] == 2) p.flip_x(support[i]);
            if (choice[i] == 1 || choice[i] == 2) p.flip_z(support[i]);
          }
          CHECK(code.classify(p) != ToricCode::ErrorKind::Logical);
          int c = 0;
          while (c < m && ++choice[c] == 3) choice[c++] = 0;
          if (c == m) break;
        }
      }
      if (depth == w) return;
      for (int e = start; e < n; ++e) {
        support[depth] = e;
        rec(e + 1, depth + 1);
      }
    };
    rec(0, 0);
  }
}

TEST_CASE("distance equals k") {
  for (int k : {2, 3, 4}) {
    ToricCode code(k);
    CHECK(code.min_logical_weight() == k);
  }
}

TEST_CASE("distance oracle: full Z-pattern enumeration for k=2,3") {
  for (int k : {2, 3}) {
    ToricCode code(k);
    int n = code.num_qubits();
    int best = n + 1;
    for (uint64_t bits = 1; bits < (1ull << n); ++bits) {
      PauliOperator p(n);
      for (int e = 0; e < n; ++e)
        if ((bits >> e) & 1) p.flip_z(e);
      if (code.classify(p) == ToricCode::ErrorKind::Logical)
        best = std::min(best, std::popcount(bits));
    }
    CHECK(best == k);
  }
}

TEST_CASE("string operators") {
  ToricCode code(3);
  // Contractible loop: boundary of face (1,1).
  std::vector<int> loop = {code.h_edge(1, 1), code.v_edge(1, 2), code.h_edge(2, 1),
                           code.v_edge(1, 1)};
  PauliOperator z = code.string_operator(loop, ToricCode::StringKind::ZOnLattice);
  CHECK(code.classify(z) == ToricCode::ErrorKind::Stabilizer);
  CHECK(z.same_pauli(code.face_operator(code.face(1, 1))));

  // Open path of length 1 reproduces the single qubit example.
  PauliOperator z1 = code.string_operator({code.h_edge(0, 0)}, ToricCode::StringKind::ZOnLattice);
  auto s = code.syndrome(z1);
  CHECK(s.violated_vertices.size() == 2);

  // A z string and an x string crossing once anticommute.
  std::vector<int> row_loop, col_cut;
  for (int c = 0; c < 3; ++c) row_loop.push_back(code.h_edge(0, c));
  for (int r = 0; r < 3; ++r) col_cut.push_back(code.h_edge(r, 0));
  PauliOperator sz = code.string_operator(row_loop, ToricCode::StringKind::ZOnLattice);
  PauliOperator sx = code.string_operator(col_cut, ToricCode::StringKind::XOnDual);
  CHECK(PauliOperator::commutation_sign(sz, sx) == -1);

  // Disconnected path rejected.
  CHECK_THROWS(code.string_operator({code.h_edge(0, 0), code.h_edge(2, 2)},
                                    ToricCode::StringKind::ZOnLattice));
}

TEST_CASE("einarsson phase") {
  for (int k = 2; k <= 8; ++k) {
    ToricCode code(k);
    CHECK(code.einarsson_phase() == -1);
  }
  // X1^-1 X1 = +1 and [Z1, Z2] = +1.
  ToricCode code(3);
  CHECK(code.logical_x(1).inverse().times(code.logical_x(1)).is_identity());
  PauliOperator w = code.logical_z(1)
                        .inverse()
                        .times(code.logical_z(2).inverse())
                        .times(code.logical_z(1))
                        .times(code.logical_z(2));
  CHECK(w.is_identity());
}

TEST_CASE("homology class is stable under stabilizer multiplication") {
  std::mt19937_64 rng(99);
  ToricCode code(4);
  PauliOperator e = code.logical_z(1).times(code.logical_x(2));
  auto base = code.homology_class(e);
  for (int trial = 0; trial < 200; ++trial) {
    PauliOperator p = e;
    for (int i = 0; i < 10; ++i) {
      if (rng() & 1) p = p.times(code.vertex_operator(static_cast<int>(rng() % code.num_vertices())));
      if (rng() & 1) p = p.times(code.face_operator(static_cast<int>(rng() % code.num_faces())));
    }
    CHECK(code.syndrome(p).empty());
    CHECK(code.homology_class(p) == base);
  }
}

// Dense check of the explicit ground states on k=2: the four winding-labelled
// uniform superpositions are +1 eigenvectors of every stabilizer and span the
// whole joint +1 eigenspace.
TEST_CASE("explicit ground states for k=2") {
  ToricCode code(2);
  const int n = code.num_qubits();  // 8
  const int dim = 1 << n;           // 256

  auto apply = [&](const PauliOperator& p, const std::vector<Cd>& v) {
    std::vector<Cd> out(dim, 0.0);
    Cd phase = 1.0;
    switch (p.phase_power()) {
      case 1: phase = Cd(0, 1); break;
      case 2: phase = -1.0; break;
      case 3: phase = Cd(0, -1); break;
    }
    for (int col = 0; col < dim; ++col) {
      if (v[col] == Cd(0.0)) continue;
      int sign = 0, row = col;
      for (int j = 0; j < n; ++j) {
        if (p.z(j) && ((col >> j) & 1)) sign ^= 1;
        if (p.x(j)) row ^= 1 << j;
      }
      out[row] += phase * (sign ? -1.0 : 1.0) * v[col];
    }
    return out;
  };

  std::vector<PauliOperator> stabs;
  for (int v = 0; v < code.num_vertices(); ++v) stabs.push_back(code.vertex_operator(v));
  for (int f = 0; f < code.num_faces(); ++f) stabs.push_back(code.face_operator(f));

  // Winding loops c_z1 (row 0) and c_z2 (column 0) as bit masks.
  int m1 = 0, m2 = 0;
  for (int c = 0; c < 2; ++c) m1 |= 1 << code.h_edge(0, c);
  for (int r = 0; r < 2; ++r) m2 |= 1 << code.v_edge(r, 0);

  std::vector<std::vector<Cd>> xi(4, std::vector<Cd>(dim, 0.0));
  int counts[4] = {0, 0, 0, 0};
  for (int basis = 0; basis < dim; ++basis) {
    bool flat = true;
    for (int f = 0; f < code.num_faces() && flat; ++f) {
      int parity = 0;
      for (int e : code.boundary(f)) parity ^= (basis >> e) & 1;
      flat = parity == 0;
    }
    if (!flat) continue;
    int v1 = std::popcount(static_cast<unsigned>(basis & m1)) & 1;
    int v2 = std::popcount(static_cast<unsigned>(basis & m2)) & 1;
    xi[v1 * 2 + v2][basis] = 1.0;
    counts[v1 * 2 + v2]++;
  }
  for (int w = 0; w < 4; ++w) {
    CHECK(counts[w] == 8);  // 2^(k^2 - 1)
    for (auto& a : xi[w]) a /= std::sqrt(8.0);
  }

  for (int w = 0; w < 4; ++w) {
    for (const auto& s : stabs) {
      auto out = apply(s, xi[w]);
      for (int i = 0; i < dim; ++i) CHECK(std::abs(out[i] - xi[w][i]) < 1e-12);
    }
  }

  // Joint +1 eigenspace dimension = trace of the product of projectors.
  Cd trace = 0.0;
  for (int basis = 0; basis < dim; ++basis) {
    std::vector<Cd> v(dim, 0.0);
    v[basis] = 1.0;
    for (const auto& s : stabs) {
      auto sv = apply(s, v);
      for (int i = 0; i < dim; ++i) v[i] = 0.5 * (v[i] + sv[i]);
    }
    trace += v[basis];
  }
  CHECK(std::abs(trace - Cd(4.0)) < 1e-9);
}

TEST_CASE("pauli serialization shape used by the CLI") {
  ToricCode code(2);
  PauliOperator z1 = code.logical_z(1);
  PauliOperator back = PauliOperator::deserialize(z1.serialize(), code.num_qubits());
  CHECK(back == z1);
}
