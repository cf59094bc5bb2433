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

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "anyonkit/group.hpp"

namespace anyonkit {

namespace {

// Residual of both orthogonality relations; also used by tests.
double orthogonality_residual(const FiniteGroup& g, const CharacterTable& t) {
  const double n = g.order();
  const size_t r = t.rows.size();
  double worst = 0.0;
  for (size_t a = 0; a < r; ++a) {
    for (size_t b = 0; b < r; ++b) {
      std::complex<double> acc = 0.0;
      for (size_t c = 0; c < r; ++c)
        acc += static_cast<double>(t.classes[c].members.size()) * t.rows[a][c] *
               std::conj(t.rows[b][c]);
      worst = std::max(worst, std::abs(acc - (a == b ? n : 0.0)));
    }
  }
  // Column orthogonality: sum_chi chi(c1) conj(chi(c2)) = |E(c1)| delta_{c1,c2}.
  for (size_t c1 = 0; c1 < r; ++c1) {
    for (size_t c2 = 0; c2 < r; ++c2) {
      std::complex<double> acc = 0.0;
      for (size_t a = 0; a < r; ++a) acc += t.rows[a][c1] * std::conj(t.rows[a][c2]);
      double want = (c1 == c2) ? n / t.classes[c1].members.size() : 0.0;
      worst = std::max(worst, std::abs(acc - want));
    }
  }
  return worst;
}

}  // namespace

CharacterTable build_character_table(const FiniteGroup& g) {
  const int n = g.order();
  const auto& classes = g.conjugacy_classes();
  const int r = static_cast<int>(classes.size());

  // Structure constants of the class algebra: K_i K_j = sum_k a[i][j][k] K_k.
  std::vector<double> a(static_cast<size_t>(r) * r * r, 0.0);
  for (Elem x = 0; x < n; ++x) {
    int i = g.class_of(x);
    for (Elem y = 0; y < n; ++y) {
      int j = g.class_of(y);
      int k = g.class_of(g.mul(x, y));
      a[(static_cast<size_t>(i) * r + j) * r + k] += 1.0;
    }
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        a[(static_cast<size_t>(i) * r + j) * r + k] /= classes[k].members.size();

  // A common eigenvector v of the matrices (A_i)_{jk} = a[i][j][k] has eigenvalues
  // omega_i = |C_i| chi(g_i) / chi(1). A random combination separates the r
  // one-dimensional joint eigenspaces.
  uint64_t seed = 0x9e3779b97f4a7c15ull;
  for (int attempt = 0; attempt < 16; ++attempt) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r, r);
    for (int i = 0; i < r; ++i) {
      seed ^= seed << 13;
      seed ^= seed >> 7;
      seed ^= seed << 17;
      double ci = 0.25 + static_cast<double>(seed % 10007) / 10007.0;
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
          m(j, k) += ci * a[(static_cast<size_t>(i) * r + j) * r + k];
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) continue;

    Eigen::VectorXcd vals = solver.eigenvalues();
    double scale = 1.0;
    for (int i = 0; i < r; ++i) scale = std::max(scale, std::abs(vals(i)));
    bool degenerate = false;
    for (int i = 0; i < r && !degenerate; ++i)
      for (int j = i + 1; j < r; ++j)
        if (std::abs(vals(i) - vals(j)) < 1e-8 * scale) {
          degenerate = true;
          break;
        }
    if (degenerate) continue;

    CharacterTable table;
    table.classes = classes;
    bool ok = true;
    for (int col = 0; col < r && ok; ++col) {
      Eigen::VectorXcd v = solver.eigenvectors().col(col);
      if (std::abs(v(0)) < 1e-12) {  // identity class component must not vanish
        ok = false;
        break;
      }
      v /= v(0);
      double s = 0.0;
      for (int j = 0; j < r; ++j) s += std::norm(v(j)) / classes[j].members.size();
      double dim = std::sqrt(static_cast<double>(n) / s);
      int dim_int = static_cast<int>(std::lround(dim));
      if (dim_int < 1 || std::abs(dim - dim_int) > 1e-6) {
        ok = false;
        break;
      }
      std::vector<std::complex<double>> row(r);
      for (int j = 0; j < r; ++j) {
        row[j] = static_cast<double>(dim_int) * v(j) /
                 static_cast<double>(classes[j].members.size());
        // Snap floating dust so stored values are clean for exact-looking entries.
        if (std::abs(row[j].imag()) < 1e-12) row[j] = {row[j].real(), 0.0};
        double rr = std::lround(row[j].real());
        if (std::abs(row[j].real() - rr) < 1e-12) row[j] = {rr, row[j].imag()};
      }
      table.dims.push_back(dim_int);
      table.rows.push_back(std::move(row));
    }
    if (!ok) continue;

    long dim_sq = 0;
    for (int d : table.dims) dim_sq += static_cast<long>(d) * d;
    if (dim_sq != n) continue;

    // Canonical row order: by dimension, then lexicographically on values.
    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](int x, int y) {
      if (table.dims[x] != table.dims[y]) return table.dims[x] < table.dims[y];
      for (int j = 0; j < r; ++j) {
        double rx = table.rows[x][j].real(), ry = table.rows[y][j].real();
        if (std::abs(rx - ry) > 1e-9) return rx > ry;
        double ix = table.rows[x][j].imag(), iy = table.rows[y][j].imag();
        if (std::abs(ix - iy) > 1e-9) return ix > iy;
      }
      return false;
    });
    CharacterTable sorted;
    sorted.classes = table.classes;
    for (int i : perm) {
      sorted.dims.push_back(table.dims[i]);
      sorted.rows.push_back(table.rows[i]);
    }
    sorted.orthogonality_residual = orthogonality_residual(g, sorted);
    if (sorted.orthogonality_residual > 1e-9) continue;
    return sorted;
  }
  throw GroupError("character table eigenvalue routine did not converge for " + g.name());
}

}  // namespace anyonkit
