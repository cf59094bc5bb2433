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

#ifndef ANYONKIT_DOUBLE_TENSORS_HPP
#define ANYONKIT_DOUBLE_TENSORS_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anyonkit/group.hpp"

namespace anyonkit {

using Cplx = std::complex<double>;

/// Basis label (h, g) of D_{(h,g)} = B_h A_g and of the dual basis F^{(h,g)},
/// flattened to h * N + g where convenient.
struct DoubleIndex {
  Elem h = 0;
  Elem g = 0;
};

inline int flatten(DoubleIndex k, int n) { return k.h * n + k.g; }
inline DoubleIndex unflatten(int k, int n) {
  return {static_cast<Elem>(k / n), static_cast<Elem>(k % n)};
}

/// Sparse tensor over DoubleIndex slots. Entries are keyed by the index tuple
/// packed 16 bits per slot (slot 0 in the low bits); zero entries are never stored.
struct SparseTensor {
  int arity = 0;
  std::vector<std::pair<uint64_t, Cplx>> entries;  // sorted by key

  static uint64_t pack(const std::vector<int>& idx);
  void set(const std::vector<int>& idx, Cplx value);
  void sort_entries();
  Cplx at(const std::vector<int>& idx) const;
  Cplx at_key(uint64_t key) const;
  size_t nnz() const { return entries.size(); }
};

struct AxiomReport {
  std::string axiom;
  bool pass = true;
  double worst_residual = 0.0;
  std::vector<int> counterexample;  // flattened DoubleIndex tuple, empty when passing
  uint64_t tuples_checked = 0;
  bool exhaustive = true;
};

/// Structure constants of D(G) and its dual ribbon algebra F, plus the special
/// elements. Single source of truth for every module that contracts them.
class DoubleTensors {
 public:
  explicit DoubleTensors(const FiniteGroup& g);

  const FiniteGroup& group() const { return *group_; }
  int n() const { return n_; }
  int dim() const { return n_ * n_; }  // number of DoubleIndex values

  // Stored tensors. Slot orders:
  //   omega:  (k, m, n) for Omega^k_{mn}        lambda: (m, n, k) for Lambda^{mn}_k
  //   antipode / skew_antipode: (m, k) for S^m_k
  //   rmat / rmat_bar: (i, j), both slots upper
  //   eps, unit_e, c_elem, tau: (k)
  SparseTensor omega, lambda, eps, unit_e, antipode, skew_antipode, rmat, rmat_bar, c_elem, tau;

  // Directional joins derived from the stored entries.
  int omega_up(int m, int n) const;  // unique k with Omega^k_{mn} != 0, or -1
  const std::vector<std::pair<int, int>>& omega_down(int k) const;  // all (m,n) under upper k
  int lambda_down(int m, int n) const;  // unique k with Lambda^{mn}_k != 0, or -1
  const std::vector<std::pair<int, int>>& lambda_up(int k) const;  // all (m,n) over lower k
  int s_up(int k) const;        // unique m with S^m_k != 0
  int s_down(int m) const;      // unique k with S^m_k != 0
  int st_up(int k) const;       // skew antipode versions
  int st_down(int m) const;
  const std::vector<int>& r_seconds(int i) const;     // all j with R^{ij} != 0
  int r_first(int j) const;                           // unique i with R^{ij} != 0, or -1
  const std::vector<int>& rbar_seconds(int i) const;
  int rbar_first(int j) const;
  bool eps_one(int k) const { return eps_support_[k]; }
  bool e_one(int k) const { return e_support_[k]; }

  // Refreshes the join structures after direct edits to the entry lists
  // (used by mutation tests).
  void rebuild_joins() { build_joins(); }

 private:
  const FiniteGroup* group_;
  int n_;
  std::vector<int> omega_up_, lambda_down_, s_up_, s_down_, st_up_, st_down_, r_first_, rbar_first_;
  std::vector<std::vector<std::pair<int, int>>> omega_down_, lambda_up_;
  std::vector<std::vector<int>> r_seconds_, rbar_seconds_;
  std::vector<char> eps_support_, e_support_;
  void build_joins();
};

struct VerifyOptions {
  // Exhaustive when dim^2 (= N^4) stays below this; otherwise seeded sampling.
  int exhaustive_max_order = 8;
  uint64_t min_sampled_tuples = 1000000;
  uint64_t seed = 1;
  int threads = 0;  // 0 = library default
};

/// One report per Hopf / R-matrix identity. Residuals of the 0/1 delta tensors
/// are exact integers, so pass means worst_residual == 0.
std::vector<AxiomReport> verify_axioms(const DoubleTensors& t, const VerifyOptions& opts = {});

/// Properties of the special elements c and tau (values carry 1/N, so these
/// use a 1e-12 floating tolerance instead of exact zero).
std::vector<AxiomReport> verify_special_elements(const DoubleTensors& t);

struct DoubleIrrepLabel {
  int class_index = 0;
  Elem class_rep = 0;
  size_t class_size = 0;
  int centralizer_order = 0;
  int chi_index = 0;  // row in the centralizer's character table
  int chi_dim = 0;
  int dim = 0;  // |C| * chi(1)
};

/// Irreps (C, chi) of D(G), sorted by (class size, dim, chi index).
std::vector<DoubleIrrepLabel> double_irreps(const FiniteGroup& g);

/// D_{(h,g)} |v> = delta_{h, gvg^-1} |gvg^-1> on the vortex space B_C.
struct VortexActionResult {
  int coefficient = 0;  // 0 or 1
  Elem image = 0;       // valid when coefficient == 1
};
VortexActionResult vortex_action(const FiniteGroup& g, Elem h, Elem gg, Elem v);

/// Delta(D_k) as the list of (m, n) pairs with coefficient 1 (always N terms).
std::vector<std::pair<DoubleIndex, DoubleIndex>> comultiply_double(const DoubleTensors& t,
                                                                   DoubleIndex k);

}  // namespace anyonkit

#endif  // ANYONKIT_DOUBLE_TENSORS_HPP
