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

#include "anyonkit/double_tensors.hpp"

#include <algorithm>
#include <cmath>

namespace anyonkit {

uint64_t SparseTensor::pack(const std::vector<int>& idx) {
  uint64_t key = 0;
  for (size_t i = 0; i < idx.size(); ++i) key |= static_cast<uint64_t>(idx[i]) << (16 * i);
  return key;
}

void SparseTensor::set(const std::vector<int>& idx, Cplx value) {
  if (value == Cplx(0.0, 0.0)) return;
  entries.emplace_back(pack(idx), value);
}

void SparseTensor::sort_entries() {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

Cplx SparseTensor::at_key(uint64_t key) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), key,
                             [](const auto& e, uint64_t k) { return e.first < k; });
  if (it != entries.end() && it->first == key) return it->second;
  return {0.0, 0.0};
}

Cplx SparseTensor::at(const std::vector<int>& idx) const { return at_key(pack(idx)); }

DoubleTensors::DoubleTensors(const FiniteGroup& g) : group_(&g), n_(g.order()) {
  const int n = n_;
  auto idx = [n](Elem h, Elem gg) { return static_cast<int>(h) * n + gg; };

  // Omega^{(h,g)}_{(h1,g1)(h2,g2)} = d_{h1,g1 h2 g1^-1} d_{h,h1} d_{g,g1 g2}
  omega.arity = 3;
  for (Elem g1 = 0; g1 < n; ++g1)
    for (Elem h2 = 0; h2 < n; ++h2)
      for (Elem g2 = 0; g2 < n; ++g2) {
        Elem h1 = g.conjugate(g1, h2);
        omega.set({idx(h1, g.mul(g1, g2)), idx(h1, g1), idx(h2, g2)}, 1.0);
      }

  // Lambda^{(h1,g)(h2,g)}_{(h1 h2, g)} = 1
  lambda.arity = 3;
  for (Elem h1 = 0; h1 < n; ++h1)
    for (Elem h2 = 0; h2 < n; ++h2)
      for (Elem gg = 0; gg < n; ++gg)
        lambda.set({idx(h1, gg), idx(h2, gg), idx(g.mul(h1, h2), gg)}, 1.0);

  // eps_{(h,g)} = d_{h,1};  e^{(h,g)} = d_{g,1}
  eps.arity = 1;
  unit_e.arity = 1;
  for (Elem gg = 0; gg < n; ++gg) eps.set({idx(0, gg)}, 1.0);
  for (Elem h = 0; h < n; ++h) unit_e.set({idx(h, 0)}, 1.0);

  // S^{(h1,g1)}_{(h2,g2)} = d_{g1^-1 h1 g1, h2^-1} d_{g1, g2^-1}
  antipode.arity = 2;
  for (Elem h2 = 0; h2 < n; ++h2)
    for (Elem g2 = 0; g2 < n; ++g2) {
      Elem g1 = g.inv(g2);
      Elem h1 = g.conjugate(g.inv(g2), g.inv(h2));
      antipode.set({idx(h1, g1), idx(h2, g2)}, 1.0);
    }

  // Skew antipode from its defining relation: S is a permutation of the basis,
  // so the inverse permutation solves St S = S St = id.
  skew_antipode.arity = 2;
  for (const auto& [key, value] : antipode.entries) {
    int up = static_cast<int>(key & 0xffff);
    int down = static_cast<int>(key >> 16);
    skew_antipode.set({down, up}, value);
  }

  // R^{(h,g)(v,u)} = d_{h,u} d_{g,1};  Rbar^{(h,g)(v,u)} = d_{h^-1,u} d_{g,1}
  rmat.arity = 2;
  rmat_bar.arity = 2;
  for (Elem h = 0; h < n; ++h)
    for (Elem v = 0; v < n; ++v) {
      rmat.set({idx(h, 0), idx(v, h)}, 1.0);
      rmat_bar.set({idx(h, 0), idx(v, g.inv(h))}, 1.0);
    }

  // c^{(h,g)} = N^-1 d_{h,1};  tau_{(h,g)} = N^-1 d_{1,g}
  c_elem.arity = 1;
  tau.arity = 1;
  for (Elem gg = 0; gg < n; ++gg) c_elem.set({idx(0, gg)}, 1.0 / n);
  for (Elem h = 0; h < n; ++h) tau.set({idx(h, 0)}, 1.0 / n);

  for (SparseTensor* t :
       {&omega, &lambda, &eps, &unit_e, &antipode, &skew_antipode, &rmat, &rmat_bar, &c_elem, &tau})
    t->sort_entries();
  build_joins();
}

void DoubleTensors::build_joins() {
  const int d = dim();
  omega_up_.assign(static_cast<size_t>(d) * d, -1);
  lambda_down_.assign(static_cast<size_t>(d) * d, -1);
  omega_down_.assign(d, {});
  lambda_up_.assign(d, {});
  s_up_.assign(d, -1);
  s_down_.assign(d, -1);
  st_up_.assign(d, -1);
  st_down_.assign(d, -1);
  r_first_.assign(d, -1);
  rbar_first_.assign(d, -1);
  r_seconds_.assign(d, {});
  rbar_seconds_.assign(d, {});
  eps_support_.assign(d, 0);
  e_support_.assign(d, 0);

  for (const auto& [key, value] : omega.entries) {
    int k = static_cast<int>(key & 0xffff);
    int m = static_cast<int>((key >> 16) & 0xffff);
    int nn = static_cast<int>(key >> 32);
    omega_up_[static_cast<size_t>(m) * d + nn] = k;
    omega_down_[k].emplace_back(m, nn);
  }
  for (const auto& [key, value] : lambda.entries) {
    int m = static_cast<int>(key & 0xffff);
    int nn = static_cast<int>((key >> 16) & 0xffff);
    int k = static_cast<int>(key >> 32);
    lambda_down_[static_cast<size_t>(m) * d + nn] = k;
    lambda_up_[k].emplace_back(m, nn);
  }
  for (const auto& [key, value] : antipode.entries) {
    int m = static_cast<int>(key & 0xffff);
    int k = static_cast<int>(key >> 16);
    s_up_[k] = m;
    s_down_[m] = k;
  }
  for (const auto& [key, value] : skew_antipode.entries) {
    int m = static_cast<int>(key & 0xffff);
    int k = static_cast<int>(key >> 16);
    st_up_[k] = m;
    st_down_[m] = k;
  }
  for (const auto& [key, value] : rmat.entries) {
    int i = static_cast<int>(key & 0xffff);
    int j = static_cast<int>(key >> 16);
    r_seconds_[i].push_back(j);
    r_first_[j] = i;
  }
  for (const auto& [key, value] : rmat_bar.entries) {
    int i = static_cast<int>(key & 0xffff);
    int j = static_cast<int>(key >> 16);
    rbar_seconds_[i].push_back(j);
    rbar_first_[j] = i;
  }
  for (const auto& [key, value] : eps.entries) eps_support_[key & 0xffff] = 1;
  for (const auto& [key, value] : unit_e.entries) e_support_[key & 0xffff] = 1;
  for (auto& v : omega_down_) std::sort(v.begin(), v.end());
  for (auto& v : lambda_up_) std::sort(v.begin(), v.end());
  for (auto& v : r_seconds_) std::sort(v.begin(), v.end());
  for (auto& v : rbar_seconds_) std::sort(v.begin(), v.end());
}

int DoubleTensors::omega_up(int m, int n) const { return omega_up_[static_cast<size_t>(m) * dim() + n]; }
const std::vector<std::pair<int, int>>& DoubleTensors::omega_down(int k) const { return omega_down_[k]; }
int DoubleTensors::lambda_down(int m, int n) const { return lambda_down_[static_cast<size_t>(m) * dim() + n]; }
const std::vector<std::pair<int, int>>& DoubleTensors::lambda_up(int k) const { return lambda_up_[k]; }
int DoubleTensors::s_up(int k) const { return s_up_[k]; }
int DoubleTensors::s_down(int m) const { return s_down_[m]; }
int DoubleTensors::st_up(int k) const { return st_up_[k]; }
int DoubleTensors::st_down(int m) const { return st_down_[m]; }
const std::vector<int>& DoubleTensors::r_seconds(int i) const { return r_seconds_[i]; }
int DoubleTensors::r_first(int j) const { return r_first_[j]; }
const std::vector<int>& DoubleTensors::rbar_seconds(int i) const { return rbar_seconds_[i]; }
int DoubleTensors::rbar_first(int j) const { return rbar_first_[j]; }

std::vector<DoubleIrrepLabel> double_irreps(const FiniteGroup& g) {
  std::vector<DoubleIrrepLabel> out;
  const auto& classes = g.conjugacy_classes();
  for (size_t ci = 0; ci < classes.size(); ++ci) {
    FiniteGroup cz = g.centralizer_group(classes[ci].representative);
    CharacterTable table = cz.character_table();
    for (size_t xi = 0; xi < table.dims.size(); ++xi) {
      DoubleIrrepLabel label;
      label.class_index = static_cast<int>(ci);
      label.class_rep = classes[ci].representative;
      label.class_size = classes[ci].members.size();
      label.centralizer_order = cz.order();
      label.chi_index = static_cast<int>(xi);
      label.chi_dim = table.dims[xi];
      label.dim = static_cast<int>(classes[ci].members.size()) * table.dims[xi];
      out.push_back(label);
    }
  }
  std::sort(out.begin(), out.end(), [](const DoubleIrrepLabel& a, const DoubleIrrepLabel& b) {
    if (a.class_size != b.class_size) return a.class_size < b.class_size;
    if (a.class_index != b.class_index) return a.class_index < b.class_index;
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.chi_index < b.chi_index;
  });
  return out;
}

VortexActionResult vortex_action(const FiniteGroup& g, Elem h, Elem gg, Elem v) {
  Elem image = g.conjugate(gg, v);
  if (h == image) return {1, image};
  return {0, 0};
}

std::vector<std::pair<DoubleIndex, DoubleIndex>> comultiply_double(const DoubleTensors& t,
                                                                   DoubleIndex k) {
  std::vector<std::pair<DoubleIndex, DoubleIndex>> out;
  const int n = t.n();
  for (const auto& [m, nn] : t.lambda_up(flatten(k, n)))
    out.emplace_back(unflatten(m, n), unflatten(nn, n));
  return out;
}

}  // namespace anyonkit
