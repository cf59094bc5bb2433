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

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "anyonkit/double_tensors.hpp"

namespace anyonkit {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Small integer-valued accumulation map used for one slice of one identity.
struct SliceMap {
  std::vector<std::pair<uint64_t, double>> kv;

  void add(uint64_t key, double v) { kv.emplace_back(key, v); }
  void normalize() {
    std::sort(kv.begin(), kv.end());
    size_t out = 0;
    for (size_t i = 0; i < kv.size();) {
      double sum = 0;
      size_t j = i;
      while (j < kv.size() && kv[j].first == kv[i].first) sum += kv[j++].second;
      if (sum != 0.0) kv[out++] = {kv[i].first, sum};
      i = j;
    }
    kv.resize(out);
  }
};

struct Mismatch {
  bool found = false;
  uint64_t slice = 0;
  uint64_t key = 0;
  double residual = 0.0;
};

// Compares two normalized slice maps; reports the lexicographically first
// differing free-index key and the worst residual in this slice.
void diff_maps(SliceMap& a, SliceMap& b, uint64_t slice, Mismatch& mm) {
  a.normalize();
  b.normalize();
  size_t i = 0, j = 0;
  auto note = [&](uint64_t key, double r) {
    if (r == 0.0) return;
    if (!mm.found || std::make_pair(slice, key) < std::make_pair(mm.slice, mm.key)) {
      mm.found = true;
      mm.slice = slice;
      mm.key = key;
    }
    mm.residual = std::max(mm.residual, r);
  };
  while (i < a.kv.size() || j < b.kv.size()) {
    if (j >= b.kv.size() || (i < a.kv.size() && a.kv[i].first < b.kv[j].first)) {
      note(a.kv[i].first, std::abs(a.kv[i].second));
      ++i;
    } else if (i >= a.kv.size() || b.kv[j].first < a.kv[i].first) {
      note(b.kv[j].first, std::abs(b.kv[j].second));
      ++j;
    } else {
      note(a.kv[i].first, std::abs(a.kv[i].second - b.kv[j].second));
      ++i;
      ++j;
    }
  }
}

struct AxiomDef {
  std::string id;
  uint64_t slice_count = 0;        // slice space size
  uint64_t tuples_per_slice = 0;   // free tuples covered when one slice is checked
  // Fills lhs/rhs maps for the slice; keys pack the remaining free indices.
  std::function<void(uint64_t slice, SliceMap& lhs, SliceMap& rhs)> eval;
  // Expands (slice, key) into the identity's free-index tuple for the report.
  std::function<std::vector<int>(uint64_t slice, uint64_t key)> tuple;
};

std::vector<AxiomDef> make_axioms(const DoubleTensors& t) {
  const uint64_t d = static_cast<uint64_t>(t.dim());
  const int D = t.dim();

  // (upper, first lower) -> second lower and (upper, second lower) -> first
  // lower joins for Omega; both completions are unique when present.
  auto om_second = std::make_shared<std::unordered_map<uint64_t, int>>();
  auto om_first = std::make_shared<std::unordered_map<uint64_t, int>>();
  om_second->reserve(t.omega.nnz());
  om_first->reserve(t.omega.nnz());
  for (int k = 0; k < D; ++k)
    for (const auto& [m, n] : t.omega_down(k)) {
      (*om_second)[(static_cast<uint64_t>(k) << 32) | static_cast<uint64_t>(m)] = n;
      (*om_first)[(static_cast<uint64_t>(k) << 32) | static_cast<uint64_t>(n)] = m;
    }
  auto om2 = [om_second](int k, int m) {
    auto it = om_second->find((static_cast<uint64_t>(k) << 32) | static_cast<uint64_t>(m));
    return it == om_second->end() ? -1 : it->second;
  };
  auto om1 = [om_first](int k, int n) {
    auto it = om_first->find((static_cast<uint64_t>(k) << 32) | static_cast<uint64_t>(n));
    return it == om_first->end() ? -1 : it->second;
  };

  std::vector<int> eps_list, e_list;
  for (int k = 0; k < D; ++k) {
    if (t.eps_one(k)) eps_list.push_back(k);
    if (t.e_one(k)) e_list.push_back(k);
  }

  auto single = [](SliceMap& m, int key) {
    if (key >= 0) m.add(static_cast<uint64_t>(key), 1.0);
  };
  auto pair_key = [d](int a, int b) { return static_cast<uint64_t>(a) * d + b; };

  std::vector<AxiomDef> axioms;

  axioms.push_back(
      {"mult.assoc", d * d * d, d,
       [&t, single](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
         const uint64_t d2 = static_cast<uint64_t>(t.dim());
         int l = static_cast<int>(s / (d2 * d2)), m = static_cast<int>((s / d2) % d2),
             n = static_cast<int>(s % d2);
         int i = t.lambda_down(l, m);
         single(lhs, i < 0 ? -1 : t.lambda_down(i, n));
         int j = t.lambda_down(m, n);
         single(rhs, j < 0 ? -1 : t.lambda_down(l, j));
       },
       [d](uint64_t s, uint64_t key) {
         return std::vector<int>{static_cast<int>(s / (d * d)), static_cast<int>((s / d) % d),
                                 static_cast<int>(s % d), static_cast<int>(key)};
       }});

  axioms.push_back({"mult.unit", d, 2 * d,
                    [&t, eps_list](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
                      int m = static_cast<int>(s);
                      const uint64_t d2 = static_cast<uint64_t>(t.dim());
                      for (int i : eps_list) {
                        int k1 = t.lambda_down(i, m);
                        if (k1 >= 0) lhs.add(static_cast<uint64_t>(k1), 1.0);
                        int k2 = t.lambda_down(m, i);
                        if (k2 >= 0) lhs.add(d2 + static_cast<uint64_t>(k2), 1.0);
                      }
                      rhs.add(static_cast<uint64_t>(m), 1.0);
                      rhs.add(d2 + static_cast<uint64_t>(m), 1.0);
                    },
                    [d](uint64_t s, uint64_t key) {
                      return std::vector<int>{static_cast<int>(s), static_cast<int>(key % d)};
                    }});

  axioms.push_back(
      {"comult.coassoc", d * d * d, d,
       [&t, single](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
         const uint64_t d2 = static_cast<uint64_t>(t.dim());
         int l = static_cast<int>(s / (d2 * d2)), m = static_cast<int>((s / d2) % d2),
             n = static_cast<int>(s % d2);
         int i = t.omega_up(l, m);
         single(lhs, i < 0 ? -1 : t.omega_up(i, n));
         int j = t.omega_up(m, n);
         single(rhs, j < 0 ? -1 : t.omega_up(l, j));
       },
       [d](uint64_t s, uint64_t key) {
         return std::vector<int>{static_cast<int>(key), static_cast<int>(s / (d * d)),
                                 static_cast<int>((s / d) % d), static_cast<int>(s % d)};
       }});

  axioms.push_back({"comult.counit", d, 2 * d,
                    [&t, e_list](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
                      int x = static_cast<int>(s);
                      const uint64_t d2 = static_cast<uint64_t>(t.dim());
                      for (int i : e_list) {
                        int k1 = t.omega_up(i, x);
                        if (k1 >= 0) lhs.add(static_cast<uint64_t>(k1), 1.0);
                        int k2 = t.omega_up(x, i);
                        if (k2 >= 0) lhs.add(d2 + static_cast<uint64_t>(k2), 1.0);
                      }
                      rhs.add(static_cast<uint64_t>(x), 1.0);
                      rhs.add(d2 + static_cast<uint64_t>(x), 1.0);
                    },
                    [d](uint64_t s, uint64_t key) {
                      return std::vector<int>{static_cast<int>(key % d), static_cast<int>(s)};
                    }});

  axioms.push_back(
      {"bialg.compat", d * d, d * d,
       [&t, pair_key](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
         const int d2 = t.dim();
         int l = static_cast<int>(s / d2), m = static_cast<int>(s % d2);
         int q = t.lambda_down(l, m);
         if (q >= 0)
           for (const auto& [k, n] : t.omega_down(q)) lhs.add(pair_key(k, n), 1.0);
         for (const auto& [i, j] : t.omega_down(l))
           for (const auto& [r, ss] : t.omega_down(m)) {
             int k = t.lambda_down(i, r);
             int n = t.lambda_down(j, ss);
             if (k >= 0 && n >= 0) rhs.add(pair_key(k, n), 1.0);
           }
       },
       [d](uint64_t s, uint64_t key) {
         return std::vector<int>{static_cast<int>(s / d), static_cast<int>(s % d),
                                 static_cast<int>(key / d), static_cast<int>(key % d)};
       }});

  axioms.push_back({"bialg.counit", d * d, 1,
                    [&t](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
                      const int d2 = t.dim();
                      int k = static_cast<int>(s / d2), n = static_cast<int>(s % d2);
                      int q = t.omega_up(k, n);
                      if (q >= 0 && t.eps_one(q)) lhs.add(0, 1.0);
                      if (t.eps_one(k) && t.eps_one(n)) rhs.add(0, 1.0);
                    },
                    [d](uint64_t s, uint64_t) {
                      return std::vector<int>{static_cast<int>(s / d), static_cast<int>(s % d)};
                    }});

  axioms.push_back({"bialg.unit", d * d, 1,
                    [&t](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
                      const int d2 = t.dim();
                      int l = static_cast<int>(s / d2), m = static_cast<int>(s % d2);
                      int q = t.lambda_down(l, m);
                      if (q >= 0 && t.e_one(q)) lhs.add(0, 1.0);
                      if (t.e_one(l) && t.e_one(m)) rhs.add(0, 1.0);
                    },
                    [d](uint64_t s, uint64_t) {
                      return std::vector<int>{static_cast<int>(s / d), static_cast<int>(s % d)};
                    }});

  auto antipode_axiom = [&t, e_list](bool skew) {
    return [&t, e_list, skew](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
      int p = static_cast<int>(s);
      const uint64_t d2 = static_cast<uint64_t>(t.dim());
      for (const auto& [l, m] : t.lambda_up(p)) {
        if (!skew) {
          int k = t.s_up(l);  // S^k_l
          int q1 = k < 0 ? -1 : t.omega_up(k, m);
          if (q1 >= 0) lhs.add(static_cast<uint64_t>(q1), 1.0);
          int n = t.s_up(m);
          int q2 = n < 0 ? -1 : t.omega_up(l, n);
          if (q2 >= 0) lhs.add(d2 + static_cast<uint64_t>(q2), 1.0);
        } else {
          int n = t.st_up(l);  // St^n_l with delta^k_m
          int q1 = n < 0 ? -1 : t.omega_up(m, n);
          if (q1 >= 0) lhs.add(static_cast<uint64_t>(q1), 1.0);
          int k = t.st_up(m);
          int q2 = k < 0 ? -1 : t.omega_up(k, l);
          if (q2 >= 0) lhs.add(d2 + static_cast<uint64_t>(q2), 1.0);
        }
      }
      if (t.eps_one(p))
        for (int q : e_list) {
          rhs.add(static_cast<uint64_t>(q), 1.0);
          rhs.add(d2 + static_cast<uint64_t>(q), 1.0);
        }
    };
  };
  axioms.push_back({"antipode.defining", d, 2 * d, antipode_axiom(false),
                    [d](uint64_t s, uint64_t key) {
                      return std::vector<int>{static_cast<int>(s), static_cast<int>(key % d)};
                    }});

  axioms.push_back({"antipode.mult", d * d, d,
                    [&t, single](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
                      const int d2 = t.dim();
                      int i = static_cast<int>(s / d2), j = static_cast<int>(s % d2);
                      int l = t.s_down(i), m = t.s_down(j);
                      single(lhs, (l < 0 || m < 0) ? -1 : t.lambda_down(l, m));
                      int q = t.lambda_down(j, i);
                      single(rhs, q < 0 ? -1 : t.s_down(q));
                    },
                    [d](uint64_t s, uint64_t key) {
                      return std::vector<int>{static_cast<int>(s / d), static_cast<int>(s % d),
                                              static_cast<int>(key)};
                    }});

  axioms.push_back({"antipode.comult", d * d, d,
                    [&t, single](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
                      const int d2 = t.dim();
                      int i = static_cast<int>(s / d2), j = static_cast<int>(s % d2);
                      int q = t.omega_up(i, j);
                      single(lhs, q < 0 ? -1 : t.s_up(q));
                      int m = t.s_up(j), l = t.s_up(i);
                      single(rhs, (m < 0 || l < 0) ? -1 : t.omega_up(m, l));
                    },
                    [d](uint64_t s, uint64_t key) {
                      return std::vector<int>{static_cast<int>(key), static_cast<int>(s / d),
                                              static_cast<int>(s % d)};
                    }});

  axioms.push_back({"skew.defining", d, 2 * d,
                    [&t](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
                      int n = static_cast<int>(s);
                      const uint64_t d2 = static_cast<uint64_t>(t.dim());
                      int i = t.s_up(n);
                      int m1 = i < 0 ? -1 : t.st_up(i);
                      if (m1 >= 0) lhs.add(static_cast<uint64_t>(m1), 1.0);
                      int j = t.st_up(n);
                      int m2 = j < 0 ? -1 : t.s_up(j);
                      if (m2 >= 0) lhs.add(d2 + static_cast<uint64_t>(m2), 1.0);
                      rhs.add(static_cast<uint64_t>(n), 1.0);
                      rhs.add(d2 + static_cast<uint64_t>(n), 1.0);
                    },
                    [d](uint64_t s, uint64_t key) {
                      return std::vector<int>{static_cast<int>(key % d), static_cast<int>(s)};
                    }});

  axioms.push_back({"skew.axiom", d, 2 * d, antipode_axiom(true),
                    [d](uint64_t s, uint64_t key) {
                      return std::vector<int>{static_cast<int>(s), static_cast<int>(key % d)};
                    }});

  axioms.push_back({"skew.mult", d * d, d,
                    [&t, single](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
                      const int d2 = t.dim();
                      int i = static_cast<int>(s / d2), j = static_cast<int>(s % d2);
                      int l = t.st_down(i), m = t.st_down(j);
                      single(lhs, (l < 0 || m < 0) ? -1 : t.lambda_down(l, m));
                      int q = t.lambda_down(j, i);
                      single(rhs, q < 0 ? -1 : t.st_down(q));
                    },
                    [d](uint64_t s, uint64_t key) {
                      return std::vector<int>{static_cast<int>(s / d), static_cast<int>(s % d),
                                              static_cast<int>(key)};
                    }});

  axioms.push_back({"skew.comult", d * d, d,
                    [&t, single](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
                      const int d2 = t.dim();
                      int i = static_cast<int>(s / d2), j = static_cast<int>(s % d2);
                      int q = t.omega_up(i, j);
                      single(lhs, q < 0 ? -1 : t.st_up(q));
                      int m = t.st_up(j), l = t.st_up(i);
                      single(rhs, (m < 0 || l < 0) ? -1 : t.omega_up(m, l));
                    },
                    [d](uint64_t s, uint64_t key) {
                      return std::vector<int>{static_cast<int>(key), static_cast<int>(s / d),
                                              static_cast<int>(s % d)};
                    }});

  axioms.push_back({"rmatrix.quasi1", d * d, d,
                    [&t](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
                      const int d2 = t.dim();
                      int i = static_cast<int>(s / d2), j = static_cast<int>(s % d2);
                      int k = t.lambda_down(i, j);
                      if (k >= 0)
                        for (int m : t.r_seconds(k)) lhs.add(static_cast<uint64_t>(m), 1.0);
                      for (int l : t.r_seconds(i))
                        for (int n : t.r_seconds(j)) {
                          int m = t.omega_up(l, n);
                          if (m >= 0) rhs.add(static_cast<uint64_t>(m), 1.0);
                        }
                    },
                    [d](uint64_t s, uint64_t key) {
                      return std::vector<int>{static_cast<int>(s / d), static_cast<int>(s % d),
                                              static_cast<int>(key)};
                    }});

  axioms.push_back({"rmatrix.quasi2", d * d, d,
                    [&t, single](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
                      const int d2 = t.dim();
                      int i = static_cast<int>(s / d2), j = static_cast<int>(s % d2);
                      int k = t.lambda_down(j, i);
                      single(lhs, k < 0 ? -1 : t.r_first(k));
                      int l = t.r_first(i), n = t.r_first(j);
                      single(rhs, (l < 0 || n < 0) ? -1 : t.omega_up(l, n));
                    },
                    [d](uint64_t s, uint64_t key) {
                      return std::vector<int>{static_cast<int>(key), static_cast<int>(s / d),
                                              static_cast<int>(s % d)};
                    }});

  axioms.push_back(
      {"rmatrix.compat", d * d, d,
       [&t, om2, om1, single](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
         const int d2 = t.dim();
         int i = static_cast<int>(s / d2), j = static_cast<int>(s % d2);
         single(lhs, t.lambda_down(j, i));
         for (const auto& [l, u] : t.omega_down(i)) {
           const auto& ps = t.r_seconds(l);
           if (ps.empty()) continue;
           for (int p : ps) {
             int w = om2(j, p);
             if (w < 0) continue;
             for (const auto& [m, r] : t.omega_down(u)) {
               for (int ss : t.rbar_seconds(r)) {
                 int n = om1(w, ss);
                 if (n < 0) continue;
                 int k = t.lambda_down(m, n);
                 if (k >= 0) rhs.add(static_cast<uint64_t>(k), 1.0);
               }
             }
           }
         }
       },
       [d](uint64_t s, uint64_t key) {
         return std::vector<int>{static_cast<int>(s % d), static_cast<int>(s / d),
                                 static_cast<int>(key)};
       }});

  axioms.push_back(
      {"rmatrix.inverse", d, 2 * d,
       [&t](uint64_t s, SliceMap& lhs, SliceMap& rhs) {
         int n = static_cast<int>(s);
         const uint64_t d2 = static_cast<uint64_t>(t.dim());
         for (const auto& [i, j] : t.omega_down(n)) {
           for (int k : t.rbar_seconds(i))
             for (int l : t.r_seconds(j)) {
               int m = t.omega_up(k, l);
               if (m >= 0) lhs.add(static_cast<uint64_t>(m), 1.0);
             }
           for (int k : t.r_seconds(i))
             for (int l : t.rbar_seconds(j)) {
               int m = t.omega_up(k, l);
               if (m >= 0) lhs.add(d2 + static_cast<uint64_t>(m), 1.0);
             }
         }
         if (t.e_one(n))
           for (int m = 0; m < t.dim(); ++m)
             if (t.e_one(m)) {
               rhs.add(static_cast<uint64_t>(m), 1.0);
               rhs.add(d2 + static_cast<uint64_t>(m), 1.0);
             }
       },
       [d](uint64_t s, uint64_t key) {
         return std::vector<int>{static_cast<int>(s), static_cast<int>(key % d)};
       }});

  return axioms;
}

AxiomReport run_axiom(const AxiomDef& def, bool exhaustive, const VerifyOptions& opts,
                      uint64_t axiom_index) {
  AxiomReport report;
  report.axiom = def.id;
  report.exhaustive = exhaustive;

  std::vector<uint64_t> slices;
  uint64_t want = (opts.min_sampled_tuples + def.tuples_per_slice - 1) / def.tuples_per_slice;
  if (exhaustive || want >= def.slice_count) {
    report.exhaustive = true;
    slices.resize(def.slice_count);
    for (uint64_t i = 0; i < def.slice_count; ++i) slices[i] = i;
  } else {
    slices.resize(want);
    for (uint64_t i = 0; i < want; ++i)
      slices[i] = splitmix64(opts.seed ^ splitmix64(axiom_index * 1315423911ull + i)) %
                  def.slice_count;
  }

  int nthreads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
  std::vector<Mismatch> worst(nthreads);
  uint64_t checked = 0;

#pragma omp parallel num_threads(nthreads) reduction(+ : checked)
  {
    int tid = omp_get_thread_num();
    SliceMap lhs, rhs;
#pragma omp for schedule(static)
    for (int64_t si = 0; si < static_cast<int64_t>(slices.size()); ++si) {
      lhs.kv.clear();
      rhs.kv.clear();
      def.eval(slices[si], lhs, rhs);
      diff_maps(lhs, rhs, slices[si], worst[tid]);
      checked += def.tuples_per_slice;
    }
  }

  Mismatch merged;
  for (const auto& mm : worst) {
    if (!mm.found) continue;
    if (!merged.found ||
        std::make_pair(mm.slice, mm.key) < std::make_pair(merged.slice, merged.key)) {
      merged.found = true;
      merged.slice = mm.slice;
      merged.key = mm.key;
    }
    merged.residual = std::max(merged.residual, mm.residual);
  }
  report.tuples_checked = checked;
  if (merged.found) {
    report.pass = false;
    report.worst_residual = merged.residual;
    report.counterexample = def.tuple(merged.slice, merged.key);
  }
  return report;
}

}  // namespace

std::vector<AxiomReport> verify_axioms(const DoubleTensors& t, const VerifyOptions& opts) {
  bool exhaustive = t.n() <= opts.exhaustive_max_order;
  std::vector<AxiomReport> reports;
  auto axioms = make_axioms(t);
  for (size_t a = 0; a < axioms.size(); ++a)
    reports.push_back(run_axiom(axioms[a], exhaustive, opts, a));
  return reports;
}

std::vector<AxiomReport> verify_special_elements(const DoubleTensors& t) {
  const int d = t.dim();
  const int n = t.n();
  constexpr double kTol = 1e-12;
  std::vector<AxiomReport> reports;

  auto add_report = [&](const std::string& id, double worst, std::vector<int> ce) {
    AxiomReport r;
    r.axiom = id;
    r.worst_residual = worst;
    r.pass = worst <= kTol;
    if (!r.pass) r.counterexample = std::move(ce);
    r.tuples_checked = static_cast<uint64_t>(d) * d;
    reports.push_back(std::move(r));
  };

  // Omega^k_{ij} c^i = Omega^k_{ji} c^i = eps_j c^k  and  eps_k c^k = 1.
  {
    double worst = 0.0;
    std::vector<int> ce;
    std::vector<Cplx> cvec(d, 0.0), epsv(d, 0.0);
    for (int k = 0; k < d; ++k) {
      cvec[k] = t.c_elem.at({k});
      epsv[k] = t.eps.at({k});
    }
    for (int j = 0; j < d; ++j) {
      std::vector<Cplx> left(d, 0.0), right(d, 0.0);
      for (int i = 0; i < d; ++i) {
        if (cvec[i] == Cplx(0.0)) continue;
        int k1 = t.omega_up(i, j);
        if (k1 >= 0) left[k1] += cvec[i];
        int k2 = t.omega_up(j, i);
        if (k2 >= 0) right[k2] += cvec[i];
      }
      for (int k = 0; k < d; ++k) {
        Cplx want = epsv[j] * cvec[k];
        double r = std::max(std::abs(left[k] - want), std::abs(right[k] - want));
        if (r > worst) {
          worst = r;
          ce = {j, k};
        }
      }
    }
    Cplx trace = 0.0;
    for (int k = 0; k < d; ++k) trace += epsv[k] * cvec[k];
    if (std::abs(trace - 1.0) > worst) {
      worst = std::abs(trace - 1.0);
      ce = {};
    }
    add_report("special.c", worst, ce);
  }

  // Lambda^{ij}_k tau_i = Lambda^{ji}_k tau_i = e^j tau_k  and  e^k tau_k = 1.
  {
    double worst = 0.0;
    std::vector<int> ce;
    std::vector<Cplx> tv(d, 0.0), ev(d, 0.0);
    for (int k = 0; k < d; ++k) {
      tv[k] = t.tau.at({k});
      ev[k] = t.unit_e.at({k});
    }
    for (int j = 0; j < d; ++j) {
      std::vector<Cplx> left(d, 0.0), right(d, 0.0);
      for (int i = 0; i < d; ++i) {
        if (tv[i] == Cplx(0.0)) continue;
        int k1 = t.lambda_down(i, j);
        if (k1 >= 0) left[k1] += tv[i];
        int k2 = t.lambda_down(j, i);
        if (k2 >= 0) right[k2] += tv[i];
      }
      for (int k = 0; k < d; ++k) {
        Cplx want = ev[j] * tv[k];
        double r = std::max(std::abs(left[k] - want), std::abs(right[k] - want));
        if (r > worst) {
          worst = r;
          ce = {j, k};
        }
      }
    }
    Cplx trace = 0.0;
    for (int k = 0; k < d; ++k) trace += ev[k] * tv[k];
    if (std::abs(trace - 1.0) > worst) {
      worst = std::abs(trace - 1.0);
      ce = {};
    }
    add_report("special.tau", worst, ce);
  }

  // tau_k c^k = N^-2.
  {
    Cplx acc = 0.0;
    for (int k = 0; k < d; ++k) acc += t.tau.at({k}) * t.c_elem.at({k});
    double worst = std::abs(acc - 1.0 / (static_cast<double>(n) * n));
    add_report("special.pairing", worst, {});
  }

  return reports;
}

}  // namespace anyonkit
