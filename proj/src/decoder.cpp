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

#include "anyonkit/decoder.hpp"

#include <omp.h>

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "anyonkit/matching.hpp"

namespace anyonkit {

NoiseModel NoiseModel::parse(const std::string& name, double p) {
  NoiseModel m;
  m.p = p;
  if (name == "xz")
    m.kind = Kind::IndependentXZ;
  else if (name == "depolarizing")
    m.kind = Kind::Depolarizing;
  else
    throw std::invalid_argument("unknown noise model: " + name);
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("error probability outside [0,1]");
  return m;
}

std::string NoiseModel::name() const {
  return kind == Kind::IndependentXZ ? "xz" : "depolarizing";
}

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

uint64_t trial_stream_seed(uint64_t master_seed, int k, double p, uint64_t trial) {
  uint64_t p_bits;
  std::memcpy(&p_bits, &p, sizeof(p_bits));
  uint64_t h = splitmix64(master_seed);
  h = splitmix64(h ^ static_cast<uint64_t>(k));
  h = splitmix64(h ^ p_bits);
  h = splitmix64(h ^ trial);
  return h;
}

PauliOperator sample_error(const ToricCode& code, const NoiseModel& noise, std::mt19937_64& rng) {
  PauliOperator e(code.num_qubits());
  if (noise.kind == NoiseModel::Kind::IndependentXZ) {
    for (int j = 0; j < code.num_qubits(); ++j) {
      if (u01(rng) < noise.p) e.flip_x(j);
      if (u01(rng) < noise.p) e.flip_z(j);
    }
  } else {
    for (int j = 0; j < code.num_qubits(); ++j) {
      double u = u01(rng);
      if (u < noise.p / 3) {
        e.flip_x(j);
      } else if (u < 2 * noise.p / 3) {
        e.flip_x(j);
        e.flip_z(j);
      } else if (u < noise.p) {
        e.flip_z(j);
      }
    }
  }
  return e;
}

namespace {

// Shorter wrap displacement from a to b on a ring of size k; ties resolved
// toward the positive direction.
int ring_step(int a, int b, int k) {
  int fwd = ((b - a) % k + k) % k;
  int bwd = k - fwd;
  if (fwd == 0) return 0;
  return fwd <= bwd ? fwd : -bwd;
}

}  // namespace

PauliOperator decode(const ToricCode& code, const ToricCode::Syndrome& s, bool greedy) {
  if (s.violated_vertices.size() % 2 || s.violated_faces.size() % 2)
    throw std::invalid_argument("syndrome parities must be even");
  const int k = code.k();
  PauliOperator correction(code.num_qubits());

  auto dist = [&](int a, int b) {
    int ra = a / k, ca = a % k, rb = b / k, cb = b % k;
    int dr = std::abs(ra - rb), dc = std::abs(ca - cb);
    return static_cast<int64_t>(std::min(dr, k - dr) + std::min(dc, k - dc));
  };

  auto run_sector = [&](const std::vector<int>& sites, bool z_sector) {
    if (sites.empty()) return;
    int m = static_cast<int>(sites.size());
    std::vector<std::vector<int64_t>> w(m, std::vector<int64_t>(m, 0));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) w[i][j] = w[j][i] = dist(sites[i], sites[j]);
    std::vector<int> mate =
        greedy ? greedy_min_weight_matching(w) : min_weight_perfect_matching(w);
    for (int i = 0; i < m; ++i) {
      if (mate[i] < i) continue;
      int a = sites[i], b = sites[mate[i]];
      int ra = a / k, ca = a % k, rb = b / k, cb = b % k;
      // Row-first routing: walk the row to the target column, then the column.
      int dc = ring_step(ca, cb, k);
      int step = dc > 0 ? 1 : -1;
      for (int t = 0; t != dc; t += step) {
        int c = ca + t;
        // Horizontal move from column c to c+step along row ra (lattice) or
        // between faces (ra, c) and (ra, c+step) across their shared edge.
        if (z_sector) {
          int e = step > 0 ? code.h_edge(ra, c) : code.h_edge(ra, c - 1);
          correction.flip_z(e);
        } else {
          int e = step > 0 ? code.v_edge(ra, c + 1) : code.v_edge(ra, c);
          correction.flip_x(e);
        }
      }
      int dr = ring_step(ra, rb, k);
      int stepr = dr > 0 ? 1 : -1;
      for (int t = 0; t != dr; t += stepr) {
        int r = ra + t;
        if (z_sector) {
          int e = stepr > 0 ? code.v_edge(r, cb) : code.v_edge(r - 1, cb);
          correction.flip_z(e);
        } else {
          int e = stepr > 0 ? code.h_edge(r + 1, cb) : code.h_edge(r, cb);
          correction.flip_x(e);
        }
      }
    }
  };

  run_sector(s.violated_vertices, true);
  run_sector(s.violated_faces, false);
  return correction;
}

TrialOutcome trial_fails(const ToricCode& code, const PauliOperator& e,
                         const PauliOperator& correction) {
  PauliOperator residual = e.times(correction);
  if (!code.syndrome(residual).empty())
    throw std::logic_error("correction syndrome does not match the error syndrome");
  TrialOutcome out;
  out.cls = code.homology_class(residual);
  out.fail_z = out.cls.z1 || out.cls.z2;
  out.fail_x = out.cls.x1 || out.cls.x2;
  return out;
}

double wilson_stderr(uint64_t failures, uint64_t trials) {
  if (trials == 0) return 0.0;
  double n = static_cast<double>(trials);
  double phat = static_cast<double>(failures) / n;
  return std::sqrt(phat * (1.0 - phat) / n + 1.0 / (4.0 * n * n)) / (1.0 + 1.0 / n);
}

double TrialRecord::stderr_any() const { return wilson_stderr(failures_any, trials); }

namespace {

TrialRecord run_point(const ToricCode& code, double p, uint64_t trials, uint64_t master_seed,
                      const MonteCarloOptions& opts, int threads) {
  NoiseModel noise{opts.model, p};
  TrialRecord rec;
  rec.k = code.k();
  rec.p = p;
  rec.model = noise.name();
  rec.trials = trials;
  rec.seed = master_seed;

  uint64_t fx = 0, fz = 0, fa = 0, l0 = 0, l1 = 0, l2 = 0, l3 = 0;
#pragma omp parallel for schedule(static) num_threads(threads) \
    reduction(+ : fx, fz, fa, l0, l1, l2, l3)
  for (int64_t trial = 0; trial < static_cast<int64_t>(trials); ++trial) {
    std::mt19937_64 rng(trial_stream_seed(master_seed, code.k(), p, trial));
    PauliOperator e = sample_error(code, noise, rng);
    PauliOperator corr = decode(code, code.syndrome(e), opts.greedy);
    TrialOutcome out = trial_fails(code, e, corr);
    fx += out.fail_x;
    fz += out.fail_z;
    fa += (out.fail_x || out.fail_z);
    l0 += out.cls.z1;
    l1 += out.cls.z2;
    l2 += out.cls.x1;
    l3 += out.cls.x2;
  }
  rec.failures_x = fx;
  rec.failures_z = fz;
  rec.failures_any = fa;
  rec.failures_per_logical = {l0, l1, l2, l3};
  return rec;
}

}  // namespace

std::vector<TrialRecord> run_monte_carlo(const std::vector<int>& ks, const std::vector<double>& ps,
                                         uint64_t trials, uint64_t master_seed,
                                         const MonteCarloOptions& opts) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<TrialRecord> records;
  int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
  for (int k : ks) {
    if (k > opts.max_k) throw std::invalid_argument("k exceeds the configured cap");
    ToricCode code(k);
    for (double p : ps) {
      if (p < 0.0 || p > 1.0) throw std::invalid_argument("p outside [0,1]");
      records.push_back(run_point(code, p, trials, master_seed, opts, threads));
    }
  }
  return records;
}

std::vector<TrialRecord> run_monte_carlo_serial(const std::vector<int>& ks,
                                                const std::vector<double>& ps, uint64_t trials,
                                                uint64_t master_seed,
                                                const MonteCarloOptions& opts) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<TrialRecord> records;
  for (int k : ks) {
    if (k > opts.max_k) throw std::invalid_argument("k exceeds the configured cap");
    ToricCode code(k);
    NoiseModel noise{opts.model, 0.0};
    for (double p : ps) {
      if (p < 0.0 || p > 1.0) throw std::invalid_argument("p outside [0,1]");
      noise.p = p;
      TrialRecord rec;
      rec.k = k;
      rec.p = p;
      rec.model = noise.name();
      rec.trials = trials;
      rec.seed = master_seed;
      for (uint64_t trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(trial_stream_seed(master_seed, k, p, trial));
        PauliOperator e = sample_error(code, noise, rng);
        PauliOperator corr = decode(code, code.syndrome(e), opts.greedy);
        TrialOutcome out = trial_fails(code, e, corr);
        rec.failures_x += out.fail_x;
        rec.failures_z += out.fail_z;
        rec.failures_any += (out.fail_x || out.fail_z);
        rec.failures_per_logical[0] += out.cls.z1;
        rec.failures_per_logical[1] += out.cls.z2;
        rec.failures_per_logical[2] += out.cls.x1;
        rec.failures_per_logical[3] += out.cls.x2;
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

}  // namespace anyonkit
