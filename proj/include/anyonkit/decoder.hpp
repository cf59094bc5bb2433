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

#ifndef ANYONKIT_DECODER_HPP
#define ANYONKIT_DECODER_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "anyonkit/toric.hpp"

namespace anyonkit {

struct NoiseModel {
  enum class Kind { IndependentXZ, Depolarizing };
  Kind kind = Kind::IndependentXZ;
  double p = 0.0;

  static NoiseModel parse(const std::string& name, double p);  // "xz" | "depolarizing"
  std::string name() const;
};

/// Deterministic per-trial stream seed; independent of scheduling.
uint64_t trial_stream_seed(uint64_t master_seed, int k, double p, uint64_t trial);

/// One i.i.d. per-qubit draw from the model.
PauliOperator sample_error(const ToricCode& code, const NoiseModel& noise, std::mt19937_64& rng);

/// Correction with syndrome exactly s. X and Z sectors are decoded separately
/// by minimum-weight perfect matching of the violated sites under the periodic
/// Manhattan metric, corrections laid along row-first shortest paths.
/// Throws on odd-parity syndromes.
PauliOperator decode(const ToricCode& code, const ToricCode::Syndrome& s, bool greedy = false);

struct TrialOutcome {
  bool fail_z = false;  // residual acts as a nontrivial Z-sector logical
  bool fail_x = false;
  ToricCode::HomologyClass cls;
};
/// Residual classification of E * correction; requires matching syndromes.
TrialOutcome trial_fails(const ToricCode& code, const PauliOperator& e,
                         const PauliOperator& correction);

struct TrialRecord {
  int k = 0;
  double p = 0.0;
  std::string model;
  uint64_t trials = 0;
  uint64_t failures_x = 0;    // X-part of the residual is logical
  uint64_t failures_z = 0;    // Z-part of the residual is logical
  uint64_t failures_any = 0;
  std::array<uint64_t, 4> failures_per_logical{};  // Z1, Z2, X1, X2 winding hits
  uint64_t seed = 0;

  double rate_x() const { return trials ? static_cast<double>(failures_x) / trials : 0.0; }
  double rate_z() const { return trials ? static_cast<double>(failures_z) / trials : 0.0; }
  double rate_any() const { return trials ? static_cast<double>(failures_any) / trials : 0.0; }
  double stderr_any() const;  // Wilson interval half-width at one sigma
};

double wilson_stderr(uint64_t failures, uint64_t trials);

struct MonteCarloOptions {
  NoiseModel::Kind model = NoiseModel::Kind::IndependentXZ;
  bool greedy = false;
  int threads = 0;  // 0 = library default
  int max_k = 31;
};

std::vector<TrialRecord> run_monte_carlo(const std::vector<int>& ks, const std::vector<double>& ps,
                                         uint64_t trials, uint64_t master_seed,
                                         const MonteCarloOptions& opts = {});

/// Plain single-threaded loop, no OpenMP; reference for the parallel kernel.
std::vector<TrialRecord> run_monte_carlo_serial(const std::vector<int>& ks,
                                                const std::vector<double>& ps, uint64_t trials,
                                                uint64_t master_seed,
                                                const MonteCarloOptions& opts = {});

}  // namespace anyonkit

#endif  // ANYONKIT_DECODER_HPP
