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
#include <map>
#include <random>

#include "anyonkit/decoder.hpp"

using namespace anyonkit;

TEST_CASE("sampling degenerate probabilities") {
  ToricCode code(3);
  std::mt19937_64 rng(1);
  NoiseModel zero{NoiseModel::Kind::IndependentXZ, 0.0};
  for (int i = 0; i < 50; ++i) CHECK(sample_error(code, zero, rng).is_identity());

  NoiseModel one{NoiseModel::Kind::IndependentXZ, 1.0};
  PauliOperator e = sample_error(code, one, rng);
  for (int j = 0; j < code.num_qubits(); ++j) {
    CHECK(e.x(j));
    CHECK(e.z(j));
  }
}

TEST_CASE("sampled mean X weight sits in the binomial band") {
  ToricCode code(5);
  NoiseModel noise{NoiseModel::Kind::IndependentXZ, 0.1};
  const int trials = 100000;
  int64_t total = 0;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(trial_stream_seed(99, 5, 0.1, t));
    PauliOperator e = sample_error(code, noise, rng);
    int wx = 0;
    for (int j = 0; j < code.num_qubits(); ++j) wx += e.x(j);
    total += wx;
  }
  double mean = static_cast<double>(total) / trials;
  double expect = 2.0 * 5 * 5 * 0.1;  // 5.0
  double sigma = std::sqrt(2.0 * 25 * 0.1 * 0.9 / trials);
  CHECK(std::abs(mean - expect) < 3 * sigma);
}

TEST_CASE("decode basics") {
  ToricCode code(5);
  ToricCode::Syndrome empty;
  CHECK(decode(code, empty).is_identity());

  // Two violated vertices at distance 1: the connecting edge.
  PauliOperator e(code.num_qubits());
  e.flip_z(code.h_edge(2, 2));
  auto corr = decode(code, code.syndrome(e));
  CHECK(corr.weight() == 1);
  CHECK(corr.same_pauli(e));

  // Weight-2 error: correction has weight <= 2 and the same syndrome.
  PauliOperator e2(code.num_qubits());
  e2.flip_z(code.h_edge(1, 1));
  e2.flip_z(code.v_edge(3, 4));
  auto corr2 = decode(code, code.syndrome(e2));
  CHECK(corr2.weight() <= 2);
  auto s1 = code.syndrome(e2), s2 = code.syndrome(corr2);
  CHECK(s1.violated_vertices == s2.violated_vertices);
  CHECK(s1.violated_faces == s2.violated_faces);

  ToricCode::Syndrome odd;
  odd.violated_vertices = {0};
  CHECK_THROWS(decode(code, odd));
}

TEST_CASE("trial_fails contract") {
  ToricCode code(3);
  PauliOperator e(code.num_qubits());
  e.flip_z(code.h_edge(0, 1));
  CHECK_FALSE(trial_fails(code, e, e).fail_z);  // correction = error

  PauliOperator id(code.num_qubits());
  auto out = trial_fails(code, code.logical_z(1), id);
  CHECK(out.fail_z);
  CHECK(out.cls.z1 == 1);
  CHECK(out.cls.z2 == 0);
  CHECK_FALSE(trial_fails(code, code.face_operator(0), id).fail_z);

  CHECK_THROWS(trial_fails(code, e, id));  // syndrome mismatch
}

TEST_CASE("decoder optimality on k=2, all 65536 error patterns, per sector") {
  ToricCode code(2);
  const int n = code.num_qubits();  // 8
  // Oracle: minimum sector weight per syndrome, by full enumeration.
  std::map<std::vector<int>, int> min_z_weight, min_x_weight;
  for (int bits = 0; bits < 256; ++bits) {
    PauliOperator z(n), x(n);
    for (int j = 0; j < 8; ++j)
      if ((bits >> j) & 1) {
        z.flip_z(j);
        x.flip_x(j);
      }
    auto sz = code.syndrome(z).violated_vertices;
    auto sx = code.syndrome(x).violated_faces;
    int w = std::popcount(static_cast<unsigned>(bits));
    auto itz = min_z_weight.find(sz);
    if (itz == min_z_weight.end() || w < itz->second) min_z_weight[sz] = w;
    auto itx = min_x_weight.find(sx);
    if (itx == min_x_weight.end() || w < itx->second) min_x_weight[sx] = w;
  }
  for (int zbits = 0; zbits < 256; ++zbits) {
    for (int xbits = 0; xbits < 256; ++xbits) {
      PauliOperator e(n);
      for (int j = 0; j < 8; ++j) {
        if ((zbits >> j) & 1) e.flip_z(j);
        if ((xbits >> j) & 1) e.flip_x(j);
      }
      auto s = code.syndrome(e);
      auto corr = decode(code, s);
      auto s2 = code.syndrome(corr);
      REQUIRE(s.violated_vertices == s2.violated_vertices);
      REQUIRE(s.violated_faces == s2.violated_faces);
      int wz = 0, wx = 0;
      for (int j = 0; j < n; ++j) {
        wz += corr.z(j);
        wx += corr.x(j);
      }
      REQUIRE(wz == min_z_weight[s.violated_vertices]);
      REQUIRE(wx == min_x_weight[s.violated_faces]);
    }
  }
}

TEST_CASE("decoder validity on random syndromes") {
  std::mt19937_64 rng(31337);
  for (int k : {3, 5, 7}) {
    ToricCode code(k);
    for (int t = 0; t < 2000; ++t) {
      double p = 0.02 + 0.12 * (static_cast<double>(rng() % 1000) / 1000.0);
      NoiseModel noise{NoiseModel::Kind::IndependentXZ, p};
      PauliOperator e = sample_error(code, noise, rng);
      auto s = code.syndrome(e);
      auto corr = decode(code, s);
      auto s2 = code.syndrome(corr);
      REQUIRE(s.violated_vertices == s2.violated_vertices);
      REQUIRE(s.violated_faces == s2.violated_faces);
      // Greedy fallback also satisfies the syndrome contract.
      if (t % 50 == 0) {
        auto g = decode(code, s, true);
        auto s3 = code.syndrome(g);
        REQUIRE(s.violated_vertices == s3.violated_vertices);
        REQUIRE(s.violated_faces == s3.violated_faces);
      }
    }
  }
}

TEST_CASE("p=0.5 on k=2 fails in exactly 3/4 of patterns per sector") {
  ToricCode code(2);
  const int n = code.num_qubits();
  int fails = 0;
  for (int bits = 0; bits < 256; ++bits) {
    PauliOperator e(n);
    for (int j = 0; j < 8; ++j)
      if ((bits >> j) & 1) e.flip_x(j);
    auto corr = decode(code, code.syndrome(e));
    auto out = trial_fails(code, e, corr);
    fails += out.fail_x;
  }
  CHECK(fails == 192);  // 3/4 of 256
}

TEST_CASE("monte carlo records") {
  auto recs = run_monte_carlo({3}, {0.0, 0.08}, 500, 12345);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].failures_any == 0);
  CHECK(recs[0].trials == 500);
  CHECK(recs[1].failures_any <= 500);
  CHECK(recs[1].failures_any >= std::max(recs[1].failures_x, recs[1].failures_z));
  CHECK(recs[1].seed == 12345);
  CHECK(recs[1].model == "xz");
  CHECK(recs[0].stderr_any() > 0.0);  // Wilson width never collapses to zero
}

TEST_CASE("parallel kernel reproduces the serial reference bit for bit") {
  MonteCarloOptions serial_like;
  serial_like.threads = 4;
  auto parallel = run_monte_carlo({3, 4}, {0.05, 0.5}, 400, 777, serial_like);
  auto serial = run_monte_carlo_serial({3, 4}, {0.05, 0.5}, 400, 777);
  REQUIRE(parallel.size() == serial.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(parallel[i].failures_x == serial[i].failures_x);
    CHECK(parallel[i].failures_z == serial[i].failures_z);
    CHECK(parallel[i].failures_any == serial[i].failures_any);
    CHECK(parallel[i].failures_per_logical == serial[i].failures_per_logical);
  }
  MonteCarloOptions one;
  one.threads = 1;
  auto single = run_monte_carlo({3, 4}, {0.05, 0.5}, 400, 777, one);
  for (size_t i = 0; i < serial.size(); ++i)
    CHECK(single[i].failures_any == serial[i].failures_any);
}

TEST_CASE("depolarizing model wiring") {
  ToricCode code(3);
  NoiseModel noise = NoiseModel::parse("depolarizing", 1.0);
  std::mt19937_64 rng(5);
  PauliOperator e = sample_error(code, noise, rng);
  for (int j = 0; j < code.num_qubits(); ++j) CHECK((e.x(j) || e.z(j)));
  CHECK_THROWS(NoiseModel::parse("bogus", 0.1));
  CHECK_THROWS(NoiseModel::parse("xz", 1.5));
}
