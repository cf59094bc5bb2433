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

#ifndef ANYONKIT_MATCHING_HPP
#define ANYONKIT_MATCHING_HPP

#include <cstdint>
#include <vector>

namespace anyonkit {

/// Exact minimum-weight perfect matching on the complete graph given by a
/// symmetric weight matrix (even node count required). Primal-dual blossom
/// algorithm, O(n^3); deterministic for identical input.
/// Returns mate[] with mate[i] = j and mate[j] = i.
std::vector<int> min_weight_perfect_matching(const std::vector<std::vector<int64_t>>& w);

/// Greedy pairing: repeatedly matches the currently closest unmatched pair,
/// breaking weight ties lexicographically on (i, j). Not optimal; kept for
/// speed comparisons behind the decoder's greedy flag.
std::vector<int> greedy_min_weight_matching(const std::vector<std::vector<int64_t>>& w);

}  // namespace anyonkit

#endif  // ANYONKIT_MATCHING_HPP
