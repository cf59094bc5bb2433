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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include "anyonkit/group.hpp"

using namespace anyonkit;

namespace {

// Independent breadth-first closure count, kept free of FiniteGroup internals.
size_t closure_order(int degree, const std::vector<Permutation>& gens) {
  std::set<std::vector<uint16_t>> seen;
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  seen.insert(frontier[0].img);
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier) {
      for (const auto& g : gens) {
        Permutation x = g.compose(e);
        if (seen.insert(x.img).second) next.push_back(x);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

const std::vector<std::string> kBuiltins = {"Z2", "Z3", "Z4", "S3", "D4", "S4", "S5"};

}  // namespace

TEST_CASE("closure from generators") {
  CHECK(FiniteGroup::from_generators(3, {}).order() == 1);
  CHECK(FiniteGroup::from_generators(2, {Permutation::from_cycles("(1 2)", 2)}).order() == 2);

  std::vector<Permutation> gens = {Permutation::from_cycles("(1 2)", 5),
                                   Permutation::from_cycles("(1 2 3 4 5)", 5)};
  FiniteGroup s5 = FiniteGroup::from_generators(5, gens);
  CHECK(s5.order() == 120);
  CHECK(closure_order(5, gens) == 120);
}

TEST_CASE("closure size limit") {
  std::vector<Permutation> gens = {Permutation::from_cycles("(1 2)", 5),
                                   Permutation::from_cycles("(1 2 3 4 5)", 5)};
  CHECK_THROWS_AS(FiniteGroup::from_generators(5, gens, "", 100), GroupError);
}

TEST_CASE("identity is element 0 and order is canonical") {
  for (const auto& name : kBuiltins) {
    FiniteGroup g = FiniteGroup::builtin(name);
    CHECK(g.permutation(0).is_identity());
    for (int i = 0; i + 1 < g.order(); ++i)
      CHECK(g.permutation(static_cast<Elem>(i)) < g.permutation(static_cast<Elem>(i + 1)));
  }
}

TEST_CASE("group axioms hold on every builtin") {
  std::mt19937_64 rng(20260810);
  for (const auto& name : kBuiltins) {
    FiniteGroup g = FiniteGroup::builtin(name);
    int n = g.order();
    for (Elem a = 0; a < n; ++a) {
      CHECK(g.mul(0, a) == a);
      CHECK(g.mul(a, 0) == a);
      CHECK(g.mul(a, g.inv(a)) == 0);
      CHECK(g.mul(g.inv(a), a) == 0);
    }
    if (n <= 24) {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          for (Elem c = 0; c < n; ++c)
            CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    } else {
      for (int t = 0; t < 10000; ++t) {
        Elem a = static_cast<Elem>(rng() % n);
        Elem b = static_cast<Elem>(rng() % n);
        Elem c = static_cast<Elem>(rng() % n);
        CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
      }
    }
  }
}

TEST_CASE("conjugacy classes") {
  FiniteGroup s3 = FiniteGroup::builtin("S3");
  std::vector<size_t> sizes;
  for (const auto& c : s3.conjugacy_classes()) sizes.push_back(c.members.size());
  CHECK(sizes == std::vector<size_t>{1, 2, 3});

  FiniteGroup z2 = FiniteGroup::builtin("Z2");
  CHECK(z2.conjugacy_classes().size() == 2);
  for (const auto& c : z2.conjugacy_classes()) CHECK(c.members.size() == 1);

  // Brute-force conjugation orbits as an oracle for S5.
  FiniteGroup s5 = FiniteGroup::builtin("S5");
  std::map<Elem, std::set<Elem>> orbits;
  std::set<Elem> done;
  std::multiset<size_t> oracle_sizes;
  for (Elem a = 0; a < s5.order(); ++a) {
    if (done.count(a)) continue;
    std::set<Elem> orbit;
    for (Elem g = 0; g < s5.order(); ++g) orbit.insert(s5.conjugate(g, a));
    for (Elem x : orbit) done.insert(x);
    oracle_sizes.insert(orbit.size());
  }
  CHECK(oracle_sizes == std::multiset<size_t>{1, 10, 15, 20, 20, 24, 30});
  std::multiset<size_t> got;
  for (const auto& c : s5.conjugacy_classes()) got.insert(c.members.size());
  CHECK(got == oracle_sizes);

  // Class equation and closure under conjugation, every builtin.
  for (const auto& name : kBuiltins) {
    FiniteGroup g = FiniteGroup::builtin(name);
    size_t total = 0;
    for (const auto& c : g.conjugacy_classes()) {
      total += c.members.size();
      for (Elem m : c.members)
        for (Elem x = 0; x < g.order(); ++x)
          CHECK(g.class_of(g.conjugate(x, m)) == g.class_of(m));
    }
    CHECK(total == static_cast<size_t>(g.order()));
  }
}

TEST_CASE("centralizers") {
  FiniteGroup s5 = FiniteGroup::builtin("S5");
  CHECK(s5.centralizer(0).members.size() == 120);
  Elem t = s5.element_from_cycles("(1 2)");
  CHECK(s5.centralizer(t).members.size() == 12);  // 120 / class size 10

  FiniteGroup s3 = FiniteGroup::builtin("S3");
  Elem c3 = s3.element_from_cycles("(1 2 3)");
  CHECK(s3.centralizer(c3).members.size() == 3);  // 6 / class size 2

  for (const auto& name : kBuiltins) {
    FiniteGroup g = FiniteGroup::builtin(name);
    for (Elem u = 0; u < g.order(); ++u) {
      Centralizer cz = g.centralizer(u);
      CHECK(std::find(cz.members.begin(), cz.members.end(), 0) != cz.members.end());
      size_t class_size = g.conjugacy_classes()[g.class_of(u)].members.size();
      CHECK(cz.members.size() * class_size == static_cast<size_t>(g.order()));
    }
  }
}

TEST_CASE("character table of Z2") {
  FiniteGroup z2 = FiniteGroup::builtin("Z2");
  CharacterTable t = z2.character_table();
  REQUIRE(t.dims == std::vector<int>{1, 1});
  // Trivial row and sign row in some order; canonical sort puts (1,1) first.
  CHECK(t.rows[0][0].real() == doctest::Approx(1.0));
  CHECK(t.rows[0][1].real() == doctest::Approx(1.0));
  CHECK(t.rows[1][0].real() == doctest::Approx(1.0));
  CHECK(t.rows[1][1].real() == doctest::Approx(-1.0));
}

TEST_CASE("character table dims of S3") {
  FiniteGroup s3 = FiniteGroup::builtin("S3");
  CharacterTable t = s3.character_table();
  std::multiset<int> dims(t.dims.begin(), t.dims.end());
  CHECK(dims == std::multiset<int>{1, 1, 2});

  // Oracle: 3 classes means 3 irreps; the multiset of dims with sum of squares 6
  // containing the trivial dim 1 is unique, found by enumeration.
  std::set<std::multiset<int>> solutions;
  for (int d1 = 1; d1 * d1 <= 6; ++d1)
    for (int d2 = 1; d1 * d1 + d2 * d2 <= 6; ++d2)
      for (int d3 = 1; d3 * d3 <= 6; ++d3)
        if (d1 * d1 + d2 * d2 + d3 * d3 == 6 && (d1 == 1 || d2 == 1 || d3 == 1))
          solutions.insert({d1, d2, d3});
  REQUIRE(solutions.size() == 1);
  CHECK(*solutions.begin() == dims);
}

TEST_CASE("character tables satisfy orthogonality and Burnside identity") {
  for (const auto& name : kBuiltins) {
    FiniteGroup g = FiniteGroup::builtin(name);
    CharacterTable t = g.character_table();
    long sumsq = 0;
    for (int d : t.dims) sumsq += static_cast<long>(d) * d;
    CHECK(sumsq == g.order());
    CHECK(t.orthogonality_residual < 1e-9);
    // Trivial character present.
    bool has_trivial = false;
    for (const auto& row : t.rows) {
      bool all_one = true;
      for (const auto& v : row) all_one = all_one && std::abs(v - 1.0) < 1e-9;
      has_trivial = has_trivial || all_one;
    }
    CHECK(has_trivial);
  }
}

TEST_CASE("cycle notation round trip") {
  FiniteGroup s5 = FiniteGroup::builtin("S5");
  for (Elem a = 0; a < s5.order(); ++a)
    CHECK(s5.element_from_cycles(s5.cycle_notation(a)) == a);
  CHECK_THROWS_AS(s5.element_from_cycles("(1 2 3 4 5 6)"), GroupError);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 2", 5), GroupError);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 1)", 5), GroupError);
  CHECK(Permutation::from_cycles("(1,2)(3,4,5)", 5).cycle_notation() == "(1 2)(3 4 5)");
}

TEST_CASE("group definition file") {
  const char* path = "test_group_def.grp";
  {
    std::ofstream out(path);
    out << "# dihedral group of the square\n";
    out << "points 4\n";
    out << "(1 2 3 4)  # rotation\n";
    out << "(1 3)\n";
  }
  FiniteGroup g = FiniteGroup::from_file(path);
  CHECK(g.order() == 8);
  CHECK(FiniteGroup::from_spec("S3").order() == 6);
  CHECK(FiniteGroup::from_spec(path).order() == 8);
  std::remove(path);
  CHECK_THROWS_AS(FiniteGroup::from_file("no_such_file.grp"), GroupError);
}

TEST_CASE("centralizer subgroup extraction") {
  FiniteGroup s5 = FiniteGroup::builtin("S5");
  Elem t = s5.element_from_cycles("(1 2)");
  std::vector<Elem> back;
  FiniteGroup cz = s5.centralizer_group(t, &back);
  CHECK(cz.order() == 12);
  for (int i = 0; i < cz.order(); ++i)
    for (int j = 0; j < cz.order(); ++j)
      CHECK(s5.mul(back[i], back[j]) == back[cz.mul(static_cast<Elem>(i), static_cast<Elem>(j))]);
}
