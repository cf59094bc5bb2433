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

#ifndef ANYONKIT_GROUP_HPP
#define ANYONKIT_GROUP_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace anyonkit {

using Elem = uint16_t;

/// A permutation of {1..degree}, stored 0-based: img[i] is the image of point i.
struct Permutation {
  std::vector<uint16_t> img;

  static Permutation identity(int degree);
  // Parses cycle notation such as "(1 2)(3 4 5)" or "(1,2)". "()" is the identity.
  static Permutation from_cycles(const std::string& text, int degree);

  Permutation compose(const Permutation& rhs) const;  // this after rhs: (*this)(rhs(x))
  bool is_identity() const;
  std::string cycle_notation() const;
  auto operator<=>(const Permutation&) const = default;
};

struct ConjugacyClass {
  Elem representative = 0;
  std::vector<Elem> members;  // sorted
};

struct Centralizer {
  Elem base_element = 0;
  std::vector<Elem> members;  // sorted, contains 0
};

struct CharacterTable {
  std::vector<ConjugacyClass> classes;
  std::vector<int> dims;                                  // dims[r] = row r evaluated at identity
  std::vector<std::vector<std::complex<double>>> rows;    // rows[r][c]
  // Largest deviation from the two orthogonality relations, filled by the builder.
  double orthogonality_residual = 0.0;
};

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite group presented by permutation generators. Element 0 is the identity;
/// element order is lexicographic on permutation image tuples, so indices are
/// reproducible across runs. Immutable after construction.
class FiniteGroup {
 public:
  static FiniteGroup from_generators(int degree, const std::vector<Permutation>& generators,
                                     std::string name = "", size_t max_order = 10000);
  static FiniteGroup builtin(const std::string& name);  // Z2 Z3 Z4 S3 D4 S4 S5
  static FiniteGroup from_file(const std::string& path);
  // Built-in name or path to a group definition file.
  static FiniteGroup from_spec(const std::string& spec);
  static bool is_builtin_name(const std::string& name);

  int order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return mul_table_[a * order_ + b]; }
  Elem inv(Elem a) const { return inv_table_[a]; }
  Elem conjugate(Elem g, Elem v) const { return mul(mul(g, v), inv(g)); }  // g v g^-1
  const std::string& name() const { return name_; }
  int degree() const { return degree_; }

  const Permutation& permutation(Elem a) const { return elements_[a]; }
  std::string cycle_notation(Elem a) const { return elements_[a].cycle_notation(); }
  Elem element_from_cycles(const std::string& text) const;

  const std::vector<ConjugacyClass>& conjugacy_classes() const { return classes_; }
  int class_of(Elem a) const { return class_of_[a]; }
  Centralizer centralizer(Elem u) const;
  int element_order(Elem a) const;

  // The centralizer of u as a group of its own; sub_to_parent maps its indices back.
  FiniteGroup centralizer_group(Elem u, std::vector<Elem>* sub_to_parent = nullptr) const;

  CharacterTable character_table() const;

 private:
  FiniteGroup() = default;
  void compute_classes();

  int order_ = 0;
  int degree_ = 0;
  std::string name_;
  std::vector<Permutation> elements_;
  std::vector<Elem> mul_table_;  // order x order
  std::vector<Elem> inv_table_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
};

// Burnside-Dixon style table via class-sum matrices; throws GroupError on
// non-convergence. Used by FiniteGroup::character_table.
CharacterTable build_character_table(const FiniteGroup& g);

}  // namespace anyonkit

#endif  // ANYONKIT_GROUP_HPP
