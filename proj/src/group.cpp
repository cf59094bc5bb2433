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

#include "anyonkit/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

namespace anyonkit {

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.img.resize(degree);
  for (int i = 0; i < degree; ++i) p.img[i] = static_cast<uint16_t>(i);
  return p;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img.size(); ++i)
    if (img[i] != i) return false;
  return true;
}

Permutation Permutation::compose(const Permutation& rhs) const {
  Permutation out;
  out.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) out.img[i] = img[rhs.img[i]];
  return out;
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
  Permutation p = identity(degree);
  std::vector<char> point_used(degree, 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  bool saw_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') throw GroupError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw GroupError("expected point number in cycle notation: " + text);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree) throw GroupError("point out of range in cycle notation: " + text);
      if (point_used[v - 1]) throw GroupError("point repeated in cycle notation: " + text);
      point_used[v - 1] = 1;
      cycle.push_back(v - 1);
      skip_ws();
    }
    if (i >= text.size()) throw GroupError("unterminated cycle: " + text);
    ++i;  // ')'
    for (size_t j = 0; j < cycle.size(); ++j)
      p.img[cycle[j]] = static_cast<uint16_t>(cycle[(j + 1) % cycle.size()]);
    saw_cycle = true;
    skip_ws();
  }
  if (!saw_cycle) throw GroupError("empty cycle notation: " + text);
  return p;
}

std::string Permutation::cycle_notation() const {
  int degree = static_cast<int>(img.size());
  std::vector<char> used(degree, 0);
  std::string out;
  for (int start = 0; start < degree; ++start) {
    if (used[start] || img[start] == start) continue;
    out += '(';
    int cur = start;
    bool first = true;
    while (!used[cur]) {
      used[cur] = 1;
      if (!first) out += ' ';
      out += std::to_string(cur + 1);
      first = false;
      cur = img[cur];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

FiniteGroup FiniteGroup::from_generators(int degree, const std::vector<Permutation>& generators,
                                         std::string name, size_t max_order) {
  if (degree < 0) throw GroupError("negative degree");
  for (const auto& g : generators) {
    if (static_cast<int>(g.img.size()) != degree)
      throw GroupError("generator degree mismatch");
    std::vector<char> seen(degree, 0);
    for (int v : g.img) {
      if (v < 0 || v >= degree || seen[v]) throw GroupError("generator is not a bijection");
      seen[v] = 1;
    }
  }

  // Breadth-first closure under composition.
  std::map<Permutation, int> index_of;
  std::vector<Permutation> elems;
  std::deque<int> queue;
  elems.push_back(Permutation::identity(degree));
  index_of[elems[0]] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = g.compose(elems[cur]);
      if (index_of.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(next);
        if (elems.size() > max_order)
          throw GroupError("group closure exceeds size limit of " + std::to_string(max_order));
        queue.push_back(static_cast<int>(elems.size()) - 1);
      }
    }
  }

  std::sort(elems.begin(), elems.end());  // canonical order; identity lands at index 0

  FiniteGroup grp;
  grp.degree_ = degree;
  grp.order_ = static_cast<int>(elems.size());
  grp.name_ = name.empty() ? ("<" + std::to_string(grp.order_) + " elements>") : std::move(name);
  grp.elements_ = std::move(elems);

  std::map<Permutation, Elem> lookup;
  for (int i = 0; i < grp.order_; ++i) lookup[grp.elements_[i]] = static_cast<Elem>(i);

  grp.mul_table_.resize(static_cast<size_t>(grp.order_) * grp.order_);
  grp.inv_table_.resize(grp.order_);
  for (int a = 0; a < grp.order_; ++a) {
    for (int b = 0; b < grp.order_; ++b) {
      Permutation ab = grp.elements_[a].compose(grp.elements_[b]);
      auto it = lookup.find(ab);
      if (it == lookup.end()) throw GroupError("closure is not closed (internal error)");
      grp.mul_table_[a * grp.order_ + b] = it->second;
      if (it->second == 0) grp.inv_table_[a] = static_cast<Elem>(b);
    }
  }
  grp.compute_classes();
  return grp;
}

void FiniteGroup::compute_classes() {
  class_of_.assign(order_, -1);
  classes_.clear();
  std::vector<ConjugacyClass> raw;
  for (Elem a = 0; a < order_; ++a) {
    if (class_of_[a] >= 0) continue;
    ConjugacyClass c;
    c.members.push_back(a);
    class_of_[a] = 0;  // mark visited; real index assigned after sorting
    for (size_t i = 0; i < c.members.size(); ++i) {
      for (Elem g = 0; g < order_; ++g) {
        Elem x = conjugate(g, c.members[i]);
        if (class_of_[x] < 0) {
          class_of_[x] = 0;
          c.members.push_back(x);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    raw.push_back(std::move(c));
  }
  std::sort(raw.begin(), raw.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.representative < b.representative;
  });
  classes_ = std::move(raw);
  for (size_t c = 0; c < classes_.size(); ++c)
    for (Elem m : classes_[c].members) class_of_[m] = static_cast<int>(c);
}

Centralizer FiniteGroup::centralizer(Elem u) const {
  Centralizer cz;
  cz.base_element = u;
  for (Elem g = 0; g < order_; ++g)
    if (mul(g, u) == mul(u, g)) cz.members.push_back(g);
  return cz;
}

int FiniteGroup::element_order(Elem a) const {
  int n = 1;
  Elem x = a;
  while (x != 0) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

FiniteGroup FiniteGroup::centralizer_group(Elem u, std::vector<Elem>* sub_to_parent) const {
  Centralizer cz = centralizer(u);
  std::vector<Permutation> gens;
  for (Elem m : cz.members) gens.push_back(elements_[m]);
  FiniteGroup sub = from_generators(degree_, gens, name_ + ".centralizer");
  if (sub_to_parent) {
    // Parent indices ascend with permutation lex order, so the sorted member list
    // lines up with the subgroup's canonical order position by position.
    if (static_cast<int>(cz.members.size()) != sub.order())
      throw GroupError("centralizer reindexing failed (internal error)");
    for (int i = 0; i < sub.order(); ++i)
      if (!(elements_[cz.members[i]] == sub.elements_[i]))
        throw GroupError("centralizer reindexing failed (internal error)");
    *sub_to_parent = cz.members;
  }
  return sub;
}

Elem FiniteGroup::element_from_cycles(const std::string& text) const {
  Permutation p = Permutation::from_cycles(text, degree_);
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p))
    throw GroupError("element " + text + " is not in group " + name_);
  return static_cast<Elem>(it - elements_.begin());
}

CharacterTable FiniteGroup::character_table() const { return build_character_table(*this); }

bool FiniteGroup::is_builtin_name(const std::string& name) {
  static const char* names[] = {"Z2", "Z3", "Z4", "S3", "D4", "S4", "S5"};
  for (const char* n : names)
    if (name == n) return true;
  return false;
}

FiniteGroup FiniteGroup::builtin(const std::string& name) {
  auto cyc = [](int n) {
    std::string s = "(";
    for (int i = 1; i <= n; ++i) s += (i > 1 ? " " : "") + std::to_string(i);
    return s + ")";
  };
  if (name == "Z2") return from_generators(2, {Permutation::from_cycles(cyc(2), 2)}, "Z2");
  if (name == "Z3") return from_generators(3, {Permutation::from_cycles(cyc(3), 3)}, "Z3");
  if (name == "Z4") return from_generators(4, {Permutation::from_cycles(cyc(4), 4)}, "Z4");
  if (name == "S3")
    return from_generators(
        3, {Permutation::from_cycles("(1 2)", 3), Permutation::from_cycles("(1 2 3)", 3)}, "S3");
  if (name == "D4")
    return from_generators(
        4, {Permutation::from_cycles("(1 2 3 4)", 4), Permutation::from_cycles("(1 3)", 4)}, "D4");
  if (name == "S4")
    return from_generators(
        4, {Permutation::from_cycles("(1 2)", 4), Permutation::from_cycles("(1 2 3 4)", 4)}, "S4");
  if (name == "S5")
    return from_generators(
        5, {Permutation::from_cycles("(1 2)", 5), Permutation::from_cycles("(1 2 3 4 5)", 5)},
        "S5");
  throw GroupError("unknown built-in group: " + name);
}

FiniteGroup FiniteGroup::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupError("cannot open group file: " + path);
  std::string line;
  int degree = -1;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string trimmed;
    for (char c : line)
      if (!trimmed.empty() || !std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
      trimmed.pop_back();
    if (trimmed.empty()) continue;
    if (degree < 0) {
      std::istringstream ss(trimmed);
      std::string kw;
      ss >> kw >> degree;
      if (kw != "points" || !ss || degree < 1)
        throw GroupError("group file must start with 'points <d>': " + path);
      continue;
    }
    gens.push_back(Permutation::from_cycles(trimmed, degree));
  }
  if (degree < 0) throw GroupError("group file missing 'points <d>' line: " + path);
  return from_generators(degree, gens, path);
}

FiniteGroup FiniteGroup::from_spec(const std::string& spec) {
  if (is_builtin_name(spec)) return builtin(spec);
  return from_file(spec);
}

}  // namespace anyonkit
