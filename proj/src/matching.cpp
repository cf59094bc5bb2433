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

#include "anyonkit/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace anyonkit {

namespace {

// Maximum weight matching on a general graph (primal-dual with blossom
// shrinking, O(n^3)). Vertices are 1..n; ids n+1..2n hold active blossoms.
// With all weights positive and a large uniform offset, the maximum weight
// matching is perfect, which is how the minimum-weight interface below uses it.
struct WeightedBlossom {
  static constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

  struct Edge {
    int u = 0, v = 0;
    int64_t w = 0;
  };

  int n = 0, n_x = 0;
  std::vector<std::vector<Edge>> g;
  std::vector<int64_t> lab;
  std::vector<int> match, slack, st, pa, S, vis;
  std::vector<std::vector<int>> flower, flower_from;
  std::deque<int> q;
  int vis_clock = 0;

  explicit WeightedBlossom(int n_in) : n(n_in) {
    int cap = 2 * n + 1;
    g.assign(cap, std::vector<Edge>(cap));
    for (int u = 0; u < cap; ++u)
      for (int v = 0; v < cap; ++v) g[u][v] = {u, v, 0};
    lab.assign(cap, 0);
    match.assign(cap, 0);
    slack.assign(cap, 0);
    st.assign(cap, 0);
    pa.assign(cap, 0);
    S.assign(cap, -1);
    vis.assign(cap, 0);
    flower.assign(cap, {});
    flower_from.assign(cap, std::vector<int>(n + 1, 0));
  }

  void add_edge(int u, int v, int64_t w) { g[u][v].w = g[v][u].w = w; }

  int64_t e_delta(const Edge& e) const { return lab[e.u] + lab[e.v] - g[e.u][e.v].w * 2; }

  void update_slack(int u, int x) {
    if (!slack[x] || e_delta(g[u][x]) < e_delta(g[slack[x]][x])) slack[x] = u;
  }

  void set_slack(int x) {
    slack[x] = 0;
    for (int u = 1; u <= n; ++u)
      if (g[u][x].w > 0 && st[u] != x && S[st[u]] == 0) update_slack(u, x);
  }

  void q_push(int x) {
    if (x <= n) {
      q.push_back(x);
    } else {
      for (int p : flower[x]) q_push(p);
    }
  }

  void set_st(int x, int b) {
    st[x] = b;
    if (x > n)
      for (int p : flower[x]) set_st(p, b);
  }

  int get_pr(int b, int xr) {
    int pr = static_cast<int>(std::find(flower[b].begin(), flower[b].end(), xr) -
                              flower[b].begin());
    if (pr & 1) {
      std::reverse(flower[b].begin() + 1, flower[b].end());
      return static_cast<int>(flower[b].size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    match[u] = g[u][v].v;
    if (u <= n) return;
    Edge& e = g[u][v];
    int xr = flower_from[u][e.u];
    int pr = get_pr(u, xr);
    for (int i = 0; i < pr; ++i) set_match(flower[u][i], flower[u][i ^ 1]);
    set_match(xr, v);
    std::rotate(flower[u].begin(), flower[u].begin() + pr, flower[u].end());
  }

  void augment(int u, int v) {
    for (;;) {
      int xnv = st[match[u]];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st[pa[xnv]]);
      u = st[pa[xnv]];
      v = xnv;
    }
  }

  int get_lca(int u, int v) {
    for (++vis_clock; u || v; std::swap(u, v)) {
      if (!u) continue;
      if (vis[u] == vis_clock) return u;
      vis[u] = vis_clock;
      u = st[match[u]];
      if (u) u = st[pa[u]];
    }
    return 0;
  }

  void add_blossom(int u, int lca, int v) {
    int b = n + 1;
    while (b <= n_x && st[b]) ++b;
    if (b > n_x) ++n_x;
    lab[b] = 0;
    S[b] = 0;
    match[b] = match[lca];
    flower[b].clear();
    flower[b].push_back(lca);
    for (int x = u, y; x != lca; x = st[pa[y]]) {
      flower[b].push_back(x);
      flower[b].push_back(y = st[match[x]]);
      q_push(y);
    }
    std::reverse(flower[b].begin() + 1, flower[b].end());
    for (int x = v, y; x != lca; x = st[pa[y]]) {
      flower[b].push_back(x);
      flower[b].push_back(y = st[match[x]]);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x; ++x) g[b][x].w = g[x][b].w = 0;
    for (int x = 1; x <= n; ++x) flower_from[b][x] = 0;
    for (int xs : flower[b]) {
      for (int x = 1; x <= n_x; ++x)
        if (g[b][x].w == 0 || e_delta(g[xs][x]) < e_delta(g[b][x])) {
          g[b][x] = g[xs][x];
          g[x][b] = g[x][xs];
        }
      for (int x = 1; x <= n; ++x)
        if (flower_from[xs][x]) flower_from[b][x] = xs;
    }
    pa[b] = pa[lca];
  }

  void expand_blossom(int b) {
    for (int p : flower[b]) set_st(p, p);
    int xr = flower_from[b][g[b][pa[b]].u];
    int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
      int xs = flower[b][i], xns = flower[b][i + 1];
      pa[xs] = g[xns][xs].u;
      S[xs] = 1;
      S[xns] = 0;
      slack[xs] = 0;
      set_slack(xns);
      q_push(xns);
    }
    S[xr] = 1;
    pa[xr] = pa[b];
    for (size_t i = pr + 1; i < flower[b].size(); ++i) {
      int xs = flower[b][i];
      S[xs] = -1;
      set_slack(xs);
    }
    st[b] = 0;
    flower[b].clear();
  }

  bool on_found_edge(const Edge& e) {
    int u = st[e.u], v = st[e.v];
    if (S[v] == -1) {
      pa[v] = e.u;
      S[v] = 1;
      int nu = st[match[v]];
      slack[v] = slack[nu] = 0;
      S[nu] = 0;
      q_push(nu);
    } else if (S[v] == 0) {
      int lca = get_lca(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }

  bool matching() {
    std::fill(S.begin(), S.end(), -1);
    std::fill(slack.begin(), slack.end(), 0);
    q.clear();
    for (int x = 1; x <= n_x; ++x)
      if (st[x] == x && !match[x]) {
        pa[x] = 0;
        S[x] = 0;
        q_push(x);
      }
    if (q.empty()) return false;
    for (;;) {
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (S[st[u]] == 1) continue;
        for (int v = 1; v <= n; ++v) {
          if (g[u][v].w > 0 && st[u] != st[v]) {
            if (e_delta(g[u][v]) == 0) {
              if (on_found_edge(g[u][v])) return true;
            } else {
              update_slack(u, st[v]);
            }
          }
        }
      }
      int64_t d = kInf;
      for (int b = n + 1; b <= n_x; ++b)
        if (st[b] == b && S[b] == 1) d = std::min(d, lab[b] / 2);
      for (int x = 1; x <= n_x; ++x)
        if (st[x] == x && slack[x]) {
          // A slack pointer can go stale when its source vertex is absorbed
          // into x by a blossom merge; rebuild it from scratch then.
          if (st[slack[x]] == x) set_slack(x);
          if (!slack[x]) continue;
          if (S[x] == -1)
            d = std::min(d, e_delta(g[slack[x]][x]));
          else if (S[x] == 0)
            d = std::min(d, e_delta(g[slack[x]][x]) / 2);
        }
      for (int u = 1; u <= n; ++u) {
        if (S[st[u]] == 0) {
          if (lab[u] <= d) return false;
          lab[u] -= d;
        } else if (S[st[u]] == 1) {
          lab[u] += d;
        }
      }
      for (int b = n + 1; b <= n_x; ++b)
        if (st[b] == b && S[b] != -1) {
          if (S[b] == 0)
            lab[b] += d * 2;
          else
            lab[b] -= d * 2;
        }
      q.clear();
      for (int x = 1; x <= n_x; ++x)
        if (st[x] == x && slack[x] && st[slack[x]] != x &&
            e_delta(g[slack[x]][x]) == 0) {
          if (on_found_edge(g[slack[x]][x])) return true;
        }
      for (int b = n + 1; b <= n_x; ++b)
        if (st[b] == b && S[b] == 1 && lab[b] == 0) expand_blossom(b);
    }
  }

  void solve() {
    n_x = n;
    int64_t w_max = 0;
    for (int u = 1; u <= n; ++u) {
      st[u] = u;
      flower_from[u][u] = u;
      for (int v = 1; v <= n; ++v) w_max = std::max(w_max, g[u][v].w);
    }
    for (int u = 1; u <= n; ++u) lab[u] = w_max;
    while (matching()) {
    }
  }
};

}  // namespace

std::vector<int> min_weight_perfect_matching(const std::vector<std::vector<int64_t>>& w) {
  int n = static_cast<int>(w.size());
  if (n % 2 != 0) throw std::invalid_argument("perfect matching needs an even node count");
  std::vector<int> mate(n, -1);
  if (n == 0) return mate;

  int64_t max_w = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (w[i][j] != w[j][i]) throw std::invalid_argument("weight matrix must be symmetric");
      if (w[i][j] < 0) throw std::invalid_argument("weights must be nonnegative");
      max_w = std::max(max_w, w[i][j]);
    }
  // Shift so all transformed weights are positive and any larger matching beats
  // any smaller one; the maximum then has full cardinality and minimum cost.
  int64_t big = max_w * n + 1;

  WeightedBlossom wb(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) wb.add_edge(i + 1, j + 1, big - w[i][j]);
  wb.solve();

  for (int i = 0; i < n; ++i) {
    if (wb.match[i + 1] == 0) throw std::logic_error("matching failed to pair all nodes");
    mate[i] = wb.match[i + 1] - 1;
  }
  for (int i = 0; i < n; ++i)
    if (mate[i] < 0 || mate[mate[i]] != i) throw std::logic_error("matching is inconsistent");
  return mate;
}

std::vector<int> greedy_min_weight_matching(const std::vector<std::vector<int64_t>>& w) {
  int n = static_cast<int>(w.size());
  if (n % 2 != 0) throw std::invalid_argument("perfect matching needs an even node count");
  std::vector<int> mate(n, -1);
  struct Cand {
    int64_t w;
    int i, j;
    bool operator<(const Cand& o) const {
      if (w != o.w) return w < o.w;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };
  std::vector<Cand> cands;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) cands.push_back({w[i][j], i, j});
  std::sort(cands.begin(), cands.end());
  for (const auto& c : cands)
    if (mate[c.i] < 0 && mate[c.j] < 0) {
      mate[c.i] = c.j;
      mate[c.j] = c.i;
    }
  return mate;
}

}  // namespace anyonkit
