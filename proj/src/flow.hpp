#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace gulf::detail {

// Dinic max-flow on integer capacities.
class MaxFlow {
public:
  static constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;

  explicit MaxFlow(int n) : g_(n), level_(n), it_(n) {}

  // Returns the index of the forward arc.
  int add(int from, int to, std::int64_t cap) {
    g_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    g_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
    return static_cast<int>(arcs_.size()) - 2;
  }

  std::int64_t run(int s, int t) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (auto f = dfs(s, t, inf)) total += f;
    }
    return total;
  }

  std::int64_t flow_on(int arc) const { return arcs_[arc ^ 1].cap; }

  // Vertices reachable from s in the residual graph (source side of a min cut).
  std::vector<bool> source_side(int s) const {
    std::vector<bool> seen(g_.size(), false);
    std::vector<int> st{s};
    seen[s] = true;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int a : g_[v])
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = true;
          st.push_back(arcs_[a].to);
        }
    }
    return seen;
  }

private:
  struct Arc {
    int to;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a : g_[v])
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[v] + 1;
          q.push(arcs_[a].to);
        }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(int v, int t, std::int64_t f) {
    if (v == t) return f;
    for (auto &i = it_[v]; i < static_cast<int>(g_[v].size()); ++i) {
      int a = g_[v][i];
      int w = arcs_[a].to;
      if (arcs_[a].cap <= 0 || level_[w] != level_[v] + 1) continue;
      if (auto d = dfs(w, t, std::min(f, arcs_[a].cap))) {
        arcs_[a].cap -= d;
        arcs_[a ^ 1].cap += d;
        return d;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> g_;
  std::vector<Arc> arcs_;
  std::vector<int> level_, it_;
};

} // namespace gulf::detail
