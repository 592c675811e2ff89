#include "gulf/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gulf {

namespace {

// Stable colour refinement. Colours are ranks of signatures, so the result is
// canonical: isomorphic graphs get identical colour histograms.
std::vector<int> refine(const Graph &g, std::uint64_t *hash = nullptr) {
  const int n = g.n();
  std::vector<int> col(n);
  for (int v = 0; v < n; ++v) col[v] = g.degree(v);
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::uint64_t>(n));
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(col[v]);
      std::vector<int> nc;
      for (int w : g.neighbors(v)) nc.push_back(col[w]);
      std::sort(nc.begin(), nc.end());
      sig[v].insert(sig[v].end(), nc.begin(), nc.end());
    }
    std::map<std::vector<int>, int> rank;
    for (auto &s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto &[s, id] : rank) {
      id = r++;
      mix(0xabcdefULL);
      for (int x : s) mix(static_cast<std::uint64_t>(x));
    }
    std::vector<int> cnt(r, 0);
    for (int v = 0; v < n; ++v) {
      col[v] = rank[sig[v]];
      ++cnt[col[v]];
    }
    for (int c : cnt) mix(static_cast<std::uint64_t>(c));
    if (r == classes) break;
    classes = r;
  }
  if (hash) *hash = h;
  return col;
}

struct TwinClasses {
  // For each pattern vertex, the previous vertex (by index) in its twin class, or -1.
  std::vector<int> prev;
};

TwinClasses twin_classes(const Graph &p) {
  const int n = p.n();
  TwinClasses tc{std::vector<int>(n, -1)};
  std::vector<bool> done(n, false);
  for (int a = 0; a < n; ++a) {
    if (done[a]) continue;
    int last = a;
    for (int b = a + 1; b < n; ++b) {
      if (done[b]) continue;
      Bitset na = p.adjacency(a), nb = p.adjacency(b);
      na.reset(b);
      nb.reset(a);
      if (na == nb) {
        tc.prev[b] = last;
        last = b;
        done[b] = true;
      }
    }
  }
  return tc;
}

class Matcher {
public:
  using Visit = std::function<bool(const VertexMap &)>;

  Matcher(const Graph &p, const Graph &h, CopyMode mode, const std::vector<int> *pcol = nullptr,
          const std::vector<int> *hcol = nullptr)
      : p_(p), h_(h), mode_(mode), pcol_(pcol), hcol_(hcol), used_(h.n()) {
    build_order();
    auto tc = twin_classes(p);
    twin_prev_ = tc.prev;
    pos_.assign(p.n(), 0);
    for (int i = 0; i < p.n(); ++i) pos_[order_[i]] = i;
    checks_.assign(p.n(), {});
    for (int v = 0; v < p.n(); ++v) {
      int w = twin_prev_[v];
      if (w < 0) continue;
      // img(w) < img(v); checked when the later of the two in search order is placed
      if (pos_[w] < pos_[v])
        checks_[v].push_back({w, true});
      else
        checks_[w].push_back({v, false});
    }
    back_.assign(p.n(), {});
    back_non_.assign(p.n(), {});
    parent_.assign(p.n(), -1);
    for (int i = 0; i < p.n(); ++i) {
      int v = order_[i];
      for (int j = 0; j < i; ++j) {
        int w = order_[j];
        if (p.adjacent(v, w)) {
          back_[v].push_back(w);
          if (parent_[v] < 0) parent_[v] = w;
        } else {
          back_non_[v].push_back(w);
        }
      }
    }
    img_.assign(p.n(), -1);
  }

  void run(const Visit &visit) {
    visit_ = &visit;
    stop_ = false;
    if (p_.n() > h_.n()) return;
    extend(0);
  }

private:
  void build_order() {
    const int n = p_.n();
    std::vector<bool> in(n, false);
    std::vector<int> links(n, 0);
    while (static_cast<int>(order_.size()) < n) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (in[v]) continue;
        if (best < 0 || links[v] > links[best] || (links[v] == links[best] && p_.degree(v) > p_.degree(best)))
          best = v;
      }
      in[best] = true;
      order_.push_back(best);
      for (int w : p_.neighbors(best)) ++links[w];
    }
  }

  bool feasible(int v, int x) const {
    if (used_.test(x)) return false;
    if (h_.degree(x) < p_.degree(v)) return false;
    if (pcol_ && (*pcol_)[v] != (*hcol_)[x]) return false;
    for (int w : back_[v])
      if (!h_.adjacent(x, img_[w])) return false;
    if (mode_ == CopyMode::induced)
      for (int w : back_non_[v])
        if (h_.adjacent(x, img_[w])) return false;
    for (auto [w, w_smaller] : checks_[v]) {
      if (w_smaller ? !(img_[w] < x) : !(x < img_[w])) return false;
    }
    return true;
  }

  void extend(int depth) {
    if (stop_) return;
    if (depth == p_.n()) {
      if (!(*visit_)(img_)) stop_ = true;
      return;
    }
    int v = order_[depth];
    auto place = [&](int x) {
      if (!feasible(v, x)) return;
      img_[v] = x;
      used_.set(x);
      extend(depth + 1);
      used_.reset(x);
      img_[v] = -1;
    };
    if (parent_[v] >= 0) {
      for (int x : h_.neighbors(img_[parent_[v]])) {
        place(x);
        if (stop_) return;
      }
    } else {
      for (int x = 0; x < h_.n(); ++x) {
        place(x);
        if (stop_) return;
      }
    }
  }

  const Graph &p_;
  const Graph &h_;
  CopyMode mode_;
  const std::vector<int> *pcol_;
  const std::vector<int> *hcol_;
  std::vector<int> order_, pos_, parent_, twin_prev_;
  std::vector<std::vector<int>> back_, back_non_;
  std::vector<std::vector<std::pair<int, bool>>> checks_;
  VertexMap img_;
  Bitset used_;
  const Visit *visit_ = nullptr;
  bool stop_ = false;
};

struct Keyed {
  std::vector<int> vs, es;
  VertexMap map;
};

std::vector<VertexMap> dedup_sorted(const Graph &p, const Graph &h, std::vector<VertexMap> maps) {
  std::vector<Keyed> ks;
  ks.reserve(maps.size());
  for (auto &m : maps) ks.push_back({image_vertices(m), image_edges(p, h, m), std::move(m)});
  std::sort(ks.begin(), ks.end(), [](const Keyed &a, const Keyed &b) {
    if (a.vs != b.vs) return a.vs < b.vs;
    if (a.es != b.es) return a.es < b.es;
    return a.map < b.map;
  });
  std::vector<VertexMap> out;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i > 0 && ks[i].vs == ks[i - 1].vs && ks[i].es == ks[i - 1].es) continue;
    out.push_back(std::move(ks[i].map));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexMap> connected_copies(const Graph &p, const Graph &h, CopyMode mode, std::size_t limit) {
  std::vector<VertexMap> maps;
  Matcher m(p, h, mode);
  Matcher::Visit visit = [&](const VertexMap &img) {
    maps.push_back(img);
    return maps.size() < limit;
  };
  m.run(visit);
  return dedup_sorted(p, h, std::move(maps));
}

} // namespace

std::vector<int> image_vertices(const VertexMap &map) {
  std::vector<int> v(map.begin(), map.end());
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> image_edges(const Graph &pattern, const Graph &host, const VertexMap &map) {
  std::vector<int> es;
  es.reserve(pattern.edges().size());
  for (auto e : pattern.edges()) es.push_back(host.edge_id(map[e.u], map[e.v]));
  std::sort(es.begin(), es.end());
  return es;
}

std::vector<VertexMap> enumerate_copies(const Graph &pattern, const Graph &host, CopyMode mode, std::size_t limit) {
  if (pattern.n() == 0) return {VertexMap{}};
  if (pattern.n() > host.n() || pattern.m() > host.m()) return {};
  auto comps = components(pattern);
  if (comps.size() == 1) return connected_copies(pattern, host, mode, limit);

  // Disconnected pattern: enumerate each component, then combine disjoint
  // images. Isomorphic components take copies in increasing index order.
  std::vector<Graph> cg;
  for (auto &c : comps) cg.push_back(induced_subgraph(pattern, c));
  // Group isomorphic components; members reuse the representative's copy list
  // (transported along an isomorphism) so that list indices line up.
  std::vector<std::vector<VertexMap>> per(cg.size());
  std::vector<std::size_t> grouped;
  std::vector<int> tied(cg.size(), 0);
  std::vector<bool> taken(cg.size(), false);
  for (std::size_t i = 0; i < cg.size(); ++i) {
    if (taken[i]) continue;
    taken[i] = true;
    per[i] = connected_copies(cg[i], host, mode, std::numeric_limits<std::size_t>::max());
    if (per[i].empty()) return {};
    grouped.push_back(i);
    for (std::size_t j = i + 1; j < cg.size(); ++j) {
      if (taken[j]) continue;
      auto iso = find_isomorphism(cg[j], cg[i]);
      if (!iso) continue;
      taken[j] = true;
      for (const auto &m : per[i]) {
        VertexMap mj(cg[j].n());
        for (int a = 0; a < cg[j].n(); ++a) mj[a] = m[(*iso)[a]];
        per[j].push_back(std::move(mj));
      }
      tied[grouped.size()] = 1;
      grouped.push_back(j);
    }
  }
  std::vector<std::vector<Bitset>> masks(cg.size());
  for (std::size_t i = 0; i < cg.size(); ++i)
    for (auto &m : per[i]) {
      Bitset b(host.n());
      for (int x : m) b.set(x);
      masks[i].push_back(b);
    }
  std::vector<VertexMap> out;
  std::vector<std::size_t> pick(grouped.size());
  Bitset used(host.n());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (out.size() >= limit) return;
    if (k == grouped.size()) {
      VertexMap map(pattern.n());
      for (std::size_t t = 0; t < grouped.size(); ++t) {
        const auto &c = comps[grouped[t]];
        const auto &m = per[grouped[t]][pick[t]];
        for (std::size_t a = 0; a < c.size(); ++a) map[c[a]] = m[a];
      }
      out.push_back(std::move(map));
      return;
    }
    std::size_t ci = grouped[k];
    std::size_t start = tied[k] ? pick[k - 1] + 1 : 0;
    for (std::size_t j = start; j < per[ci].size(); ++j) {
      const Bitset &b = masks[ci][j];
      if (b.intersects(used)) continue;
      if (mode == CopyMode::induced) {
        bool clash = false;
        b.for_each([&](std::size_t x) {
          if (!clash && host.adjacency(static_cast<int>(x)).intersects(used)) clash = true;
        });
        if (clash) continue;
      }
      pick[k] = j;
      used |= b;
      rec(k + 1);
      used.subtract(b);
      if (out.size() >= limit) return;
    }
  };
  rec(0);
  return dedup_sorted(pattern, host, std::move(out));
}

bool has_copy(const Graph &pattern, const Graph &host, CopyMode mode) {
  return !enumerate_copies(pattern, host, mode, 1).empty();
}

std::optional<VertexMap> find_isomorphism(const Graph &a, const Graph &b) {
  if (a.n() != b.n() || a.m() != b.m()) return std::nullopt;
  Graph both = disjoint_union({a, b});
  auto col = refine(both);
  std::vector<int> ca(col.begin(), col.begin() + a.n()), cb(col.begin() + a.n(), col.end());
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  std::optional<VertexMap> found;
  Matcher m(a, b, CopyMode::induced, &ca, &cb);
  Matcher::Visit visit = [&](const VertexMap &img) {
    found = img;
    return false;
  };
  m.run(visit);
  return found;
}

bool are_isomorphic(const Graph &a, const Graph &b) { return find_isomorphism(a, b).has_value(); }

std::uint64_t invariant_hash(const Graph &g) {
  std::uint64_t h = 0;
  refine(g, &h);
  return h;
}

bool is_homomorphism(const Graph &from, const Graph &to, const VertexMap &map) {
  if (static_cast<int>(map.size()) != from.n()) return false;
  for (int x : map)
    if (x < 0 || x >= to.n()) return false;
  for (auto e : from.edges())
    if (!to.adjacent(map[e.u], map[e.v])) return false;
  return true;
}

bool is_weak_induced_subgraph(const Graph &sub, const Graph &host, const VertexMap &embedding) {
  if (!is_homomorphism(sub, host, embedding)) throw GraphError("embedding does not preserve edges");
  auto iv = image_vertices(embedding);
  if (std::adjacent_find(iv.begin(), iv.end()) != iv.end()) throw GraphError("embedding is not injective");
  for (const auto &comp : components(sub)) {
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j)
        if (host.adjacent(embedding[comp[i]], embedding[comp[j]]) && !sub.adjacent(comp[i], comp[j])) return false;
  }
  return true;
}

} // namespace gulf
