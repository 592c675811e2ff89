#include <doctest.h>

#include <filesystem>
#include <map>
#include <set>

#include "gulf/constructions.hpp"
#include "gulf/guest_class.hpp"
#include "gulf/io.hpp"
#include "gulf/params.hpp"
#include "support.hpp"

using namespace gulf;

namespace {

std::vector<Graph> small_corpus() {
  std::vector<Graph> out;
  for (int n = 1; n <= 5; ++n)
    for (auto &g : testing::all_unlabelled_graphs(n)) out.push_back(g);
  std::mt19937 rng(11);
  for (int k = 0; k < 60; ++k) out.push_back(testing::random_graph(rng, 6 + k % 2, 0.2 + 0.1 * (k % 5)));
  for (int k = 0; k < 20; ++k) out.push_back(testing::random_forest(rng, 7));
  return out;
}

using Image = std::pair<std::vector<int>, std::vector<int>>; // vertex set, edge ids

Image image_of(const Candidate &c, const Graph &host) {
  return {image_vertices(c.map), image_edges(c.guest, host, c.map)};
}

// Every edge subset of the host whose edge-induced graph is a member, as an
// image (vertices = endpoints).
std::set<Image> brute_member_images(const GuestClass &cls, const Graph &host) {
  std::set<Image> out;
  for (unsigned long mask = 1; mask < (1UL << host.m()); ++mask) {
    std::vector<int> ids;
    for (int k = 0; k < host.m(); ++k)
      if (mask >> k & 1UL) ids.push_back(k);
    Graph sub = without_isolated(edge_subgraph(host, ids));
    if (!membership(cls, sub)) continue;
    std::set<int> vs;
    for (int id : ids) vs.insert(host.edge(id).u), vs.insert(host.edge(id).v);
    out.insert({std::vector<int>(vs.begin(), vs.end()), ids});
  }
  return out;
}

} // namespace

TEST_CASE("every registered class contains K2 and has consistent flags") {
  for (const auto &name : registered_names()) {
    CAPTURE(name);
    auto c = registry_lookup(name);
    CHECK(membership(c, complete_graph(2)));
    CHECK(validate_class(c).empty());
  }
  CHECK_THROWS_AS(registry_lookup("no-such-class"), std::invalid_argument);
}

TEST_CASE("registry flags and bounds") {
  auto b = registry_lookup("bipartite");
  CHECK(b.flags.monotone);
  REQUIRE(b.bounds.chi_bound);
  CHECK(*b.bounds.chi_bound == 2);
  auto h = registry_lookup("hairy-cycles+K2");
  CHECK(h.flags.component_closed);
  CHECK_FALSE(h.flags.hereditary);
  auto lf = registry_lookup("linear-forests");
  CHECK(lf.flags.monotone);
  REQUIRE(lf.bounds.mad_bound);
  CHECK(*lf.bounds.mad_bound == Rational(2));
  auto s = registry_lookup("stars");
  CHECK(s.flags.component_closed);
  CHECK_FALSE(s.flags.monotone);
  CHECK_FALSE(s.flags.union_closed);
  auto k2 = registry_lookup("k2-only");
  CHECK(k2.kind == GuestClass::Kind::finite_list);
  CHECK(k2.flags.component_closed);
  CHECK_FALSE(k2.flags.hereditary);
}

TEST_CASE("membership examples") {
  CHECK(membership(registry_lookup("stars"), star_graph(7)));
  CHECK_FALSE(membership(registry_lookup("stars"), path_graph(4)));
  CHECK_FALSE(membership(registry_lookup("forb-c4"), complete_graph(7)));
  CHECK(membership(registry_lookup("forb-c4"), complete_graph(3)));
  auto tw = registry_lookup("tw-sep");
  CHECK(membership(tw, tw_guest(4, 2)));
  CHECK_FALSE(membership(tw, tw_hat_guest(4, 2)));
  CHECK(membership(registry_lookup("grid-sep"), grid_guest(4, 3)));
  CHECK_FALSE(membership(registry_lookup("grid-sep"), path_graph(20)));
  auto hc = registry_lookup("hairy-cycles+K2");
  CHECK(hc.predicate(cycle_graph(5)));
  CHECK_FALSE(hc.predicate(path_graph(3)));
  auto list = make_finite_class("g4", {tw_guest(4, 1), tw_guest(4, 2), tw_guest(4, 3), tw_guest(4, 4),
                                       complete_graph(2)});
  CHECK(membership(list, tw_guest(4, 2)));
}

TEST_CASE("union closure membership") {
  auto stars = registry_lookup("stars");
  CHECK(union_closure_membership(stars, disjoint_union({star_graph(3), star_graph(1), star_graph(5)})));
  CHECK_FALSE(union_closure_membership(stars, disjoint_union({star_graph(3), path_graph(4)})));
  auto k3 = make_finite_class("k3", {complete_graph(3)});
  CHECK(union_closure_membership(k3, copies(complete_graph(3), 2)));
  CHECK_FALSE(union_closure_membership(k3, disjoint_union({complete_graph(3), complete_graph(2)})));
  auto g4 = make_finite_class("g4", {tw_guest(4, 1), tw_guest(4, 2), tw_guest(4, 3), tw_guest(4, 4),
                                     complete_graph(2)});
  CHECK(union_closure_membership(g4, disjoint_union({tw_guest(4, 1), complete_graph(2)})));
  // three copies of one hat graph form a member, two do not
  CHECK_FALSE(union_closure_membership(g4, copies(tw_hat_guest(4, 1), 2)));
  auto tw = registry_lookup("tw-sep");
  CHECK(union_closure_membership(tw, disjoint_union({tw_guest(4, 1), complete_graph(2)})));
  CHECK_FALSE(union_closure_membership(tw, copies(tw_hat_guest(4, 1), 2)));
  auto small = make_finite_class("k2-k1-2k1", {complete_graph(2), empty_graph(1), empty_graph(2)});
  CHECK(union_closure_membership(small, copies(complete_graph(2), 3)));
  CHECK_FALSE(membership(small, copies(complete_graph(2), 3)));
}

TEST_CASE("union-closed classes: closure membership equals membership") {
  auto corpus = small_corpus();
  for (const auto &name : registered_names()) {
    auto c = registry_lookup(name);
    if (!c.flags.union_closed) continue;
    CAPTURE(name);
    int k = 0;
    for (const auto &g : corpus) {
      if (++k > 100) break;
      CHECK(union_closure_membership(c, g) == membership(c, g));
    }
  }
}

TEST_CASE("hereditary and monotone classes are closed under deletions") {
  auto corpus = small_corpus();
  for (const auto &name : registered_names()) {
    auto c = registry_lookup(name);
    if (!c.flags.hereditary) continue;
    CAPTURE(name);
    for (const auto &g : corpus) {
      if (!membership(c, g)) continue;
      // single deletions suffice: closure follows by induction
      for (int v = 0; v < g.n() && g.n() > 1; ++v) {
        std::vector<int> keep;
        for (int x = 0; x < g.n(); ++x)
          if (x != v) keep.push_back(x);
        CHECK(membership(c, induced_subgraph(g, keep)));
      }
      if (!c.flags.monotone) continue;
      for (int e = 0; e < g.m(); ++e) {
        std::vector<Edge> es;
        for (int k = 0; k < g.m(); ++k)
          if (k != e) es.push_back(g.edge(k));
        CHECK(membership(c, Graph(g.n(), es)));
      }
    }
  }
}

TEST_CASE("finite list flag inference") {
  auto a = make_finite_class("a", {complete_graph(3), path_graph(3), complete_graph(2)});
  CHECK(a.flags.component_closed);
  CHECK_FALSE(a.flags.hereditary);
  CHECK(a.folds_to_injective);
  auto b = make_finite_class("b", {complete_graph(2), empty_graph(1), empty_graph(2)});
  CHECK(b.flags.hereditary);
  CHECK(b.flags.monotone);
  CHECK(b.flags.component_closed);
  CHECK_FALSE(b.flags.union_closed);
  auto c = make_finite_class("c", {copies(complete_graph(2), 2), complete_graph(2)});
  CHECK(c.flags.component_closed);
  CHECK_FALSE(c.flags.hereditary);
  auto d = make_finite_class("d", {tw_guest(4, 1), complete_graph(2)});
  CHECK_FALSE(d.flags.component_closed);
}

TEST_CASE("finite class directories round-trip and are validated") {
  auto dir = std::filesystem::temp_directory_path() / "gulf_class_test";
  std::filesystem::remove_all(dir);
  auto c = make_finite_class("k3-p3-k2", {complete_graph(3), path_graph(3), complete_graph(2)});
  c.bounds.chi_bound = 3;
  save_finite_class(c, (dir / "k3-p3-k2").string());
  auto names = registered_names(dir.string());
  CHECK(std::find(names.begin(), names.end(), "k3-p3-k2") != names.end());
  auto back = registry_lookup("k3-p3-k2", dir.string());
  CHECK(back.members.size() == 3);
  CHECK(back.flags.component_closed);
  CHECK(membership(back, path_graph(3)));
  CHECK_FALSE(membership(back, path_graph(4)));

  // a false flag claim is rejected
  write_text_file((dir / "k3-p3-k2" / "manifest.json").string(),
                  R"({"name": "k3-p3-k2", "flags": {"hereditary": true, "component_closed": true}})");
  CHECK_THROWS_AS(load_finite_class((dir / "k3-p3-k2").string()), std::invalid_argument);
  // a violated bound is rejected
  write_text_file((dir / "k3-p3-k2" / "manifest.json").string(), R"({"bounds": {"chi": 2}})");
  CHECK_THROWS_AS(load_finite_class((dir / "k3-p3-k2").string()), std::invalid_argument);
  // K2 is required
  write_text_file((dir / "k3-p3-k2" / "members.g6").string(), to_graph6(complete_graph(3)) + "\n");
  write_text_file((dir / "k3-p3-k2" / "manifest.json").string(), "{}");
  CHECK_THROWS_AS(load_finite_class((dir / "k3-p3-k2").string()), std::invalid_argument);
  std::filesystem::remove_all(dir);
}

TEST_CASE("enumerators match brute force over edge subsets") {
  std::mt19937 rng(5);
  std::vector<Graph> hosts{complete_graph(4), star_graph(4), cycle_graph(5), complete_bipartite(2, 3)};
  for (int k = 0; k < 12; ++k) {
    Graph g = testing::random_graph(rng, 5 + k % 2, 0.5);
    if (g.m() <= 11) hosts.push_back(g);
  }
  for (const char *name : {"stars", "triangles", "k2-only", "complete-graphs", "complete-bipartite", "hairy-cycles+K2"}) {
    auto cls = registry_lookup(name);
    for (const auto &h : hosts) {
      CAPTURE(name);
      CAPTURE(to_graph6(h));
      std::set<Image> got;
      for (const auto &c : cls.enumerator(h)) {
        CHECK(membership(cls, c.guest));
        CHECK(is_homomorphism(c.guest, h, c.map));
        CHECK(got.insert(image_of(c, h)).second);
      }
      CHECK(got == brute_member_images(cls, h));
    }
  }
}

TEST_CASE("bipartite enumerator dominates every bipartite subgraph") {
  auto cls = registry_lookup("bipartite");
  std::mt19937 rng(8);
  for (int k = 0; k < 10; ++k) {
    Graph h = testing::random_graph(rng, 5, 0.6);
    auto cands = cls.enumerator(h);
    std::map<std::vector<int>, std::vector<std::vector<int>>> by_vertices;
    for (const auto &c : cands) {
      CHECK(membership(cls, c.guest));
      by_vertices[image_vertices(c.map)].push_back(image_edges(c.guest, h, c.map));
    }
    for (const auto &[vs, es] : brute_member_images(cls, h)) {
      bool dominated = false;
      for (const auto &cand : by_vertices[vs])
        dominated = dominated || std::includes(cand.begin(), cand.end(), es.begin(), es.end());
      CHECK(dominated);
    }
  }
  // 3^n / 2 style count on K4: ordered-by-first (X, Y) pairs with both sides nonempty
  CHECK(cls.enumerator(complete_graph(4)).size() == 25);
}

TEST_CASE("could_extend") {
  auto hc = registry_lookup("hairy-cycles+K2");
  CHECK(could_extend(hc, path_graph(5)));
  CHECK(could_extend(hc, cycle_graph(4)));
  CHECK_FALSE(could_extend(hc, complete_graph(4)));
  auto list = make_finite_class("a", {complete_graph(3), path_graph(3), complete_graph(2)});
  CHECK(could_extend(list, path_graph(3)));
  CHECK_FALSE(could_extend(list, path_graph(4)));
  CHECK(could_extend(registry_lookup("forests"), path_graph(6)));
  CHECK_FALSE(could_extend(registry_lookup("forests"), cycle_graph(3)));
}
