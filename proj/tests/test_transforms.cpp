#include <doctest.h>

#include "gulf/constructions.hpp"
#include "gulf/params.hpp"
#include "gulf/solve.hpp"
#include "gulf/transforms.hpp"
#include "support.hpp"

using namespace gulf;

namespace {

Cover solved(const Graph &h, const GuestClass &c, Variant v) {
  auto r = solve(h, c, v);
  REQUIRE(r.decided);
  REQUIRE(r.certificate);
  return *r.certificate;
}

Cover relabel(Cover c, const std::string &name) {
  c.claims.class_name = name;
  return c;
}

void check_union(const TransformResult &r, const GuestClass &cls) {
  auto rep = verify_cover(r.cover, cls);
  CHECK_MESSAGE(rep.valid, rep.first_violation());
  CHECK(rep.injective);
  CHECK(r.cover.claims.layers);
  CHECK(rep.achieved_globality <= r.bound);
}

bool covers_all_edges(const Graph &host, const std::vector<Subgraph> &parts) {
  std::vector<bool> hit(host.m(), false);
  for (const auto &p : parts)
    for (auto e : p.graph.edges()) {
      int id = host.edge_id(p.embedding[e.u], p.embedding[e.v]);
      if (id < 0) return false;
      hit[id] = true;
    }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

int ceil_log2(int x) {
  int b = 0;
  while ((1 << b) < x) ++b;
  return b;
}

} // namespace

TEST_CASE("union to global composition") {
  auto tri = make_finite_class("k3", {complete_graph(3)});
  auto u = solved(complete_graph(7), tri, Variant::union_);
  auto r = union_to_global_compose(u, tri);
  CHECK(verify_cover(r.cover, tri).valid);
  // any two Fano triangles meet, so five layers need overlapping triangles
  CHECK(r.cover.guests.size() >= 7);
  CHECK(r.cover.guests.size() <= 10);
  CHECK(r.bound == 5 * 2);

  // 3K2 with {K2, K1, 2K1}: one layer whose graph needs three guests
  auto small = make_finite_class("k2-k1-2k1", {complete_graph(2), empty_graph(1), empty_graph(2)});
  Graph h = copies(complete_graph(2), 3);
  auto one = finalize_cover(h, {{complete_graph(2), {0, 1}}, {complete_graph(2), {2, 3}}, {complete_graph(2), {4, 5}}},
                            small.name, std::vector<std::vector<int>>{{0, 1, 2}});
  REQUIRE(verify_cover(one, small).valid);
  auto member = finalize_cover(h, {{complete_graph(2), {0, 1}}, {complete_graph(2), {2, 3}}, {complete_graph(2), {4, 5}}},
                               small.name);
  auto g = union_to_global_compose(one, small, {member});
  CHECK(g.cover.guests.size() == 3);
  CHECK_THROWS_AS(union_to_global_compose(one, small, {finalize_cover(complete_graph(2), {{complete_graph(2), {0, 1}}},
                                                                      small.name)}),
                  TransformError);
  // a host that is itself a member composes to one guest
  auto single = finalize_cover(complete_graph(3), {{complete_graph(3), {0, 1, 2}}}, tri.name);
  CHECK(union_to_global_compose(single, tri).cover.guests.size() == 1);
}

TEST_CASE("local to union via tree decompositions") {
  auto stars = registry_lookup("stars");
  auto p5 = path_graph(5);
  auto local = solved(p5, stars, Variant::local);
  CHECK(measured_locality(local) == 2);
  auto td = treewidth(p5).decomposition;
  auto r = local_to_union_via_treewidth(local, stars, td);
  check_union(r, stars);
  CHECK(r.bound == 4);

  auto k2 = local_to_union_via_treewidth(solved(complete_graph(2), stars, Variant::local), stars,
                                         treewidth(complete_graph(2)).decomposition);
  CHECK(measured_globality(k2.cover) == 1);

  std::mt19937 rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    auto f = testing::random_forest(rng, 12);
    if (f.m() == 0) continue;
    auto c = solved(f, stars, Variant::local);
    int s = measured_locality(c);
    auto out = local_to_union_via_treewidth(c, stars, treewidth(f).decomposition);
    check_union(out, stars);
    CHECK(measured_globality(out.cover) <= 2 * s);
  }
  CHECK_THROWS_AS(local_to_union_via_treewidth(local, registry_lookup("tw-sep"), td), TransformError);
}

TEST_CASE("folded covers of bipartite hosts") {
  auto bip = registry_lookup("bipartite");
  for (const Graph &h : {cycle_graph(6), complete_bipartite(4, 4)}) {
    auto fc = relabel(bipartite_double_folded_cover(h), "bipartite");
    REQUIRE(verify_cover(fc, bip).valid);
    auto r = folded_to_union_bipartite(fc, bip);
    check_union(r, bip);
    CHECK(measured_globality(r.cover) <= 4);
  }
  auto k2 = finalize_cover(complete_graph(2), {{complete_graph(2), {0, 1}}}, "bipartite");
  CHECK(measured_globality(folded_to_union_bipartite(k2, bip).cover) == 1);
  CHECK_THROWS_AS(folded_to_union_bipartite(relabel(bipartite_double_folded_cover(complete_graph(3)), "bipartite"), bip),
                  TransformError);
}

TEST_CASE("bipartite decompositions") {
  CHECK(decompose_induced_bipartite(complete_graph(4)).size() == 6);
  CHECK(decompose_induced_bipartite(cycle_graph(5)).size() <= 3);
  CHECK(decompose_induced_bipartite(complete_graph(2)).size() == 1);
  for (const Graph &h : {complete_graph(4), cycle_graph(5), cycle_graph(7), complete_bipartite(2, 3)}) {
    auto parts = decompose_induced_bipartite(h);
    CHECK(covers_all_edges(h, parts));
    for (const auto &p : parts) {
      CHECK(bipartition(p.graph));
      CHECK(p.graph == induced_subgraph(h, p.embedding));
    }
  }
  for (int n = 2; n <= 16; ++n) {
    auto parts = decompose_bipartite_log(complete_graph(n));
    CHECK(static_cast<int>(parts.size()) == ceil_log2(n));
    CHECK(covers_all_edges(complete_graph(n), parts));
    for (const auto &p : parts) CHECK(bipartition(p.graph));
  }
  CHECK(decompose_bipartite_log(cycle_graph(6)).size() == 1);
  std::mt19937 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    auto h = testing::random_graph(rng, 7, 0.5);
    auto parts = decompose_bipartite_log(h);
    CHECK(static_cast<int>(parts.size()) == ceil_log2(chromatic_number(h).value));
    CHECK(covers_all_edges(h, parts));
  }
}

TEST_CASE("weak induced star forests") {
  auto c4 = star_forest_decomposition(cycle_graph(4), Rational(2));
  CHECK(c4.size() <= 4);
  CHECK(covers_all_edges(cycle_graph(4), c4));
  CHECK(star_forest_decomposition(star_graph(5), Rational(2)).size() == 1);
  CHECK_THROWS_AS(star_forest_decomposition(complete_graph(4), Rational(2)), TransformError);
  std::mt19937 rng(9);
  for (int rep = 0; rep < 20; ++rep) {
    auto f = testing::random_forest(rng, 12);
    auto parts = star_forest_decomposition(f, Rational(2));
    CHECK(parts.size() <= 4);
    CHECK(covers_all_edges(f, parts));
    for (const auto &p : parts) {
      CHECK(is_star_forest(p.graph));
      CHECK(is_weak_induced_subgraph(p.graph, f, p.embedding));
    }
  }
  for (int rep = 0; rep < 20; ++rep) {
    auto h = testing::random_graph(rng, 7, 0.5);
    auto d = mad(h).value;
    auto parts = star_forest_decomposition(h, d);
    CHECK(static_cast<std::int64_t>(parts.size()) * d.den() <= 2 * d.num());
    CHECK(covers_all_edges(h, parts));
  }
}

TEST_CASE("folded covers of stars become injective") {
  auto bip = registry_lookup("bipartite");
  auto hairy = relabel(build_hairy_star_cover(7), "bipartite");
  REQUIRE(verify_cover(hairy, bip).valid);
  auto r = folded_to_local_star(hairy, bip);
  auto rep = verify_cover(r.cover, bip);
  CHECK(rep.valid);
  CHECK(rep.injective);
  CHECK(rep.achieved_locality <= 2);

  auto forests = registry_lookup("forests");
  auto one = finalize_cover(complete_graph(2), {{complete_graph(2), {0, 1}}}, "forests");
  CHECK(folded_to_local_star(one, forests).cover.guests.size() == 1);

  // K_{1,4}: a path folded through the centre twice, plus one edge
  Graph k14 = star_graph(4);
  auto fc = finalize_cover(k14, {{path_graph(5), {1, 0, 2, 0, 3}}, {complete_graph(2), {0, 4}}}, "forests");
  REQUIRE(measured_locality(fc) == 3);
  auto out = folded_to_local_star(fc, forests);
  CHECK(verify_cover(out.cover, forests).valid);
  CHECK(measured_locality(out.cover) <= 3);
  CHECK(measured_injective(out.cover));
  CHECK_THROWS_AS(folded_to_local_star(fc, registry_lookup("stars")), TransformError);
}

TEST_CASE("folded to union for sparse classes") {
  auto lf = registry_lookup("linear-forests");
  auto p6 = finalize_cover(path_graph(6), {{path_graph(6), {0, 1, 2, 3, 4, 5}}}, "linear-forests");
  auto r = folded_to_union_sparse(p6, lf);
  check_union(r, lf);
  CHECK(measured_globality(r.cover) == 1);

  auto c5 = solved(cycle_graph(5), lf, Variant::folded);
  CHECK(measured_locality(c5) == 2);
  auto r5 = folded_to_union_sparse(c5, lf);
  check_union(r5, lf);
  CHECK(r5.bound == 16);

  auto forests = registry_lookup("forests");
  auto k4 = solved(complete_graph(4), forests, Variant::folded);
  auto r4 = folded_to_union_sparse(k4, forests);
  check_union(r4, forests);
  CHECK(measured_globality(r4.cover) <= 16);

  std::mt19937 rng(13);
  for (int rep = 0; rep < 15; ++rep) {
    auto h = testing::random_graph(rng, 6, 0.5);
    if (h.m() == 0) continue;
    auto fc = solved(h, lf, Variant::folded);
    int s = measured_locality(fc);
    auto out = folded_to_union_sparse(fc, lf);
    check_union(out, lf);
    CHECK(measured_globality(out.cover) <= 2 * 2 * s * s);
  }
}

TEST_CASE("folded to union for bounded chromatic number") {
  auto bip = registry_lookup("bipartite");
  auto k4 = relabel(bipartite_double_folded_cover(complete_graph(4)), "bipartite");
  auto r = folded_to_union_chromatic(k4, bip);
  check_union(r, bip);
  CHECK(r.bound == 8);

  auto c6 = finalize_cover(cycle_graph(6), {{cycle_graph(6), {0, 1, 2, 3, 4, 5}}}, "bipartite");
  CHECK(measured_globality(folded_to_union_chromatic(c6, bip).cover) == 1);

  auto c4free = registry_lookup("forb-c4");
  auto k5 = solved(complete_graph(5), c4free, Variant::folded);
  int s = measured_locality(k5);
  auto r5 = folded_to_union_chromatic(k5, c4free);
  check_union(r5, c4free);
  // forb-c4 is monotone, so the logarithmic split applies
  CHECK(r5.bound == 3 * s * s);

  // complete graphs are hereditary but not monotone: induced bipartite parts
  auto cliques = registry_lookup("complete-graphs");
  for (const Graph &h : {cycle_graph(5), cycle_graph(7), complete_graph(4)}) {
    auto fc = solved(h, cliques, Variant::folded);
    int fs = measured_locality(fc);
    int chi = chromatic_number(h).value;
    auto out = folded_to_union_chromatic(fc, cliques);
    check_union(out, cliques);
    CHECK(out.bound == (fs == 1 ? 1 : chi * (chi - 1) / 2 * fs * fs));
  }

  CHECK_THROWS_AS(folded_to_union_chromatic(solved(star_graph(3), registry_lookup("hairy-cycles+K2"), Variant::folded),
                                            registry_lookup("hairy-cycles+K2")),
                  TransformError);
}
