#include <doctest.h>

#include "gulf/constructions.hpp"
#include "gulf/params.hpp"
#include "gulf/solve.hpp"
#include "support.hpp"

using namespace gulf;

namespace {

const Variant all_variants[] = {Variant::global, Variant::union_, Variant::local, Variant::folded};

int value_of(const Graph &h, const GuestClass &c, Variant v) {
  auto r = solve(h, c, v);
  REQUIRE(r.decided);
  REQUIRE(r.certificate);
  auto rep = verify_cover(*r.certificate, c);
  CHECK_MESSAGE(rep.valid, rep.first_violation());
  if (v == Variant::global || v == Variant::union_)
    CHECK(rep.achieved_globality == r.value);
  else
    CHECK(rep.achieved_locality == r.value);
  if (v != Variant::folded) CHECK(rep.injective);
  return r.value;
}

Graph p3() { return path_graph(3); }

} // namespace

TEST_CASE("K7 with the class {K3}") {
  auto k3 = make_finite_class("k3", {complete_graph(3)});
  CHECK(value_of(complete_graph(7), k3, Variant::global) == 7);
  CHECK(value_of(complete_graph(7), k3, Variant::union_) == 5);
  CHECK(value_of(complete_graph(7), k3, Variant::local) == 3);
  CHECK(value_of(complete_graph(7), k3, Variant::folded) == 3);
}

TEST_CASE("K7 with triangles and K2") {
  auto tri = registry_lookup("triangles");
  // K2 guests let two triangles and a matching share a layer
  auto rep = chain_check(complete_graph(7), tri);
  CHECK(rep.holds);
  CHECK(rep.global.value == 7);
  CHECK(rep.union_.value == 4);
  CHECK(rep.local.value == 3);
  CHECK(rep.folded.value == 3);
}

TEST_CASE("small exact values") {
  CHECK(value_of(p3(), registry_lookup("k2-only"), Variant::local) == 2);
  auto hairy = registry_lookup("hairy-cycles+K2");
  CHECK(value_of(star_graph(3), hairy, Variant::local) == 3);
  CHECK(value_of(star_graph(3), hairy, Variant::folded) == 2);
  for (auto v : all_variants) CHECK(value_of(complete_graph(2), registry_lookup("stars"), v) == 1);
  auto c4free = registry_lookup("forb-c4");
  CHECK(value_of(complete_graph(7), c4free, Variant::local) == 3);
  CHECK(value_of(complete_graph(7), c4free, Variant::folded) == 2);
  CHECK(value_of(complete_graph(5), registry_lookup("linear-forests"), Variant::folded) == 3);
}

TEST_CASE("edgeless hosts and classes without a cover") {
  auto r = solve(empty_graph(4), registry_lookup("stars"), Variant::union_);
  CHECK(r.decided);
  CHECK(r.value == 0);
  auto k3 = make_finite_class("k3", {complete_graph(3)});
  auto none = solve(p3(), k3, Variant::global);
  CHECK_FALSE(none.decided);
  CHECK_FALSE(none.certificate);
}

TEST_CASE("budget exhaustion keeps proven bounds") {
  SolveBudget b;
  b.node_limit = 3;
  auto r = solve(complete_graph(7), registry_lookup("triangles"), Variant::union_, b);
  CHECK_FALSE(r.decided);
  CHECK(r.lower >= 2);
  REQUIRE(r.upper);
  CHECK(*r.upper >= r.lower);
  b.node_limit = 0;
  CHECK_THROWS_AS(solve(p3(), registry_lookup("stars"), Variant::global, b), std::invalid_argument);
}

TEST_CASE("unsupported class") {
  // tw-sep has neither an enumerator nor monotonicity
  CHECK_THROWS_AS(solve(complete_graph(4), registry_lookup("tw-sep"), Variant::global), UnsupportedClass);
}

TEST_CASE("solver against naive oracle on five-vertex hosts") {
  std::vector<Graph> members{complete_graph(3), p3(), complete_graph(2)};
  auto cls = make_finite_class("k3-p3-k2", members);
  for (const auto &h : testing::all_unlabelled_graphs(5)) {
    auto want = testing::naive_cover_numbers(h, members);
    CHECK(value_of(h, cls, Variant::global) == want.global);
    CHECK(value_of(h, cls, Variant::union_) == want.union_);
    CHECK(value_of(h, cls, Variant::local) == want.local);
    CHECK(value_of(h, cls, Variant::folded) == want.folded);
  }
}

TEST_CASE("solver against naive oracle with non-clique members") {
  // P4 and C4 do not fold back to injective covers, so the split search runs
  std::vector<Graph> members{path_graph(4), cycle_graph(4), complete_graph(2)};
  auto cls = make_finite_class("p4-c4-k2", members);
  for (const auto &h : testing::all_unlabelled_graphs(4)) {
    auto want = testing::naive_cover_numbers(h, members);
    CHECK(value_of(h, cls, Variant::global) == want.global);
    CHECK(value_of(h, cls, Variant::union_) == want.union_);
    CHECK(value_of(h, cls, Variant::local) == want.local);
    CHECK(value_of(h, cls, Variant::folded) == want.folded);
  }
}

TEST_CASE("forests cover number is the arboricity") {
  auto forests = registry_lookup("forests");
  std::mt19937 rng(7);
  for (int n = 2; n <= 7; ++n)
    for (int rep = 0; rep < 6; ++rep) {
      auto h = testing::random_graph(rng, n, 0.6);
      CHECK(value_of(h, forests, Variant::global) == arboricity_nash_williams(h));
    }
}

TEST_CASE("star hosts: local equals union") {
  for (const char *name : {"k2-only", "triangles", "stars", "bipartite", "complete-bipartite", "hairy-cycles+K2",
                           "complete-graphs", "forests", "linear-forests", "star-forests"}) {
    auto c = registry_lookup(name);
    for (int n = 1; n <= 8; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      CHECK(value_of(star_graph(n), c, Variant::local) == value_of(star_graph(n), c, Variant::union_));
    }
  }
}

TEST_CASE("chain on random small hosts") {
  std::mt19937 rng(11);
  for (const char *name : {"triangles", "stars", "k2-only", "linear-forests"}) {
    auto c = registry_lookup(name);
    for (int rep = 0; rep < 12; ++rep) {
      std::uniform_int_distribution<int> size(2, 6);
      auto h = testing::random_graph(rng, size(rng), 0.5);
      auto r = chain_check(h, c);
      CAPTURE(name);
      CHECK_MESSAGE(r.holds, (r.violations.empty() ? std::string() : r.violations.front()));
    }
  }
}

TEST_CASE("unique-copies lower bound") {
  for (int t : {4, 5}) {
    auto f = build_tw_family(t);
    auto r = lower_bound_unique_copies(f.host, f.guests);
    CHECK_MESSAGE(r.certified, r.refusal);
    CHECK(r.bound == t);
    for (int i = 0; i < t; ++i) {
      CHECK(r.trace.guests[i].core_copies == 1);
      CHECK(static_cast<int>(r.trace.guests[i].pendant_edges.size()) >= t);
      for (int j = 0; j < t; ++j)
        if (i != j) CHECK(r.trace.witnesses[i][j] >= 0);
    }
  }
  auto g = build_grid_family(4);
  auto r = lower_bound_unique_copies(g.host, g.guests);
  CHECK_MESSAGE(r.certified, r.refusal);
  CHECK(r.bound == 4);

  auto refused = lower_bound_unique_copies(complete_graph(4), {complete_graph(3)});
  CHECK_FALSE(refused.certified);
  CHECK(refused.trace.guests[0].core_copies > 1);
  // one copy each but no shared vertex
  auto apart_host = disjoint_union({complete_graph(3), cycle_graph(4)});
  auto apart = lower_bound_unique_copies(apart_host, {complete_graph(3), cycle_graph(4)});
  CHECK_FALSE(apart.certified);
  CHECK(apart.refusal.find("disjoint") != std::string::npos);
}

TEST_CASE("variant names round-trip") {
  for (auto v : all_variants) CHECK(parse_variant(variant_name(v)) == v);
  CHECK_FALSE(parse_variant("fold"));
}
