#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbon/corpus.hpp"
#include "ribbon/duality.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/graph_props.hpp"
#include "ribbon/map_ops.hpp"
#include "support.hpp"

using namespace ribbon;
using testing::fixture;

namespace {

AbstractMultigraph cycle(std::size_t n) {
  std::vector<std::string> names;
  std::vector<MultiEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
    edges.push_back({"e" + std::to_string(i), i, (i + 1) % n});
  }
  return AbstractMultigraph(names, edges);
}

std::map<EdgeId, EdgeId> swapped(std::map<EdgeId, EdgeId> f, const EdgeId& x, const EdgeId& y) {
  std::swap(f.at(x), f.at(y));
  return f;
}

}  // namespace

TEST_CASE("bipartite examples") {
  const auto c4 = cycle(4);
  const auto w = bipartition(c4);
  REQUIRE(w.has_value());
  for (const auto& e : c4.edges()) CHECK((*w)[e.u] != (*w)[e.v]);
  CHECK_FALSE(is_bipartite(cycle(3)));
  CHECK_FALSE(is_bipartite(AbstractMultigraph({"u"}, {{"l", 0, 0}})));
  CHECK(is_bipartite(AbstractMultigraph({"u", "v"}, {{"a", 0, 1}, {"b", 0, 1}})));
  CHECK(is_bipartite(AbstractMultigraph({}, {})));
}

TEST_CASE("even degree examples") {
  CHECK(all_components_eulerian(cycle(5)));
  CHECK_FALSE(all_components_eulerian(AbstractMultigraph({"a", "b", "c"}, {{"x", 0, 1}, {"y", 1, 2}})));
  const AbstractMultigraph two({"a", "b", "c", "d", "e", "f"},
                               {{"1", 0, 1}, {"2", 1, 2}, {"3", 2, 0}, {"4", 3, 4}, {"5", 4, 5}, {"6", 5, 3}});
  CHECK(all_components_eulerian(two));
  CHECK(all_components_eulerian(AbstractMultigraph({}, {})));
  CHECK(all_components_eulerian(AbstractMultigraph({"u"}, {{"l", 0, 0}})));
}

TEST_CASE("criterion examples") {
  const auto theta = fixture("theta");
  const auto p0 = pde_criterion(theta, EdgeSubset::none(theta));
  CHECK(p0.bipartite);
  CHECK_FALSE(p0.eulerian);
  const auto pab = pde_criterion(theta, EdgeSubset::of(theta, {"a", "b"}));
  CHECK_FALSE(pab.bipartite);

  const auto c4 = fixture("c4");
  const auto pe = pde_criterion(c4, EdgeSubset::all(c4));
  CHECK(pe.bipartite);
  CHECK(pe.eulerian);
  const auto u = underlying_graph(partial_dual(c4, EdgeSubset::all(c4)));
  CHECK(u.num_vertices() == 2);
  CHECK(u.num_edges() == 4);
  CHECK(is_bipartite(u));
  CHECK(all_components_eulerian(u));

  CHECK_THROWS_AS(pde_criterion(fixture("torus"), EdgeSubset::none(fixture("torus"))), PreconditionError);
}

TEST_CASE("criterion agrees with partial duals on plane maps") {
  for (const auto& g : generate_corpus(4, true, false).maps) {
    for (const auto& a : EdgeSubset::all_subsets(g)) {
      const auto u = underlying_graph(partial_dual(g, a));
      const auto p = pde_criterion(g, a);
      CHECK(p.bipartite == is_bipartite(u));
      CHECK(p.eulerian == all_components_eulerian(u));
    }
  }
}

TEST_CASE("plane graphs: bipartite exactly when the dual is even") {
  for (const auto& g : generate_corpus(5, true, true).maps) {
    const auto u = underlying_graph(g);
    const auto d = underlying_graph(geometric_dual(g));
    CHECK(is_bipartite(u) == all_components_eulerian(d));
    CHECK(all_components_eulerian(u) == is_bipartite(d));
  }
}

TEST_CASE("bipartite maps of any genus have even duals") {
  for (const auto& g : generate_corpus(4, false, true).maps) {
    if (is_bipartite(underlying_graph(g))) CHECK(all_components_eulerian(underlying_graph(geometric_dual(g))));
  }
}

TEST_CASE("toroidal loop plus 2-cycle") {
  const auto g = fixture("torus");
  REQUIRE(total_genus(g) == 1);
  REQUIRE(is_connected(g));
  CHECK(all_components_eulerian(underlying_graph(g)));
  const auto d = geometric_dual(g);
  CHECK(d.num_vertices() == 1);
  CHECK_FALSE(is_bipartite(underlying_graph(d)));
}

TEST_CASE("edge bijections") {
  const auto g = cycle(3);
  const auto h = underlying_graph(fixture("c3"));
  CHECK_THROWS_AS(EdgeBijection(g, h, {{"e0", "a"}, {"e1", "a"}, {"e2", "c"}}), PreconditionError);
  CHECK_THROWS_AS(EdgeBijection(g, h, {{"e0", "a"}, {"e1", "b"}}), PreconditionError);
  CHECK_THROWS_AS(EdgeBijection(g, h, {{"e0", "a"}, {"e1", "b"}, {"e2", "z"}}), PreconditionError);
  CHECK_THROWS_AS(EdgeBijection::natural(g, h), PreconditionError);
  const EdgeBijection phi(g, h, {{"e0", "b"}, {"e1", "c"}, {"e2", "a"}});
  CHECK(phi("e0") == "b");
  CHECK(phi.inverse("a") == "e2");
  CHECK(phi.inverted()("c") == "e1");
  const auto r = phi.restricted({"e1"});
  CHECK(r.forward().size() == 1);
  CHECK(r.inverse("c") == "e1");
}

TEST_CASE("Edmonds criteria examples") {
  const auto theta = fixture("theta");
  const auto g = underlying_graph(theta);
  const auto h = underlying_graph(geometric_dual(theta));
  CHECK(edmonds_check(g, h, EdgeBijection::natural(g, h)));
  const auto c4 = cycle(4);
  CHECK_FALSE(edmonds_check(c4, c4, EdgeBijection::natural(c4, c4)));
  const AbstractMultigraph empty({}, {});
  CHECK(edmonds_check(empty, empty, EdgeBijection::natural(empty, empty)));
  const AbstractMultigraph lone({"u"}, {});
  CHECK_FALSE(edmonds_check(lone, empty, EdgeBijection::natural(lone, empty)));
  CHECK(edmonds_check(lone, empty, EdgeBijection::natural(lone, empty), false));
}

TEST_CASE("Edmonds criteria hold for every plane dual pair, including bridges and loops") {
  for (const auto& m : generate_corpus(5, true, true).maps) {
    const auto g = underlying_graph(m);
    const auto h = underlying_graph(geometric_dual(m));
    CHECK(edmonds_check(g, h, EdgeBijection::natural(g, h)));
  }
  const auto bridge = underlying_graph(partial_dual(fixture("loop"), EdgeSubset::all(fixture("loop"))));
  const auto loop = underlying_graph(fixture("loop"));
  CHECK(edmonds_check(loop, bridge, EdgeBijection::natural(loop, bridge)));
}

TEST_CASE("natural bijection passes the partial-dual conditions") {
  for (const auto& m : generate_corpus(4, true, true).maps) {
    const auto g = underlying_graph(m);
    for (const auto& a : EdgeSubset::all_subsets(m)) {
      const auto h = underlying_graph(partial_dual(m, a));
      CHECK(partial_dual_bijection_check(g, h, EdgeBijection::natural(g, h), a.members()));
    }
  }
  for (const auto* name : {"torus", "theta_torus", "bouquet_torus", "pd_example"}) {
    const auto m = fixture(name);
    const auto g = underlying_graph(m);
    for (const auto& a : EdgeSubset::all_subsets(m)) {
      const auto h = underlying_graph(partial_dual(m, a));
      CHECK(partial_dual_bijection_check(g, h, EdgeBijection::natural(g, h), a.members()));
    }
  }
}

TEST_CASE("empty A reduces to matching vertices") {
  const auto g = underlying_graph(fixture("mixed"));
  CHECK(partial_dual_bijection_check(g, g, EdgeBijection::natural(g, g), {}));
  const auto c4 = cycle(4);
  const EdgeBijection rotate(c4, c4, {{"e0", "e1"}, {"e1", "e2"}, {"e2", "e3"}, {"e3", "e0"}});
  CHECK(partial_dual_bijection_check(c4, c4, rotate, {}));
  const EdgeBijection cross(c4, c4, {{"e0", "e0"}, {"e1", "e2"}, {"e2", "e1"}, {"e3", "e3"}});
  CHECK_FALSE(partial_dual_bijection_check(c4, c4, cross, {}));
}

TEST_CASE("swapping edges that look alike is accepted") {
  // Every edge of theta joins the same two vertices and becomes a loop at one vertex.
  const auto theta = fixture("theta");
  const auto a = EdgeSubset::of(theta, {"a"});
  const auto g = underlying_graph(theta);
  const auto h = underlying_graph(partial_dual(theta, a));
  const auto f = EdgeBijection::natural(g, h).forward();
  CHECK(partial_dual_bijection_check(g, h, EdgeBijection(g, h, swapped(f, "a", "b")), a.members()));
}

TEST_CASE("swapping edges that differ is rejected") {
  const auto c3 = fixture("c3");
  const auto a = EdgeSubset::of(c3, {"a"});
  const auto g = underlying_graph(c3);
  const auto h = underlying_graph(partial_dual(c3, a));
  const auto f = EdgeBijection::natural(g, h).forward();
  CHECK(partial_dual_bijection_check(g, h, EdgeBijection(g, h, f), a.members()));
  CHECK_FALSE(partial_dual_bijection_check(g, h, EdgeBijection(g, h, swapped(f, "a", "b")), a.members()));
}

TEST_CASE("the loop clauses are enforced") {
  // G: a loop l at u plus an edge u-v. A = {} so u must be matched by a vertex of H.
  const AbstractMultigraph g({"u", "v"}, {{"l", 0, 0}, {"e", 0, 1}});
  const AbstractMultigraph h({"x", "y", "z"}, {{"l", 0, 1}, {"e", 0, 2}});
  CHECK_FALSE(partial_dual_bijection_check(g, h, EdgeBijection::natural(g, h), {}));
  CHECK(partial_dual_bijection_check(g, g, EdgeBijection::natural(g, g), {}));
}

TEST_CASE("unknown members of A are rejected") {
  const auto g = cycle(3);
  CHECK_THROWS_AS(partial_dual_bijection_check(g, g, EdgeBijection::natural(g, g), {"zz"}), PreconditionError);
}
