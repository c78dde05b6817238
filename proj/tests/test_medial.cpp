#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbon/corpus.hpp"
#include "ribbon/duality.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/graph_props.hpp"
#include "ribbon/map_ops.hpp"
#include "ribbon/medial.hpp"
#include "support.hpp"

using namespace ribbon;
using testing::fixture;

namespace {

std::size_t black_faces(const MedialGraph& mg) {
  return static_cast<std::size_t>(std::count_if(mg.faces.begin(), mg.faces.end(),
                                                [](const MedialFace& f) { return f.colour == FaceColour::black; }));
}

std::set<EdgeSubset> subsets_of(const RibbonGraph& g, const std::vector<std::vector<EdgeId>>& lists) {
  std::set<EdgeSubset> out;
  for (const auto& l : lists) out.insert(EdgeSubset::of(g, l));
  return out;
}

}  // namespace

TEST_CASE("medial of a loop and of a triangle") {
  const auto ml = medial(fixture("loop"));
  CHECK(ml.map.num_vertices() == 1);
  CHECK(ml.map.num_edges() == 2);
  CHECK(ml.map.is_loop(0));
  CHECK(ml.map.is_loop(1));
  CHECK(ml.faces.size() == 3);
  CHECK(black_faces(ml) == 1);

  const auto mc = medial(fixture("c3"));
  CHECK(mc.map.num_vertices() == 3);
  CHECK(mc.map.num_edges() == 6);
  CHECK(mc.faces.size() == 5);
  CHECK(black_faces(mc) == 3);
}

TEST_CASE("medial shape and checkerboard colouring on the corpus") {
  for (const auto& g : generate_corpus(5, true, true).maps) {
    const auto mg = medial(g);
    CHECK(mg.map.num_vertices() == g.num_edges());
    CHECK(mg.map.num_edges() == 2 * g.num_edges());
    CHECK(is_plane(mg.map));
    for (const auto& v : mg.map.vertices()) CHECK(v.rotation.size() == 4);
    CHECK(black_faces(mg) == g.num_vertices());
    CHECK(mg.faces.size() - black_faces(mg) == face_count(g));
    for (const auto& e : mg.map.edges()) {
      const auto& f1 = mg.faces[mg.face_of_dart[static_cast<std::size_t>(e.first)]];
      const auto& f2 = mg.faces[mg.face_of_dart[static_cast<std::size_t>(e.second)]];
      CHECK(f1.colour != f2.colour);
    }
    std::set<std::size_t> vertex_sources;
    for (const auto& f : mg.faces) {
      if (f.colour == FaceColour::black) vertex_sources.insert(f.source);
    }
    CHECK(vertex_sources.size() == g.num_vertices());
  }
}

TEST_CASE("medial of the dual swaps the colours") {
  for (const auto& g : generate_corpus(4, true, true).maps) {
    const auto m1 = medial(g);
    const auto m2 = medial(geometric_dual(g));
    CHECK(map_isomorphic(m1.map, m2.map));
    CHECK(black_faces(m1) == m2.faces.size() - black_faces(m2));
    // c-edges in G are d-edges in G*.
    std::set<EdgeSubset> flipped;
    for (const auto& a : bipartite_dual_sets(g)) flipped.insert(a.complement());
    CHECK(bipartite_dual_sets(geometric_dual(g)) == flipped);
  }
}

TEST_CASE("medial preconditions") {
  CHECK_THROWS_AS(medial(fixture("torus")), PreconditionError);
  CHECK_THROWS_AS(medial(disjoint_union(fixture("c3"), fixture("loop"))), PreconditionError);
  CHECK_THROWS_AS(medial(RibbonGraph({{"u", {}}}, {})), PreconditionError);
  CHECK_THROWS_AS(bipartite_dual_sets(fixture("theta_torus")), PreconditionError);
}

TEST_CASE("anti-circuit counts") {
  CHECK(anti_circuits(medial(fixture("c3"))).count() == 1);
  CHECK(anti_circuits(medial(fixture("c4"))).count() == 2);
  CHECK(anti_circuits(medial(fixture("k4"))).count() == 3);
  CHECK(anti_circuits(medial(fixture("theta"))).count() == 1);
}

TEST_CASE("anti-circuits pass straight through every vertex") {
  for (const auto& g : generate_corpus(5, true, true).maps) {
    const auto mg = medial(g);
    const auto ac = anti_circuits(mg);
    std::size_t exits = 0;
    for (const auto& c : ac.circuits) exits += c.size();
    CHECK(exits == mg.map.num_edges());
    for (const auto& v : mg.map.vertices()) {
      const auto& r = v.rotation;
      for (std::size_t i = 0; i < 2; ++i) {
        const auto x = static_cast<std::size_t>(r[i]);
        const auto y = static_cast<std::size_t>(r[i + 2]);
        CHECK(ac.circuit_of_dart[x] == ac.circuit_of_dart[y]);
        CHECK(ac.exit_dart[x] != ac.exit_dart[y]);
      }
    }
  }
}

TEST_CASE("direction counts") {
  CHECK(all_crossing_directions(medial(fixture("c3"))).size() == 2);
  CHECK(all_crossing_directions(medial(fixture("c4"))).size() == 4);
  CHECK(all_crossing_directions(medial(fixture("k4"))).size() == 8);
  for (const auto& g : generate_corpus(5, true, true).maps) {
    const auto mg = medial(g);
    const auto dirs = all_crossing_directions(mg);
    CHECK(dirs.size() == (std::size_t{1} << anti_circuits(mg).count()));
    for (const auto& d : dirs) CHECK(is_all_crossing(mg, d));
  }
}

TEST_CASE("broken directions are detected") {
  const auto mg = medial(fixture("k4"));
  auto d = all_crossing_directions(mg).front();
  d.is_tail[1] = !d.is_tail[1];
  CHECK_FALSE(is_all_crossing(mg, d));
  auto tails = d;
  std::fill(tails.is_tail.begin(), tails.is_tail.end(), true);
  CHECK_THROWS_AS(cd_labelling(mg, tails), PreconditionError);
}

TEST_CASE("c/d labellings of the cycles") {
  const auto c3 = fixture("c3");
  const auto m3 = medial(c3);
  for (const auto& d : all_crossing_directions(m3)) CHECK(cd_labelling(m3, d).c_edges() == EdgeSubset::all(c3));

  const auto c4 = fixture("c4");
  const auto m4 = medial(c4);
  std::map<EdgeSubset, int> seen;
  for (const auto& d : all_crossing_directions(m4)) ++seen[cd_labelling(m4, d).c_edges()];
  CHECK(seen.size() == 2);
  CHECK(seen[EdgeSubset::none(c4)] == 2);
  CHECK(seen[EdgeSubset::all(c4)] == 2);
}

TEST_CASE("reversing every circuit keeps the labelling") {
  for (const auto& g : generate_corpus(5, true, true).maps) {
    const auto mg = medial(g);
    const auto ac = anti_circuits(mg);
    const std::uint64_t all = (std::uint64_t{1} << ac.count()) - 1;
    for (const auto& d : all_crossing_directions(mg)) {
      const auto back = direction_from_orientation(mg, ac, d.reversed ^ all);
      CHECK(cd_labelling(mg, d).c_edges() == cd_labelling(mg, back).c_edges());
    }
  }
}

TEST_CASE("bipartite partial dual sets of the fixtures") {
  const auto theta = fixture("theta");
  CHECK(bipartite_dual_sets(theta) == subsets_of(theta, {{}}));
  const auto c3 = fixture("c3");
  CHECK(bipartite_dual_sets(c3) == subsets_of(c3, {{"a", "b", "c"}}));
  const auto c4 = fixture("c4");
  CHECK(bipartite_dual_sets(c4) == subsets_of(c4, {{}, {"a", "b", "c", "d"}}));
  const auto k4 = fixture("k4");
  CHECK(bipartite_dual_sets(k4).size() == 4);
}

TEST_CASE("d-sets give even partial duals") {
  const auto theta = fixture("theta");
  const auto d = eulerian_dual_sets_from_d(theta);
  CHECK(d == subsets_of(theta, {{"a", "b", "c"}}));
  const AbstractMultigraph triangle({"x", "y", "z"}, {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}});
  const auto u = underlying_graph(partial_dual(theta, EdgeSubset::all(theta)));
  CHECK(multigraph_isomorphic(u, triangle));
  CHECK(all_components_eulerian(u));

  const auto c3 = fixture("c3");
  CHECK(eulerian_dual_sets_from_d(c3) == subsets_of(c3, {{}}));
  CHECK(all_components_eulerian(underlying_graph(c3)));
}

TEST_CASE("an even partial dual need not come from a d-set") {
  const auto theta = fixture("theta");
  const auto a = EdgeSubset::of(theta, {"a"});
  CHECK(all_components_eulerian(underlying_graph(partial_dual(theta, a))));
  CHECK_FALSE(eulerian_dual_sets_from_d(theta).contains(a));
}

TEST_CASE("c-sets are exactly the sets with even restrictions on both sides") {
  for (const auto& g : generate_corpus(5, true, true).maps) {
    std::set<EdgeSubset> even;
    const auto dual = geometric_dual(g);
    for (const auto& a : EdgeSubset::all_subsets(g)) {
      if (all_components_eulerian(underlying_graph(restrict_to(g, a))) &&
          all_components_eulerian(underlying_graph(restrict_to(dual, a.complement())))) {
        even.insert(a);
      }
    }
    const auto csets = bipartite_dual_sets(g);
    CHECK(csets == even);
    CHECK(csets.size() <= (std::size_t{1} << (anti_circuits(medial(g)).count() - 1)));
  }
}

TEST_CASE("every c-edge count at a vertex is even") {
  for (const auto& g : generate_corpus(5, true, true).maps) {
    const auto mg = medial(g);
    for (const auto& d : all_crossing_directions(mg)) {
      const auto c = cd_labelling(mg, d).c_edges();
      for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        int count = 0;
        for (Dart x : g.vertices()[v].rotation) count += c.contains(g.edges()[g.edge_of(x)].name) ? 1 : 0;
        CHECK(count % 2 == 0);
      }
    }
  }
}
