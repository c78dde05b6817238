#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ribbon/edge_subset.hpp"
#include "ribbon/multigraph.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

/// Orbits of phi = alpha o sigma, each starting at its least dart, sorted by
/// that dart. Every isolated vertex bounds one further face with an empty
/// dart cycle; those come last, in vertex order.
std::vector<std::vector<Dart>> faces(const RibbonGraph& g);
std::size_t face_count(const RibbonGraph& g);

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> of_vertex;
};

Components components(const RibbonGraph& g);
bool is_connected(const RibbonGraph& g);

/// Genus of each connected component, from V - E + F = 2 - 2g.
std::vector<int> component_genus(const RibbonGraph& g);
/// Sum of the component genera.
int total_genus(const RibbonGraph& g);
/// Every component is a sphere.
bool is_plane(const RibbonGraph& g);

/// G|_A: edges A, vertices incident with A, rotations with other darts removed.
RibbonGraph restrict_to(const RibbonGraph& g, const EdgeSubset& a);
/// G - A: every vertex kept, darts of A removed from the rotations.
RibbonGraph delete_edges(const RibbonGraph& g, const EdgeSubset& a);

AbstractMultigraph underlying_graph(const RibbonGraph& g);

/// Vertex and edge names as a fresh map keeping only the listed component's pieces.
RibbonGraph component_subgraph(const RibbonGraph& g, std::size_t component);

/// Dart bijection witnessing map isomorphism.
struct MapIsomorphism {
  std::map<Dart, Dart> dart_map;
  /// Per component of the first map: true if sigma is carried to sigma^-1.
  std::vector<bool> reflected;
};

/// Isomorphism of ribbon graphs, allowing each component to be reflected.
std::optional<MapIsomorphism> find_map_isomorphism(const RibbonGraph& a, const RibbonGraph& b);
bool map_isomorphic(const RibbonGraph& a, const RibbonGraph& b);

/// Isomorphism-invariant key: sorted canonical codes of the components,
/// followed by the isolated-vertex count. Equal keys iff map_isomorphic.
std::vector<int> canonical_key(const RibbonGraph& g);

/// The canonical representative: darts 1..2m, edges named a, b, c, ... and
/// vertices v0, v1, ... in order of their least dart.
RibbonGraph canonical_form(const RibbonGraph& g);

/// Disjoint union; names of `b` are suffixed if they collide with `a`,
/// darts of `b` are shifted past those of `a`.
RibbonGraph disjoint_union(const RibbonGraph& a, const RibbonGraph& b);

}  // namespace ribbon
