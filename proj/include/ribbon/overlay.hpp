#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ribbon/edge_subset.hpp"
#include "ribbon/multigraph.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

enum class OverlayVertexKind { primal, dual, crossing };

struct OverlayVertexInfo {
  OverlayVertexKind kind = OverlayVertexKind::primal;
  /// Host vertex name, host face index (as a decimal string) or host edge name.
  std::string source;
};

struct OverlaySegmentInfo {
  EdgeId edge;
  /// False for a half of e, true for a half of e*.
  bool dual = false;
  /// The host dart whose end this half belongs to (primal), or whose right-hand
  /// face this half enters (dual).
  Dart host_dart = 0;
};

/// The standard immersion of G and G* as a plane map: every transversal point
/// becomes a degree-4 crossing vertex, every edge of G and of G* two segments.
struct OverlayMap {
  RibbonGraph map;
  std::vector<OverlayVertexInfo> vertex_kind;   // by overlay vertex index
  std::vector<OverlaySegmentInfo> segment_kind;  // by overlay edge index
  std::vector<EdgeId> host_edges;               // sorted edge names of G
  std::size_t host_vertices = 0;
  std::size_t host_faces = 0;
};

/// Throws PreconditionError unless `g` is connected, plane and has an edge.
OverlayMap overlay(const RibbonGraph& g);

/// ".rg" text of the overlay with one '#' comment line per vertex giving its kind.
std::string serialize_overlay(const OverlayMap& om);

struct RegionDualResult {
  AbstractMultigraph graph;
  std::vector<std::size_t> region_of_face;  // by index into faces(om.map)
};

/// Region dual of the overlay after deleting the primal edges in
/// `deleted_primal` and the dual edges e* for e in `deleted_dual`.
///
/// Regions are unions of overlay faces glued across deleted segments. Each
/// surviving host edge whose partner is deleted yields one edge named after
/// it; when e and e* both survive their four halves stay separate edges,
/// named "<e>/p/<dart>" and "<e>/d/<dart>".
RegionDualResult region_dual(const OverlayMap& om, const EdgeSubset& deleted_primal, const EdgeSubset& deleted_dual);

/// [(G u G*) - (A^c u A*)] region dual, an abstract multigraph with edges named as in G.
AbstractMultigraph newpds(const RibbonGraph& g, const EdgeSubset& a);

}  // namespace ribbon
