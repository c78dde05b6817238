#pragma once

#include <cstddef>
#include <vector>

#include "ribbon/edge_subset.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

/// Direction of a marking arrow relative to the rotation of the vertex it sits on.
enum class ArrowDirection { along, against };

/// A coloured arrow on a vertex boundary, recording where a deleted edge was attached.
///
/// Arrows live in the gaps of a rotation: `after` is the dart preceding the
/// gap (0 on a vertex with no darts) and `rank` orders arrows sharing a gap.
/// `dart` is the dart id the edge end will get back when it is restored.
struct ArrowMark {
  EdgeId colour;
  std::size_t vertex = 0;
  Dart after = 0;
  std::size_t rank = 0;
  ArrowDirection direction = ArrowDirection::along;
  Dart dart = 0;
};

class ArrowMarkedRibbonGraph {
 public:
  ArrowMarkedRibbonGraph() = default;
  /// Throws InvalidMap unless every colour has exactly two arrows, every
  /// arrow sits in an existing gap, and ranks within a gap are 0..k-1.
  ArrowMarkedRibbonGraph(RibbonGraph base, std::vector<ArrowMark> arrows);

  const RibbonGraph& base() const noexcept { return base_; }
  const std::vector<ArrowMark>& arrows() const noexcept { return arrows_; }
  /// Distinct colours, sorted.
  std::vector<EdgeId> colours() const;

 private:
  RibbonGraph base_;
  std::vector<ArrowMark> arrows_;
};

/// Replace each edge of `a` by a pair of same-coloured arrows.
ArrowMarkedRibbonGraph arrow_delete(const RibbonGraph& g, const EdgeSubset& a);

/// Glue one edge back per colour at its two arrows. Throws InvalidMap if the
/// arrows of a colour disagree in direction (the edge would be twisted) or a
/// colour clashes with an existing edge name.
RibbonGraph arrow_add(const ArrowMarkedRibbonGraph& am);

/// Rotation sigma* = phi, same darts and edges. Isolated vertices are kept,
/// face vertices are named f0, f1, ... in face order.
RibbonGraph geometric_dual(const RibbonGraph& g);

/// Geometric dual of the base; every arrow keeps its gap, which is now a gap
/// of the dual vertex built from the face through that corner.
ArrowMarkedRibbonGraph dual_of_arrow_marked(const ArrowMarkedRibbonGraph& am);

/// G^A = (G -> A^c)* <- A^c. Edge names and dart ids are preserved.
RibbonGraph partial_dual(const RibbonGraph& g, const EdgeSubset& a);

}  // namespace ribbon
