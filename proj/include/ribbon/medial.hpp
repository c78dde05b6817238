#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ribbon/edge_subset.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

enum class FaceColour { black, white };

struct MedialFace {
  std::vector<Dart> darts;
  FaceColour colour = FaceColour::black;
  /// Index of the host vertex (black) or host face (white) this face stands for.
  std::size_t source = 0;
};

/// Medial graph of a connected plane graph with its canonical face 2-colouring.
///
/// Medial vertex i is host edge `host_edge[i]` (and carries that name). Medial
/// edges are the corners of the host: for a host dart d the corner between d
/// and sigma(d) runs from dart 2k+1 (at the medial vertex of d, k the index of
/// d) to dart 2k'+2 (at the medial vertex of sigma(d), k' its index).
struct MedialGraph {
  RibbonGraph map;
  std::vector<EdgeId> host_edge;   // medial vertex index -> host edge name
  std::vector<EdgeId> host_edges;  // sorted host edge names
  std::vector<MedialFace> faces;
  std::vector<std::size_t> face_of_dart;  // medial dart -> index into faces
};

/// Throws PreconditionError unless `g` is connected, plane and has an edge.
MedialGraph medial(const RibbonGraph& g);

/// Straight-ahead circuits: at every vertex a circuit leaves through the dart
/// opposite the one it entered by.
struct AntiCircuitDecomposition {
  /// Exit darts of each circuit in traversal order; each circuit starts at
  /// the least dart not used by an earlier one.
  std::vector<std::vector<Dart>> circuits;
  std::vector<std::size_t> circuit_of_dart;  // by medial dart
  std::vector<bool> exit_dart;               // true if the canonical traversal leaves the vertex here

  std::size_t count() const noexcept { return circuits.size(); }
};

AntiCircuitDecomposition anti_circuits(const MedialGraph& mg);

/// An edge direction of the medial graph reading (head, head, tail, tail)
/// around every vertex. Bit i of `reversed` flips circuit i.
struct AllCrossingDirection {
  std::uint64_t reversed = 0;
  std::vector<bool> is_tail;  // by medial dart: the edge leaves its vertex here

  bool head(Dart d) const { return !is_tail.at(static_cast<std::size_t>(d)); }
};

AllCrossingDirection direction_from_orientation(const MedialGraph& mg, const AntiCircuitDecomposition& ac,
                                                std::uint64_t reversed);
/// All 2^c directions, in increasing order of `reversed`.
std::vector<AllCrossingDirection> all_crossing_directions(const MedialGraph& mg);
/// Checks the (head, head, tail, tail) pattern at every vertex and that each edge has one head and one tail.
bool is_all_crossing(const MedialGraph& mg, const AllCrossingDirection& dir);

enum class CdLabel { c, d };

struct CdLabelling {
  std::vector<EdgeId> edges;   // sorted host edge names
  std::vector<CdLabel> label;  // parallel to `edges`

  EdgeSubset c_edges() const;
  EdgeSubset d_edges() const;
};

/// A medial vertex is a c-vertex when the face between its two consecutive
/// heads is black, a d-vertex otherwise.
CdLabelling cd_labelling(const MedialGraph& mg, const AllCrossingDirection& dir);

/// {c-edges of every all-crossing direction}: exactly the A with G^A bipartite.
std::set<EdgeSubset> bipartite_dual_sets(const RibbonGraph& g);
/// {d-edges of every all-crossing direction}: every such A has G^A Eulerian.
std::set<EdgeSubset> eulerian_dual_sets_from_d(const RibbonGraph& g);

}  // namespace ribbon
