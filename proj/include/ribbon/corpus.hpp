#pragma once

#include <string>
#include <vector>

#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

struct CorpusFilter {
  int max_edges = 1;
  bool require_plane = true;
  bool require_connected = true;

  std::string describe() const;
};

/// Every map with 1..max_edges edges passing the filter, one per
/// isomorphism class, in canonical form. Ordered by edge count, then by
/// canonical key. Disconnected members are unions of components that each
/// have at least one edge.
struct Corpus {
  CorpusFilter filter;
  std::vector<RibbonGraph> maps;
};

/// Throws PreconditionError unless 1 <= max_edges <= 7.
Corpus generate_corpus(int max_edges, bool require_plane, bool require_connected);

/// Connected maps with exactly m edges (m >= 0), in canonical form and key order.
std::vector<RibbonGraph> connected_maps(int m, bool require_plane);

}  // namespace ribbon
