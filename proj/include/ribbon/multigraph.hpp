#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

struct MultiEdge {
  EdgeId name;
  std::size_t u = 0;
  std::size_t v = 0;
};

/// Finite multigraph with loops; the embedding-free shadow of a ribbon graph.
class AbstractMultigraph {
 public:
  AbstractMultigraph() = default;
  AbstractMultigraph(std::vector<std::string> vertex_names, std::vector<MultiEdge> edges);

  std::size_t num_vertices() const noexcept { return vertex_names_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }
  const std::vector<MultiEdge>& edges() const noexcept { return edges_; }

  /// Non-loop incidences plus twice the loops at v.
  std::size_t degree(std::size_t v) const;
  std::size_t num_loops(std::size_t v) const;
  std::size_t num_isolated() const;

  std::optional<std::size_t> find_edge(std::string_view name) const;
  std::size_t edge_index(std::string_view name) const;

  /// Connected component id of every vertex; ids are dense and ordered by first vertex.
  std::vector<std::size_t> component_of_vertex() const;

  /// The sub-multigraph spanned by the named edges: only their endpoints are kept.
  AbstractMultigraph edge_induced(const std::vector<EdgeId>& edge_names) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<MultiEdge> edges_;
};

/// Exact multigraph isomorphism (loops and multiplicities respected).
/// Colour refinement followed by backtracking; intended for small graphs.
bool multigraph_isomorphic(const AbstractMultigraph& a, const AbstractMultigraph& b);

}  // namespace ribbon
