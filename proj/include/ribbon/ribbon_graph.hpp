#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ribbon {

/// Half-edge identifier. Always positive; unique within one map.
using Dart = int;
using EdgeId = std::string;

struct Vertex {
  std::string name;
  /// Darts in counterclockwise cyclic order. Empty for an isolated vertex.
  std::vector<Dart> rotation;
};

struct Edge {
  EdgeId name;
  Dart first = 0;
  Dart second = 0;
};

/// An orientable ribbon graph stored as a rotation system.
///
/// The vertex rotation sigma and the edge involution alpha act on the same
/// dart set; faces are the orbits of phi = alpha o sigma. Vertices are
/// addressed by index, edges by name. Instances are immutable once built and
/// the constructor rejects anything that is not a well-formed map.
class RibbonGraph {
 public:
  RibbonGraph() = default;
  RibbonGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_darts() const noexcept { return 2 * edges_.size(); }

  /// All darts in increasing order.
  std::vector<Dart> darts() const;
  Dart max_dart() const noexcept { return static_cast<Dart>(sigma_.empty() ? 0 : sigma_.size() - 1); }
  bool has_dart(Dart d) const noexcept;

  Dart sigma(Dart d) const { return sigma_.at(checked(d)); }
  Dart sigma_inv(Dart d) const { return sigma_inv_.at(checked(d)); }
  Dart alpha(Dart d) const { return alpha_.at(checked(d)); }
  /// Face successor: alpha(sigma(d)).
  Dart phi(Dart d) const { return alpha(sigma(d)); }

  std::size_t vertex_of(Dart d) const { return vertex_of_.at(checked(d)); }
  std::size_t edge_of(Dart d) const { return edge_of_.at(checked(d)); }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_edge(std::string_view name) const;
  /// Index of the named edge; throws PreconditionError if absent.
  std::size_t edge_index(std::string_view name) const;

  /// Edge names in lexicographic order: the universe for EdgeSubset.
  std::vector<EdgeId> edge_names() const;

  bool is_loop(std::size_t edge) const;

 private:
  std::size_t checked(Dart d) const;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  // Indexed by dart id; slot 0 and unused ids hold 0.
  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  std::vector<Dart> alpha_;
  std::vector<std::size_t> vertex_of_;
  std::vector<std::size_t> edge_of_;
};

/// Structural equality: same vertex names with the same cyclic rotations and
/// the same named edges on the same dart pairs.
bool operator==(const RibbonGraph& a, const RibbonGraph& b);

}  // namespace ribbon
