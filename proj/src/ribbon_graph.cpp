#include "ribbon/ribbon_graph.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "ribbon/errors.hpp"
#include "ribbon/rg_format.hpp"

namespace ribbon {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace

RibbonGraph::RibbonGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  Dart max_dart = 0;
  for (const auto& v : vertices_) {
    for (Dart d : v.rotation) {
      if (d <= 0) throw InvalidMap("dart ids must be positive (vertex " + v.name + ")");
      max_dart = std::max(max_dart, d);
    }
  }
  for (const auto& e : edges_) {
    if (e.first <= 0 || e.second <= 0) throw InvalidMap("dart ids must be positive (edge " + e.name + ")");
    max_dart = std::max({max_dart, e.first, e.second});
  }

  const auto n = static_cast<std::size_t>(max_dart) + 1;
  sigma_.assign(n, 0);
  sigma_inv_.assign(n, 0);
  alpha_.assign(n, 0);
  vertex_of_.assign(n, kNone);
  edge_of_.assign(n, kNone);

  std::set<std::string> names;
  for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
    const auto& v = vertices_[vi];
    if (!names.insert(v.name).second) throw InvalidMap("duplicate vertex name " + v.name);
    const auto k = v.rotation.size();
    for (std::size_t i = 0; i < k; ++i) {
      const Dart d = v.rotation[i];
      const auto slot = static_cast<std::size_t>(d);
      if (vertex_of_[slot] != kNone) throw InvalidMap("dart " + std::to_string(d) + " appears in two rotations");
      vertex_of_[slot] = vi;
      const Dart next = v.rotation[(i + 1) % k];
      sigma_[slot] = next;
      sigma_inv_[static_cast<std::size_t>(next)] = d;
    }
  }

  names.clear();
  for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
    const auto& e = edges_[ei];
    if (!names.insert(e.name).second) throw InvalidMap("duplicate edge name " + e.name);
    if (e.first == e.second) throw InvalidMap("edge " + e.name + " pairs a dart with itself");
    for (Dart d : {e.first, e.second}) {
      const auto slot = static_cast<std::size_t>(d);
      if (edge_of_[slot] != kNone) throw InvalidMap("dart " + std::to_string(d) + " appears in two edges");
      if (vertex_of_[slot] == kNone) throw InvalidMap("dart " + std::to_string(d) + " of edge " + e.name + " is in no rotation");
      edge_of_[slot] = ei;
    }
    alpha_[static_cast<std::size_t>(e.first)] = e.second;
    alpha_[static_cast<std::size_t>(e.second)] = e.first;
  }

  for (std::size_t slot = 1; slot < n; ++slot) {
    if (vertex_of_[slot] != kNone && edge_of_[slot] == kNone) {
      throw InvalidMap("dart " + std::to_string(slot) + " belongs to no edge");
    }
  }
}

std::size_t RibbonGraph::checked(Dart d) const {
  if (!has_dart(d)) throw PreconditionError("unknown dart " + std::to_string(d));
  return static_cast<std::size_t>(d);
}

bool RibbonGraph::has_dart(Dart d) const noexcept {
  return d > 0 && static_cast<std::size_t>(d) < edge_of_.size() && edge_of_[static_cast<std::size_t>(d)] != kNone;
}

std::vector<Dart> RibbonGraph::darts() const {
  std::vector<Dart> out;
  out.reserve(num_darts());
  for (std::size_t slot = 1; slot < edge_of_.size(); ++slot) {
    if (edge_of_[slot] != kNone) out.push_back(static_cast<Dart>(slot));
  }
  return out;
}

std::optional<std::size_t> RibbonGraph::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> RibbonGraph::find_edge(std::string_view name) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t RibbonGraph::edge_index(std::string_view name) const {
  if (auto i = find_edge(name)) return *i;
  throw PreconditionError("unknown edge " + std::string(name));
}

std::vector<EdgeId> RibbonGraph::edge_names() const {
  std::vector<EdgeId> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.name);
  std::sort(out.begin(), out.end());
  return out;
}

bool RibbonGraph::is_loop(std::size_t edge) const {
  const auto& e = edges_.at(edge);
  return vertex_of(e.first) == vertex_of(e.second);
}

bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
  return serialize_rg(a) == serialize_rg(b);
}

}  // namespace ribbon
