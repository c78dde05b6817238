#include "ribbon/duality.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ribbon/errors.hpp"
#include "ribbon/map_ops.hpp"

namespace ribbon {

namespace {

// A vertex boundary read counterclockwise: darts interleaved with arrows.
struct Token {
  Dart dart = 0;      // nonzero for a dart
  std::size_t arrow = 0;  // index into the arrow list otherwise
};
using Boundary = std::vector<Token>;

std::vector<Boundary> boundaries(const RibbonGraph& base, const std::vector<ArrowMark>& arrows) {
  std::map<std::pair<std::size_t, Dart>, std::vector<std::pair<std::size_t, std::size_t>>> in_gap;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    in_gap[{arrows[i].vertex, arrows[i].after}].emplace_back(arrows[i].rank, i);
  }
  for (auto& [gap, list] : in_gap) std::sort(list.begin(), list.end());

  std::vector<Boundary> out(base.num_vertices());
  auto push_gap = [&](std::size_t v, Dart after) {
    if (auto it = in_gap.find({v, after}); it != in_gap.end()) {
      for (const auto& [rank, idx] : it->second) out[v].push_back({0, idx});
    }
  };
  for (std::size_t v = 0; v < base.num_vertices(); ++v) {
    const auto& rot = base.vertices()[v].rotation;
    if (rot.empty()) push_gap(v, 0);
    for (Dart d : rot) {
      out[v].push_back({d, 0});
      push_gap(v, d);
    }
  }
  return out;
}

// Recompute (after, rank) for every arrow token on boundary `b` of vertex `v`.
void place_arrows(const Boundary& b, std::size_t v, std::vector<ArrowMark>& arrows) {
  const auto first_dart = std::find_if(b.begin(), b.end(), [](const Token& t) { return t.dart != 0; });
  const std::size_t start = first_dart == b.end() ? 0 : static_cast<std::size_t>(first_dart - b.begin());
  Dart after = 0;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    const auto& t = b[(start + k) % b.size()];
    if (t.dart != 0) {
      after = t.dart;
      rank = 0;
    } else {
      auto& a = arrows[t.arrow];
      a.vertex = v;
      a.after = after;
      a.rank = rank++;
    }
  }
}

}  // namespace

ArrowMarkedRibbonGraph::ArrowMarkedRibbonGraph(RibbonGraph base, std::vector<ArrowMark> arrows)
    : base_(std::move(base)), arrows_(std::move(arrows)) {
  std::map<EdgeId, int> per_colour;
  std::map<std::pair<std::size_t, Dart>, std::vector<std::size_t>> ranks;
  for (const auto& a : arrows_) {
    ++per_colour[a.colour];
    if (a.vertex >= base_.num_vertices()) throw InvalidMap("arrow " + a.colour + " on a missing vertex");
    const auto& rot = base_.vertices()[a.vertex].rotation;
    if (rot.empty() ? a.after != 0 : std::find(rot.begin(), rot.end(), a.after) == rot.end()) {
      throw InvalidMap("arrow " + a.colour + " is not in a gap of vertex " + base_.vertices()[a.vertex].name);
    }
    ranks[{a.vertex, a.after}].push_back(a.rank);
  }
  for (const auto& [colour, n] : per_colour) {
    if (n != 2) throw InvalidMap("colour " + colour + " has " + std::to_string(n) + " arrows, expected 2");
  }
  for (auto& [gap, list] : ranks) {
    std::sort(list.begin(), list.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] != i) throw InvalidMap("arrow ranks within a gap must be 0..k-1");
    }
  }
}

std::vector<EdgeId> ArrowMarkedRibbonGraph::colours() const {
  std::set<EdgeId> s;
  for (const auto& a : arrows_) s.insert(a.colour);
  return {s.begin(), s.end()};
}

ArrowMarkedRibbonGraph arrow_delete(const RibbonGraph& g, const EdgeSubset& a) {
  if (a.universe() != g.edge_names()) throw PreconditionError("edge subset " + a.to_string() + " is not over this graph");
  std::vector<ArrowMark> arrows;
  std::vector<Boundary> bounds(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    for (Dart d : g.vertices()[v].rotation) {
      const auto& e = g.edges()[g.edge_of(d)];
      if (a.contains(e.name)) {
        // Both ends of an untwisted edge carry the same direction flag.
        bounds[v].push_back({0, arrows.size()});
        arrows.push_back({e.name, v, 0, 0, ArrowDirection::along, d});
      } else {
        bounds[v].push_back({d, 0});
      }
    }
  }
  std::vector<Vertex> vertices;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    Vertex nv{g.vertices()[v].name, {}};
    for (const auto& t : bounds[v]) {
      if (t.dart != 0) nv.rotation.push_back(t.dart);
    }
    vertices.push_back(std::move(nv));
    place_arrows(bounds[v], v, arrows);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (!a.contains(e.name)) edges.push_back(e);
  }
  return ArrowMarkedRibbonGraph(RibbonGraph(std::move(vertices), std::move(edges)), std::move(arrows));
}

RibbonGraph arrow_add(const ArrowMarkedRibbonGraph& am) {
  const auto& base = am.base();
  const auto& arrows = am.arrows();
  auto bounds = boundaries(base, arrows);

  std::map<EdgeId, std::vector<std::size_t>> by_colour;
  for (std::size_t i = 0; i < arrows.size(); ++i) by_colour[arrows[i].colour].push_back(i);

  std::set<Dart> used;
  for (Dart d : base.darts()) used.insert(d);
  Dart next_fresh = base.max_dart();
  for (const auto& a : arrows) next_fresh = std::max(next_fresh, a.dart);
  auto claim = [&](Dart hint) {
    if (hint > 0 && used.insert(hint).second) return hint;
    used.insert(++next_fresh);
    return next_fresh;
  };

  std::vector<Dart> dart_of_arrow(arrows.size(), 0);
  std::vector<Edge> edges = base.edges();
  for (const auto& [colour, idx] : by_colour) {
    if (base.find_edge(colour)) throw InvalidMap("colour " + colour + " clashes with an existing edge");
    const auto& a0 = arrows[idx[0]];
    const auto& a1 = arrows[idx[1]];
    if (a0.direction != a1.direction) {
      throw InvalidMap("arrows of colour " + colour + " disagree in direction; the edge would be twisted");
    }
    dart_of_arrow[idx[0]] = claim(a0.dart);
    dart_of_arrow[idx[1]] = claim(a1.dart);
    edges.push_back({colour, dart_of_arrow[idx[0]], dart_of_arrow[idx[1]]});
  }

  std::vector<Vertex> vertices;
  for (std::size_t v = 0; v < base.num_vertices(); ++v) {
    Vertex nv{base.vertices()[v].name, {}};
    for (const auto& t : bounds[v]) nv.rotation.push_back(t.dart != 0 ? t.dart : dart_of_arrow[t.arrow]);
    vertices.push_back(std::move(nv));
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

ArrowMarkedRibbonGraph dual_of_arrow_marked(const ArrowMarkedRibbonGraph& am) {
  const auto& base = am.base();
  std::set<std::string> taken;
  for (const auto& v : base.vertices()) {
    if (v.rotation.empty()) taken.insert(v.name);
  }
  std::size_t counter = 0;
  auto face_name = [&]() {
    std::string name;
    do {
      name = "f" + std::to_string(counter++);
    } while (taken.count(name));
    taken.insert(name);
    return name;
  };

  std::vector<Vertex> vertices;
  std::vector<std::size_t> new_vertex_of_dart(static_cast<std::size_t>(base.max_dart()) + 1, 0);
  for (const auto& orbit : faces(base)) {
    if (orbit.empty()) continue;
    for (Dart d : orbit) new_vertex_of_dart[static_cast<std::size_t>(d)] = vertices.size();
    vertices.push_back({face_name(), orbit});
  }
  std::vector<std::size_t> new_isolated(base.num_vertices(), 0);
  for (std::size_t v = 0; v < base.num_vertices(); ++v) {
    if (!base.vertices()[v].rotation.empty()) continue;
    new_isolated[v] = vertices.size();
    vertices.push_back({base.vertices()[v].name, {}});
  }

  // The corner following dart d on its vertex is the corner following d on its face.
  auto arrows = am.arrows();
  for (auto& a : arrows) {
    a.vertex = a.after == 0 ? new_isolated[a.vertex] : new_vertex_of_dart[static_cast<std::size_t>(a.after)];
  }
  return ArrowMarkedRibbonGraph(RibbonGraph(std::move(vertices), base.edges()), std::move(arrows));
}

RibbonGraph geometric_dual(const RibbonGraph& g) { return dual_of_arrow_marked(ArrowMarkedRibbonGraph(g, {})).base(); }

RibbonGraph partial_dual(const RibbonGraph& g, const EdgeSubset& a) {
  if (a.universe() != g.edge_names()) throw PreconditionError("edge subset " + a.to_string() + " is not over this graph");
  return arrow_add(dual_of_arrow_marked(arrow_delete(g, a.complement())));
}

}  // namespace ribbon
