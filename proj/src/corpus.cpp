#include "ribbon/corpus.hpp"

#include <algorithm>
#include <map>

#include "ribbon/errors.hpp"
#include "ribbon/map_ops.hpp"

namespace ribbon {

std::string CorpusFilter::describe() const {
  return "max_edges=" + std::to_string(max_edges) + (require_plane ? " plane" : " any-genus") +
         (require_connected ? " connected" : " any-components");
}

namespace {

using Layer = std::map<std::vector<int>, RibbonGraph>;

// A gap is identified by (vertex, position): the new dart goes after
// rotation[position], or is the only dart of an empty vertex.
struct Gap {
  std::size_t vertex;
  std::size_t position;
};

std::vector<Gap> gaps_of(const RibbonGraph& g) {
  std::vector<Gap> out;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto k = g.vertices()[v].rotation.size();
    for (std::size_t i = 0; i < std::max<std::size_t>(k, 1); ++i) out.push_back({v, i});
  }
  return out;
}

void insert_after(std::vector<Dart>& rotation, std::size_t position, Dart d) {
  if (rotation.empty()) {
    rotation.push_back(d);
  } else {
    rotation.insert(rotation.begin() + static_cast<std::ptrdiff_t>(position) + 1, d);
  }
}

void add_child(Layer& layer, RibbonGraph child, bool require_plane) {
  if (require_plane && !is_plane(child)) return;
  auto key = canonical_key(child);
  if (!layer.contains(key)) layer.emplace(std::move(key), canonical_form(child));
}

Layer grow(const Layer& parents, bool require_plane) {
  Layer out;
  for (const auto& [key, g] : parents) {
    const Dart x = g.max_dart() + 1;
    const Dart y = g.max_dart() + 2;
    const auto gaps = gaps_of(g);
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      // Pendant edge to a new vertex.
      {
        auto vertices = g.vertices();
        auto edges = g.edges();
        insert_after(vertices[gaps[i].vertex].rotation, gaps[i].position, x);
        vertices.push_back({"_w", {y}});
        edges.push_back({"_n", x, y});
        add_child(out, RibbonGraph(std::move(vertices), std::move(edges)), require_plane);
      }
      for (std::size_t j = i; j < gaps.size(); ++j) {
        auto vertices = g.vertices();
        auto edges = g.edges();
        if (i == j) {
          insert_after(vertices[gaps[i].vertex].rotation, gaps[i].position, x);
          const auto& r = vertices[gaps[i].vertex].rotation;
          const auto at = static_cast<std::size_t>(std::find(r.begin(), r.end(), x) - r.begin());
          insert_after(vertices[gaps[i].vertex].rotation, at, y);
        } else if (gaps[i].vertex == gaps[j].vertex) {
          // Insert the later position first so the earlier index stays valid.
          insert_after(vertices[gaps[j].vertex].rotation, gaps[j].position, y);
          insert_after(vertices[gaps[i].vertex].rotation, gaps[i].position, x);
        } else {
          insert_after(vertices[gaps[i].vertex].rotation, gaps[i].position, x);
          insert_after(vertices[gaps[j].vertex].rotation, gaps[j].position, y);
        }
        edges.push_back({"_n", x, y});
        add_child(out, RibbonGraph(std::move(vertices), std::move(edges)), require_plane);
      }
    }
  }
  return out;
}

std::vector<Layer> connected_layers(int max_edges, bool require_plane) {
  std::vector<Layer> layers;
  Layer base;
  RibbonGraph point({{"v0", {}}}, {});
  base.emplace(canonical_key(point), point);
  layers.push_back(std::move(base));
  for (int m = 1; m <= max_edges; ++m) layers.push_back(grow(layers.back(), require_plane));
  return layers;
}

std::vector<RibbonGraph> values(const Layer& layer) {
  std::vector<RibbonGraph> out;
  for (const auto& [key, g] : layer) out.push_back(g);
  return out;
}

// Multisets of connected pieces (indices non-decreasing) with the given total edge count.
void combine(const std::vector<std::vector<RibbonGraph>>& by_size, int remaining, int min_size, std::size_t min_index,
             std::vector<RibbonGraph>& parts, Layer& out) {
  if (remaining == 0) {
    if (parts.size() < 2) return;
    RibbonGraph u = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) u = disjoint_union(u, parts[i]);
    auto key = canonical_key(u);
    if (!out.contains(key)) out.emplace(std::move(key), canonical_form(u));
    return;
  }
  for (int s = min_size; s <= remaining; ++s) {
    const auto& pool = by_size[static_cast<std::size_t>(s)];
    for (std::size_t i = s == min_size ? min_index : 0; i < pool.size(); ++i) {
      parts.push_back(pool[i]);
      combine(by_size, remaining - s, s, i, parts, out);
      parts.pop_back();
    }
  }
}

}  // namespace

std::vector<RibbonGraph> connected_maps(int m, bool require_plane) {
  if (m < 0) throw PreconditionError("edge count must be non-negative");
  return values(connected_layers(m, require_plane).back());
}

Corpus generate_corpus(int max_edges, bool require_plane, bool require_connected) {
  if (max_edges < 1 || max_edges > 7) throw PreconditionError("max_edges must lie in 1..7");
  Corpus corpus;
  corpus.filter = {max_edges, require_plane, require_connected};
  const auto layers = connected_layers(max_edges, require_plane);
  std::vector<std::vector<RibbonGraph>> by_size;
  for (const auto& layer : layers) by_size.push_back(values(layer));

  for (int m = 1; m <= max_edges; ++m) {
    Layer all = layers[static_cast<std::size_t>(m)];
    if (!require_connected) {
      std::vector<RibbonGraph> parts;
      combine(by_size, m, 1, 0, parts, all);
    }
    for (auto& g : values(all)) corpus.maps.push_back(std::move(g));
  }
  return corpus;
}

}  // namespace ribbon
