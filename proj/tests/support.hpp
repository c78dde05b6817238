#pragma once

#include <algorithm>
#include <random>
#include <string>

#include "ribbon/rg_format.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace testing {

inline ribbon::RibbonGraph fixture(const std::string& name) {
  return ribbon::read_rg_file(std::string(RIBBON_FIXTURE_DIR) + "/" + name + ".rg");
}

/// Same map with shuffled dart ids, renamed vertices, shuffled listing order
/// and, if `mirror`, every rotation reversed.
inline ribbon::RibbonGraph relabel(const ribbon::RibbonGraph& g, unsigned seed, bool mirror) {
  std::mt19937 rng(seed);
  auto darts = g.darts();
  std::vector<ribbon::Dart> image(darts.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = static_cast<ribbon::Dart>(3 * i + 7);
  std::shuffle(image.begin(), image.end(), rng);
  auto map = [&](ribbon::Dart d) {
    return image[static_cast<std::size_t>(std::lower_bound(darts.begin(), darts.end(), d) - darts.begin())];
  };
  std::vector<ribbon::Vertex> vertices;
  for (const auto& v : g.vertices()) {
    ribbon::Vertex w{"x_" + v.name, {}};
    for (auto d : v.rotation) w.rotation.push_back(map(d));
    if (mirror) std::reverse(w.rotation.begin(), w.rotation.end());
    vertices.push_back(std::move(w));
  }
  std::vector<ribbon::Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({e.name, map(e.second), map(e.first)});
  std::shuffle(vertices.begin(), vertices.end(), rng);
  std::shuffle(edges.begin(), edges.end(), rng);
  return ribbon::RibbonGraph(std::move(vertices), std::move(edges));
}

}  // namespace testing
