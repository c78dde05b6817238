#pragma once

// Face and genus counts from corners glued along edge sides, without the
// face permutation. Used to cross-check faces() and component_genus().

#include <map>
#include <numeric>
#include <vector>

#include "ribbon/ribbon_graph.hpp"

namespace oracle {

struct WalkCounts {
  std::size_t faces = 0;
  std::size_t components = 0;
  int euler_sum = 0;  // sum over components of V - E + F
};

inline WalkCounts boundary_walk(const ribbon::RibbonGraph& g) {
  // corner id: (vertex, i) is the corner following rotation[i]; a bare vertex has one corner.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto k = g.vertices()[v].rotation.size();
    for (std::size_t i = 0; i < (k == 0 ? 1 : k); ++i) id.emplace(std::pair{v, i}, id.size());
  }
  std::vector<std::size_t> parent(id.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<ribbon::Dart, std::pair<std::size_t, std::size_t>> where;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto& r = g.vertices()[v].rotation;
    for (std::size_t i = 0; i < r.size(); ++i) where[r[i]] = {v, i};
  }
  auto after = [&](ribbon::Dart d) { return id.at(where.at(d)); };
  auto before = [&](ribbon::Dart d) {
    const auto [v, i] = where.at(d);
    const auto k = g.vertices()[v].rotation.size();
    return id.at({v, (i + k - 1) % k});
  };
  for (const auto& e : g.edges()) {
    parent[find(after(e.first))] = find(before(e.second));
    parent[find(after(e.second))] = find(before(e.first));
  }
  WalkCounts out;
  for (std::size_t c = 0; c < parent.size(); ++c) out.faces += find(c) == c ? 1 : 0;

  // Components by a separate union-find over vertices.
  std::vector<std::size_t> vp(g.num_vertices());
  std::iota(vp.begin(), vp.end(), std::size_t{0});
  auto vfind = [&](std::size_t x) {
    while (vp[x] != x) x = vp[x] = vp[vp[x]];
    return x;
  };
  for (const auto& e : g.edges()) vp[vfind(where.at(e.first).first)] = vfind(where.at(e.second).first);
  for (std::size_t v = 0; v < vp.size(); ++v) out.components += vfind(v) == v ? 1 : 0;
  out.euler_sum = static_cast<int>(g.num_vertices()) - static_cast<int>(g.num_edges()) + static_cast<int>(out.faces);
  return out;
}

/// Total genus from the corner count: sum of (2 - chi) / 2 over components.
inline int boundary_walk_genus(const ribbon::RibbonGraph& g) {
  const auto w = boundary_walk(g);
  return (2 * static_cast<int>(w.components) - w.euler_sum) / 2;
}

}  // namespace oracle
