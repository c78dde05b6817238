#include "ribbon/map_ops.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ribbon/errors.hpp"

namespace ribbon {

std::vector<std::vector<Dart>> faces(const RibbonGraph& g) {
  std::vector<std::vector<Dart>> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.max_dart()) + 1, false);
  for (Dart start : g.darts()) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Dart> orbit;
    Dart d = start;
    do {
      seen[static_cast<std::size_t>(d)] = true;
      orbit.push_back(d);
      d = g.phi(d);
    } while (d != start);
    out.push_back(std::move(orbit));
  }
  for (const auto& v : g.vertices()) {
    if (v.rotation.empty()) out.emplace_back();
  }
  return out;
}

std::size_t face_count(const RibbonGraph& g) { return faces(g).size(); }

Components components(const RibbonGraph& g) {
  const auto n = g.num_vertices();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) parent[find(g.vertex_of(e.first))] = find(g.vertex_of(e.second));

  Components c;
  c.of_vertex.assign(n, 0);
  std::vector<std::size_t> id(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto root = find(v);
    if (id[root] == n) id[root] = c.count++;
    c.of_vertex[v] = id[root];
  }
  return c;
}

bool is_connected(const RibbonGraph& g) { return components(g).count <= 1; }

std::vector<int> component_genus(const RibbonGraph& g) {
  const auto comp = components(g);
  std::vector<long> chi(comp.count, 0);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    ++chi[comp.of_vertex[v]];
    // An isolated vertex bounds exactly one face.
    if (g.vertices()[v].rotation.empty()) ++chi[comp.of_vertex[v]];
  }
  for (const auto& e : g.edges()) --chi[comp.of_vertex[g.vertex_of(e.first)]];
  for (const auto& f : faces(g)) {
    if (!f.empty()) ++chi[comp.of_vertex[g.vertex_of(f.front())]];
  }
  std::vector<int> genus(comp.count, 0);
  for (std::size_t c = 0; c < comp.count; ++c) {
    const long twice = 2 - chi[c];
    if (twice < 0 || twice % 2 != 0) throw InvalidMap("component with non-integral genus");
    genus[c] = static_cast<int>(twice / 2);
  }
  return genus;
}

int total_genus(const RibbonGraph& g) {
  const auto gs = component_genus(g);
  return std::accumulate(gs.begin(), gs.end(), 0);
}

bool is_plane(const RibbonGraph& g) {
  const auto gs = component_genus(g);
  return std::all_of(gs.begin(), gs.end(), [](int x) { return x == 0; });
}

namespace {

void require_host(const RibbonGraph& g, const EdgeSubset& a) {
  if (a.universe() != g.edge_names()) throw PreconditionError("edge subset " + a.to_string() + " is not over this graph");
}

RibbonGraph drop_darts(const RibbonGraph& g, const EdgeSubset& keep, bool keep_bare_vertices) {
  std::vector<Vertex> vertices;
  for (const auto& v : g.vertices()) {
    Vertex nv{v.name, {}};
    for (Dart d : v.rotation) {
      if (keep.contains(g.edges()[g.edge_of(d)].name)) nv.rotation.push_back(d);
    }
    if (keep_bare_vertices || !nv.rotation.empty()) vertices.push_back(std::move(nv));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (keep.contains(e.name)) edges.push_back(e);
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

}  // namespace

RibbonGraph restrict_to(const RibbonGraph& g, const EdgeSubset& a) {
  require_host(g, a);
  return drop_darts(g, a, false);
}

RibbonGraph delete_edges(const RibbonGraph& g, const EdgeSubset& a) {
  require_host(g, a);
  return drop_darts(g, a.complement(), true);
}

AbstractMultigraph underlying_graph(const RibbonGraph& g) {
  std::vector<std::string> names;
  names.reserve(g.num_vertices());
  for (const auto& v : g.vertices()) names.push_back(v.name);
  std::vector<MultiEdge> edges;
  edges.reserve(g.num_edges());
  for (const auto& e : g.edges()) edges.push_back({e.name, g.vertex_of(e.first), g.vertex_of(e.second)});
  return AbstractMultigraph(std::move(names), std::move(edges));
}

RibbonGraph component_subgraph(const RibbonGraph& g, std::size_t component) {
  const auto comp = components(g);
  std::vector<Vertex> vertices;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (comp.of_vertex[v] == component) vertices.push_back(g.vertices()[v]);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (comp.of_vertex[g.vertex_of(e.first)] == component) edges.push_back(e);
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

namespace {

// Breadth-first relabelling from a root dart. The code lists, for darts in
// label order, the labels of sigma(d) (or sigma^-1(d)) and alpha(d).
struct RootedCode {
  std::vector<int> code;
  std::vector<Dart> order;  // order[label] = dart
};

RootedCode rooted_code(const RibbonGraph& g, Dart root, bool reflect, std::vector<int>& label) {
  RootedCode out;
  out.order.push_back(root);
  label[static_cast<std::size_t>(root)] = 0;
  for (std::size_t i = 0; i < out.order.size(); ++i) {
    const Dart d = out.order[i];
    for (Dart next : {reflect ? g.sigma_inv(d) : g.sigma(d), g.alpha(d)}) {
      auto& l = label[static_cast<std::size_t>(next)];
      if (l < 0) {
        l = static_cast<int>(out.order.size());
        out.order.push_back(next);
      }
      out.code.push_back(l);
    }
  }
  for (Dart d : out.order) label[static_cast<std::size_t>(d)] = -1;
  return out;
}

struct ComponentCanon {
  std::vector<int> code;
  std::vector<Dart> order;
  bool reflected = false;
};

// Minimum rooted code over all roots and both orientations of the component containing `darts`.
ComponentCanon canonize(const RibbonGraph& g, const std::vector<Dart>& darts, std::vector<int>& label) {
  ComponentCanon best;
  bool have = false;
  for (Dart root : darts) {
    for (bool reflect : {false, true}) {
      auto rc = rooted_code(g, root, reflect, label);
      if (!have || rc.code < best.code) {
        best = {std::move(rc.code), std::move(rc.order), reflect};
        have = true;
      }
    }
  }
  return best;
}

struct MapCanon {
  std::vector<ComponentCanon> parts;  // components with darts, sorted by code
  std::vector<std::size_t> component_id;  // component index (in `components`) of each part
  std::size_t isolated = 0;
};

MapCanon canonize_map(const RibbonGraph& g) {
  const auto comp = components(g);
  std::vector<std::vector<Dart>> darts_of(comp.count);
  for (Dart d : g.darts()) darts_of[comp.of_vertex[g.vertex_of(d)]].push_back(d);

  std::vector<int> label(static_cast<std::size_t>(g.max_dart()) + 1, -1);
  MapCanon out;
  std::vector<std::pair<ComponentCanon, std::size_t>> parts;
  for (std::size_t c = 0; c < comp.count; ++c) {
    if (darts_of[c].empty()) {
      ++out.isolated;
      continue;
    }
    parts.emplace_back(canonize(g, darts_of[c], label), c);
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const auto& x, const auto& y) { return x.first.code < y.first.code; });
  for (auto& [canon, c] : parts) {
    out.parts.push_back(std::move(canon));
    out.component_id.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<int> canonical_key(const RibbonGraph& g) {
  const auto canon = canonize_map(g);
  std::vector<int> key;
  for (const auto& p : canon.parts) {
    key.push_back(static_cast<int>(p.code.size()));
    key.insert(key.end(), p.code.begin(), p.code.end());
  }
  key.push_back(-1);
  key.push_back(static_cast<int>(canon.isolated));
  return key;
}

std::optional<MapIsomorphism> find_map_isomorphism(const RibbonGraph& a, const RibbonGraph& b) {
  if (a.num_edges() != b.num_edges() || a.num_vertices() != b.num_vertices()) return std::nullopt;
  const auto ca = canonize_map(a);
  const auto cb = canonize_map(b);
  if (ca.isolated != cb.isolated || ca.parts.size() != cb.parts.size()) return std::nullopt;
  MapIsomorphism iso;
  iso.reflected.assign(components(a).count, false);
  for (std::size_t i = 0; i < ca.parts.size(); ++i) {
    if (ca.parts[i].code != cb.parts[i].code) return std::nullopt;
    const auto& pa = ca.parts[i];
    const auto& pb = cb.parts[i];
    for (std::size_t l = 0; l < pa.order.size(); ++l) iso.dart_map[pa.order[l]] = pb.order[l];
    iso.reflected[ca.component_id[i]] = pa.reflected != pb.reflected;
  }
  return iso;
}

bool map_isomorphic(const RibbonGraph& a, const RibbonGraph& b) {
  if (a.num_edges() != b.num_edges() || a.num_vertices() != b.num_vertices()) return false;
  return canonical_key(a) == canonical_key(b);
}

namespace {

std::string edge_letter_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "e" + std::to_string(i);
}

}  // namespace

RibbonGraph canonical_form(const RibbonGraph& g) {
  const auto canon = canonize_map(g);
  // New dart id = running label + 1 across the sorted components.
  std::map<Dart, Dart> renumber;
  Dart next = 1;
  for (const auto& p : canon.parts) {
    for (Dart d : p.order) renumber[d] = next++;
  }

  std::vector<std::vector<Dart>> rotations;
  std::vector<bool> placed(static_cast<std::size_t>(next), false);
  std::map<Dart, Dart> inverse;
  for (const auto& [old, fresh] : renumber) inverse[fresh] = old;
  std::size_t part = 0;
  Dart part_end = 0;
  bool reflect = false;
  for (Dart d = 1; d < next; ++d) {
    if (d > part_end) {
      reflect = canon.parts[part].reflected;
      part_end += static_cast<Dart>(canon.parts[part].order.size());
      ++part;
    }
    if (placed[static_cast<std::size_t>(d)]) continue;
    std::vector<Dart> rot;
    Dart x = d;
    do {
      placed[static_cast<std::size_t>(x)] = true;
      rot.push_back(x);
      const Dart old = inverse.at(x);
      x = renumber.at(reflect ? g.sigma_inv(old) : g.sigma(old));
    } while (x != d);
    rotations.push_back(std::move(rot));
  }

  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < rotations.size(); ++i) vertices.push_back({"v" + std::to_string(i), rotations[i]});
  for (std::size_t i = 0; i < canon.isolated; ++i) {
    vertices.push_back({"v" + std::to_string(rotations.size() + i), {}});
  }

  std::vector<Edge> edges;
  std::vector<bool> paired(static_cast<std::size_t>(next), false);
  for (Dart d = 1; d < next; ++d) {
    if (paired[static_cast<std::size_t>(d)]) continue;
    const Dart partner = renumber.at(g.alpha(inverse.at(d)));
    paired[static_cast<std::size_t>(d)] = paired[static_cast<std::size_t>(partner)] = true;
    edges.push_back({edge_letter_name(edges.size()), d, partner});
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

RibbonGraph disjoint_union(const RibbonGraph& a, const RibbonGraph& b) {
  std::set<std::string> vnames, enames;
  std::vector<Vertex> vertices = a.vertices();
  std::vector<Edge> edges = a.edges();
  for (const auto& v : vertices) vnames.insert(v.name);
  for (const auto& e : edges) enames.insert(e.name);
  const Dart shift = a.max_dart();
  auto fresh = [](std::set<std::string>& used, std::string name) {
    while (used.count(name)) name += "'";
    used.insert(name);
    return name;
  };
  for (const auto& v : b.vertices()) {
    Vertex nv{fresh(vnames, v.name), {}};
    for (Dart d : v.rotation) nv.rotation.push_back(d + shift);
    vertices.push_back(std::move(nv));
  }
  for (const auto& e : b.edges()) edges.push_back({fresh(enames, e.name), e.first + shift, e.second + shift});
  return RibbonGraph(std::move(vertices), std::move(edges));
}

}  // namespace ribbon
