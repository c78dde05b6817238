#include "ribbon/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ribbon/errors.hpp"

namespace ribbon {

AbstractMultigraph::AbstractMultigraph(std::vector<std::string> vertex_names, std::vector<MultiEdge> edges)
    : vertex_names_(std::move(vertex_names)), edges_(std::move(edges)) {
  std::set<std::string> seen;
  for (const auto& e : edges_) {
    if (e.u >= vertex_names_.size() || e.v >= vertex_names_.size()) {
      throw InvalidMap("edge " + e.name + " has an endpoint outside the vertex set");
    }
    if (!seen.insert(e.name).second) throw InvalidMap("duplicate edge name " + e.name);
  }
}

std::size_t AbstractMultigraph::degree(std::size_t v) const {
  std::size_t deg = 0;
  for (const auto& e : edges_) {
    if (e.u == v) ++deg;
    if (e.v == v) ++deg;
  }
  return deg;
}

std::size_t AbstractMultigraph::num_loops(std::size_t v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const MultiEdge& e) { return e.u == v && e.v == v; }));
}

std::size_t AbstractMultigraph::num_isolated() const {
  std::vector<bool> touched(vertex_names_.size(), false);
  for (const auto& e : edges_) touched[e.u] = touched[e.v] = true;
  return static_cast<std::size_t>(std::count(touched.begin(), touched.end(), false));
}

std::optional<std::size_t> AbstractMultigraph::find_edge(std::string_view name) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t AbstractMultigraph::edge_index(std::string_view name) const {
  if (auto i = find_edge(name)) return *i;
  throw PreconditionError("unknown edge " + std::string(name));
}

std::vector<std::size_t> AbstractMultigraph::component_of_vertex() const {
  const auto n = vertex_names_.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges_) parent[find(e.u)] = find(e.v);

  std::vector<std::size_t> id(n, n);
  std::vector<std::size_t> out(n);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto root = find(v);
    if (id[root] == n) id[root] = next++;
    out[v] = id[root];
  }
  return out;
}

AbstractMultigraph AbstractMultigraph::edge_induced(const std::vector<EdgeId>& edge_names) const {
  std::vector<std::size_t> new_index(vertex_names_.size(), vertex_names_.size());
  std::vector<std::string> names;
  std::vector<MultiEdge> kept;
  auto map_vertex = [&](std::size_t v) {
    if (new_index[v] == vertex_names_.size()) {
      new_index[v] = names.size();
      names.push_back(vertex_names_[v]);
    }
    return new_index[v];
  };
  for (const auto& name : edge_names) {
    const auto& e = edges_[edge_index(name)];
    const auto u = map_vertex(e.u);
    const auto v = map_vertex(e.v);
    kept.push_back({e.name, u, v});
  }
  return AbstractMultigraph(std::move(names), std::move(kept));
}

namespace {

struct Adjacency {
  std::size_t n = 0;
  std::vector<std::size_t> mult;  // n*n, off-diagonal multiplicities
  std::vector<std::size_t> loops;

  explicit Adjacency(const AbstractMultigraph& g) : n(g.num_vertices()), mult(n * n, 0), loops(n, 0) {
    for (const auto& e : g.edges()) {
      if (e.u == e.v) {
        ++loops[e.u];
      } else {
        ++mult[e.u * n + e.v];
        ++mult[e.v * n + e.u];
      }
    }
  }
  std::size_t at(std::size_t u, std::size_t v) const { return mult[u * n + v]; }
};

// Colour refinement run on both graphs with a shared palette, so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine(const Adjacency& a, const Adjacency& b) {
  using Signature = std::pair<int, std::vector<std::pair<int, std::size_t>>>;
  std::vector<int> ca(a.n), cb(b.n);
  {
    std::map<std::pair<std::size_t, std::size_t>, int> palette;
    auto initial = [&](const Adjacency& g, std::size_t v) {
      std::size_t deg = 2 * g.loops[v];
      for (std::size_t u = 0; u < g.n; ++u) deg += g.at(v, u);
      return palette.try_emplace({deg, g.loops[v]}, static_cast<int>(palette.size())).first->second;
    };
    for (std::size_t v = 0; v < a.n; ++v) ca[v] = initial(a, v);
    for (std::size_t v = 0; v < b.n; ++v) cb[v] = initial(b, v);
  }
  for (std::size_t round = 0; round < a.n + 1; ++round) {
    std::map<Signature, int> palette;
    auto signature = [](const Adjacency& g, const std::vector<int>& col, std::size_t v) {
      Signature s{col[v], {}};
      for (std::size_t u = 0; u < g.n; ++u) {
        if (u != v && g.at(v, u) > 0) s.second.emplace_back(col[u], g.at(v, u));
      }
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::vector<Signature> sa(a.n), sb(b.n);
    for (std::size_t v = 0; v < a.n; ++v) sa[v] = signature(a, ca, v);
    for (std::size_t v = 0; v < b.n; ++v) sb[v] = signature(b, cb, v);
    for (const auto& s : sa) palette.try_emplace(s, 0);
    for (const auto& s : sb) palette.try_emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : palette) id = next++;
    std::vector<int> na(a.n), nb(b.n);
    for (std::size_t v = 0; v < a.n; ++v) na[v] = palette.at(sa[v]);
    for (std::size_t v = 0; v < b.n; ++v) nb[v] = palette.at(sb[v]);
    const bool stable = std::set<int>(na.begin(), na.end()).size() == std::set<int>(ca.begin(), ca.end()).size() &&
                        std::set<int>(nb.begin(), nb.end()).size() == std::set<int>(cb.begin(), cb.end()).size();
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }
  return {ca, cb};
}

bool extend(const Adjacency& a, const Adjacency& b, const std::vector<int>& ca, const std::vector<int>& cb,
            const std::vector<std::size_t>& order, std::size_t depth, std::vector<std::size_t>& image,
            std::vector<bool>& used) {
  if (depth == order.size()) return true;
  const auto v = order[depth];
  for (std::size_t w = 0; w < b.n; ++w) {
    if (used[w] || ca[v] != cb[w] || a.loops[v] != b.loops[w]) continue;
    bool consistent = true;
    for (std::size_t i = 0; i < depth && consistent; ++i) {
      const auto u = order[i];
      consistent = a.at(v, u) == b.at(w, image[u]);
    }
    if (!consistent) continue;
    image[v] = w;
    used[w] = true;
    if (extend(a, b, ca, cb, order, depth + 1, image, used)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool multigraph_isomorphic(const AbstractMultigraph& a, const AbstractMultigraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const Adjacency adj_a(a), adj_b(b);
  auto [ca, cb] = refine(adj_a, adj_b);
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  // Smallest colour classes first, then by connectivity to already placed vertices.
  std::map<int, std::size_t> class_size;
  for (int c : ca) ++class_size[c];
  std::vector<std::size_t> order(a.num_vertices());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return class_size[ca[x]] < class_size[ca[y]]; });

  std::vector<std::size_t> image(a.num_vertices(), 0);
  std::vector<bool> used(b.num_vertices(), false);
  return extend(adj_a, adj_b, ca, cb, order, 0, image, used);
}

}  // namespace ribbon
