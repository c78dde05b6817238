#include "ribbon/graph_props.hpp"

#include <algorithm>
#include <set>

#include "ribbon/duality.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/map_ops.hpp"

namespace ribbon {

std::optional<std::vector<int>> bipartition(const AbstractMultigraph& m) {
  const auto n = m.num_vertices();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : m.edges()) {
    if (e.u == e.v) return std::nullopt;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> colour(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (auto y : adj[x]) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          stack.push_back(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool is_bipartite(const AbstractMultigraph& m) { return bipartition(m).has_value(); }

bool all_components_eulerian(const AbstractMultigraph& m) {
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    if (m.degree(v) % 2 != 0) return false;
  }
  return true;
}

PdePrediction pde_criterion(const RibbonGraph& g, const EdgeSubset& a) {
  if (!is_plane(g)) throw PreconditionError("criterion only holds for plane graphs");
  if (a.universe() != g.edge_names()) throw PreconditionError("edge subset " + a.to_string() + " is not over this graph");
  const auto in_g = underlying_graph(restrict_to(g, a));
  const auto in_dual = underlying_graph(restrict_to(geometric_dual(g), a.complement()));
  PdePrediction p;
  p.bipartite = all_components_eulerian(in_g) && all_components_eulerian(in_dual);
  p.eulerian = is_bipartite(in_g) && is_bipartite(in_dual);
  return p;
}

namespace {

std::set<EdgeId> edge_name_set(const AbstractMultigraph& m) {
  std::set<EdgeId> out;
  for (const auto& e : m.edges()) out.insert(e.name);
  return out;
}

// Edges at v; a loop at v is listed twice.
std::vector<std::size_t> incidences(const AbstractMultigraph& m, std::size_t v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.edges().size(); ++i) {
    const auto& e = m.edges()[i];
    if (e.u == v) out.push_back(i);
    if (e.v == v) out.push_back(i);
  }
  return out;
}

bool is_loop_at(const MultiEdge& e, std::size_t v) { return e.u == v && e.v == v; }

// Every vertex of the subgraph formed by `edge_multiset` (indices into m) has even degree.
bool even_subgraph(const AbstractMultigraph& m, const std::vector<std::size_t>& edge_multiset) {
  std::vector<std::size_t> deg(m.num_vertices(), 0);
  for (auto i : edge_multiset) {
    ++deg[m.edges()[i].u];
    ++deg[m.edges()[i].v];
  }
  return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d % 2 == 0; });
}

bool local_condition(const AbstractMultigraph& g, const AbstractMultigraph& h,
                     const std::map<EdgeId, EdgeId>& phi) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    std::vector<std::size_t> image;
    for (auto i : incidences(g, v)) image.push_back(h.edge_index(phi.at(g.edges()[i].name)));
    if (!even_subgraph(h, image)) return false;
  }
  return true;
}

}  // namespace

EdgeBijection::EdgeBijection(const AbstractMultigraph& g, const AbstractMultigraph& h,
                             std::map<EdgeId, EdgeId> forward)
    : forward_(std::move(forward)) {
  const auto dom = edge_name_set(g);
  const auto cod = edge_name_set(h);
  if (dom.size() != g.num_edges() || cod.size() != h.num_edges()) {
    throw PreconditionError("edge names must be distinct for a bijection");
  }
  std::set<EdgeId> keys;
  for (const auto& [e, f] : forward_) {
    keys.insert(e);
    if (!cod.contains(f)) throw PreconditionError("bijection maps " + e + " outside the target edges");
    if (!backward_.emplace(f, e).second) throw PreconditionError("bijection is not injective at " + f);
  }
  if (keys != dom || backward_.size() != cod.size()) throw PreconditionError("bijection is not onto the edge sets");
}

EdgeBijection EdgeBijection::natural(const AbstractMultigraph& g, const AbstractMultigraph& h) {
  std::map<EdgeId, EdgeId> forward;
  for (const auto& e : g.edges()) forward.emplace(e.name, e.name);
  return EdgeBijection(g, h, std::move(forward));
}

EdgeBijection EdgeBijection::inverted() const {
  EdgeBijection out;
  out.forward_ = backward_;
  out.backward_ = forward_;
  return out;
}

EdgeBijection EdgeBijection::restricted(const std::vector<EdgeId>& domain) const {
  EdgeBijection out;
  for (const auto& e : domain) {
    const auto& f = forward_.at(e);
    out.forward_.emplace(e, f);
    out.backward_.emplace(f, e);
  }
  return out;
}

bool edmonds_check(const AbstractMultigraph& g, const AbstractMultigraph& h, const EdgeBijection& phi,
                   bool require_equal_isolated) {
  // Re-validate against these particular graphs.
  EdgeBijection checked(g, h, phi.forward());
  if (require_equal_isolated && g.num_isolated() != h.num_isolated()) return false;

  const auto comp_g = g.component_of_vertex();
  const auto comp_h = h.component_of_vertex();
  std::map<std::size_t, std::size_t> g_to_h;
  std::map<std::size_t, std::size_t> h_to_g;
  for (const auto& e : g.edges()) {
    const auto cg = comp_g[e.u];
    const auto ch = comp_h[h.edges()[h.edge_index(checked(e.name))].u];
    if (g_to_h.emplace(cg, ch).first->second != ch) return false;
    if (h_to_g.emplace(ch, cg).first->second != cg) return false;
  }

  return local_condition(g, h, checked.forward()) && local_condition(h, g, checked.inverted().forward());
}

bool partial_dual_bijection_check(const AbstractMultigraph& g, const AbstractMultigraph& h, const EdgeBijection& phi,
                                  const std::vector<EdgeId>& a) {
  EdgeBijection checked(g, h, phi.forward());
  const std::set<EdgeId> in_a(a.begin(), a.end());
  for (const auto& e : in_a) {
    if (!g.find_edge(e)) throw PreconditionError("edge " + e + " is not in the graph");
  }

  std::vector<EdgeId> image_a;
  for (const auto& e : in_a) image_a.push_back(checked(e));
  const auto g_a = g.edge_induced({in_a.begin(), in_a.end()});
  const auto h_a = h.edge_induced(image_a);
  if (!edmonds_check(g_a, h_a, checked.restricted({in_a.begin(), in_a.end()}), true)) return false;

  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto at_v = incidences(g, v);
    std::set<std::size_t> a_ends;  // vertices of h spanned by phi(A)_v
    for (auto i : at_v) {
      const auto& e = g.edges()[i];
      if (!in_a.contains(e.name)) continue;
      const auto& f = h.edges()[h.edge_index(checked(e.name))];
      a_ends.insert(f.u);
      a_ends.insert(f.v);
    }

    if (!a_ends.empty()) {
      for (auto i : at_v) {
        const auto& e = g.edges()[i];
        const auto& f = h.edges()[h.edge_index(checked(e.name))];
        const bool u_in = a_ends.contains(f.u);
        const bool v_in = a_ends.contains(f.v);
        if (!u_in && !v_in) return false;
        if (is_loop_at(e, v) && !(u_in && v_in)) return false;
      }
      continue;
    }

    std::set<EdgeId> here;
    std::set<EdgeId> loops_here;
    for (auto i : at_v) {
      const auto& e = g.edges()[i];
      here.insert(checked(e.name));
      if (is_loop_at(e, v)) loops_here.insert(checked(e.name));
    }
    bool found = false;
    for (std::size_t w = 0; w < h.num_vertices() && !found; ++w) {
      std::set<EdgeId> there;
      std::set<EdgeId> loops_there;
      for (auto j : incidences(h, w)) {
        const auto& f = h.edges()[j];
        there.insert(f.name);
        if (is_loop_at(f, w)) loops_there.insert(f.name);
      }
      found = here == there && loops_here == loops_there;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace ribbon
