#include "ribbon/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ribbon/duality.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/graph_props.hpp"
#include "ribbon/map_ops.hpp"
#include "ribbon/medial.hpp"
#include "ribbon/overlay.hpp"
#include "ribbon/rg_format.hpp"

namespace ribbon {

bool VerificationReport::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

std::size_t VerificationReport::total_cases() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.cases;
  return n;
}

const SuiteResult* VerificationReport::find(const std::string& name) const {
  for (const auto& s : suites) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& s : suites) {
    out << (s.passed ? "PASS " : "FAIL ") << s.name << ": cases " << s.cases << ", failures " << s.failures
        << ", rejected " << s.rejected << ", " << std::fixed << std::setprecision(3) << s.seconds << " s\n";
    for (const auto& [k, v] : s.info) out << "  " << k << ": " << v << "\n";
    for (const auto& c : s.counterexamples) {
      out << "  counterexample" << (c.edges.empty() ? "" : " A=" + c.edges) << ": " << c.detail << "\n";
      std::istringstream lines(c.graph);
      for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
    }
  }
  out << (ok() ? "all suites passed" : "verification FAILED") << " (" << total_cases() << " cases)\n";
  return out.str();
}

namespace {

class Recorder {
 public:
  Recorder(SuiteResult& r, const VerifyOptions& o) : r_(r), o_(o) {}

  void check(bool ok, const RibbonGraph& g, const std::string& edges, const std::string& detail) {
    ++r_.cases;
    if (ok) return;
    ++r_.failures;
    r_.passed = false;
    dump(g, edges, detail);
  }

  void reject(const RibbonGraph& g, const std::string& why) {
    ++r_.rejected;
    dump(g, "", "precondition: " + why);
  }

 private:
  void dump(const RibbonGraph& g, const std::string& edges, const std::string& detail) {
    if (r_.counterexamples.size() < o_.max_counterexamples) r_.counterexamples.push_back({serialize_rg(g), edges, detail});
  }

  SuiteResult& r_;
  const VerifyOptions& o_;
};

bool usable_plane(const RibbonGraph& g, Recorder& rec, bool need_connected) {
  if (!is_plane(g)) {
    rec.reject(g, "map is not plane");
    return false;
  }
  if (need_connected && (!is_connected(g) || g.num_edges() == 0)) {
    rec.reject(g, "map is not connected or has no edges");
    return false;
  }
  return true;
}

bool brute_bipartite(const RibbonGraph& g, const EdgeSubset& a) {
  return is_bipartite(underlying_graph(partial_dual(g, a)));
}

void algebra_suite(const std::vector<RibbonGraph>& maps, Recorder& rec) {
  for (const auto& g : maps) {
    const auto subsets = EdgeSubset::all_subsets(g);
    std::vector<RibbonGraph> pd;
    std::map<EdgeSubset, std::vector<int>> key;
    for (const auto& a : subsets) {
      pd.push_back(partial_dual(g, a));
      key.emplace(a, canonical_key(pd.back()));
    }
    rec.check(map_isomorphic(pd.front(), g), g, "{}", "G^{} is not G");
    rec.check(map_isomorphic(pd.back(), geometric_dual(g)), g, subsets.back().to_string(), "G^E is not G*");
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      for (const auto& b : subsets) {
        const bool ok = canonical_key(partial_dual(pd[i], b)) == key.at(subsets[i] ^ b);
        rec.check(ok, g, subsets[i].to_string(), "(G^A)^B differs from G^(A^B) for B=" + b.to_string());
      }
    }
  }
}

void criterion_suite(const std::vector<RibbonGraph>& maps, Recorder& rec) {
  for (const auto& g : maps) {
    if (!usable_plane(g, rec, false)) continue;
    for (const auto& a : EdgeSubset::all_subsets(g)) {
      const auto u = underlying_graph(partial_dual(g, a));
      const auto p = pde_criterion(g, a);
      rec.check(p.bipartite == is_bipartite(u), g, a.to_string(), "bipartite clause disagrees");
      rec.check(p.eulerian == all_components_eulerian(u), g, a.to_string(), "even-degree clause disagrees");
    }
  }
}

void medial_suite(const std::vector<RibbonGraph>& maps, Recorder& rec) {
  for (const auto& g : maps) {
    if (!usable_plane(g, rec, true)) continue;
    std::set<EdgeSubset> brute;
    for (const auto& a : EdgeSubset::all_subsets(g)) {
      if (brute_bipartite(g, a)) brute.insert(a);
    }
    rec.check(bipartite_dual_sets(g) == brute, g, "", "c-sets differ from the bipartite partial duals");
  }
}

void direction_suite(const std::vector<RibbonGraph>& maps, Recorder& rec) {
  for (const auto& g : maps) {
    if (!usable_plane(g, rec, true)) continue;
    const auto mg = medial(g);
    const auto c = anti_circuits(mg).count();
    const auto dirs = all_crossing_directions(mg);
    rec.check(dirs.size() == (std::size_t{1} << c), g, "", "direction count is not 2^c");
    std::set<EdgeSubset> csets;
    const std::uint64_t all = (std::uint64_t{1} << c) - 1;
    for (const auto& d : dirs) {
      rec.check(is_all_crossing(mg, d), g, "", "direction " + std::to_string(d.reversed) + " is not all-crossing");
      const auto cs = cd_labelling(mg, d).c_edges();
      csets.insert(cs);
      const auto flipped = cd_labelling(mg, direction_from_orientation(mg, anti_circuits(mg), d.reversed ^ all));
      rec.check(flipped.c_edges() == cs, g, cs.to_string(), "reversing every circuit changed the labelling");
    }
    rec.check(csets.size() <= (std::size_t{1} << (c - 1)), g, "", "more than 2^(c-1) distinct c-sets");
  }
}

void region_suite(const std::vector<RibbonGraph>& maps, Recorder& rec) {
  for (const auto& g : maps) {
    if (!usable_plane(g, rec, true)) continue;
    for (const auto& a : EdgeSubset::all_subsets(g)) {
      const bool ok = multigraph_isomorphic(newpds(g, a), underlying_graph(partial_dual(g, a)));
      rec.check(ok, g, a.to_string(), "region dual is not the underlying graph of G^A");
    }
  }
}

void dset_suite(const std::vector<RibbonGraph>& maps, Recorder& rec, SuiteResult& r) {
  for (const auto& g : maps) {
    if (!usable_plane(g, rec, true)) continue;
    const auto dsets = eulerian_dual_sets_from_d(g);
    for (const auto& a : dsets) {
      rec.check(all_components_eulerian(underlying_graph(partial_dual(g, a))), g, a.to_string(),
                "d-set gives a partial dual with an odd vertex");
    }
    for (const auto& a : EdgeSubset::all_subsets(g)) {
      if (dsets.contains(a) || !all_components_eulerian(underlying_graph(partial_dual(g, a)))) continue;
      if (r.witnesses++ == 0) {
        r.info.emplace_back("first non-converse witness", a.to_string() + " on " + std::to_string(g.num_edges()) + " edges");
      }
    }
  }
  r.info.emplace_back("non-converse witnesses", std::to_string(r.witnesses));
}

// Edge sets of all cycles: connected, every vertex of degree 2 (a loop is a cycle).
std::vector<std::vector<EdgeId>> cycles_of(const AbstractMultigraph& m) {
  std::vector<std::vector<EdgeId>> out;
  const auto k = m.num_edges();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<EdgeId> names;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) names.push_back(m.edges()[i].name);
    }
    const auto sub = m.edge_induced(names);
    bool ok = true;
    for (std::size_t v = 0; v < sub.num_vertices() && ok; ++v) ok = sub.degree(v) == 2;
    const auto comp = sub.component_of_vertex();
    ok = ok && std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
    if (ok) out.push_back(std::move(names));
  }
  return out;
}

void even_restrictions_suite(const std::vector<RibbonGraph>& maps, Recorder& rec) {
  for (const auto& g : maps) {
    if (!usable_plane(g, rec, true)) continue;
    const auto mg = medial(g);
    const auto dual = geometric_dual(g);
    const auto cycles = cycles_of(underlying_graph(g));
    for (const auto& d : all_crossing_directions(mg)) {
      const auto cs = cd_labelling(mg, d).c_edges();
      rec.check(all_components_eulerian(underlying_graph(restrict_to(g, cs))), g, cs.to_string(),
                "G restricted to the c-edges has an odd vertex");
      rec.check(all_components_eulerian(underlying_graph(restrict_to(dual, cs.complement()))), g, cs.to_string(),
                "G* restricted to the d-edges has an odd vertex");
      for (const auto& cyc : cycles) {
        std::size_t dcount = 0;
        for (const auto& e : cyc) dcount += cs.contains(e) ? 0 : 1;
        rec.check(dcount % 2 == 0, g, cs.to_string(), "a cycle carries an odd number of d-edges");
      }
    }
  }
}

void natural_bijection_suite(const std::vector<RibbonGraph>& maps, Recorder& rec) {
  for (const auto& g : maps) {
    const auto ug = underlying_graph(g);
    for (const auto& a : EdgeSubset::all_subsets(g)) {
      const auto uh = underlying_graph(partial_dual(g, a));
      const bool ok = partial_dual_bijection_check(ug, uh, EdgeBijection::natural(ug, uh), a.members());
      rec.check(ok, g, a.to_string(), "natural bijection rejected");
    }
  }
}

// Incidence signature of a vertex: edge name -> number of its ends there.
using Signature = std::map<EdgeId, int>;

std::multiset<Signature> signatures(const AbstractMultigraph& m) {
  std::vector<Signature> sig(m.num_vertices());
  for (const auto& e : m.edges()) {
    ++sig[e.u][e.name];
    ++sig[e.v][e.name];
  }
  return {sig.begin(), sig.end()};
}

// Every rotation system on the abstract graph, as ribbon graphs with the same edge names.
void for_each_embedding(const AbstractMultigraph& m, const std::function<void(const RibbonGraph&)>& visit) {
  std::vector<std::vector<Dart>> at(m.num_vertices());
  std::vector<Edge> edges;
  Dart next = 1;
  for (const auto& e : m.edges()) {
    edges.push_back({e.name, next, next + 1});
    at[e.u].push_back(next);
    at[e.v].push_back(next + 1);
    next += 2;
  }
  for (auto& r : at) std::sort(r.begin(), r.end());
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == at.size()) {
      std::vector<Vertex> vertices;
      for (std::size_t i = 0; i < at.size(); ++i) vertices.push_back({m.vertex_names()[i], at[i]});
      visit(RibbonGraph(std::move(vertices), edges));
      return;
    }
    auto& r = at[v];
    if (r.size() <= 2) {
      rec(v + 1);
      return;
    }
    // Fix the first dart; permute the rest.
    std::sort(r.begin() + 1, r.end());
    do {
      rec(v + 1);
    } while (std::next_permutation(r.begin() + 1, r.end()));
  };
  rec(0);
}

// The partial duals G~^A over all orientable embeddings G~ of the abstract
// graph, up to vertex renaming.
std::set<std::multiset<Signature>> realizable_duals(const AbstractMultigraph& g, const std::vector<EdgeId>& a) {
  std::set<std::multiset<Signature>> out;
  for_each_embedding(g, [&](const RibbonGraph& emb) {
    out.insert(signatures(underlying_graph(partial_dual(emb, EdgeSubset(emb.edge_names(), a)))));
  });
  return out;
}

// phi is realizable if some embedding G~ has an isomorphism from underlying(G~^A) to h with edge map phi.
bool realizable(const std::set<std::multiset<Signature>>& duals, const AbstractMultigraph& h,
                const std::map<EdgeId, EdgeId>& phi) {
  const auto target = signatures(h);
  for (const auto& sigs : duals) {
    std::multiset<Signature> mapped;
    for (const auto& s : sigs) {
      Signature t;
      for (const auto& [e, k] : s) t[phi.at(e)] = k;
      mapped.insert(std::move(t));
    }
    if (mapped == target) return true;
  }
  return false;
}

// Draws random transpositions of the natural bijection. A mutation counts as
// corrupted when no orientable embedding of G realizes it; realizable ones
// are tallied separately and are expected to be accepted.
void mutation_suite(const std::vector<RibbonGraph>& maps, SuiteResult& r, const VerifyOptions& o) {
  std::vector<std::pair<std::size_t, EdgeSubset>> pool;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].num_edges() < 2) continue;
    for (const auto& a : EdgeSubset::all_subsets(maps[i])) pool.emplace_back(i, a);
  }
  std::map<std::pair<std::size_t, std::string>, std::set<std::multiset<Signature>>> cache;
  std::size_t rejected = 0;
  std::size_t realizable_draws = 0;
  std::size_t realizable_rejected = 0;
  std::size_t draws = 0;
  std::mt19937_64 rng(o.seed);
  const std::size_t max_draws = 100 * o.mutations + 100;
  while (r.cases < o.mutations && !pool.empty() && draws < max_draws) {
    ++draws;
    const auto& [gi, a] = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const auto& g = maps[gi];
    const auto ug = underlying_graph(g);
    const auto uh = underlying_graph(partial_dual(g, a));
    const auto k = ug.num_edges();
    const auto i = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
    auto j = std::uniform_int_distribution<std::size_t>(0, k - 2)(rng);
    if (j >= i) ++j;
    auto forward = EdgeBijection::natural(ug, uh).forward();
    std::swap(forward.at(ug.edges()[i].name), forward.at(ug.edges()[j].name));
    const bool accepted = partial_dual_bijection_check(ug, uh, EdgeBijection(ug, uh, forward), a.members());

    auto& duals = cache[{gi, a.to_string()}];
    if (duals.empty()) duals = realizable_duals(ug, a.members());
    if (realizable(duals, uh, forward)) {
      ++realizable_draws;
      realizable_rejected += accepted ? 0 : 1;
      continue;
    }
    ++r.cases;
    if (!accepted) {
      ++rejected;
    } else if (r.counterexamples.size() < o.max_counterexamples) {
      r.counterexamples.push_back({serialize_rg(g), a.to_string(),
                                   "accepted corrupted swap of " + ug.edges()[i].name + " and " + ug.edges()[j].name});
    }
  }
  r.failures = r.cases - rejected;
  const double rate = r.cases == 0 ? 1.0 : static_cast<double>(rejected) / static_cast<double>(r.cases);
  r.passed = rate >= o.mutation_threshold && (pool.empty() || r.cases == o.mutations);
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << rate;
  r.info.emplace_back("rejection rate", s.str() + " (" + std::to_string(rejected) + "/" + std::to_string(r.cases) + ")");
  r.info.emplace_back("seed", std::to_string(o.seed));
  r.info.emplace_back("realizable swaps skipped",
                      std::to_string(realizable_draws) + " (" + std::to_string(realizable_rejected) + " of them rejected)");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "partial-dual-algebra", "bipartite-criterion", "medial-characterization",
      "direction-count",      "region-dual",         "d-set-eulerian",
      "even-restrictions",    "bijection-natural",   "bijection-mutation",
  };
  return names;
}

SuiteResult run_suite(const std::string& name, const std::vector<RibbonGraph>& maps, const VerifyOptions& options) {
  SuiteResult r;
  r.name = name;
  Recorder rec(r, options);
  const auto start = std::chrono::steady_clock::now();
  if (name == "partial-dual-algebra") {
    algebra_suite(maps, rec);
  } else if (name == "bipartite-criterion") {
    criterion_suite(maps, rec);
  } else if (name == "medial-characterization") {
    medial_suite(maps, rec);
  } else if (name == "direction-count") {
    direction_suite(maps, rec);
  } else if (name == "region-dual") {
    region_suite(maps, rec);
  } else if (name == "d-set-eulerian") {
    dset_suite(maps, rec, r);
  } else if (name == "even-restrictions") {
    even_restrictions_suite(maps, rec);
  } else if (name == "bijection-natural") {
    natural_bijection_suite(maps, rec);
  } else if (name == "bijection-mutation") {
    mutation_suite(maps, r, options);
  } else {
    throw PreconditionError("unknown suite " + name);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerificationReport verify(const Corpus& corpus, const VerifyOptions& options) {
  VerificationReport report;
  if (corpus.maps.empty()) return report;
  for (const auto& name : suite_names()) report.suites.push_back(run_suite(name, corpus.maps, options));
  return report;
}

}  // namespace ribbon
