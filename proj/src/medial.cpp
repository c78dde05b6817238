#include "ribbon/medial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ribbon/errors.hpp"
#include "ribbon/map_ops.hpp"

namespace ribbon {

MedialGraph medial(const RibbonGraph& g) {
  if (g.num_edges() == 0) throw PreconditionError("medial graph needs at least one edge");
  if (!is_connected(g)) throw PreconditionError("medial graph needs a connected graph");
  if (!is_plane(g)) throw PreconditionError("medial graph needs a plane graph");

  std::map<Dart, int> index;
  for (Dart d : g.darts()) index.emplace(d, static_cast<int>(index.size()));
  auto after = [&](Dart d) { return 2 * index.at(d) + 1; };   // corner following d, at e(d)
  auto before = [&](Dart d) { return 2 * index.at(d) + 2; };  // corner preceding d, at e(d)

  MedialGraph mg;
  mg.host_edges = g.edge_names();
  std::vector<Vertex> vertices;
  for (const auto& e : g.edges()) {
    vertices.push_back({e.name, {before(e.second), after(e.first), before(e.first), after(e.second)}});
    mg.host_edge.push_back(e.name);
  }
  std::vector<Edge> edges;
  for (Dart d : g.darts()) edges.push_back({"c" + std::to_string(d), after(d), before(g.sigma(d))});
  mg.map = RibbonGraph(std::move(vertices), std::move(edges));

  std::vector<Dart> host_dart_of(mg.map.num_darts() + 1, 0);
  for (const auto& [d, k] : index) {
    host_dart_of[static_cast<std::size_t>(after(d))] = d;
    host_dart_of[static_cast<std::size_t>(before(d))] = d;
  }
  const auto host_faces = faces(g);
  std::vector<std::size_t> host_face_of(static_cast<std::size_t>(g.max_dart()) + 1, 0);
  for (std::size_t f = 0; f < host_faces.size(); ++f) {
    for (Dart d : host_faces[f]) host_face_of[static_cast<std::size_t>(d)] = f;
  }

  mg.face_of_dart.assign(mg.map.num_darts() + 1, 0);
  std::size_t black = 0;
  for (auto& orbit : faces(mg.map)) {
    const bool is_black = orbit.front() % 2 == 1;
    for (Dart x : orbit) {
      if ((x % 2 == 1) != is_black) throw std::logic_error("medial face mixes vertex and face corners");
      mg.face_of_dart[static_cast<std::size_t>(x)] = mg.faces.size();
    }
    const Dart host = host_dart_of[static_cast<std::size_t>(orbit.front())];
    MedialFace face;
    face.colour = is_black ? FaceColour::black : FaceColour::white;
    face.source = is_black ? g.vertex_of(host) : host_face_of[static_cast<std::size_t>(g.sigma_inv(host))];
    face.darts = std::move(orbit);
    black += is_black ? 1 : 0;
    mg.faces.push_back(std::move(face));
  }

  if (!is_plane(mg.map) || black != g.num_vertices() || mg.faces.size() - black != host_faces.size()) {
    throw std::logic_error("medial construction produced an inconsistent map");
  }
  return mg;
}

AntiCircuitDecomposition anti_circuits(const MedialGraph& mg) {
  const auto& m = mg.map;
  const auto slots = static_cast<std::size_t>(m.max_dart()) + 1;
  AntiCircuitDecomposition ac;
  ac.circuit_of_dart.assign(slots, 0);
  ac.exit_dart.assign(slots, false);
  std::vector<bool> used(slots, false);
  for (Dart start : m.darts()) {
    if (used[static_cast<std::size_t>(start)]) continue;
    std::vector<Dart> exits;
    Dart out = start;
    do {
      const Dart in = m.alpha(out);
      for (Dart x : {out, in}) {
        if (used[static_cast<std::size_t>(x)]) throw std::logic_error("straight-ahead walk reuses an edge");
        used[static_cast<std::size_t>(x)] = true;
        ac.circuit_of_dart[static_cast<std::size_t>(x)] = ac.circuits.size();
      }
      ac.exit_dart[static_cast<std::size_t>(out)] = true;
      exits.push_back(out);
      out = m.sigma(m.sigma(in));
    } while (out != start);
    ac.circuits.push_back(std::move(exits));
  }
  return ac;
}

AllCrossingDirection direction_from_orientation(const MedialGraph& mg, const AntiCircuitDecomposition& ac,
                                                std::uint64_t reversed) {
  AllCrossingDirection dir;
  dir.reversed = reversed;
  dir.is_tail.assign(ac.exit_dart.size(), false);
  for (Dart d : mg.map.darts()) {
    const auto slot = static_cast<std::size_t>(d);
    const bool flip = ((reversed >> ac.circuit_of_dart[slot]) & 1U) != 0;
    dir.is_tail[slot] = ac.exit_dart[slot] != flip;
  }
  return dir;
}

std::vector<AllCrossingDirection> all_crossing_directions(const MedialGraph& mg) {
  const auto ac = anti_circuits(mg);
  if (ac.count() >= 63) throw PreconditionError("too many anti-circuits to enumerate directions");
  std::vector<AllCrossingDirection> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ac.count()); ++mask) {
    out.push_back(direction_from_orientation(mg, ac, mask));
  }
  return out;
}

bool is_all_crossing(const MedialGraph& mg, const AllCrossingDirection& dir) {
  for (const auto& e : mg.map.edges()) {
    if (dir.head(e.first) == dir.head(e.second)) return false;
  }
  for (const auto& v : mg.map.vertices()) {
    const auto& r = v.rotation;
    if (r.size() != 4) return false;
    bool found = false;
    for (std::size_t i = 0; i < 4 && !found; ++i) {
      found = dir.head(r[i]) && dir.head(r[(i + 1) % 4]) && !dir.head(r[(i + 2) % 4]) && !dir.head(r[(i + 3) % 4]);
    }
    if (!found) return false;
  }
  return true;
}

EdgeSubset CdLabelling::c_edges() const {
  std::vector<EdgeId> members;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (label[i] == CdLabel::c) members.push_back(edges[i]);
  }
  return EdgeSubset(edges, members);
}

EdgeSubset CdLabelling::d_edges() const { return c_edges().complement(); }

CdLabelling cd_labelling(const MedialGraph& mg, const AllCrossingDirection& dir) {
  CdLabelling out;
  out.edges = mg.host_edges;
  out.label.assign(out.edges.size(), CdLabel::d);
  for (std::size_t v = 0; v < mg.map.num_vertices(); ++v) {
    const auto& r = mg.map.vertices()[v].rotation;
    std::size_t i = 0;
    while (i < 4 && !(dir.head(r[i]) && dir.head(r[(i + 1) % 4]))) ++i;
    if (i == 4) throw PreconditionError("direction is not all-crossing at medial vertex " + mg.host_edge[v]);
    // The corner between r[i] and sigma(r[i]) belongs to the face of r[i].
    const auto& face = mg.faces[mg.face_of_dart[static_cast<std::size_t>(r[i])]];
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(out.edges.begin(), out.edges.end(), mg.host_edge[v]) - out.edges.begin());
    out.label[pos] = face.colour == FaceColour::black ? CdLabel::c : CdLabel::d;
  }
  return out;
}

std::set<EdgeSubset> bipartite_dual_sets(const RibbonGraph& g) {
  const auto mg = medial(g);
  std::set<EdgeSubset> out;
  for (const auto& dir : all_crossing_directions(mg)) out.insert(cd_labelling(mg, dir).c_edges());
  return out;
}

std::set<EdgeSubset> eulerian_dual_sets_from_d(const RibbonGraph& g) {
  const auto mg = medial(g);
  std::set<EdgeSubset> out;
  for (const auto& dir : all_crossing_directions(mg)) out.insert(cd_labelling(mg, dir).d_edges());
  return out;
}

}  // namespace ribbon
