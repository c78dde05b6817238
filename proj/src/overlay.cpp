#include "ribbon/overlay.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ribbon/errors.hpp"
#include "ribbon/map_ops.hpp"
#include "ribbon/rg_format.hpp"

namespace ribbon {

namespace {

// Four overlay darts per host dart z (with index i in sorted order):
//   4i+1  primal half of e(z), at the host vertex of z
//   4i+2  primal half of e(z), at the crossing
//   4i+3  dual half entering the face right of z, at the crossing
//   4i+4  dual half entering the face right of z, at the dual vertex
struct DartPlan {
  std::map<Dart, int> index;
  Dart at_vertex(Dart z) const { return 4 * index.at(z) + 1; }
  Dart primal_at_crossing(Dart z) const { return 4 * index.at(z) + 2; }
  Dart dual_at_crossing(Dart z) const { return 4 * index.at(z) + 3; }
  Dart at_face(Dart z) const { return 4 * index.at(z) + 4; }
};

}  // namespace

OverlayMap overlay(const RibbonGraph& g) {
  if (g.num_edges() == 0) throw PreconditionError("overlay needs at least one edge");
  if (!is_connected(g)) throw PreconditionError("overlay needs a connected graph");
  if (!is_plane(g)) throw PreconditionError("overlay needs a plane graph");

  DartPlan plan;
  for (Dart z : g.darts()) plan.index.emplace(z, static_cast<int>(plan.index.size()));

  OverlayMap om;
  om.host_edges = g.edge_names();
  om.host_vertices = g.num_vertices();

  std::vector<Vertex> vertices;
  for (const auto& v : g.vertices()) {
    Vertex pv{"P." + v.name, {}};
    for (Dart z : v.rotation) pv.rotation.push_back(plan.at_vertex(z));
    vertices.push_back(std::move(pv));
    om.vertex_kind.push_back({OverlayVertexKind::primal, v.name});
  }

  const auto host_faces = faces(g);
  for (std::size_t k = 0; k < host_faces.size(); ++k) {
    const auto& orbit = host_faces[k];
    // The face walk runs clockwise around the face; the dual vertex reads it backwards.
    Vertex fv{"F." + std::to_string(k), {}};
    for (auto it = orbit.rbegin(); it != orbit.rend(); ++it) fv.rotation.push_back(plan.at_face(g.sigma(*it)));
    vertices.push_back(std::move(fv));
    om.vertex_kind.push_back({OverlayVertexKind::dual, std::to_string(k)});
  }
  om.host_faces = host_faces.size();

  for (const auto& e : g.edges()) {
    vertices.push_back({"X." + e.name,
                        {plan.primal_at_crossing(e.first), plan.dual_at_crossing(e.first),
                         plan.primal_at_crossing(e.second), plan.dual_at_crossing(e.second)}});
    om.vertex_kind.push_back({OverlayVertexKind::crossing, e.name});
  }

  std::vector<Edge> edges;
  for (Dart z : g.darts()) {
    const auto& name = g.edges()[g.edge_of(z)].name;
    edges.push_back({name + "/p/" + std::to_string(z), plan.at_vertex(z), plan.primal_at_crossing(z)});
    om.segment_kind.push_back({name, false, z});
    edges.push_back({name + "/d/" + std::to_string(z), plan.dual_at_crossing(z), plan.at_face(z)});
    om.segment_kind.push_back({name, true, z});
  }

  om.map = RibbonGraph(std::move(vertices), std::move(edges));

  const auto m = g.num_edges();
  if (!is_plane(om.map) || !is_connected(om.map) || face_count(om.map) != 2 * m) {
    throw std::logic_error("overlay construction produced a non-spherical map");
  }
  return om;
}

std::string serialize_overlay(const OverlayMap& om) {
  std::ostringstream out;
  for (std::size_t v = 0; v < om.vertex_kind.size(); ++v) {
    const auto& info = om.vertex_kind[v];
    const char* kind = info.kind == OverlayVertexKind::primal ? "primal"
                       : info.kind == OverlayVertexKind::dual ? "dual"
                                                               : "crossing";
    out << "# " << om.map.vertices()[v].name << " " << kind << " " << info.source << "\n";
  }
  out << serialize_rg(om.map);
  return out.str();
}

RegionDualResult region_dual(const OverlayMap& om, const EdgeSubset& deleted_primal, const EdgeSubset& deleted_dual) {
  if (deleted_primal.universe() != om.host_edges || deleted_dual.universe() != om.host_edges) {
    throw PreconditionError("deleted edge sets are not over the overlay's host graph");
  }
  const auto& map = om.map;
  const auto overlay_faces = faces(map);
  std::vector<std::size_t> face_of(static_cast<std::size_t>(map.max_dart()) + 1, 0);
  for (std::size_t f = 0; f < overlay_faces.size(); ++f) {
    for (Dart d : overlay_faces[f]) face_of[static_cast<std::size_t>(d)] = f;
  }

  std::vector<std::size_t> parent(overlay_faces.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto deleted = [&](const OverlaySegmentInfo& s) {
    return s.dual ? deleted_dual.contains(s.edge) : deleted_primal.contains(s.edge);
  };
  for (std::size_t s = 0; s < map.num_edges(); ++s) {
    if (!deleted(om.segment_kind[s])) continue;
    const auto& seg = map.edges()[s];
    parent[find(face_of[static_cast<std::size_t>(seg.first)])] = find(face_of[static_cast<std::size_t>(seg.second)]);
  }

  RegionDualResult result;
  std::vector<std::size_t> region_id(overlay_faces.size(), overlay_faces.size());
  std::size_t regions = 0;
  result.region_of_face.resize(overlay_faces.size());
  for (std::size_t f = 0; f < overlay_faces.size(); ++f) {
    const auto root = find(f);
    if (region_id[root] == overlay_faces.size()) region_id[root] = regions++;
    result.region_of_face[f] = region_id[root];
  }
  auto region_of_dart = [&](Dart d) { return result.region_of_face[face_of[static_cast<std::size_t>(d)]]; };

  std::map<EdgeId, std::vector<std::size_t>> segments_of;
  for (std::size_t s = 0; s < map.num_edges(); ++s) segments_of[om.segment_kind[s].edge].push_back(s);

  std::vector<MultiEdge> edges;
  for (const auto& e : om.host_edges) {
    const bool primal_alive = !deleted_primal.contains(e);
    const bool dual_alive = !deleted_dual.contains(e);
    for (std::size_t s : segments_of[e]) {
      const auto& info = om.segment_kind[s];
      if (deleted(info)) continue;
      const auto& seg = map.edges()[s];
      const bool whole = info.dual ? !primal_alive : !dual_alive;
      if (whole) {
        // The crossing has been smoothed away; one segment stands for the whole edge.
        if (std::any_of(edges.begin(), edges.end(), [&](const MultiEdge& x) { return x.name == e; })) continue;
        edges.push_back({e, region_of_dart(seg.first), region_of_dart(seg.second)});
      } else {
        edges.push_back({seg.name, region_of_dart(seg.first), region_of_dart(seg.second)});
      }
    }
  }

  std::vector<std::string> names;
  for (std::size_t r = 0; r < regions; ++r) names.push_back("r" + std::to_string(r));
  result.graph = AbstractMultigraph(std::move(names), std::move(edges));
  return result;
}

AbstractMultigraph newpds(const RibbonGraph& g, const EdgeSubset& a) {
  if (a.universe() != g.edge_names()) throw PreconditionError("edge subset " + a.to_string() + " is not over this graph");
  if (!is_connected(g)) throw PreconditionError("newpds needs a connected graph");
  if (!is_plane(g)) throw PreconditionError("newpds needs a plane graph");
  if (g.num_edges() == 0) return AbstractMultigraph({"r0"}, {});
  return region_dual(overlay(g), a.complement(), a).graph;
}

}  // namespace ribbon
