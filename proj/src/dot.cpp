#include "ribbon/dot.hpp"

#include <algorithm>
#include <sstream>

namespace ribbon {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<Dart>& darts) {
  std::string out;
  for (Dart d : darts) out += (out.empty() ? "" : " ") + std::to_string(d);
  return out;
}

const char* colour_name(FaceColour c) { return c == FaceColour::black ? "black" : "white"; }

}  // namespace

std::string to_dot(const RibbonGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& v : g.vertices()) out << "  " << quote(v.name) << " [rotation=" << quote(join(v.rotation)) << "];\n";
  for (const auto& e : g.edges()) {
    out << "  " << quote(g.vertices()[g.vertex_of(e.first)].name) << " -- "
        << quote(g.vertices()[g.vertex_of(e.second)].name) << " [label=" << quote(e.name)
        << ", darts=" << quote(std::to_string(e.first) + " " + std::to_string(e.second)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const AbstractMultigraph& m) {
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& v : m.vertex_names()) out << "  " << quote(v) << ";\n";
  for (const auto& e : m.edges()) {
    out << "  " << quote(m.vertex_names()[e.u]) << " -- " << quote(m.vertex_names()[e.v]) << " [label=" << quote(e.name)
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const MedialGraph& mg, const AllCrossingDirection* dir) {
  const auto& m = mg.map;
  std::ostringstream out;
  out << (dir ? "digraph M {\n" : "graph M {\n");
  for (std::size_t f = 0; f < mg.faces.size(); ++f) {
    const auto& face = mg.faces[f];
    out << "  // face " << f << " " << colour_name(face.colour) << " source " << face.source << ": " << join(face.darts)
        << "\n";
  }
  CdLabelling labels;
  if (dir) labels = cd_labelling(mg, *dir);
  for (std::size_t v = 0; v < m.num_vertices(); ++v) {
    const auto& vx = m.vertices()[v];
    out << "  " << quote(vx.name) << " [rotation=" << quote(join(vx.rotation));
    if (dir) {
      const auto pos = static_cast<std::size_t>(
          std::lower_bound(labels.edges.begin(), labels.edges.end(), vx.name) - labels.edges.begin());
      const bool c = labels.label[pos] == CdLabel::c;
      out << ", cd=" << (c ? "c" : "d") << ", style=filled, fillcolor=" << (c ? "gray40" : "white");
    }
    out << "];\n";
  }
  for (const auto& e : m.edges()) {
    Dart from = e.first;
    Dart to = e.second;
    if (dir && dir->head(from)) std::swap(from, to);
    const auto side = [&](Dart d) { return colour_name(mg.faces[mg.face_of_dart[static_cast<std::size_t>(d)]].colour); };
    out << "  " << quote(m.vertices()[m.vertex_of(from)].name) << (dir ? " -> " : " -- ")
        << quote(m.vertices()[m.vertex_of(to)].name) << " [label=" << quote(e.name) << ", faces=" << quote(std::string(side(e.first)) + "/" + side(e.second))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ribbon
