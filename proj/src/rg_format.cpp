#include "ribbon/rg_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "ribbon/errors.hpp"

namespace ribbon {

bool valid_rg_name(std::string_view name) {
  if (name.empty() || name == ":") return false;
  return std::none_of(name.begin(), name.end(),
                      [](char c) { return c == '#' || c == ' ' || c == '\t' || c == '\r' || c == '\n'; });
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

Dart parse_dart(const std::string& token, std::size_t line) {
  Dart value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "dart '" + token + "' is not an integer");
  if (value <= 0) throw ParseError(line, "dart ids must be positive, got " + token);
  return value;
}

}  // namespace

RibbonGraph parse_rg(std::string_view text) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::map<Dart, std::size_t> vertex_line, edge_line;
  std::map<std::string, std::size_t> vertex_names, edge_names;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (eol == text.size()) break;
      continue;
    }

    const auto& kind = tokens[0];
    if (kind != "V" && kind != "E") throw ParseError(line_no, "expected 'V' or 'E', got '" + kind + "'");
    if (tokens.size() < 3 || tokens[2] != ":") throw ParseError(line_no, "expected '" + kind + " <name> : ...'");
    const auto& name = tokens[1];
    if (!valid_rg_name(name)) throw ParseError(line_no, "invalid name '" + name + "'");

    std::vector<Dart> darts;
    for (std::size_t i = 3; i < tokens.size(); ++i) darts.push_back(parse_dart(tokens[i], line_no));

    if (kind == "V") {
      if (!vertex_names.emplace(name, line_no).second) {
        throw ParseError(line_no, "vertex '" + name + "' already defined on line " + std::to_string(vertex_names[name]));
      }
      for (Dart d : darts) {
        if (auto [it, fresh] = vertex_line.emplace(d, line_no); !fresh) {
          throw ParseError(line_no, "dart " + std::to_string(d) + " already used by a vertex on line " +
                                        std::to_string(it->second));
        }
      }
      vertices.push_back({name, std::move(darts)});
    } else {
      if (darts.size() != 2) throw ParseError(line_no, "edge '" + name + "' needs exactly two darts");
      if (darts[0] == darts[1]) throw ParseError(line_no, "edge '" + name + "' pairs a dart with itself");
      if (!edge_names.emplace(name, line_no).second) {
        throw ParseError(line_no, "edge '" + name + "' already defined on line " + std::to_string(edge_names[name]));
      }
      for (Dart d : darts) {
        if (auto [it, fresh] = edge_line.emplace(d, line_no); !fresh) {
          throw ParseError(line_no, "dart " + std::to_string(d) + " already used by an edge on line " +
                                        std::to_string(it->second));
        }
      }
      edges.push_back({name, darts[0], darts[1]});
    }
    if (eol == text.size()) break;
  }

  for (const auto& [d, line] : vertex_line) {
    if (!edge_line.count(d)) throw ParseError(line, "dart " + std::to_string(d) + " is not paired by any edge");
  }
  for (const auto& [d, line] : edge_line) {
    if (!vertex_line.count(d)) throw ParseError(line, "dart " + std::to_string(d) + " is in no vertex rotation");
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

RibbonGraph read_rg_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_rg(buffer.str());
}

std::string serialize_rg(const RibbonGraph& g) {
  std::vector<const Vertex*> vertices;
  for (const auto& v : g.vertices()) vertices.push_back(&v);
  std::sort(vertices.begin(), vertices.end(), [](const Vertex* a, const Vertex* b) { return a->name < b->name; });
  std::vector<const Edge*> edges;
  for (const auto& e : g.edges()) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(), [](const Edge* a, const Edge* b) { return a->name < b->name; });

  std::ostringstream out;
  for (const auto* v : vertices) {
    out << "V " << v->name << " :";
    const auto& rot = v->rotation;
    const auto start = std::min_element(rot.begin(), rot.end());
    for (std::size_t i = 0; i < rot.size(); ++i) {
      out << ' ' << rot[(static_cast<std::size_t>(start - rot.begin()) + i) % rot.size()];
    }
    out << '\n';
  }
  for (const auto* e : edges) {
    out << "E " << e->name << " : " << std::min(e->first, e->second) << ' ' << std::max(e->first, e->second) << '\n';
  }
  return out.str();
}

}  // namespace ribbon
