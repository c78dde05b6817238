#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "ribbon/corpus.hpp"
#include "ribbon/dot.hpp"
#include "ribbon/duality.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/graph_props.hpp"
#include "ribbon/map_ops.hpp"
#include "ribbon/medial.hpp"
#include "ribbon/overlay.hpp"
#include "ribbon/rg_format.hpp"
#include "ribbon/verify.hpp"

using namespace ribbon;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

void print_multigraph(const AbstractMultigraph& m) {
  for (const auto& v : m.vertex_names()) std::cout << "V " << v << "\n";
  for (const auto& e : m.edges()) {
    std::cout << "E " << e.name << " : " << m.vertex_names()[e.u] << " " << m.vertex_names()[e.v] << "\n";
  }
}

std::set<EdgeSubset> brute_bipartite_sets(const RibbonGraph& g) {
  std::set<EdgeSubset> out;
  for (const auto& a : EdgeSubset::all_subsets(g)) {
    if (is_bipartite(underlying_graph(partial_dual(g, a)))) out.insert(a);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ribbon graphs, partial duals and bipartite partial duals of plane graphs"};
  app.require_subcommand(1);

  std::string file;
  std::string edges;
  std::string dot_out;
  std::string method = "medial";
  int max_edges = 4;
  std::uint64_t seed = 1;
  std::size_t mutations = 1000;
  bool medial_dot = false;
  long direction = -1;

  auto* info = app.add_subcommand("info", "Vertices, edges, faces, genus and components");
  auto* dual = app.add_subcommand("dual", "Geometric dual");
  auto* pdual = app.add_subcommand("pdual", "Partial dual with respect to --edges");
  auto* med = app.add_subcommand("medial", "Medial graph with face colours");
  auto* anti = app.add_subcommand("anticircuits", "Number of anti-circuits of the medial graph");
  auto* dirs = app.add_subcommand("directions", "All-crossing directions with their c/d labellings");
  auto* enumb = app.add_subcommand("enum-bipartite", "Edge sets A with G^A bipartite");
  auto* npds = app.add_subcommand("newpds", "Underlying graph of G^A from the immersion of G and G*");
  auto* ver = app.add_subcommand("verify", "Run every verification suite on the plane corpus");
  auto* exp = app.add_subcommand("export-dot", "DOT export");

  for (auto* sub : {info, dual, pdual, med, anti, dirs, enumb, npds, exp}) {
    sub->add_option("file", file, ".rg input")->required();
  }
  pdual->add_option("--edges", edges, "comma-separated edge names")->required();
  npds->add_option("--edges", edges, "comma-separated edge names")->required();
  med->add_option("--dot", dot_out, "also write DOT to this path");
  enumb->add_option("--method", method, "medial or brute")->check(CLI::IsMember({"medial", "brute"}));
  ver->add_option("--max-edges", max_edges, "largest edge count in the corpus")->check(CLI::Range(1, 7));
  ver->add_option("--seed", seed, "seed for the bijection mutations");
  ver->add_option("--mutations", mutations, "number of corrupted bijections to test");
  exp->add_flag("--medial", medial_dot, "export the medial graph instead");
  exp->add_option("--direction", direction, "with --medial: annotate the direction with this orientation mask");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*ver) {
      VerifyOptions options;
      options.seed = seed;
      options.mutations = mutations;
      const auto report = verify(generate_corpus(max_edges, true, true), options);
      std::cout << report.to_text();
      return report.ok() ? 0 : kVerifyFailed;
    }

    const auto g = read_rg_file(file);
    if (*info) {
      const auto comps = components(g);
      std::cout << "vertices " << g.num_vertices() << "\n"
                << "edges " << g.num_edges() << "\n"
                << "faces " << face_count(g) << "\n"
                << "genus " << total_genus(g) << "\n"
                << "components " << comps.count << "\n";
    } else if (*dual) {
      std::cout << serialize_rg(geometric_dual(g));
    } else if (*pdual) {
      std::cout << serialize_rg(partial_dual(g, EdgeSubset::parse(g, edges)));
    } else if (*med) {
      const auto mg = medial(g);
      for (std::size_t f = 0; f < mg.faces.size(); ++f) {
        const auto& face = mg.faces[f];
        std::cout << "# face " << f << (face.colour == FaceColour::black ? " black" : " white") << "\n";
      }
      std::cout << serialize_rg(mg.map);
      if (!dot_out.empty()) {
        std::ofstream out(dot_out);
        if (!out) throw Error("cannot write " + dot_out);
        out << to_dot(mg);
      }
    } else if (*anti) {
      std::cout << anti_circuits(medial(g)).count() << "\n";
    } else if (*dirs) {
      const auto mg = medial(g);
      for (const auto& d : all_crossing_directions(mg)) {
        const auto lab = cd_labelling(mg, d);
        std::cout << "direction " << d.reversed << " c=" << lab.c_edges().to_string()
                  << " d=" << lab.d_edges().to_string() << "\n";
      }
    } else if (*enumb) {
      const auto sets = method == "medial" ? bipartite_dual_sets(g) : brute_bipartite_sets(g);
      for (const auto& a : sets) std::cout << a.to_string() << "\n";
    } else if (*npds) {
      print_multigraph(newpds(g, EdgeSubset::parse(g, edges)));
    } else if (*exp) {
      if (!medial_dot) {
        std::cout << to_dot(g);
      } else {
        const auto mg = medial(g);
        if (direction < 0) {
          std::cout << to_dot(mg);
        } else {
          const auto ac = anti_circuits(mg);
          if (static_cast<std::uint64_t>(direction) >= (std::uint64_t{1} << ac.count())) {
            throw PreconditionError("direction mask out of range");
          }
          const auto d = direction_from_orientation(mg, ac, static_cast<std::uint64_t>(direction));
          std::cout << to_dot(mg, &d);
        }
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
