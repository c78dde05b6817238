#pragma once

#include <string>

#include "ribbon/medial.hpp"
#include "ribbon/multigraph.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

/// Undirected DOT; each vertex carries its rotation, each edge its darts.
std::string to_dot(const RibbonGraph& g);
std::string to_dot(const AbstractMultigraph& m);

/// Medial graph with face colours listed as comments and each edge tagged
/// with the colours of its two sides. With a direction, the output is a
/// digraph whose arrows run tail -> head and whose vertices carry c/d labels.
std::string to_dot(const MedialGraph& mg, const AllCrossingDirection* dir = nullptr);

}  // namespace ribbon
