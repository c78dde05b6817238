#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

// Line-oriented text format, '#' starts a comment:
//
//   V <name> : d1 d2 ... dk     one vertex, darts counterclockwise
//   E <name> : di dj            one edge pairing two darts
//
// Every dart appears exactly once on V lines and exactly once on E lines.

/// Throws ParseError (with the 1-based line number) on malformed input.
RibbonGraph parse_rg(std::string_view text);
RibbonGraph read_rg_file(const std::filesystem::path& path);

/// Deterministic output: vertices and edges sorted by name, each rotation
/// started at its least dart, edge darts in increasing order.
std::string serialize_rg(const RibbonGraph& g);

/// True if `name` can be written as a vertex or edge name.
bool valid_rg_name(std::string_view name);

}  // namespace ribbon
