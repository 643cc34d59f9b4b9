#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "matchpow/graph.hpp"

namespace matchpow {

/// Parses the edge-list text format: one "u v" pair per line, 1-based,
/// '#' starts a comment, blank lines are ignored. An optional "n <count>"
/// header fixes the vertex count; otherwise n is the largest index seen.
Graph parse_edge_list(std::string_view text);
/// Inverse of parse_edge_list; always writes the "n" header.
std::string format_edge_list(const Graph& g);

/// Standard graph6 encoding (n <= 64 is all this library needs, but the
/// 4-byte size prefix is accepted too).
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// One graph6 string per non-empty line ('#' comments and a leading
/// ">>graph6<<" header are skipped).
std::vector<Graph> parse_graph6_stream(std::string_view text);

/// Reads a graph file, auto-detecting graph6 (first data line is a single
/// token other than a header) versus edge list. Only the first graph of a
/// graph6 file is returned.
Graph read_graph_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace matchpow
