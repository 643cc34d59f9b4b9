#include "matchpow/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace matchpow {

namespace {

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InputError("line " + std::to_string(line_no) + ": '" + std::string(tok) + "' is not an integer");
  }
  return value;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    f(text.substr(start, end - start), line_no);
    if (end == text.size()) break;
    start = end + 1;
  }
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int declared = -1;
  int max_index = 0;
  std::vector<Edge> edges;
  for_each_line(text, [&](std::string_view raw, int line_no) {
    auto toks = tokens(strip_comment(raw));
    if (toks.empty()) return;
    if (toks.size() != 2) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'u v' or 'n <count>'");
    }
    if (toks[0] == "n") {
      if (declared >= 0 || !edges.empty()) {
        throw InputError("line " + std::to_string(line_no) + ": 'n' header must come first and only once");
      }
      declared = parse_int(toks[1], line_no);
      return;
    }
    int u = parse_int(toks[0], line_no);
    int v = parse_int(toks[1], line_no);
    if (u < 1 || v < 1) throw InputError("line " + std::to_string(line_no) + ": vertices are 1-based");
    max_index = std::max({max_index, u, v});
    edges.emplace_back(u, v);
  });
  int n = declared >= 0 ? declared : max_index;
  if (max_index > n) {
    throw InputError("edge endpoint " + std::to_string(max_index) + " exceeds declared n=" + std::to_string(n));
  }
  return Graph(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw InputError("empty graph6 string");
  for (char c : line) {
    if (c < 63 || c > 126) throw InputError("invalid graph6 character in '" + std::string(line) + "'");
  }
  std::size_t pos = 0;
  long n = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    pos = 1;
  } else if (line.size() >= 4 && line[1] != 126) {
    n = (long(line[1] - 63) << 12) | (long(line[2] - 63) << 6) | long(line[3] - 63);
    pos = 4;
  } else {
    throw InputError("graph6 graphs with more than 258047 vertices are not supported");
  }
  if (n > kMaxVertices) throw InputError("graph6 graph has " + std::to_string(n) + " vertices; limit is 64");
  const std::size_t bits_needed = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t bytes_needed = (bits_needed + 5) / 6;
  if (line.size() - pos != bytes_needed) {
    throw InputError("graph6 string '" + std::string(line) + "' has the wrong length");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i + 1, j + 1);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i + 1, j + 1) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> parse_graph6_stream(std::string_view text) {
  std::vector<Graph> out;
  for_each_line(text, [&](std::string_view raw, int line_no) {
    auto toks = tokens(strip_comment(raw));
    if (toks.empty()) return;
    if (toks.size() != 1) throw InputError("line " + std::to_string(line_no) + ": expected one graph6 string");
    try {
      out.push_back(parse_graph6(toks[0]));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  });
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  bool graph6 = false;
  bool decided = false;
  for_each_line(text, [&](std::string_view raw, int) {
    if (decided) return;
    auto toks = tokens(strip_comment(raw));
    if (toks.empty()) return;
    graph6 = toks.size() == 1;
    decided = true;
  });
  if (!graph6) return parse_edge_list(text);
  auto graphs = parse_graph6_stream(text);
  if (graphs.empty()) throw InputError("'" + path.string() + "' contains no graph");
  return graphs.front();
}

}  // namespace matchpow
