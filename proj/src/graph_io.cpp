#include <charconv>
#include <optional>
#include <sstream>

#include "oddfactor/error.hpp"
#include "oddfactor/graph.hpp"

namespace oddfactor {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  // A single trailing newline (or several) is not a line of its own.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

// Parses exactly two non-negative integers separated by whitespace.
std::optional<std::pair<long long, long long>> parse_pair(std::string_view line) {
  auto skip_ws = [&](std::size_t i) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    return i;
  };
  long long vals[2];
  std::size_t i = skip_ws(0);
  for (int k = 0; k < 2; ++k) {
    if (k == 1) {
      std::size_t j = skip_ws(i);
      if (j == i) return std::nullopt;
      i = j;
    }
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), vals[k]);
    if (ec != std::errc{} || vals[k] < 0) return std::nullopt;
    i = static_cast<std::size_t>(ptr - line.data());
  }
  if (skip_ws(i) != line.size()) return std::nullopt;
  return std::pair{vals[0], vals[1]};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw Error(ErrorKind::MalformedHeader, "missing \"n m\" header");
  auto header = parse_pair(lines[0]);
  if (!header || header->first > 1'000'000)
    throw Error(ErrorKind::MalformedHeader, "malformed header: \"" + std::string(lines[0]) + "\"");
  const auto n = static_cast<int>(header->first);
  const auto m = static_cast<std::size_t>(header->second);
  if (lines.size() - 1 != m)
    throw Error(ErrorKind::EdgeCountMismatch, "header declares " + std::to_string(m) +
                                                  " edges, found " +
                                                  std::to_string(lines.size() - 1) + " lines");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto uv = parse_pair(lines[i]);
    if (!uv)
      throw Error(ErrorKind::MalformedEdgeLine, "line " + std::to_string(i + 1) + ": \"" +
                                                    std::string(lines[i]) + "\"");
    if (uv->first >= n || uv->second >= n)
      throw Error(ErrorKind::VertexOutOfRange,
                  "line " + std::to_string(i + 1) + ": vertex out of range for n=" +
                      std::to_string(n));
    edges.push_back({static_cast<Vertex>(uv->first), static_cast<Vertex>(uv->second)});
  }
  return Graph(n, std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph g {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace oddfactor
