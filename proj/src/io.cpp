#include "divsol/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace divsol {

namespace {

std::int64_t parse_int(std::string_view token, const char* context) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(std::string("expected integer in ") + context + ", got '" +
                     std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r')
      ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

// Calls fn(line) for every line of text.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    fn(text.substr(start, end - start));
    start = end + 1;
    if (end == text.size()) break;
  }
}

}  // namespace

Length round_length_to_100(Length length) {
  const Length rounded = (length + 50) / 100 * 100;  // ties round up
  return rounded < 100 ? 100 : rounded;
}

DirectedGraph parse_dimacs_gr(std::string_view text,
                              const DimacsOptions& options) {
  DirectedGraph g;
  std::int64_t declared_arcs = -1;
  for_each_line(text, [&](std::string_view line) {
    const auto tokens = split_ws(line);
    if (tokens.empty()) return;
    if (tokens[0] == "c") return;
    if (tokens[0] == "p") {
      if (declared_arcs >= 0) throw ParseError("duplicate problem line");
      if (tokens.size() != 4 || tokens[1] != "sp") {
        throw ParseError("malformed problem line, expected 'p sp <n> <m>'");
      }
      const std::int64_t n = parse_int(tokens[2], "problem line");
      declared_arcs = parse_int(tokens[3], "problem line");
      if (n < 0 || n > kMaxVertices || declared_arcs < 0) {
        throw ParseError("malformed problem line: counts out of range");
      }
      g.n = static_cast<int>(n);
      g.arcs.reserve(static_cast<std::size_t>(declared_arcs));
      return;
    }
    if (tokens[0] == "a") {
      if (declared_arcs < 0) throw ParseError("arc line before problem line");
      if (tokens.size() != 4) {
        throw ParseError("malformed arc line, expected 'a <u> <v> <w>'");
      }
      const std::int64_t u = parse_int(tokens[1], "arc line");
      const std::int64_t v = parse_int(tokens[2], "arc line");
      Length length = parse_int(tokens[3], "arc line");
      if (u < 1 || u > g.n || v < 1 || v > g.n) {
        throw ParseError("vertex id out of range in arc line");
      }
      if (length < 1) throw ParseError("non-positive arc length");
      if (length > kMaxLength) throw ParseError("arc length above 2^31");
      if (options.round_lengths_to_100) length = round_length_to_100(length);
      const Weight weight = options.unit_weights ? 1 : length;
      g.arcs.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1),
                        length, weight});
      return;
    }
    throw ParseError("unrecognized line type '" + std::string(tokens[0]) + "'");
  });
  if (declared_arcs < 0) throw ParseError("missing problem line");
  if (static_cast<std::int64_t>(g.arcs.size()) != declared_arcs) {
    throw ParseError("arc count mismatch: declared " +
                     std::to_string(declared_arcs) + ", parsed " +
                     std::to_string(g.arcs.size()));
  }
  return g;
}

namespace {

// Shared SNAP-edgelist scan; emits (u, v) pairs with densely remapped ids.
template <typename Emit>
int scan_edgelist(std::string_view text, Emit&& emit) {
  std::unordered_map<std::int64_t, int> dense_id;
  const auto remap = [&](std::int64_t raw) {
    const auto [it, inserted] =
        dense_id.emplace(raw, static_cast<int>(dense_id.size()));
    if (inserted && static_cast<int>(dense_id.size()) > kMaxVertices) {
      throw ParseError("too many vertices in edge list");
    }
    return it->second;
  };
  for_each_line(text, [&](std::string_view line) {
    const auto tokens = split_ws(line);
    if (tokens.empty()) return;
    if (tokens[0].front() == '#') return;
    if (tokens.size() != 2) {
      throw ParseError("expected two tokens per edge line, got " +
                       std::to_string(tokens.size()));
    }
    const std::int64_t u = parse_int(tokens[0], "edge list");
    const std::int64_t v = parse_int(tokens[1], "edge list");
    if (u < 0 || v < 0) throw ParseError("negative vertex id in edge list");
    const int tail = remap(u);  // sequenced: first appearance wins the id
    const int head = remap(v);
    emit(tail, head);
  });
  return static_cast<int>(dense_id.size());
}

}  // namespace

DirectedGraph parse_snap_edgelist(std::string_view text) {
  DirectedGraph g;
  g.n = scan_edgelist(text, [&](int u, int v) {
    g.arcs.push_back({u, v, 1, 1});
  });
  return g;
}

UndirectedGraph parse_undirected_edgelist(std::string_view text) {
  UndirectedGraph g;
  g.n = scan_edgelist(text, [&](int u, int v) {
    if (u == v) throw ParseError("self-loop in undirected edge list");
    g.edges.push_back({u, v, 1, 1});
  });
  return g;
}

void to_json(nlohmann::json& j, const DirectedGraph& g) {
  auto arcs = nlohmann::json::array();
  for (const Arc& a : g.arcs) {
    arcs.push_back({a.tail, a.head, a.length, a.weight});
  }
  j = {{"n", g.n}, {"arcs", std::move(arcs)}};
}

void from_json(const nlohmann::json& j, DirectedGraph& g) {
  g.n = j.at("n").get<int>();
  g.arcs.clear();
  for (const auto& row : j.at("arcs")) {
    if (row.size() != 4) throw ParseError("arc row must be [u, v, length, weight]");
    g.arcs.push_back({row[0].get<int>(), row[1].get<int>(),
                      row[2].get<Length>(), row[3].get<Weight>()});
  }
  validate(g);
}

void to_json(nlohmann::json& j, const UndirectedGraph& g) {
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges) {
    edges.push_back({e.u, e.v, e.length, e.weight});
  }
  j = {{"n", g.n}, {"edges", std::move(edges)}};
}

void from_json(const nlohmann::json& j, UndirectedGraph& g) {
  g.n = j.at("n").get<int>();
  g.edges.clear();
  for (const auto& row : j.at("edges")) {
    if (row.size() != 4) throw ParseError("edge row must be [u, v, length, weight]");
    g.edges.push_back({row[0].get<int>(), row[1].get<int>(),
                       row[2].get<Length>(), row[3].get<Weight>()});
  }
  validate(g);
}

std::string read_file_or_stdin(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace divsol
