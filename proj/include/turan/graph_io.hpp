#pragma once

// Text format: header "n m", then m lines "u v", '#' starts a comment line.
// The writer emits edges with u < v in lexicographic order.

#include <charconv>
#include <optional>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "turan/error.hpp"
#include "turan/graph.hpp"

namespace turan {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
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

inline bool parse_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace detail

inline Graph read_graph(std::string_view text) {
  std::size_t line_no = 0, pos = 0;
  long long n = -1, m = -1, seen = 0;
  std::optional<GraphBuilder> builder;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    long long a = 0, b = 0;
    if (toks.size() != 2 || !detail::parse_int(toks[0], a) || !detail::parse_int(toks[1], b)) {
      throw ParseError(line_no, n < 0 ? "malformed header, expected \"n m\"" : "malformed edge line, expected \"u v\"");
    }
    if (n < 0) {
      if (a < 1 || b < 0 || a > (1LL << 24)) throw ParseError(line_no, "malformed header: invalid n or m");
      if (static_cast<unsigned long long>(b) > pair_count(static_cast<int>(a)))
        throw ParseError(line_no, "malformed header: m exceeds n(n-1)/2");
      n = a;
      m = b;
      builder.emplace(static_cast<int>(n));
    } else {
      if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(line_no, "vertex index out of range");
      if (a == b) throw ParseError(line_no, "self-loop");
      if (seen == m) throw ParseError(line_no, "more edge lines than the header announces");
      if (!builder->add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)))
        throw ParseError(line_no, "duplicate edge");
      ++seen;
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw ParseError(line_no, "malformed header: missing \"n m\" line");
  if (seen != m) throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(seen));
  return std::move(*builder).build();
}

inline Graph read_graph(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_graph(buf.str());
}

inline std::string write_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace turan
