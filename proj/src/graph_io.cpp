#include "imd/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "imd/errors.hpp"

namespace imd {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

// Offset of the first non-space byte and one past the last.
std::pair<std::size_t, std::size_t> trimmed_bounds(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && is_space(text[b])) ++b;
  while (e > b && is_space(text[e - 1])) --e;
  return {b, e};
}

int sextet(std::string_view text, std::size_t pos, std::size_t base) {
  if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", base + pos);
  auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", base + pos);
  return c - 63;
}

Graph parse_graph6_body(std::string_view body, std::size_t base) {
  std::size_t pos = 0;
  if (body.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
  if (pos >= body.size()) throw ParseError("graph6: missing vertex count", base + pos);

  long long n = 0;
  int first = sextet(body, pos, base);
  if (first < 63) {
    n = first;
    pos += 1;
  } else if (pos + 1 < body.size() && body[pos + 1] == '~') {
    // 126 126 followed by 36 bits.
    for (int i = 0; i < 6; ++i) n = (n << 6) | sextet(body, pos + 2 + i, base);
    pos += 8;
  } else {
    for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(body, pos + 1 + i, base);
    pos += 4;
  }
  if (n > 100'000'000) throw ParseError("graph6: vertex count too large", base);

  const long long bits = n * (n - 1) / 2;
  const long long expected_bytes = (bits + 5) / 6;
  const long long remaining = static_cast<long long>(body.size() - pos);
  if (remaining < expected_bytes)
    throw ParseError("graph6: truncated edge data (expected " + std::to_string(expected_bytes) + " bytes)",
                     base + body.size());
  if (remaining > expected_bytes)
    throw ParseError("graph6: trailing bytes after edge data", base + pos + static_cast<std::size_t>(expected_bytes));

  std::vector<Edge> edges;
  long long k = 0;
  const int nn = static_cast<int>(n);
  for (int j = 1; j < nn; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      std::size_t byte = pos + static_cast<std::size_t>(k / 6);
      int value = sextet(body, byte, base);
      if ((value >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    std::size_t last = pos + static_cast<std::size_t>(expected_bytes) - 1;
    int value = sextet(body, last, base);
    int pad = static_cast<int>(6 - bits % 6);
    if ((value & ((1 << pad) - 1)) != 0) throw ParseError("graph6: non-zero padding bits", base + last);
  }
  return Graph::from_edges(nn, edges);
}

long long parse_int(std::string_view tok, std::size_t offset) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
    throw ParseError("edgelist: expected a non-negative integer, got '" + std::string(tok) + "'", offset);
  if (value < 0) throw ParseError("edgelist: negative integer", offset);
  return value;
}

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_tokens(std::string_view line, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back({line.substr(i, j - i), base + i});
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  auto [b, e] = trimmed_bounds(text);
  if (b == e) throw ParseError("graph6: empty input", 0);
  std::string_view body = text.substr(b, e - b);
  if (body.find('\n') != std::string_view::npos)
    throw ParseError("graph6: expected a single graph", b + body.find('\n'));
  return parse_graph6_body(body, b);
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    auto [b, e] = trimmed_bounds(line);
    if (b < e) out.push_back(parse_graph6_body(line.substr(b, e - b), start + b));
    start = end + 1;
  }
  return out;
}

Graph parse_edgelist(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    auto tokens = split_tokens(line, start);
    if (!tokens.empty() && tokens.front().text.front() == '#') tokens.clear();
    if (!tokens.empty()) {
      if (!n) {
        if (tokens.size() != 1) throw ParseError("edgelist: first line must hold only the vertex count", tokens[1].offset);
        long long v = parse_int(tokens[0].text, tokens[0].offset);
        if (v > 10'000'000) throw ParseError("edgelist: vertex count too large", tokens[0].offset);
        n = static_cast<int>(v);
      } else {
        if (tokens.size() != 2) throw ParseError("edgelist: expected 'u v'", tokens.front().offset);
        long long u = parse_int(tokens[0].text, tokens[0].offset);
        long long v = parse_int(tokens[1].text, tokens[1].offset);
        if (u >= *n) throw ParseError("edgelist: vertex id out of range", tokens[0].offset);
        if (v >= *n) throw ParseError("edgelist: vertex id out of range", tokens[1].offset);
        if (u >= v) throw ParseError("edgelist: edges must be written 'u v' with u < v", tokens[0].offset);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      }
    }
    start = end + 1;
  }
  if (!n) throw ParseError("edgelist: missing vertex count", text.size());
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ParseError("edgelist: duplicate edge", text.size());
  return Graph::from_edges(*n, edges);
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edgelist(text);
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    const VertexSet& nj = g.neighbors(j);
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (nj.contains(i) ? 1 : 0);
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

std::string to_edgelist(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string encode_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Graph6 ? to_graph6(g) : to_edgelist(g);
}

GraphFormat parse_format_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "graph6" || lower == "g6") return GraphFormat::Graph6;
  if (lower == "edgelist" || lower == "el") return GraphFormat::EdgeList;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

GraphFormat format_for_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  return ends_with(".g6") || ends_with(".graph6") ? GraphFormat::Graph6 : GraphFormat::EdgeList;
}

}  // namespace imd
