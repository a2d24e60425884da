#include "twd/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "twd/errors.hpp"

namespace twd {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_graph6_byte(char c) { return c >= 63 && c <= 126; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) {
    line = line.substr(0, pos);
  }
  return trim(line);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t offset = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    offset = kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }

  auto byte_at = [&](std::size_t pos) -> int {
    if (pos >= text.size()) {
      throw ParseError("graph6: truncated input at byte " + std::to_string(pos),
                       pos);
    }
    char c = text[pos];
    if (!is_graph6_byte(c)) {
      throw ParseError("graph6: invalid byte at offset " + std::to_string(pos),
                       pos);
    }
    return c - 63;
  };

  std::size_t pos = offset;
  long long n = 0;
  if (pos >= text.size()) {
    throw ParseError("graph6: missing size header", pos);
  }
  if (text[pos] != 126) {
    n = byte_at(pos);
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == 126) {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | byte_at(pos + i);
    pos += 6;
  } else {
    pos += 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | byte_at(pos + i);
    pos += 3;
  }
  if (n > kMaxVertices) {
    throw ParseError("graph6: vertex count " + std::to_string(n) +
                         " exceeds the library cap",
                     offset);
  }

  const std::size_t pairs = static_cast<std::size_t>(n) * (n - (n > 0)) / 2;
  const std::size_t body = (pairs + 5) / 6;
  if (text.size() - pos < body) {
    throw ParseError("graph6: truncated bit vector at byte " +
                         std::to_string(text.size()),
                     text.size());
  }
  if (text.size() - pos > body) {
    throw ParseError("graph6: trailing data at byte " +
                         std::to_string(pos + body),
                     pos + body);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      int word = byte_at(pos + k / 6);
      if ((word >> (5 - k % 6)) & 1) edges.push_back({u, v});
    }
  }
  // Padding bits must be zero.
  for (; k < body * 6; ++k) {
    if ((byte_at(pos + k / 6) >> (5 - k % 6)) & 1) {
      throw ParseError("graph6: nonzero padding at byte " +
                           std::to_string(pos + k / 6),
                       pos + k / 6);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int word = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      word = (word << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((word << (6 - filled)) + 63));
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;

  auto parse_int = [&](std::string_view token) -> long long {
    long long value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("edge list: non-integer token '" + std::string(token) +
                           "' on line " + std::to_string(line_no),
                       line_no);
    }
    return value;
  };

  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    std::string_view line = strip_comment(raw);
    if (line.empty()) continue;

    std::vector<std::string_view> tokens;
    while (!line.empty()) {
      auto sp = line.find_first_of(" \t");
      tokens.push_back(line.substr(0, sp));
      line = sp == std::string_view::npos ? std::string_view{}
                                          : trim(line.substr(sp));
    }

    if (n < 0) {
      if (tokens.size() != 1) {
        throw ParseError("edge list: expected vertex count on line " +
                             std::to_string(line_no),
                         line_no);
      }
      n = parse_int(tokens[0]);
      if (n < 0 || n > kMaxVertices) {
        throw ParseError("edge list: vertex count out of range on line " +
                             std::to_string(line_no),
                         line_no);
      }
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("edge list: expected 'u v' on line " +
                           std::to_string(line_no),
                       line_no);
    }
    long long u = parse_int(tokens[0]);
    long long v = parse_int(tokens[1]);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list: endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                           " out of range [0, " + std::to_string(n) +
                           ") on line " + std::to_string(line_no),
                       line_no);
    }
    if (u == v) {
      throw ParseError("edge list: self-loop on line " + std::to_string(line_no),
                       line_no);
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (n < 0) throw ParseError("edge list: missing vertex count", line_no);
  return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string write_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kGraph6) return parse_graph6(trim(text));
  if (format == GraphFormat::kEdgeList) return parse_edge_list(text);

  std::string_view rest = text;
  while (!rest.empty()) {
    auto nl = rest.find('\n');
    std::string_view line = strip_comment(rest.substr(0, nl));
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    if (line.empty()) continue;
    bool digits = line.find_first_not_of("0123456789") == std::string_view::npos;
    return digits ? parse_edge_list(text) : parse_graph6(trim(text));
  }
  throw ParseError("empty graph input", 0);
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), format);
}

}  // namespace twd
