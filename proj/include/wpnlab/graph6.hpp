#pragma once

// graph6 interchange and the "n=6; edges: 0-1 1-2" text form.
//
// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (0,1) (0,2) (1,2) (0,3) ..., packed six bits per byte, most
// significant first, each byte offset by 63.  N(n) is one byte n+63 for
// n <= 62 and '~' plus three six-bit bytes for larger n.

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace wpnlab {

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
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

inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::MalformedHeader, "empty graph6 string");

  auto six = [&](std::size_t i) -> int {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw Error(ErrorCode::OutOfRangeByte, "byte " + std::to_string(c) + " at offset " + std::to_string(i));
    }
    return c - 63;
  };

  std::size_t pos = 0;
  long n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') {
      throw Error(ErrorCode::TooLarge, "eight-byte graph6 header exceeds the 64-vertex limit");
    }
    if (text.size() < 4) throw Error(ErrorCode::MalformedHeader, "truncated '~' length header");
    n = (static_cast<long>(six(1)) << 12) | (static_cast<long>(six(2)) << 6) | six(3);
    if (n < 63) throw Error(ErrorCode::MalformedHeader, "'~' header used for n < 63");
    pos = 4;
  } else {
    n = six(0);
    pos = 1;
  }
  if (n > kMaxVertices) throw Error(ErrorCode::TooLarge, "graph6 order " + std::to_string(n) + " exceeds 64");

  const long bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != bytes) {
    throw Error(ErrorCode::BadLength, "expected " + std::to_string(bytes) + " data bytes, got " +
                                          std::to_string(text.size() - pos));
  }
  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = six(pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int byte = six(pos + static_cast<std::size_t>(k / 6));
    const int pad = 6 - static_cast<int>(k % 6);
    if ((byte & ((1 << pad) - 1)) != 0) throw Error(ErrorCode::TrailingBits, "nonzero padding bits");
  }
  return g;
}

/// Reads one graph per non-empty line.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

inline std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << "; edges:";
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) os << ' ' << u << '-' << v;
  return os.str();
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tok;
  if (!(is >> tok) || tok.rfind("n=", 0) != 0) throw Error(ErrorCode::MalformedHeader, "expected 'n=<k>;'");
  if (tok.back() == ';') tok.pop_back();
  int n = 0;
  try {
    n = std::stoi(tok.substr(2));
  } catch (const std::exception&) {
    throw Error(ErrorCode::MalformedHeader, "bad vertex count '" + tok + "'");
  }
  if (n < 0) throw Error(ErrorCode::MalformedHeader, "negative vertex count");
  Graph g(n);
  if (!(is >> tok)) return g;
  if (tok != "edges:") throw Error(ErrorCode::MalformedHeader, "expected 'edges:'");
  while (is >> tok) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos) throw Error(ErrorCode::InvalidArgument, "bad edge token '" + tok + "'");
    try {
      g.add_edge(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad edge token '" + tok + "'");
    }
  }
  return g;
}

/// Accepts either representation.
inline Graph parse_graph(std::string_view text) {
  if (text.rfind("n=", 0) == 0) return parse_edge_list(text);
  return parse_graph6(text);
}

}  // namespace wpnlab
