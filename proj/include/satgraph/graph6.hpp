#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "satgraph/errors.hpp"
#include "satgraph/graph.hpp"

namespace satgraph {

// graph6 line format: a size header followed by the upper triangle of the
// adjacency matrix, read column by column (for each column j, rows i < j),
// packed into 6-bit groups, each group offset by 63 into printable ASCII.
//
// Size header: one byte n+63 for n <= 62; byte 126 followed by three bytes
// carrying an 18-bit big-endian value for 63 <= n <= 512. The 36-bit header
// (two leading 126 bytes) lies beyond this library's capacity and is rejected.

inline std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.neighbors(i).contains(j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

inline Graph decode_graph6(const std::string& text) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (text.size() < pos + k) throw ParseError("truncated graph6 header", text.size());
  };
  auto sixbits = [&]() {
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", pos);
    ++pos;
    return static_cast<int>(c - 63);
  };

  need(1);
  int n;
  if (static_cast<unsigned char>(text[0]) == 126) {
    ++pos;
    need(1);
    if (static_cast<unsigned char>(text[1]) == 126)
      throw ParseError("36-bit graph6 size header not supported", 1);
    need(3);
    int a = sixbits(), b = sixbits(), c = sixbits();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = sixbits();
  }
  if (n > Graph::kCapacity())
    throw ParseError("graph order " + std::to_string(n) + " exceeds capacity " +
                         std::to_string(Graph::kCapacity()),
                     0);

  const std::size_t nbits = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes)
    throw ParseError("edge data length mismatch: expected " + std::to_string(nbytes) +
                         " bytes, found " + std::to_string(text.size() - pos),
                     pos);

  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t k = 0; k < nbytes; ++k) {
    std::size_t at = pos;
    int group = sixbits();
    for (int s = 5; s >= 0; --s, ++bit) {
      bool set = (group >> s) & 1;
      if (bit >= nbits) {
        if (set) throw ParseError("nonzero padding bits", at);
        continue;
      }
      if (set) {
        // bit index -> (i, j) with j the column: bits are emitted for
        // j = 1..n-1, i = 0..j-1 in order.
        std::size_t b = bit;
        Vertex j = 1;
        while (b >= static_cast<std::size_t>(j)) {
          b -= static_cast<std::size_t>(j);
          ++j;
        }
        g.link(static_cast<Vertex>(b), j);
      }
    }
  }
  return g;
}

/// Reads one graph per line; blank lines are skipped.
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

}  // namespace satgraph
