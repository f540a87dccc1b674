#ifndef DHCCT_GRAPH6_HPP
#define DHCCT_GRAPH6_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dhcct/graph.hpp"

namespace dhcct {

// graph6 codec, restricted to the single-byte order form (0 <= n <= 62).
//
// Layout: byte 0 is chr(n+63); then the upper triangle of the adjacency
// matrix in column-major order x(0,1), x(0,2), x(1,2), x(0,3), ... packed
// big-endian into 6-bit groups, each stored as chr(group+63).  Unused low
// bits of the last group must be zero.

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

namespace detail {
inline std::size_t graph6_payload_bytes(int n) {
  std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}
}  // namespace detail

// Parses one graph6 value occupying the whole of `text` (an optional
// ">>graph6<<" prefix is allowed).  Errors carry the offending byte offset
// within `text`.
inline Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) base = kGraph6Header.size();
  if (base >= text.size()) throw Graph6Error("missing graph6 order byte", base);

  unsigned char order_byte = static_cast<unsigned char>(text[base]);
  if (order_byte < 63 || order_byte > 126)
    throw Graph6Error("byte outside graph6 alphabet", base);
  if (order_byte == 126)
    throw Graph6Error("multi-byte graph6 orders (n > 62) not supported", base);
  int n = order_byte - 63;

  std::size_t need = detail::graph6_payload_bytes(n);
  std::size_t have = text.size() - base - 1;
  if (have < need)
    throw Graph6Error("graph6 payload too short: expected " + std::to_string(need) +
                          " bytes, got " + std::to_string(have),
                      text.size());
  if (have > need)
    throw Graph6Error("trailing bytes after graph6 payload", base + 1 + need);

  std::vector<std::pair<int, int>> edges;
  std::size_t bit_index = 0;
  std::size_t total_bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  for (std::size_t k = 0; k < need; ++k) {
    std::size_t off = base + 1 + k;
    unsigned char c = static_cast<unsigned char>(text[off]);
    if (c < 63 || c > 126) throw Graph6Error("byte outside graph6 alphabet", off);
    unsigned group = c - 63u;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      bool bitval = (group >> b) & 1u;
      if (bit_index >= total_bits) {
        if (bitval) throw Graph6Error("nonzero padding bit in final graph6 byte", off);
        continue;
      }
      if (bitval) {
        // Invert column-major position -> (i, j), j being the column.
        std::size_t idx = bit_index;
        int j = 1;
        while (idx >= static_cast<std::size_t>(j)) {
          idx -= static_cast<std::size_t>(j);
          ++j;
        }
        edges.emplace_back(static_cast<int>(idx), j);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

inline std::string emit_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  out.reserve(1 + detail::graph6_payload_bytes(n));
  out += static_cast<char>(n + 63);
  unsigned group = 0;
  int bits_in_group = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++bits_in_group == 6) {
        out += static_cast<char>(group + 63u);
        group = 0;
        bits_in_group = 0;
      }
    }
  }
  if (bits_in_group > 0) {
    group <<= (6 - bits_in_group);
    out += static_cast<char>(group + 63u);
  }
  return out;
}

// --- multi-graph text files -------------------------------------------------

// One line of a graph6 file: either a '#' comment (kept verbatim so tools
// can pass it through) or a parsed graph.
struct Graph6Line {
  std::size_t line_number = 0;  // 1-based
  bool is_comment = false;
  std::string text;             // original line, without newline
  Graph graph;                  // valid when !is_comment
};

// Splits `content` into lines and parses each non-comment, non-empty line.
// Parse failures are rethrown with the line number attached.
inline std::vector<Graph6Line> parse_graph6_file(std::string_view content) {
  std::vector<Graph6Line> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t eol = content.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos)
                                ? content.substr(pos)
                                : content.substr(pos, eol - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      Graph6Line rec;
      rec.line_number = line_no;
      rec.text = std::string(line);
      if (line[0] == '#') {
        rec.is_comment = true;
      } else {
        try {
          rec.graph = parse_graph6(line);
        } catch (const Graph6Error& e) {
          throw Graph6Error("line " + std::to_string(line_no) + ": " + e.what(),
                            e.byte_offset());
        }
      }
      out.push_back(std::move(rec));
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

}  // namespace dhcct

#endif  // DHCCT_GRAPH6_HPP
