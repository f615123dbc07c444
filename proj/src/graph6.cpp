#include "edgereg/graph6.hpp"

#include "edgereg/errors.hpp"

namespace edgereg::graph {

namespace {

constexpr int kOffset = 63;

char encode_char(int six_bits) { return static_cast<char>(six_bits + kOffset); }

int decode_char(char c) {
  const int value = static_cast<unsigned char>(c) - kOffset;
  if (value < 0 || value > 63) throw ParseError(std::string("invalid graph6 character '") + c + "'");
  return value;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(encode_char(n));
  } else {
    out.push_back('~');
    out.push_back(encode_char((n >> 12) & 63));
    out.push_back(encode_char((n >> 6) & 63));
    out.push_back(encode_char(n & 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(encode_char(acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(encode_char(acc << (6 - filled)));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("empty graph6 string");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = decode_char(text[0]);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw ParseError("unsupported graph6 size prefix");
    n = (decode_char(text[1]) << 12) | (decode_char(text[2]) << 6) | decode_char(text[3]);
    pos = 4;
  }
  if (n > kMaxVertices) throw ParseError("graph6 input has " + std::to_string(n) + " vertices; at most 64 supported");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                     std::to_string(bytes));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = decode_char(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bytes > 0) {
    const int pad = static_cast<int>(bytes * 6 - bits);
    const int last = decode_char(text[pos + bytes - 1]);
    if ((last & ((1 << pad) - 1)) != 0) throw ParseError("graph6 padding bits must be zero");
  }
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

}  // namespace edgereg::graph
