#include "absspec/graph6.hpp"

namespace absspec {

std::string graph6_encode(const Graph& g) {
  int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bits = 0, acc = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = acc << 1 | (g.has_edge(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.empty()) raise(errc::malformed_graph6, "empty input");
  int n = static_cast<int>(static_cast<unsigned char>(text[0])) - 63;
  if (n < 1 || n > kMaxOrder)
    raise(errc::malformed_graph6, "header byte out of range");
  int nbits = n * (n - 1) / 2;
  int expect = 1 + (nbits + 5) / 6;
  if (static_cast<int>(text.size()) != expect)
    raise(errc::malformed_graph6, "length " + std::to_string(text.size()) +
                                      ", expected " + std::to_string(expect));
  std::vector<VertexPair> edges;
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
      if (byte < 0 || byte > 63) raise(errc::malformed_graph6, "byte out of range");
      if (byte >> (5 - bit % 6) & 1) edges.emplace_back(u, v);
    }
  }
  // Trailing pad bits must be zero; anything else is a corrupt encoding.
  for (; bit < 6 * ((nbits + 5) / 6); ++bit) {
    int byte = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
    if (byte < 0 || byte > 63) raise(errc::malformed_graph6, "byte out of range");
    if (byte >> (5 - bit % 6) & 1) raise(errc::malformed_graph6, "nonzero padding");
  }
  return Graph(n, edges);
}

}  // namespace absspec
