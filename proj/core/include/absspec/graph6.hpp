#pragma once

#include <string>
#include <string_view>

#include "absspec/graph.hpp"

namespace absspec {

// graph6 text format, short form only (n <= 62, single header byte n+63).
// Upper-triangle adjacency bits in column-major order, packed into 6-bit
// groups, most significant bit first, zero-padded, each group offset by 63.
std::string graph6_encode(const Graph& g);

// Rejects bad headers, bad byte ranges, wrong length, and nonzero padding.
Graph graph6_decode(std::string_view text);

}  // namespace absspec
