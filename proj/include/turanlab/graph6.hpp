#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "turanlab/graph.hpp"

namespace turanlab {

class graph6_parse_error : public std::runtime_error {
public:
    graph6_parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Header-less standard graph6: size byte 63+n, then the upper-triangle
// adjacency bits in column-major order packed 6 per byte, each byte offset
// by 63. Only the single-byte size form (n <= 62) is supported.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

}  // namespace turanlab
