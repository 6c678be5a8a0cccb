#include "turanlab/graph6.hpp"

namespace turanlab {

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw capacity_error("encode_graph6: single-byte size prefix supports at most 62 vertices");
    std::string out;
    out.reserve(1 + static_cast<std::size_t>(n * (n - 1) / 2 + 5) / 6);
    out.push_back(static_cast<char>(63 + n));
    int nbits = 0;
    std::uint8_t acc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = static_cast<std::uint8_t>((acc << 1) | (g.has_edge(i, j) ? 1 : 0));
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph decode_graph6(std::string_view text) {
    if (text.empty()) throw graph6_parse_error("empty graph6 input", 0);
    auto value_at = [&](std::size_t i) -> int {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw graph6_parse_error("byte outside graph6 alphabet", i);
        return c - 63;
    };
    const int n = value_at(0);
    if (n == 63)
        throw graph6_parse_error("multi-byte vertex count not supported (more than 62 vertices)", 0);
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = 1 + (nbits + 5) / 6;
    if (text.size() < expected) throw graph6_parse_error("truncated adjacency data", text.size());
    if (text.size() > expected) throw graph6_parse_error("trailing data after graph", expected);

    GraphBuilder b(n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((value_at(1 + bit / 6) >> (5 - bit % 6)) & 1) b.add_edge(i, j);
    if (nbits % 6) {
        const std::size_t last = expected - 1;
        const int pad = value_at(last) & ((1 << (6 - nbits % 6)) - 1);
        if (pad) throw graph6_parse_error("nonzero padding bits", last);
    }
    return b.build();
}

}  // namespace turanlab
