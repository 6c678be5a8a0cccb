#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>

#include "turanlab/graph.hpp"

namespace turanlab {

// Isomorphism-invariant identifier. Byte 0 is the vertex count; the rest
// packs the upper-triangle adjacency bits of the canonically relabeled graph
// in row-major pair order, 8 bits per byte, most significant bit first.
struct CanonicalCertificate {
    std::string bytes;

    friend auto operator<=>(const CanonicalCertificate&, const CanonicalCertificate&) = default;
};

struct CanonicalLabeling {
    CanonicalCertificate certificate;
    std::array<std::uint8_t, Graph::kMaxVertices> to_canonical{};  // vertex -> canonical position
};

CanonicalCertificate canonical_form(const Graph& g);
CanonicalLabeling canonical_labeling(const Graph& g);

// The graph relabeled into canonical positions.
Graph canonical_representative(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

// Relabel: vertex v of g becomes vertex perm[v]. perm must be a permutation
// of 0..v(g)-1.
Graph apply_permutation(const Graph& g, std::span<const int> perm);

std::string to_hex(const CanonicalCertificate& cert);

}  // namespace turanlab

template <>
struct std::hash<turanlab::CanonicalCertificate> {
    std::size_t operator()(const turanlab::CanonicalCertificate& c) const noexcept {
        return std::hash<std::string>{}(c.bytes);
    }
};
