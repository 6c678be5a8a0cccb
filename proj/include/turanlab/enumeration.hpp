#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "turanlab/canonical.hpp"
#include "turanlab/detection.hpp"
#include "turanlab/graph.hpp"

namespace turanlab {

// Both restrictions define edge-monotone properties (closed under edge
// deletion), which is what makes subtree pruning during augmentation sound.
struct EnumerationFilter {
    std::optional<ForbiddenFamily> forbidden;
    std::optional<int> max_edges;
};

inline constexpr int kEnumerationBudget = 11;

// Streams exactly one representative per isomorphism class on n vertices
// satisfying the filter, ordered by edge count and then by canonical
// certificate. Emission order does not depend on the worker count.
void enumerate(int n, const EnumerationFilter& filter,
               const std::function<void(const Graph&, const CanonicalCertificate&)>& sink,
               unsigned workers = 0);

std::vector<Graph> enumerate_all(int n, const EnumerationFilter& filter = {}, unsigned workers = 0);

std::uint64_t enumerate_count(int n, const EnumerationFilter& filter = {}, unsigned workers = 0);

}  // namespace turanlab
