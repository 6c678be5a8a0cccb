#pragma once

#include <stdexcept>

namespace turanlab {

// A graph operation would exceed the 64-vertex adjacency-row capacity.
class capacity_error : public std::length_error {
public:
    using std::length_error::length_error;
};

// An exact-search size budget was exceeded (enumeration, max-cut).
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace turanlab
