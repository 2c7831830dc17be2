#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grouprw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing elements or measures from different group instances.
struct GroupMismatchError : Error {
    using Error::Error;
};

// Word-length query beyond the grown BFS table. Carries the best lower bound
// known at the time of the failure (the table radius + 1).
struct RadiusExceededError : Error {
    std::uint32_t known_lower_bound;
    RadiusExceededError(const std::string& msg, std::uint32_t lb)
        : Error(msg), known_lower_bound(lb) {}
};

// Element-count budget exhausted. Carries how far we got.
struct BudgetExceededError : Error {
    std::size_t partial_count;
    BudgetExceededError(const std::string& msg, std::size_t n)
        : Error(msg), partial_count(n) {}
};

// Bipartite walk evaluated on the wrong parity without lazification.
struct PeriodicityError : Error {
    using Error::Error;
};

// harmonic_part: the cocycle mean has a component in fix(T0); the input
// cannot be a consistent cocycle for this representation/measure.
struct ObstructedCocycleError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct UnsupportedError : Error {
    using Error::Error;
};

struct CacheError : Error {
    using Error::Error;
};

}  // namespace grouprw
