#pragma once

#include <stdexcept>
#include <string>

namespace zeb {

// Base class for all library errors so callers can catch everything at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two graphs were combined that do not share the same letter alphabet.
struct AlphabetMismatch : Error {
    using Error::Error;
};

// Vector lengths (words, rates, user counts) do not line up.
struct DimensionMismatch : Error {
    using Error::Error;
};

// A graph was asked for its clique partition but is not a disjoint
// union of cliques.
struct NotCliquePartition : Error {
    using Error::Error;
};

// An enumeration or instance size guard tripped before the work started.
struct SizeLimitExceeded : Error {
    using Error::Error;
};

// A search ran out of its node budget mid-way.  Distinct from a negative
// answer: nothing was proven.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what, unsigned long long nodes_explored = 0)
        : Error(what), nodes(nodes_explored) {}
    unsigned long long nodes;
};

// Region searches refuse instances beyond their supported user/letter counts.
struct LimitExceeded : Error {
    using Error::Error;
};

// Decoding was handed an observation string outside every family.
struct UnknownObservation : Error {
    using Error::Error;
};

} // namespace zeb
