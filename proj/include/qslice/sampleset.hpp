#pragma once

#include <cstdint>
#include <map>

#include "qslice/errors.hpp"

namespace qslice {

/// Multiset of measured bitstrings. Keys are basis indices with variable
/// (qubit) i at bit i, least significant first; counts are multiplicities.
struct SampleSet {
    int n = 0;
    long long shots = 0;
    std::map<std::uint64_t, long long> counts;

    void add(std::uint64_t key, long long count = 1) {
        counts[key] += count;
        shots += count;
    }

    bool empty() const { return shots == 0; }

    friend bool operator==(const SampleSet&, const SampleSet&) = default;
};

} // namespace qslice
