#pragma once

#include "diocone/cone.hpp"

#include <optional>

namespace diocone {

struct Candidate {
    GradedValue value;
    long generation = 0;            // dual-algorithm bookkeeping
    std::optional<Int> reducer_hint; // positive-part value stored with a sum
};

// True iff x != y and sigma_i(x) >= sigma_i(y) for all i.  Works purely on
// the cached sigma-values; no vector subtraction.
bool reduces(const GradedValue& y, const GradedValue& x);

// Extracts the Hilbert basis from a candidate list sorted by ascending total
// degree, using the degree guard and the darwinistic reordering of the
// reducer list.  The input must hold at most one representative per residue
// class modulo units and no units.
std::vector<GradedValue> reduce_to_hilbert_basis(const std::vector<Candidate>& candidates);

// Maximal subset with no internal reductions and no units.  Lower total
// degree wins; ties break lexicographically on the vector.
std::vector<Candidate> auto_reduce(const std::vector<Candidate>& candidates);

} // namespace diocone
