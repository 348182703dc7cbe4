#pragma once

#include "cayley/permutation.hpp"
#include "cayley/transposition_tree.hpp"

#include <cstdint>

namespace cayley {

/// Per-permutation diameter bound c(p) - n + sum_i dist_T(i, p(i)),
/// split into its parts.
struct BoundParts {
    long value;
    long distance_sum;  // sum_i dist_T(i, p(i))
};

BoundParts f_parts(const TranspositionTree& t, const DistanceTable& dist, const Permutation& p);
long f_permutation(const TranspositionTree& t, const Permutation& p);

struct BoundReport {
    long value;
    Permutation witness;  // lowest-rank permutation attaining the max
    std::uint64_t permutations_scanned;
};

/// Exact max of f_permutation over all n! permutations. Refuses degrees
/// above max_n; raise the limit explicitly for bigger scans.
BoundReport tree_bound(const TranspositionTree& t, int max_n = 10);

}  // namespace cayley
