#pragma once

#include "cayley/permutation.hpp"
#include "cayley/transposition_tree.hpp"

#include <cstdint>
#include <vector>

namespace cayley {

/// Exact hop distances from the identity over all n! states of the
/// Cayley graph, one byte per state indexed by permutation rank.
struct DistanceField {
    int n;
    std::vector<std::uint8_t> dist;
    int diameter;
    std::vector<std::uint64_t> eccentricity_histogram;  // count per distance value

    int distance(const Permutation& p) const;
};

DistanceField bfs_from_identity(const TranspositionTree& t, int max_n = 10);

/// dist from identity to a single permutation (full BFS behind it).
int cayley_distance(const TranspositionTree& t, const Permutation& p, int max_n = 10);

}  // namespace cayley
