#pragma once

#include "cayley/alg_a.hpp"
#include "cayley/permutation.hpp"
#include "cayley/transposition_tree.hpp"

#include <vector>

namespace cayley {

/// An ordered list of tree edges whose left-to-right application homes
/// every marker of `start`.
struct SortingSequence {
    Permutation start;
    std::vector<Edge> edges;

    std::size_t length() const { return edges.size(); }
};

/// Replays the sequence and checks it ends at the identity using tree
/// edges only.
bool verify(const TranspositionTree& t, const SortingSequence& seq);

/// Greedy sorter: at each step applies the lexicographically first edge
/// that moves both endpoint markers closer to home, or failing that, the
/// first edge that moves an unhomed marker across a homed endpoint. The
/// per-permutation bound strictly decreases each step.
SortingSequence sort_admissible(const TranspositionTree& t, const Permutation& p);

struct PairHomingResult {
    SortingSequence seq;
    std::vector<Edge> pairs;  // legal diametral-pair choice sequence
};

/// Homes markers two at a time onto a diametral pair, removing the pair
/// after each round; uses at most 2*diam-1 edges per round, so the total
/// never exceeds the estimate the same pair sequence would produce.
PairHomingResult sort_by_pair_homing(const TranspositionTree& t, const Permutation& p,
                                     PairStrategy strategy = PairStrategy::double_sweep);

/// Homes one leaf marker per round (lowest-labeled active leaf first),
/// shrinking the tree until at most 4 vertices remain; the residual core
/// is finished by exact search over its <= 24 states.
SortingSequence sort_sequential_leaf(const TranspositionTree& t, const Permutation& p);

}  // namespace cayley
