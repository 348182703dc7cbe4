#pragma once

#include "cayley/permutation.hpp"
#include "cayley/transposition_tree.hpp"

#include <map>
#include <set>
#include <vector>

namespace cayley {

/// One complete diametral-pair-removal run and its accumulated estimate.
struct AlgARun {
    std::vector<Edge> pairs;             // removed in order
    std::vector<int> per_step_diameters; // diameter when each pair was chosen
    int beta = 0;
    std::vector<int> leftover;           // final active vertices (size 1 or 2)
};

/// Runs the diametral-pair removal under a deterministic pair strategy.
AlgARun run_alg_a(const TranspositionTree& t, PairStrategy strategy = PairStrategy::double_sweep);

/// Replays an explicit pair sequence, checking each pair is diametral in
/// the tree state it is removed from.
AlgARun replay_alg_a(const TranspositionTree& t, const std::vector<Edge>& pairs);

/// sum(2*d - 1) over the pair distances, plus 1 when n is even.
int closed_form_beta(int n, const std::vector<int>& pair_distances);

struct BetaSet {
    std::set<int> values;
    int beta_min = 0;
    int beta_max = 0;
    std::map<int, AlgARun> runs;  // one witness run per distinct value
};

/// Every achievable estimate over all diametral-pair choices, memoized
/// on the set of remaining active vertices.
BetaSet enumerate_beta_set(const TranspositionTree& t, int max_n = 16);

/// The product of the run's pairs as disjoint transpositions (plus the
/// leftover pair when n is even).
Permutation witness_permutation(int n, const AlgARun& run);

}  // namespace cayley
