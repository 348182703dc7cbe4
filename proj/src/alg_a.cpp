#include "cayley/alg_a.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace cayley {

namespace {

AlgARun finish(AlgARun run, const TranspositionTree& residue) {
    run.leftover = residue.active_vertices();
    run.beta += residue.active_count() - 1;
    return run;
}

}  // namespace

AlgARun run_alg_a(const TranspositionTree& t, PairStrategy strategy) {
    if (t.active_count() != t.vertex_count())
        throw std::invalid_argument("algorithm runs on the full tree");
    AlgARun run;
    TranspositionTree cur = t;
    while (cur.active_count() >= 3) {
        const int diam = cur.diameter();
        const Edge pair = cur.diametral_pair(strategy);
        run.pairs.push_back(pair);
        run.per_step_diameters.push_back(diam);
        run.beta += 2 * diam - 1;
        cur = cur.remove_vertices(pair.first, pair.second);
    }
    return finish(std::move(run), cur);
}

AlgARun replay_alg_a(const TranspositionTree& t, const std::vector<Edge>& pairs) {
    if (t.active_count() != t.vertex_count())
        throw std::invalid_argument("algorithm runs on the full tree");
    AlgARun run;
    TranspositionTree cur = t;
    for (auto [i, j] : pairs) {
        if (cur.active_count() < 3) throw std::invalid_argument("too many pairs for this tree");
        if (i > j) std::swap(i, j);
        const int diam = cur.diameter();
        if (cur.distance(i, j) != diam)
            throw std::invalid_argument("pair (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") is not diametral in the current tree");
        run.pairs.push_back({i, j});
        run.per_step_diameters.push_back(diam);
        run.beta += 2 * diam - 1;
        cur = cur.remove_vertices(i, j);
    }
    if (cur.active_count() >= 3)
        throw std::invalid_argument("pair sequence too short: " +
                                    std::to_string(cur.active_count()) + " vertices remain");
    return finish(std::move(run), cur);
}

int closed_form_beta(int n, const std::vector<int>& pair_distances) {
    if (static_cast<int>(pair_distances.size()) != (n - 1) / 2)
        throw std::invalid_argument("expected " + std::to_string((n - 1) / 2) +
                                    " pair distances for n=" + std::to_string(n));
    int beta = 0;
    for (int d : pair_distances) {
        if (d < 1) throw std::invalid_argument("pair distance must be >= 1");
        beta += 2 * d - 1;
    }
    return beta + ((n + 1) % 2);
}

namespace {

// Memoized over the remaining active-vertex set: total contribution of
// every completable choice sequence from that state, with one witness
// pair suffix per value.
using Suffixes = std::map<int, std::vector<Edge>>;

const Suffixes& explore(const TranspositionTree& cur,
                        std::unordered_map<std::uint32_t, Suffixes>& memo) {
    const auto it = memo.find(cur.active_mask());
    if (it != memo.end()) return it->second;

    Suffixes result;
    if (cur.active_count() <= 2) {
        result[cur.active_count() - 1] = {};
    } else {
        const int step = 2 * cur.diameter() - 1;
        for (const Edge& pair : cur.all_diametral_pairs()) {
            const auto& sub = explore(cur.remove_vertices(pair.first, pair.second), memo);
            for (const auto& [value, suffix] : sub) {
                auto [pos, inserted] = result.try_emplace(step + value);
                if (inserted) {
                    pos->second.push_back(pair);
                    pos->second.insert(pos->second.end(), suffix.begin(), suffix.end());
                }
            }
        }
    }
    return memo.emplace(cur.active_mask(), std::move(result)).first->second;
}

}  // namespace

BetaSet enumerate_beta_set(const TranspositionTree& t, int max_n) {
    if (t.active_count() != t.vertex_count())
        throw std::invalid_argument("enumeration runs on the full tree");
    if (t.vertex_count() > max_n)
        throw std::runtime_error("degree " + std::to_string(t.vertex_count()) +
                                 " exceeds the enumeration limit " + std::to_string(max_n));
    std::unordered_map<std::uint32_t, Suffixes> memo;
    const Suffixes top = explore(t, memo);

    BetaSet out;
    for (const auto& [value, pairs] : top) {
        out.values.insert(value);
        out.runs.emplace(value, replay_alg_a(t, pairs));
    }
    out.beta_min = *out.values.begin();
    out.beta_max = *out.values.rbegin();
    return out;
}

Permutation witness_permutation(int n, const AlgARun& run) {
    Permutation p = Permutation::identity(n);
    for (const auto& [i, j] : run.pairs) p = p.apply_transposition(i, j);
    if (run.leftover.size() == 2) p = p.apply_transposition(run.leftover[0], run.leftover[1]);
    return p;
}

}  // namespace cayley
