#include "cayley/sorter.hpp"

#include "cayley/ak_bound.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace cayley {

bool verify(const TranspositionTree& t, const SortingSequence& seq) {
    const auto tree_edges = t.edges();
    Permutation cur = seq.start;
    for (auto [i, j] : seq.edges) {
        if (i > j) std::swap(i, j);
        if (std::find(tree_edges.begin(), tree_edges.end(), Edge{i, j}) == tree_edges.end())
            return false;
        cur = cur.apply_transposition(i, j);
    }
    return cur.is_identity();
}

SortingSequence sort_admissible(const TranspositionTree& t, const Permutation& p) {
    if (p.degree() != t.vertex_count()) throw std::invalid_argument("degree mismatch");
    if (t.active_count() != t.vertex_count())
        throw std::invalid_argument("sorting needs the full tree");
    const auto dist = t.all_pairs_distances();
    std::vector<Edge> edges = t.edges();
    std::sort(edges.begin(), edges.end());

    SortingSequence seq{p, {}};
    Permutation cur = p;
    long f_prev = f_parts(t, dist, cur).value;
    while (!cur.is_identity()) {
        int pick_i = 0, pick_j = 0;
        // marker at vertex v is cur(v), homed at vertex cur(v)
        for (const auto& [i, j] : edges) {
            const bool a_moves = dist(j, cur(i)) < dist(i, cur(i));
            const bool b_moves = dist(i, cur(j)) < dist(j, cur(j));
            if (a_moves && b_moves) {
                pick_i = i;
                pick_j = j;
                break;
            }
        }
        if (pick_i == 0) {
            for (const auto& [i, j] : edges) {
                const bool i_homed = cur(i) == i;
                const bool j_homed = cur(j) == j;
                if ((i_homed && !j_homed && dist(i, cur(j)) < dist(j, cur(j))) ||
                    (j_homed && !i_homed && dist(j, cur(i)) < dist(i, cur(i)))) {
                    pick_i = i;
                    pick_j = j;
                    break;
                }
            }
        }
        if (pick_i == 0)
            throw std::logic_error("no admissible edge for " + cur.to_string());
        cur = cur.apply_transposition(pick_i, pick_j);
        seq.edges.push_back({pick_i, pick_j});
        const long f_now = f_parts(t, dist, cur).value;
        if (f_now >= f_prev)
            throw std::logic_error("bound did not decrease applying (" + std::to_string(pick_i) +
                                   "," + std::to_string(pick_j) + ")");
        f_prev = f_now;
    }
    return seq;
}

namespace {

int marker_position(const Permutation& p, int marker) {
    for (int v = 1; v <= p.degree(); ++v)
        if (p(v) == marker) return v;
    throw std::logic_error("marker not found");
}

// Moves marker m stepwise to vertex m along the active tree path.
void home_marker(const TranspositionTree& tree, Permutation& cur, int m,
                 std::vector<Edge>& out) {
    const int loc = marker_position(cur, m);
    const auto path = tree.path_between(loc, m);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        cur = cur.apply_transposition(path[k], path[k + 1]);
        out.push_back({std::min(path[k], path[k + 1]), std::max(path[k], path[k + 1])});
    }
}

}  // namespace

PairHomingResult sort_by_pair_homing(const TranspositionTree& t, const Permutation& p,
                                     PairStrategy strategy) {
    if (p.degree() != t.vertex_count()) throw std::invalid_argument("degree mismatch");
    if (t.active_count() != t.vertex_count())
        throw std::invalid_argument("sorting needs the full tree");

    PairHomingResult result{{p, {}}, {}};
    Permutation cur = p;
    TranspositionTree tree = t;
    while (tree.active_count() > 2) {
        const int diam = tree.diameter();
        const auto [i, j] = tree.diametral_pair(strategy);
        const int loc_i = marker_position(cur, i);
        Edge pair{i, j};
        if (tree.distance(i, loc_i) < diam) {
            home_marker(tree, cur, i, result.seq.edges);
            home_marker(tree, cur, j, result.seq.edges);
        } else {
            // marker i sits at the far end of a maximum-length path; home
            // the marker belonging to that leaf first, which bumps marker i
            // one step inward, then bring marker i all the way back
            home_marker(tree, cur, loc_i, result.seq.edges);
            home_marker(tree, cur, i, result.seq.edges);
            pair = {std::min(i, loc_i), std::max(i, loc_i)};
        }
        result.pairs.push_back(pair);
        tree = tree.remove_vertices(pair.first, pair.second);
    }
    if (tree.active_count() == 2) {
        const auto rest = tree.active_vertices();
        if (cur(rest[0]) != rest[0]) {
            cur = cur.apply_transposition(rest[0], rest[1]);
            result.seq.edges.push_back({rest[0], rest[1]});
        }
    }
    if (!cur.is_identity()) throw std::logic_error("pair homing failed to reach identity");
    return result;
}

namespace {

// Exact shortest sorting of the markers on a small residual tree (<= 4
// active vertices): BFS over the at most 24 states.
void solve_core(const TranspositionTree& tree, Permutation& cur, std::vector<Edge>& out) {
    const auto verts = tree.active_vertices();
    const auto core_edges = tree.active_edges();

    std::vector<int> target = verts;  // marker v on vertex v
    std::vector<int> state;
    for (int v : verts) state.push_back(cur(v));

    std::map<std::vector<int>, std::pair<std::vector<int>, Edge>> parent;
    parent[target] = {target, {0, 0}};
    std::deque<std::vector<int>> queue{target};
    while (!queue.empty() && !parent.count(state)) {
        const auto s = queue.front();
        queue.pop_front();
        for (const auto& [u, v] : core_edges) {
            auto next = s;
            const auto iu = std::find(verts.begin(), verts.end(), u) - verts.begin();
            const auto iv = std::find(verts.begin(), verts.end(), v) - verts.begin();
            std::swap(next[static_cast<std::size_t>(iu)], next[static_cast<std::size_t>(iv)]);
            if (!parent.count(next)) {
                parent[next] = {s, {u, v}};
                queue.push_back(next);
            }
        }
    }
    // walk back from the current state toward the identity
    auto s = state;
    while (s != target) {
        const auto& [prev, edge] = parent.at(s);
        cur = cur.apply_transposition(edge.first, edge.second);
        out.push_back(edge);
        s = prev;
    }
}

}  // namespace

SortingSequence sort_sequential_leaf(const TranspositionTree& t, const Permutation& p) {
    if (p.degree() != t.vertex_count()) throw std::invalid_argument("degree mismatch");
    if (t.active_count() != t.vertex_count())
        throw std::invalid_argument("sorting needs the full tree");

    SortingSequence seq{p, {}};
    Permutation cur = p;
    TranspositionTree tree = t;
    while (tree.active_count() > 4) {
        int leaf = 0;
        for (int v : tree.active_vertices()) {
            if (tree.active_degree(v) == 1) {
                leaf = v;
                break;
            }
        }
        home_marker(tree, cur, leaf, seq.edges);
        tree = tree.remove_leaf(leaf);
    }
    solve_core(tree, cur, seq.edges);
    if (!cur.is_identity()) throw std::logic_error("sequential homing failed to reach identity");
    return seq;
}

}  // namespace cayley
