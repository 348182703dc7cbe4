#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cayley {

using Edge = std::pair<int, int>;  // unordered, stored with first < second

/// Symmetric hop-distance table over the active vertices of a tree.
/// Inactive rows/columns hold -1.
class DistanceTable {
public:
    DistanceTable(int n, std::vector<int> dist);

    int operator()(int i, int j) const {
        return dist_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(j - 1)];
    }
    int size() const { return n_; }
    int max_entry() const;

private:
    int n_;
    std::vector<int> dist_;  // row-major n x n
};

enum class PairStrategy {
    double_sweep,      // two farthest-vertex sweeps, ties broken by lowest label
    lexicographic_min  // smallest diametral pair in lexicographic order
};

/// A tree on labeled vertices {1..n} whose edges are transpositions.
/// Vertices can be deactivated in pairs; the induced graph on the active
/// set stays a tree. Immutable value.
class TranspositionTree {
public:
    /// Checks connectivity and acyclicity; throws std::invalid_argument
    /// naming the defect otherwise.
    static TranspositionTree validate(int n, const std::vector<Edge>& edges);

    /// Edge-list text format: one "u v" pair per line, '#' comments,
    /// n inferred as the maximum label.
    static TranspositionTree parse(const std::string& text);
    static TranspositionTree load_file(const std::string& path);

    static TranspositionTree path(int n);
    static TranspositionTree star(int n);  // center 1, leaves 2..n
    /// Path 1..n-2 with two extra leaves n-1, n attached to n-2.
    static TranspositionTree broom(int n);

    int vertex_count() const { return n_; }
    int active_count() const { return active_count_; }
    std::uint32_t active_mask() const { return active_; }
    bool is_active(int v) const { return (active_ >> (v - 1)) & 1u; }
    std::vector<int> active_vertices() const;
    int lowest_active() const;

    /// Edges of the full tree (including ones touching removed vertices).
    const std::vector<Edge>& edges() const { return edges_; }
    /// Edges with both endpoints active.
    std::vector<Edge> active_edges() const;
    /// Active neighbors of an active vertex.
    std::vector<int> neighbors(int v) const;
    int active_degree(int v) const;

    DistanceTable all_pairs_distances() const;
    /// Hop distances from one active vertex; -1 on inactive entries.
    std::vector<int> distances_from(int source) const;
    int distance(int i, int j) const;
    int diameter() const;

    Edge diametral_pair(PairStrategy strategy) const;
    std::vector<Edge> all_diametral_pairs() const;

    /// Path of vertices from i to j in the active tree, inclusive.
    std::vector<int> path_between(int i, int j) const;

    /// Deactivates i and j; throws std::logic_error if the remainder
    /// would be disconnected.
    TranspositionTree remove_vertices(int i, int j) const;

    /// Deactivates a single leaf; throws if v is not an active leaf.
    TranspositionTree remove_leaf(int v) const;

    std::string to_edge_list() const;

private:
    TranspositionTree(int n, std::vector<Edge> edges);

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;  // full-tree adjacency, 1-based index
    std::uint32_t active_;
    int active_count_;
};

}  // namespace cayley
