#include "cayley/transposition_tree.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cayley {

DistanceTable::DistanceTable(int n, std::vector<int> dist) : n_(n), dist_(std::move(dist)) {
    if (dist_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("distance table size mismatch");
}

int DistanceTable::max_entry() const {
    int m = 0;
    for (int d : dist_) m = std::max(m, d);
    return m;
}

TranspositionTree::TranspositionTree(int n, std::vector<Edge> edges)
    : n_(n),
      edges_(std::move(edges)),
      adj_(static_cast<std::size_t>(n) + 1),
      active_((n == 32) ? ~0u : ((1u << n) - 1u)),
      active_count_(n) {
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

TranspositionTree TranspositionTree::validate(int n, const std::vector<Edge>& edges) {
    if (n < 1 || n > 32) throw std::invalid_argument("vertex count must be in 1..32");
    std::vector<Edge> norm;
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge label out of range 1.." + std::to_string(n));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        norm.push_back({u, v});
    }
    if (static_cast<int>(norm.size()) != n - 1)
        throw std::invalid_argument("a tree on " + std::to_string(n) + " vertices needs " +
                                    std::to_string(n - 1) + " edges, got " +
                                    std::to_string(norm.size()));
    TranspositionTree t(n, std::move(norm));
    // n-1 edges and no cycle <=> connected; BFS decides both at once
    std::vector<char> vis(static_cast<std::size_t>(n) + 1, 0);
    std::deque<int> queue{1};
    vis[1] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : t.adj_[static_cast<std::size_t>(u)]) {
            if (!vis[static_cast<std::size_t>(w)]) {
                vis[static_cast<std::size_t>(w)] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    if (reached != n) throw std::invalid_argument("graph is disconnected (and contains a cycle)");
    return t;
}

TranspositionTree TranspositionTree::parse(const std::string& text) {
    std::vector<Edge> edges;
    int max_label = 0;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        int u = 0, v = 0;
        if (!(ls >> u >> v))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected two labels");
        std::string rest;
        if (ls >> rest)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing tokens");
        if (u < 1 || v < 1)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": labels must be positive");
        edges.push_back({u, v});
        max_label = std::max({max_label, u, v});
    }
    if (edges.empty()) throw std::invalid_argument("no edges in tree description");
    return validate(max_label, edges);
}

TranspositionTree TranspositionTree::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open tree file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

TranspositionTree TranspositionTree::path(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return validate(n, edges);
}

TranspositionTree TranspositionTree::star(int n) {
    std::vector<Edge> edges;
    for (int i = 2; i <= n; ++i) edges.push_back({1, i});
    return validate(n, edges);
}

TranspositionTree TranspositionTree::broom(int n) {
    if (n < 4) throw std::invalid_argument("broom needs at least 4 vertices");
    std::vector<Edge> edges;
    for (int i = 1; i < n - 2; ++i) edges.push_back({i, i + 1});
    edges.push_back({n - 2, n - 1});
    edges.push_back({n - 2, n});
    return validate(n, edges);
}

std::vector<int> TranspositionTree::active_vertices() const {
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v)
        if (is_active(v)) out.push_back(v);
    return out;
}

int TranspositionTree::lowest_active() const {
    for (int v = 1; v <= n_; ++v)
        if (is_active(v)) return v;
    throw std::logic_error("no active vertices");
}

std::vector<Edge> TranspositionTree::active_edges() const {
    std::vector<Edge> out;
    for (const auto& e : edges_)
        if (is_active(e.first) && is_active(e.second)) out.push_back(e);
    return out;
}

std::vector<int> TranspositionTree::neighbors(int v) const {
    std::vector<int> out;
    for (int w : adj_[static_cast<std::size_t>(v)])
        if (is_active(w)) out.push_back(w);
    return out;
}

int TranspositionTree::active_degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

std::vector<int> TranspositionTree::distances_from(int source) const {
    if (!is_active(source)) throw std::invalid_argument("source vertex is not active");
    std::vector<int> dist(static_cast<std::size_t>(n_) + 1, -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : adj_[static_cast<std::size_t>(u)]) {
            if (is_active(w) && dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

DistanceTable TranspositionTree::all_pairs_distances() const {
    std::vector<int> table(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
    for (int s = 1; s <= n_; ++s) {
        if (!is_active(s)) continue;
        const auto d = distances_from(s);
        for (int v = 1; v <= n_; ++v)
            table[static_cast<std::size_t>(s - 1) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(v - 1)] = d[static_cast<std::size_t>(v)];
    }
    return DistanceTable(n_, std::move(table));
}

int TranspositionTree::distance(int i, int j) const {
    const auto d = distances_from(i);
    const int dij = d[static_cast<std::size_t>(j)];
    if (dij < 0) throw std::invalid_argument("vertex not active");
    return dij;
}

namespace {
// Farthest active vertex from source, ties broken by lowest label.
int farthest_from(const TranspositionTree& t, int source, int* out_dist = nullptr) {
    const auto d = t.distances_from(source);
    int best = source, best_d = 0;
    for (int v = 1; v <= t.vertex_count(); ++v) {
        const int dv = d[static_cast<std::size_t>(v)];
        if (dv > best_d) {
            best = v;
            best_d = dv;
        }
    }
    if (out_dist) *out_dist = best_d;
    return best;
}
}  // namespace

int TranspositionTree::diameter() const {
    if (active_count_ < 2) return 0;
    int d = 0;
    const int i = farthest_from(*this, lowest_active());
    farthest_from(*this, i, &d);
    return d;
}

Edge TranspositionTree::diametral_pair(PairStrategy strategy) const {
    if (active_count_ < 2) throw std::logic_error("need at least 2 active vertices");
    if (strategy == PairStrategy::double_sweep) {
        const int i = farthest_from(*this, lowest_active());
        const int j = farthest_from(*this, i);
        return {std::min(i, j), std::max(i, j)};
    }
    return all_diametral_pairs().front();
}

std::vector<Edge> TranspositionTree::all_diametral_pairs() const {
    if (active_count_ < 2) throw std::logic_error("need at least 2 active vertices");
    const auto table = all_pairs_distances();
    const int diam = table.max_entry();
    std::vector<Edge> out;
    for (int i = 1; i <= n_; ++i) {
        if (!is_active(i)) continue;
        for (int j = i + 1; j <= n_; ++j)
            if (is_active(j) && table(i, j) == diam) out.push_back({i, j});
    }
    return out;
}

std::vector<int> TranspositionTree::path_between(int i, int j) const {
    if (!is_active(i) || !is_active(j)) throw std::invalid_argument("endpoint not active");
    // parents via BFS from j, then walk i -> j
    std::vector<int> parent(static_cast<std::size_t>(n_) + 1, 0);
    std::vector<int> dist(static_cast<std::size_t>(n_) + 1, -1);
    std::deque<int> queue{j};
    dist[static_cast<std::size_t>(j)] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : adj_[static_cast<std::size_t>(u)]) {
            if (is_active(w) && dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                parent[static_cast<std::size_t>(w)] = u;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> out{i};
    int cur = i;
    while (cur != j) {
        cur = parent[static_cast<std::size_t>(cur)];
        out.push_back(cur);
    }
    return out;
}

TranspositionTree TranspositionTree::remove_vertices(int i, int j) const {
    if (!is_active(i) || !is_active(j) || i == j)
        throw std::invalid_argument("must remove two distinct active vertices");
    TranspositionTree t(*this);
    t.active_ &= ~(1u << (i - 1));
    t.active_ &= ~(1u << (j - 1));
    t.active_count_ -= 2;
    if (t.active_count_ > 0) {
        const auto d = t.distances_from(t.lowest_active());
        for (int v = 1; v <= n_; ++v)
            if (t.is_active(v) && d[static_cast<std::size_t>(v)] < 0)
                throw std::logic_error("removing {" + std::to_string(i) + "," +
                                       std::to_string(j) + "} disconnects the tree");
    }
    return t;
}

TranspositionTree TranspositionTree::remove_leaf(int v) const {
    if (!is_active(v)) throw std::invalid_argument("vertex not active");
    if (active_count_ > 1 && active_degree(v) != 1)
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not a leaf");
    TranspositionTree t(*this);
    t.active_ &= ~(1u << (v - 1));
    t.active_count_ -= 1;
    return t;
}

std::string TranspositionTree::to_edge_list() const {
    std::string out;
    for (const auto& [u, v] : active_edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace cayley
