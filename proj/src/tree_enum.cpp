#include "cayley/tree_enum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cayley {

namespace {

std::vector<Edge> pruefer_edges(const std::vector<int>& code, int n) {
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (int v : code) ++degree[static_cast<std::size_t>(v)];
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    // ptr/leaf walk instead of a heap; classic linear-time decode
    int ptr = 1;
    while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int v : code) {
        edges.push_back({std::min(leaf, v), std::max(leaf, v)});
        if (--degree[static_cast<std::size_t>(v)] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back({leaf, n});
    return edges;
}

std::string encode_rooted(int v, int parent, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> parts;
    for (int w : adj[static_cast<std::size_t>(v)])
        if (w != parent) parts.push_back(encode_rooted(w, v, adj));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& s : parts) out += s;
    out += ")";
    return out;
}

std::string canonical_of_adj(const std::vector<int>& verts,
                             const std::vector<std::vector<int>>& adj) {
    if (verts.size() == 1) return "()";
    // peel leaves until one or two center vertices remain
    std::vector<int> degree(adj.size(), 0);
    for (int v : verts) degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    std::vector<int> layer;
    for (int v : verts)
        if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    std::size_t remaining = verts.size();
    std::vector<int> centers = layer;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<int> next;
        for (int v : layer) {
            degree[static_cast<std::size_t>(v)] = 0;
            for (int w : adj[static_cast<std::size_t>(v)])
                if (degree[static_cast<std::size_t>(w)] > 0 && --degree[static_cast<std::size_t>(w)] == 1)
                    next.push_back(w);
        }
        layer = std::move(next);
        centers = layer;
    }
    std::string best;
    for (int c : centers) {
        auto enc = encode_rooted(c, 0, adj);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

}  // namespace

TranspositionTree from_pruefer(const std::vector<int>& code) {
    const int n = static_cast<int>(code.size()) + 2;
    for (int v : code)
        if (v < 1 || v > n)
            throw std::invalid_argument("code label " + std::to_string(v) + " out of range 1.." +
                                        std::to_string(n));
    return TranspositionTree::validate(n, pruefer_edges(code, n));
}

std::string canonical_form(const TranspositionTree& t) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.vertex_count()) + 1);
    for (const auto& [u, v] : t.active_edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return canonical_of_adj(t.active_vertices(), adj);
}

TreeCatalog enumerate_trees(int n, int max_n) {
    if (n < 2) throw std::invalid_argument("enumeration needs n >= 2");
    if (n > max_n)
        throw std::runtime_error("degree " + std::to_string(n) +
                                 " exceeds the tree enumeration limit " + std::to_string(max_n));
    std::map<std::string, TranspositionTree> forms;
    if (n == 2) {
        forms.emplace("(())", TranspositionTree::validate(2, {{1, 2}}));
    } else {
        std::vector<int> code(static_cast<std::size_t>(n) - 2, 1);
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
        std::vector<int> verts(static_cast<std::size_t>(n));
        std::iota(verts.begin(), verts.end(), 1);
        for (;;) {
            const auto edges = pruefer_edges(code, n);
            for (auto& a : adj) a.clear();
            for (const auto& [u, v] : edges) {
                adj[static_cast<std::size_t>(u)].push_back(v);
                adj[static_cast<std::size_t>(v)].push_back(u);
            }
            auto form = canonical_of_adj(verts, adj);
            if (!forms.count(form)) forms.emplace(std::move(form), TranspositionTree::validate(n, edges));
            // odometer over the n^(n-2) codes
            std::size_t pos = 0;
            while (pos < code.size() && code[pos] == n) {
                code[pos] = 1;
                ++pos;
            }
            if (pos == code.size()) break;
            ++code[pos];
        }
    }
    TreeCatalog cat{n, {}};
    for (auto& [form, tree] : forms) cat.representatives.push_back(std::move(tree));
    return cat;
}

}  // namespace cayley
