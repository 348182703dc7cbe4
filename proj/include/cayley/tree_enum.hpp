#pragma once

#include "cayley/transposition_tree.hpp"

#include <string>
#include <vector>

namespace cayley {

/// Labeled tree from a Pruefer code of length n-2 (labels in {1..n}).
/// An empty code gives the single edge on 2 vertices.
TranspositionTree from_pruefer(const std::vector<int>& code);

/// Center-rooted canonical encoding; equal strings iff the (active)
/// trees are isomorphic. Bicentral trees take the smaller of the two
/// center-rooted encodings.
std::string canonical_form(const TranspositionTree& t);

struct TreeCatalog {
    int n;
    std::vector<TranspositionTree> representatives;  // one per isomorphism class

    std::size_t count() const { return representatives.size(); }
};

/// All non-isomorphic trees on n vertices, via exhaustive Pruefer codes
/// deduplicated by canonical form.
TreeCatalog enumerate_trees(int n, int max_n = 10);

}  // namespace cayley
