#pragma once

#include "sheito/bphz/forest.hpp"

#include <vector>

namespace sheito {

// A subgraph without isolated vertices, identified by its edge set. Edge i is the edge
// (parent(i) -> i) of the ambient tree, i >= 1.
struct Subforest {
    std::vector<bool> edges;                  // size = node_count, edges[0] unused
    std::vector<std::vector<int>> components; // node lists, top node first
    Forest forest;                            // components as standalone trees (n, e inherited)
};

std::vector<Subforest> subforests(const DecoratedTree& t);

// Contract every component of gamma to a single node carrying the summed decorations.
// Throws if the mask marks edge 0 or has the wrong size.
DecoratedTree contract(const DecoratedTree& t, const std::vector<bool>& gamma);

// Extraction-contraction coproduct, with left components of positive homogeneity
// projected out and the e_gamma sums truncated accordingly.
TensorSum coproduct_minus(const DecoratedTree& t, const ScalingAssignment& s = {});

} // namespace sheito
