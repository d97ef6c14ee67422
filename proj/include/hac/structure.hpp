#pragma once

#include <vector>

#include "hac/kendall.hpp"
#include "hac/tree.hpp"

namespace hac {

// Output of agglomerative structure estimation: a tree skeleton (binary when
// produced directly; possibly non-binary after collapsing) plus the tau
// estimate attached to each fork. The fork taus of the direct output are
// monotone: parent tau <= child tau on every fork edge.
struct StructureEstimate {
    TreeShape shape;
    std::vector<double> fork_taus;  // fork_taus[f - d - 1]

    double fork_tau(int fork) const { return fork_taus[fork - shape.d - 1]; }
};

// Mean of tau over the cross product of two disjoint leaf groups (1-based
// leaf ids; the negated dissimilarity driving the clustering).
double linkage_similarity(const TauMatrix& taus, const std::vector<int>& leaves_a,
                          const std::vector<int>& leaves_b);

// Agglomerative estimation: repeatedly joins the pair of active nodes with
// the highest average pairwise tau; ties break to the lexicographically
// smallest node-id pair. Returns a binary dendrogram.
StructureEstimate estimate_structure(const TauMatrix& taus);

}  // namespace hac
