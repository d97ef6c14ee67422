#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hac/generators.hpp"
#include "hac/kendall.hpp"

namespace hac {

// Rooted tree over nodes 1..d+k: leaves are 1..d, forks d+1..d+k, the root
// is d+k. Child forks always carry smaller ids than their parent, so a
// bottom-up sweep in id order visits children first.
struct TreeShape {
    int d = 0;
    std::vector<std::vector<int>> children;  // children[f - d - 1] for fork f

    int fork_count() const { return static_cast<int>(children.size()); }
    int root() const { return d + fork_count(); }
    bool is_leaf(int v) const { return v >= 1 && v <= d; }
    bool is_fork(int v) const { return v > d && v <= root(); }
    const std::vector<int>& child_list(int fork) const { return children[fork - d - 1]; }

    // Throws std::invalid_argument on any structural violation.
    void validate() const;

    std::vector<int> parents() const;               // parent id per node, 0 for root
    std::vector<int> leaves_below(int v) const;     // descendant leaves, ascending
    std::vector<int> forks_below(int fork) const;   // strict descendant forks
    std::vector<int> ancestor_forks(int v) const;   // path to root, nearest first
    int yca(int leaf_i, int leaf_j) const;          // youngest common ancestor fork
};

struct HacTree {
    TreeShape shape;
    std::vector<Generator> labels;  // labels[f - d - 1] for fork f

    int d() const { return shape.d; }
    int fork_count() const { return shape.fork_count(); }
    int root() const { return shape.root(); }
    const Generator& label(int fork) const { return labels[fork - shape.d - 1]; }
    Generator& label(int fork) { return labels[fork - shape.d - 1]; }
    void validate() const;
};

// Copula value at u (size d); bottom-up nested-AC evaluation.
double evaluate(const HacTree& tree, const std::vector<double>& u);

// Sufficient-nesting-condition check on every parent-child fork pair.
// Violations are reported as (parent fork, child fork); the same-family
// pair of family 14 has no known rule and is reported as a violation.
struct SncReport {
    bool ok = true;
    std::vector<std::pair<int, int>> violations;
};
SncReport check_snc(const HacTree& tree);

// Rule backing check_snc for one parent-child generator pair.
bool snc_pair_ok(const Generator& parent, const Generator& child);

// tau(lambda(yca(i,j))) for all leaf pairs.
TauMatrix implied_tau_matrix(const HacTree& tree);

// JSON document: {"d": int, "root": {"family": ..., "theta": ..., "children": [...]}}
// with leaves as plain integers. Fork ids are renumbered canonically on load.
std::string serialize(const HacTree& tree);
HacTree deserialize(const std::string& text);

// Shape equality up to fork renumbering and child reordering; leaf labels fixed.
bool structure_equal(const HacTree& a, const HacTree& b);

// Given equal structure: same family label on every corresponding fork.
bool families_equal(const HacTree& a, const HacTree& b);

}  // namespace hac
