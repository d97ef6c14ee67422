#include "hac/tree.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "hac/detail/math.hpp"

namespace hac {

void TreeShape::validate() const {
    if (d < 2) throw std::invalid_argument("tree: need at least two leaves");
    const int k = fork_count();
    if (k < 1 || k > d - 1) throw std::invalid_argument("tree: fork count out of range");
    std::vector<int> seen(d + k + 1, 0);
    for (int f = d + 1; f <= d + k; ++f) {
        const auto& ch = child_list(f);
        if (ch.size() < 2) throw std::invalid_argument("tree: fork with fewer than two children");
        for (int c : ch) {
            if (c < 1 || c > d + k || c == f)
                throw std::invalid_argument("tree: child id out of range");
            if (c > d && c > f)
                throw std::invalid_argument("tree: child fork id must be below parent id");
            if (++seen[c] > 1) throw std::invalid_argument("tree: node with two parents");
        }
    }
    for (int v = 1; v < d + k; ++v)
        if (!seen[v]) throw std::invalid_argument("tree: disconnected node");
    if (seen[d + k]) throw std::invalid_argument("tree: root must have no parent");
}

std::vector<int> TreeShape::parents() const {
    std::vector<int> p(d + fork_count() + 1, 0);
    for (int f = d + 1; f <= root(); ++f)
        for (int c : child_list(f)) p[c] = f;
    return p;
}

std::vector<int> TreeShape::leaves_below(int v) const {
    if (is_leaf(v)) return {v};
    std::vector<int> out;
    for (int c : child_list(v)) {
        auto sub = leaves_below(c);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> TreeShape::forks_below(int fork) const {
    std::vector<int> out;
    for (int c : child_list(fork))
        if (is_fork(c)) {
            out.push_back(c);
            auto sub = forks_below(c);
            out.insert(out.end(), sub.begin(), sub.end());
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> TreeShape::ancestor_forks(int v) const {
    const auto p = parents();
    std::vector<int> out;
    for (int a = p[v]; a != 0; a = p[a]) out.push_back(a);
    return out;
}

int TreeShape::yca(int leaf_i, int leaf_j) const {
    if (leaf_i == leaf_j || !is_leaf(leaf_i) || !is_leaf(leaf_j))
        throw std::invalid_argument("yca: need two distinct leaves");
    const auto ai = ancestor_forks(leaf_i);
    const auto aj = ancestor_forks(leaf_j);
    for (int a : ai)
        if (std::find(aj.begin(), aj.end(), a) != aj.end()) return a;
    throw std::logic_error("yca: tree not connected");
}

void HacTree::validate() const {
    shape.validate();
    if (static_cast<int>(labels.size()) != shape.fork_count())
        throw std::invalid_argument("tree: one generator per fork required");
}

double evaluate(const HacTree& tree, const std::vector<double>& u) {
    const int d = tree.d();
    if (static_cast<int>(u.size()) != d) throw std::invalid_argument("evaluate: wrong dimension");
    std::vector<double> x(d + tree.fork_count() + 1, 0.0);
    for (int i = 0; i < d; ++i) {
        if (!(u[i] >= 0.0 && u[i] <= 1.0))
            throw std::domain_error("evaluate: point must be in the unit cube");
        x[i + 1] = u[i];
    }
    for (int f = d + 1; f <= tree.root(); ++f) {
        const Generator& g = tree.label(f);
        double acc = 0.0;
        for (int c : tree.shape.child_list(f)) acc += psi_inv(g, x[c]);
        x[f] = psi(g, acc);
    }
    return x[tree.root()];
}

bool snc_pair_ok(const Generator& parent, const Generator& child) {
    const Family a1 = parent.family, a2 = child.family;
    const double t1 = parent.theta, t2 = child.theta;
    if (a1 == a2) {
        if (a1 == Family::F14) return false;  // no known rule
        return t1 <= t2;
    }
    if (a1 == Family::A && a2 == Family::C) return t2 >= 1.0;
    if (a1 == Family::A && a2 == Family::F19) return true;
    if (a1 == Family::A && a2 == Family::F20) return t2 >= 1.0;
    if (a1 == Family::C && a2 == Family::F12) return t1 <= 1.0;
    if (a1 == Family::C && a2 == Family::F14) return t1 * t2 <= 1.0;
    if (a1 == Family::C && a2 == Family::F19) return t1 <= 1.0;
    if (a1 == Family::C && a2 == Family::F20) return t1 <= t2;
    return false;  // combination not known to nest
}

SncReport check_snc(const HacTree& tree) {
    tree.validate();
    SncReport rep;
    for (int f = tree.d() + 1; f <= tree.root(); ++f)
        for (int c : tree.shape.child_list(f))
            if (tree.shape.is_fork(c) && !snc_pair_ok(tree.label(f), tree.label(c))) {
                rep.ok = false;
                rep.violations.emplace_back(f, c);
            }
    return rep;
}

TauMatrix implied_tau_matrix(const HacTree& tree) {
    tree.validate();
    const int d = tree.d();
    std::vector<double> fork_tau(tree.fork_count());
    for (int f = d + 1; f <= tree.root(); ++f)
        fork_tau[f - d - 1] = tau_of_theta(tree.label(f).family, tree.label(f).theta);
    TauMatrix tm(d);
    for (int f = d + 1; f <= tree.root(); ++f) {
        const auto& ch = tree.shape.child_list(f);
        for (std::size_t a = 0; a + 1 < ch.size(); ++a)
            for (std::size_t b = a + 1; b < ch.size(); ++b)
                for (int li : tree.shape.leaves_below(ch[a]))
                    for (int lj : tree.shape.leaves_below(ch[b]))
                        tm.set(li - 1, lj - 1, fork_tau[f - d - 1]);
    }
    return tm;
}

// ---------------------------------------------------------------------------
// JSON document

namespace {

using nlohmann::json;

json node_to_json(const HacTree& tree, int v) {
    if (tree.shape.is_leaf(v)) return json(v);
    const Generator& g = tree.label(v);
    json childs = json::array();
    for (int c : tree.shape.child_list(v)) childs.push_back(node_to_json(tree, c));
    return json{{"family", family_name(g.family)}, {"theta", g.theta}, {"children", childs}};
}

// Rebuilds the tree with canonical fork numbering (post-order, so children
// precede parents and the root ends at d+k).
struct Builder {
    int d = 0;
    std::vector<std::vector<int>> children;
    std::vector<Generator> labels;
    std::vector<int> leaf_seen;

    int build(const json& node) {
        if (node.is_number_integer()) {
            const int leaf = node.get<int>();
            if (leaf < 1 || leaf > d) throw std::invalid_argument("hac document: leaf id out of 1..d");
            if (leaf_seen[leaf]++) throw std::invalid_argument("hac document: duplicate leaf");
            return leaf;
        }
        if (!node.is_object()) throw std::invalid_argument("hac document: node must be object or leaf id");
        const std::string fam_name = node.at("family").get<std::string>();
        const auto fam = family_from_name(fam_name);
        if (!fam) throw std::invalid_argument("hac document: unknown family " + fam_name);
        const double theta = node.at("theta").get<double>();
        std::vector<int> ch;
        for (const auto& c : node.at("children")) ch.push_back(build(c));
        if (ch.size() < 2) throw std::invalid_argument("hac document: fork with fewer than two children");
        children.push_back(std::move(ch));
        labels.emplace_back(*fam, theta);  // validates theta range
        return d + static_cast<int>(children.size());
    }
};

std::string canonical_key(const TreeShape& shape, int v) {
    if (shape.is_leaf(v)) return std::to_string(v);
    std::vector<std::string> keys;
    for (int c : shape.child_list(v)) keys.push_back(canonical_key(shape, c));
    std::sort(keys.begin(), keys.end());
    std::string out = "(";
    for (const auto& k : keys) {
        out += k;
        out += ',';
    }
    out += ')';
    return out;
}

}  // namespace

std::string serialize(const HacTree& tree) {
    tree.validate();
    json doc{{"d", tree.d()}, {"root", node_to_json(tree, tree.root())}};
    return doc.dump(2);
}

HacTree deserialize(const std::string& text) {
    json doc = json::parse(text);
    Builder b;
    b.d = doc.at("d").get<int>();
    if (b.d < 2) throw std::invalid_argument("hac document: d must be >= 2");
    b.leaf_seen.assign(b.d + 1, 0);
    b.build(doc.at("root"));
    for (int i = 1; i <= b.d; ++i)
        if (!b.leaf_seen[i]) throw std::invalid_argument("hac document: missing leaf");
    HacTree tree{TreeShape{b.d, std::move(b.children)}, std::move(b.labels)};
    tree.validate();
    return tree;
}

bool structure_equal(const HacTree& a, const HacTree& b) {
    if (a.d() != b.d() || a.fork_count() != b.fork_count()) return false;
    return canonical_key(a.shape, a.root()) == canonical_key(b.shape, b.root());
}

bool families_equal(const HacTree& a, const HacTree& b) {
    if (!structure_equal(a, b)) return false;
    std::map<std::string, Family> fa, fb;
    for (int f = a.d() + 1; f <= a.root(); ++f)
        fa[canonical_key(a.shape, f)] = a.label(f).family;
    for (int f = b.d() + 1; f <= b.root(); ++f)
        fb[canonical_key(b.shape, f)] = b.label(f).family;
    return fa == fb;
}

}  // namespace hac
