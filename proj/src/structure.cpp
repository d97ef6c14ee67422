#include "hac/structure.hpp"

#include <stdexcept>

namespace hac {

double linkage_similarity(const TauMatrix& taus, const std::vector<int>& leaves_a,
                          const std::vector<int>& leaves_b) {
    if (leaves_a.empty() || leaves_b.empty())
        throw std::invalid_argument("linkage_similarity: empty leaf group");
    double sum = 0.0;
    for (int i : leaves_a)
        for (int j : leaves_b) {
            if (i == j) throw std::invalid_argument("linkage_similarity: groups not disjoint");
            sum += taus(i - 1, j - 1);
        }
    return sum / (static_cast<double>(leaves_a.size()) * static_cast<double>(leaves_b.size()));
}

StructureEstimate estimate_structure(const TauMatrix& taus) {
    const int d = static_cast<int>(taus.d());
    if (d < 2) throw std::invalid_argument("estimate_structure: need d >= 2");
    const int total = 2 * d - 1;

    // Pairwise cross-group tau sums, merged incrementally: joining (i,j)
    // into p gives sum(p,r) = sum(i,r) + sum(j,r) with the leaf counts
    // multiplying, which reproduces the weighted-average recursion exactly.
    std::vector<double> sum(static_cast<std::size_t>(total + 1) * (total + 1), 0.0);
    auto s = [&](int a, int b) -> double& { return sum[static_cast<std::size_t>(a) * (total + 1) + b]; };
    std::vector<double> leaves(total + 1, 0.0);
    std::vector<int> active;
    for (int i = 1; i <= d; ++i) {
        active.push_back(i);
        leaves[i] = 1.0;
        for (int j = 1; j <= d; ++j)
            if (i != j) s(i, j) = taus(i - 1, j - 1);
    }

    std::vector<std::vector<int>> children;
    std::vector<double> fork_taus;
    for (int k = 1; k <= d - 1; ++k) {
        int bi = -1, bj = -1;
        double best = -2.0;
        for (std::size_t a = 0; a + 1 < active.size(); ++a)
            for (std::size_t b = a + 1; b < active.size(); ++b) {
                const int i = active[a], j = active[b];
                const double sim = s(i, j) / (leaves[i] * leaves[j]);
                if (sim > best) {
                    best = sim;
                    bi = i;
                    bj = j;
                }
            }
        const int p = d + k;
        children.push_back({bi, bj});
        fork_taus.push_back(best);
        leaves[p] = leaves[bi] + leaves[bj];
        for (int r : active)
            if (r != bi && r != bj) {
                s(p, r) = s(bi, r) + s(bj, r);
                s(r, p) = s(p, r);
            }
        active.erase(std::remove(active.begin(), active.end(), bi), active.end());
        active.erase(std::remove(active.begin(), active.end(), bj), active.end());
        active.push_back(p);
        std::sort(active.begin(), active.end());
    }

    StructureEstimate est{TreeShape{d, std::move(children)}, std::move(fork_taus)};
    est.shape.validate();
    return est;
}

}  // namespace hac
