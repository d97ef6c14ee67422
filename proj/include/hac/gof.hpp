#pragma once

#include <utility>
#include <vector>

#include "hac/generators.hpp"
#include "hac/kendall.hpp"
#include "hac/tree.hpp"

namespace hac {

enum class GofStat { E, K, R };
enum class Aggregation { max, avg };

const char* gof_stat_name(GofStat s);

// Empirical copula (1/n) sum of componentwise-<= indicators.
double empirical_copula(const DataMatrix& u, const std::vector<double>& point);

// Cramer-von-Mises distance between the empirical copula and the model,
// summed over the sample points. Tree variant evaluates the full HAC.
double sn_e_tree(const DataMatrix& u, const HacTree& model);
double sn_e_pair(const std::vector<double>& col_i, const std::vector<double>& col_j,
                 const Generator& gen);

// Kendall distribution function of the 2-AC: K(t) = t - psi_inv(t)/psi_inv'(t).
double kendall_dist_2ac(const Generator& gen, double t);

// Kendall-transform statistic on one column pair.
double sn_k(const std::vector<double>& col_i, const std::vector<double>& col_j,
            const Generator& gen);

// Rosenblatt transform of the pair under the 2-AC: first column unchanged,
// second replaced by the conditional distribution given the first.
std::pair<std::vector<double>, std::vector<double>> rosenblatt_2ac(
    const std::vector<double>& col_i, const std::vector<double>& col_j, const Generator& gen);

// Cramer-von-Mises distance of the Rosenblatt-transformed sample to the
// independence copula.
double sn_r(const std::vector<double>& col_i, const std::vector<double>& col_j,
            const Generator& gen);

double gof_pair(GofStat stat, const std::vector<double>& col_i,
                const std::vector<double>& col_j, const Generator& gen);

// g-aggregated statistic over all column pairs of two disjoint leaf groups
// (1-based leaf ids); singleton groups reduce to the plain pair statistic.
// Pairs are enumerated row-major in the given group order.
double aggregate_gof(const DataMatrix& u, const std::vector<int>& group_i,
                     const std::vector<int>& group_j, const Generator& gen, GofStat stat,
                     Aggregation g);

}  // namespace hac
