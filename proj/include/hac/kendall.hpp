#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hac {

// n x d sample stored by column; kind records whether entries are raw
// observations or rank-transformed pseudo-observations in (0,1).
struct DataMatrix {
    enum class Kind { raw, pseudo };

    std::vector<std::vector<double>> columns;
    Kind kind = Kind::raw;

    std::size_t n() const { return columns.empty() ? 0 : columns.front().size(); }
    std::size_t d() const { return columns.size(); }
    void validate() const;
};

// Symmetric d x d matrix of pairwise Kendall's tau values, unit diagonal.
struct TauMatrix {
    explicit TauMatrix(std::size_t d = 0) : d_(d), v_(d * d, 0.0) {
        for (std::size_t i = 0; i < d; ++i) (*this)(i, i) = 1.0;
    }
    std::size_t d() const { return d_; }
    double& operator()(std::size_t i, std::size_t j) { return v_[i * d_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return v_[i * d_ + j]; }

    void set(std::size_t i, std::size_t j, double t) {
        (*this)(i, j) = t;
        (*this)(j, i) = t;
    }

private:
    std::size_t d_;
    std::vector<double> v_;
};

// Column ranks R/(n+1) with average ranks on ties.
DataMatrix pseudo_observations(const DataMatrix& raw);

// Sample Kendall's tau: 4 C / (n (n-1)) - 1 where C counts strictly
// concordant pairs; tied pairs contribute nothing.
double sample_tau(const std::vector<double>& x, const std::vector<double>& y);

// Pairwise sample taus over all column pairs.
TauMatrix tau_matrix(const DataMatrix& data);

}  // namespace hac
