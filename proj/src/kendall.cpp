#include "hac/kendall.hpp"

#include <algorithm>
#include <numeric>

namespace hac {

void DataMatrix::validate() const {
    if (d() < 2 || n() < 2) throw std::invalid_argument("DataMatrix: need n >= 2 and d >= 2");
    for (const auto& col : columns)
        if (col.size() != n()) throw std::invalid_argument("DataMatrix: ragged columns");
    if (kind == Kind::pseudo)
        for (const auto& col : columns)
            for (double x : col)
                if (!(x > 0.0 && x < 1.0))
                    throw std::invalid_argument("DataMatrix: pseudo-observations must be in (0,1)");
}

DataMatrix pseudo_observations(const DataMatrix& raw) {
    raw.validate();
    const std::size_t n = raw.n();
    DataMatrix out;
    out.kind = DataMatrix::Kind::pseudo;
    out.columns.reserve(raw.d());
    std::vector<std::size_t> idx(n);
    for (const auto& col : raw.columns) {
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return col[a] < col[b]; });
        std::vector<double> u(n);
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j + 1 < n && col[idx[j + 1]] == col[idx[i]]) ++j;
            const double avg_rank = 0.5 * static_cast<double>(i + j) + 1.0;
            for (std::size_t k = i; k <= j; ++k) u[idx[k]] = avg_rank / (n + 1.0);
            i = j + 1;
        }
        out.columns.push_back(std::move(u));
    }
    return out;
}

double sample_tau(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) throw std::invalid_argument("sample_tau: need equal lengths >= 2");
    std::size_t concordant = 0;
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
            if ((x[k] - x[l]) * (y[k] - y[l]) > 0.0) ++concordant;
    return 4.0 * static_cast<double>(concordant) / (static_cast<double>(n) * (n - 1.0)) - 1.0;
}

TauMatrix tau_matrix(const DataMatrix& data) {
    data.validate();
    const std::size_t d = data.d();
    TauMatrix tm(d);
    for (std::size_t i = 0; i + 1 < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            tm.set(i, j, sample_tau(data.columns[i], data.columns[j]));
    return tm;
}

}  // namespace hac
