#pragma once

#include <cmath>
#include <cstdint>

namespace hac {

// Philox4x32-10 counter-based generator. A stream is keyed by
// (seed, stream_id); draws advance a 128-bit counter, so independent
// streams can be created per (seed, node, replicate) and consumed in any
// order while staying reproducible.
class Philox {
public:
    Philox(std::uint64_t seed, std::uint64_t stream)
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32)),
          ctr2_(static_cast<std::uint32_t>(stream)),
          ctr3_(static_cast<std::uint32_t>(stream >> 32)) {}

    std::uint32_t next_u32() {
        if (idx_ == 4) {
            block();
            idx_ = 0;
        }
        return out_[idx_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // Uniform on (0,1): both endpoints excluded.
    double uniform() {
        const std::uint64_t r = next_u64() >> 11;  // 53 bits
        const double u = (static_cast<double>(r) + 0.5) * 0x1.0p-53;
        return u;
    }

    double exponential() { return -std::log1p(-uniform()); }

    double normal() {
        // Box-Muller; sines discarded to keep the draw count even.
        const double u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

private:
    void block() {
        std::uint32_t c0 = ctr0_, c1 = ctr1_, c2 = ctr2_, c3 = ctr3_;
        std::uint32_t k0 = key0_, k1 = key1_;
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = 0xD2511F53ULL * c0;
            const std::uint64_t p1 = 0xCD9E8D57ULL * c2;
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            const std::uint32_t n0 = hi1 ^ c1 ^ k0;
            const std::uint32_t n1 = lo1;
            const std::uint32_t n2 = hi0 ^ c3 ^ k1;
            const std::uint32_t n3 = lo0;
            c0 = n0;
            c1 = n1;
            c2 = n2;
            c3 = n3;
            k0 += 0x9E3779B9U;
            k1 += 0xBB67AE85U;
        }
        out_[0] = c0;
        out_[1] = c1;
        out_[2] = c2;
        out_[3] = c3;
        if (++ctr0_ == 0 && ++ctr1_ == 0 && ++ctr2_ == 0) ++ctr3_;
    }

    std::uint32_t key0_, key1_;
    std::uint32_t ctr0_ = 0, ctr1_ = 0, ctr2_, ctr3_;
    std::uint32_t out_[4] = {0, 0, 0, 0};
    int idx_ = 4;
};

// 64-bit mix for deriving sub-stream ids (splitmix64 finalizer).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t stream_id(std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(a) ^ (0x9E3779B97F4A7C15ULL + b));
}

namespace rngdist {

// Gamma(shape, scale 1) via Marsaglia-Tsang, boosted for shape < 1.
inline double gamma(Philox& rng, double shape) {
    if (shape <= 0.0) return 0.0;
    if (shape < 1.0) {
        const double u = rng.uniform();
        return gamma(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

// Geometric on {1,2,...} with success probability p: P(K=k) = p(1-p)^{k-1}.
inline std::uint64_t geometric1(Philox& rng, double p) {
    if (p >= 1.0) return 1;
    const double u = rng.uniform();
    const double k = std::ceil(std::log1p(-u) / std::log1p(-p));
    return k < 1.0 ? 1 : static_cast<std::uint64_t>(k);
}

// Positive alpha-stable with Laplace transform exp(-t^alpha), alpha in (0,1].
// Kanter's representation.
inline double positive_stable(Philox& rng, double alpha) {
    if (alpha >= 1.0 - 1e-12) return 1.0;
    const double u = rng.uniform() * 3.141592653589793;
    const double e = rng.exponential();
    const double s1 = std::sin(alpha * u);
    const double s2 = std::sin((1.0 - alpha) * u);
    const double s = std::sin(u);
    const double a = std::pow(s1, alpha / (1.0 - alpha)) * s2 /
                     std::pow(s, 1.0 / (1.0 - alpha));
    return std::pow(a / e, (1.0 - alpha) / alpha);
}

// Exponentially tilted positive stable with Laplace transform
// exp(-lambda*((t+h)^alpha - h^alpha)). Fast rejection: the variable is
// split into m pieces so each piece keeps acceptance probability >= 1/e.
inline double tilted_stable(Philox& rng, double alpha, double lambda, double h) {
    if (lambda <= 0.0) return 0.0;
    if (alpha >= 1.0 - 1e-12) return lambda;
    const double cost = lambda * std::pow(h, alpha);
    const std::uint64_t m = cost > 1.0 ? static_cast<std::uint64_t>(std::ceil(cost)) : 1;
    const double lam_piece = lambda / static_cast<double>(m);
    const double scale = std::pow(lam_piece, 1.0 / alpha);
    double total = 0.0;
    for (std::uint64_t i = 0; i < m; ++i) {
        for (;;) {
            const double s = scale * positive_stable(rng, alpha);
            if (std::log(rng.uniform()) <= -h * s) {
                total += s;
                break;
            }
        }
    }
    return total;
}

}  // namespace rngdist
}  // namespace hac
