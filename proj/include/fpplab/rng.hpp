#pragma once

// Counter-based random numbers: Philox4x64-10 keyed by (master seed,
// stream id) with a (replicate, item, block) counter. Every consumer owns a
// private stream, so replicates and modules never share state and any draw
// is reproducible in isolation.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace fpplab {

namespace rng_stream {
// Stream ids. Geometry and weights use distinct streams so the point
// process and the passage times are independent by construction.
constexpr std::uint64_t kGeometry = 1;
constexpr std::uint64_t kWeights = 2;
constexpr std::uint64_t kPerturb = 3;
constexpr std::uint64_t kScratch = 99;
} // namespace rng_stream

namespace detail {

inline std::uint64_t mulhilo64(std::uint64_t a, std::uint64_t b, std::uint64_t& hi) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(p >> 64);
    return static_cast<std::uint64_t>(p);
}

} // namespace detail

/// One Philox4x64-10 block. Matches the Random123 reference (and numpy's
/// Philox bit generator, which this implementation is tested against).
inline std::array<std::uint64_t, 4> philox4x64_block(std::array<std::uint64_t, 4> ctr,
                                                     std::uint64_t key0,
                                                     std::uint64_t key1) {
    constexpr std::uint64_t kM0 = 0xD2E7470EE14C6C93ULL;
    constexpr std::uint64_t kM1 = 0xCA5A826395121157ULL;
    constexpr std::uint64_t kW0 = 0x9E3779B97F4A7C15ULL;
    constexpr std::uint64_t kW1 = 0xBB67AE8584CAA73BULL;

    auto round = [](std::array<std::uint64_t, 4> c, std::uint64_t k0,
                    std::uint64_t k1) -> std::array<std::uint64_t, 4> {
        std::uint64_t hi0, hi1;
        const std::uint64_t lo0 = detail::mulhilo64(kM0, c[0], hi0);
        const std::uint64_t lo1 = detail::mulhilo64(kM1, c[2], hi1);
        return {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
    };

    ctr = round(ctr, key0, key1);
    for (int i = 0; i < 9; ++i) {
        key0 += kW0;
        key1 += kW1;
        ctr = round(ctr, key0, key1);
    }
    return ctr;
}

/// Seed record kept alongside every sampled object.
struct SeedRecord {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;
    std::uint64_t replicate = 0;
};

class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id,
              std::uint64_t replicate, std::uint64_t item = 0)
        : key0_(master_seed), key1_(stream_id), ctr_{replicate, item, 0, 0} {}

    explicit RngStream(const SeedRecord& s, std::uint64_t item = 0)
        : RngStream(s.master_seed, s.stream_id, s.replicate, item) {}

    std::uint64_t next_u64() {
        if (pos_ == 4) {
            buf_ = philox4x64_block(ctr_, key0_, key1_);
            ++ctr_[2];
            pos_ = 0;
        }
        return buf_[pos_++];
    }

    /// Uniform on the open interval (0,1); never returns an endpoint, so it
    /// is safe under log().
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
    }

    /// Uniform on [a, b).
    double next_uniform(double a, double b) {
        return a + (b - a) * (static_cast<double>(next_u64() >> 11) * 0x1p-53);
    }

    double next_exponential(double rate) { return -std::log(next_uniform()) / rate; }

    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    /// Marsaglia-Tsang for shape >= 1, boosted from shape+1 below 1.
    double next_gamma(double shape, double scale) {
        if (shape < 1.0) {
            const double u = next_uniform();
            return next_gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = next_normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = next_uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
        }
    }

    /// Knuth's product method, chunked so exp(-mean) never underflows.
    std::uint64_t next_poisson(double mean) {
        if (mean < 0.0) throw std::invalid_argument("poisson mean must be >= 0");
        std::uint64_t total = 0;
        while (mean > 500.0) {
            total += poisson_knuth(500.0);
            mean -= 500.0;
        }
        return total + poisson_knuth(mean);
    }

private:
    std::uint64_t poisson_knuth(double mean) {
        const double limit = std::exp(-mean);
        std::uint64_t k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= next_uniform();
        } while (p > limit);
        return k - 1;
    }

    std::uint64_t key0_, key1_;
    std::array<std::uint64_t, 4> ctr_;
    std::array<std::uint64_t, 4> buf_{};
    int pos_ = 4;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace fpplab
