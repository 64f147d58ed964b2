#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

namespace oplab {

// 64-bit FNV-1a. Used for stable string -> seed derivation and file digests.
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : bytes) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64_u64(std::uint64_t v, std::uint64_t h = 1469598103934665603ULL) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (i * 8)) & 0xFFu;
        h *= 1099511628211ULL;
    }
    return h;
}

// Derives an independent stream seed from a base seed plus string labels.
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view label) {
    return fnv1a64(label, fnv1a64_u64(seed));
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view a, std::string_view b) {
    return fnv1a64(b, mix_seed(seed, a));
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view a, std::uint64_t b) {
    return fnv1a64_u64(b, mix_seed(seed, a));
}

// splitmix64 finalizer; gives fnv hashes enough avalanche to be used as
// uniform draws.
inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

// Deterministic uniform in [0, 1) derived from a hash value.
inline double hash_unit(std::uint64_t h) {
    return static_cast<double>(mix64(h) >> 11) * 0x1.0p-53;
}

// Seeded generator with platform-independent draws.
//
// The engine (mt19937_64) is fully specified by the standard; the standard
// *distributions* are not, so bounded ints, uniform reals and gaussians are
// implemented here instead of via <random> distribution objects.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, n). Rejection sampling keeps the result unbiased.
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) return 0;
        const std::uint64_t span = std::numeric_limits<std::uint64_t>::max() / n * n;
        std::uint64_t x = engine_();
        while (x >= span) x = engine_();
        return static_cast<std::size_t>(x % n);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; caches the spare draw.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u = 0.0;
        do {
            u = uniform_real();
        } while (u <= 0.0);
        const double v = uniform_real();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double theta = 2.0 * 3.141592653589793238462643383279502884 * v;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    double gaussian(double mean, double sd) { return mean + sd * gaussian(); }

    // Fisher-Yates. Deterministic for a given seed, unlike std::shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform_index(i)]);
        }
    }

    // k distinct indices drawn uniformly from [0, n), in draw order.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<std::size_t> out;
        out.reserve(k);
        for (std::size_t i = 0; i < k && i < n; ++i) {
            const std::size_t j = i + uniform_index(n - i);
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
        return out;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace oplab
