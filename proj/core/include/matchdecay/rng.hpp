#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace matchdecay {

// splitmix64 finalizer; used to derive independent streams from a master seed.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic random stream. The engine is mt19937_64 (bit-exact by the
/// standard); all variates are derived from raw 64-bit draws here rather than
/// through std:: distributions, so results do not depend on the C++ library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1), 53-bit resolution
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // strictly positive uniform in (0, 1)
    double next_unit_positive() {
        double u = next_unit();
        while (u == 0.0) u = next_unit();
        return u;
    }

    // exponential with mean 1, strictly positive
    double next_exp1() {
        double u = next_unit();
        double x = -std::log1p(-u);
        while (x <= 0.0) {
            u = next_unit();
            x = -std::log1p(-u);
        }
        return x;
    }

    // uniform integer in [lo, hi], inclusive; rejection keeps it unbiased
    int next_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return lo + static_cast<int>(x % span);
    }

    bool next_bool(double p) { return next_unit() < p; }

private:
    std::mt19937_64 engine_;
};

/// Replica seed derivation: replica i gets a stream that is a pure function
/// of (master_seed, i), so Monte Carlo runs are reproducible under any
/// scheduling of the replicas.
struct SeedPlan {
    std::uint64_t master_seed = 0;
    int replica_count = 0;

    std::uint64_t replica_seed(int i) const {
        return mix64(master_seed ^ mix64(0x5eedULL + static_cast<std::uint64_t>(i)));
    }
};

}  // namespace matchdecay
