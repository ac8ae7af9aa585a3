#pragma once

#include <cstdint>
#include <string>

#include "wha/errors.hpp"

namespace wha {

// Numerical thresholds used by the spectral layer. All exact-rational
// computations ignore these.
struct Tolerances {
    double eig_cluster = 1e-8;  // eigenvalue clustering radius
    double int_round = 1e-6;    // integrality rounding window
    double zero = 1e-10;        // residual / zero-test threshold

    void validate() const {
        if (!(eig_cluster > 0 && int_round > 0 && zero > 0))
            throw Error(ErrorKind::InvalidParams, "tolerances must be strictly positive");
        if (!(eig_cluster > zero))
            throw Error(ErrorKind::InvalidParams, "eig_cluster must exceed zero tolerance");
    }

    double loose() const { return 10.0 * zero; }
};

// Default seed spells "WHA1" in ASCII.
inline constexpr std::uint64_t kDefaultSeed = 0x57484131ull;

struct Config {
    Tolerances tol{};
    std::uint64_t seed = kDefaultSeed;
    int dim_cap = 256;
    bool json_output = false;

    void validate() const {
        tol.validate();
        if (dim_cap < 1) throw Error(ErrorKind::InvalidParams, "dim_cap must be >= 1");
    }
};

// Deterministic generator (splitmix64). Used for generic central elements
// and randomized functional tests; identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    std::int64_t next_nonzero_int(std::int64_t bound) {
        std::int64_t v = 0;
        while (v == 0) v = next_int(-bound, bound);
        return v;
    }

private:
    std::uint64_t state_;
};

}  // namespace wha
