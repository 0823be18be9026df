#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "het/common.hpp"

namespace het {

// Deterministic RNG for instance generation. Draws come straight from
// mt19937_64 with rejection sampling, so sequences do not depend on the
// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(u64 seed) : eng_(seed) {}

    u64 next() { return eng_(); }

    // uniform in [0, n)
    u64 below(u64 n) {
        u64 lim = UINT64_MAX - UINT64_MAX % n;
        u64 v;
        do { v = eng_(); } while (v >= lim);
        return v % n;
    }

    i64 range(i64 lo, i64 hi) { return lo + i64(below(u64(hi - lo + 1))); }

    double real01() { return double(eng_() >> 11) * (1.0 / 9007199254740992.0); }

    // m distinct values from [0, n), sorted
    std::vector<i64> sample(i64 n, i64 m);

private:
    std::mt19937_64 eng_;
};

// Per-task seed: hash of (master seed, check name, trial index). FNV-1a.
u64 derive_seed(u64 master, std::string_view name, u64 trial);

} // namespace het
