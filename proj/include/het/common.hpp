#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace het {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// Thrown when an operation would exceed a desk-scale cap (CLI exit code 3).
class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input or incompatible arguments (CLI exit code 2).
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Runtime caps. Defaults are desk scale; HET_CAP_N overrides the group order cap.
struct Config {
    i64 order_cap = i64(1) << 20;
    i64 dft_cap = i64(1) << 16;      // O(N^2) transform guard
    i64 tensor_cap = 10'000'000;     // max work/entries for sparse tensors
    int magnification_cap = 20;     // brute force over 2^|A| subsets
    int spectral_cap = 2000;        // max matrix dimension
};

const Config& config();

i64 checked_fit_i64(i128 v, const char* what);

inline i64 ceil_div(i64 a, i64 b) { return (a + b - 1) / b; }

inline bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace het
