#include "het/rng.hpp"

#include <algorithm>

namespace het {

std::vector<i64> Rng::sample(i64 n, i64 m) {
    if (m > n) throw usage_error("sample: m > n");
    // partial Fisher-Yates over [0, n)
    std::vector<i64> pool(size_t(n));
    for (i64 i = 0; i < n; ++i) pool[size_t(i)] = i;
    std::vector<i64> out;
    out.reserve(size_t(m));
    for (i64 i = 0; i < m; ++i) {
        u64 j = i + below(u64(n - i));
        std::swap(pool[size_t(i)], pool[size_t(j)]);
        out.push_back(pool[size_t(i)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 derive_seed(u64 master, std::string_view name, u64 trial) {
    u64 h = 14695981039346656037ull;
    auto mix = [&h](u64 v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(master);
    for (char c : name) {
        h ^= u64((unsigned char)c);
        h *= 1099511628211ull;
    }
    mix(trial);
    return h;
}

} // namespace het
