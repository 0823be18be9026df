#include "het/group.hpp"

#include <cmath>
#include <cstdlib>

namespace het {

namespace {
Config read_config() {
    Config c;
    if (const char* s = std::getenv("HET_CAP_N")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end && *end == '\0' && v >= 2) c.order_cap = v;
    }
    return c;
}
} // namespace

const Config& config() {
    static const Config c = read_config();
    return c;
}

i64 checked_fit_i64(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < -i128(INT64_MAX))
        throw std::overflow_error(std::string(what) + ": value exceeds 64-bit range");
    return i64(v);
}

Group::Group(std::vector<i64> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw usage_error("group needs at least one factor");
    i128 n = 1;
    for (i64 f : factors_) {
        if (f < 2) throw usage_error("group factor must be >= 2");
        n *= f;
        if (n > config().order_cap)
            throw cap_error("group order exceeds cap " + std::to_string(config().order_cap));
    }
    order_ = i64(n);
}

std::vector<i64> Group::unpack(i64 x) const {
    std::vector<i64> c(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) {
        c[i] = x % factors_[i];
        x /= factors_[i];
    }
    return c;
}

i64 Group::pack(const std::vector<i64>& coords) const {
    if (coords.size() != factors_.size()) throw usage_error("coordinate arity mismatch");
    i64 x = 0, radix = 1;
    for (size_t i = 0; i < factors_.size(); ++i) {
        i64 c = coords[i] % factors_[i];
        if (c < 0) c += factors_[i];
        x += c * radix;
        radix *= factors_[i];
    }
    return x;
}

i64 Group::add(i64 x, i64 y) const {
    if (factors_.size() == 1) {
        i64 s = x + y;
        return s >= order_ ? s - order_ : s;
    }
    i64 out = 0, radix = 1;
    for (i64 f : factors_) {
        i64 s = x % f + y % f;
        if (s >= f) s -= f;
        out += s * radix;
        radix *= f;
        x /= f;
        y /= f;
    }
    return out;
}

i64 Group::negate(i64 x) const {
    if (factors_.size() == 1) return x == 0 ? 0 : order_ - x;
    i64 out = 0, radix = 1;
    for (i64 f : factors_) {
        i64 c = x % f;
        out += (c == 0 ? 0 : f - c) * radix;
        radix *= f;
        x /= f;
    }
    return out;
}

i64 Group::scalar_mul(i64 c, i64 x) const {
    i64 out = 0, radix = 1;
    i64 cc = c;
    for (i64 f : factors_) {
        i64 m = (i128(cc % f) * (x % f)) % f;
        if (m < 0) m += f;
        out += m * radix;
        radix *= f;
        x /= f;
    }
    return out;
}

std::complex<double> Group::char_eval(i64 xi, i64 x) const {
    // phase = sum_i (xi_i * x_i mod n_i) / n_i, exact in integers per term
    double phase = 0.0;
    for (i64 f : factors_) {
        i64 r = (i128(xi % f) * (x % f)) % f;
        phase += double(r) / double(f);
        xi /= f;
        x /= f;
    }
    double ang = 2.0 * M_PI * phase;
    return {std::cos(ang), std::sin(ang)};
}

Group Group::power(const Group& g, int k) {
    if (k < 1) throw usage_error("group power needs k >= 1");
    std::vector<i64> fs;
    fs.reserve(g.factors().size() * size_t(k));
    for (int i = 0; i < k; ++i)
        for (i64 f : g.factors()) fs.push_back(f);
    return Group(std::move(fs));
}

void require_same_group(const Group& a, const Group& b, const char* what) {
    if (a != b) throw usage_error(std::string(what) + ": group mismatch");
}

} // namespace het
