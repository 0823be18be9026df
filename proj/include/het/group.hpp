#pragma once

#include <complex>
#include <vector>

#include "het/common.hpp"

namespace het {

// A finite abelian group Z/n1 x ... x Z/nd. Elements are canonical indices in
// [0, N) in mixed radix over the factors, first factor fastest-varying. All
// set and function types key on this index, so arithmetic lives here.
class Group {
public:
    explicit Group(std::vector<i64> factors);

    i64 order() const { return order_; }
    const std::vector<i64>& factors() const { return factors_; }

    std::vector<i64> unpack(i64 x) const;
    i64 pack(const std::vector<i64>& coords) const;

    i64 add(i64 x, i64 y) const;
    i64 negate(i64 x) const;
    i64 sub(i64 x, i64 y) const { return add(x, negate(y)); }
    i64 scalar_mul(i64 c, i64 x) const;

    // e(xi . x) = exp(2*pi*i * sum_i xi_i x_i / n_i). The DFT applies the
    // minus sign itself.
    std::complex<double> char_eval(i64 xi, i64 x) const;

    bool operator==(const Group& o) const { return factors_ == o.factors_; }
    bool operator!=(const Group& o) const { return !(*this == o); }

    // The direct power G^k (concatenated factor list); element packing agrees
    // with radix-N tuple packing.
    static Group power(const Group& g, int k);

private:
    std::vector<i64> factors_;
    i64 order_;
};

void require_same_group(const Group& a, const Group& b, const char* what);

} // namespace het
