#include "het/tupleset.hpp"

#include <algorithm>
#include <cmath>

namespace het {

tuple_key pack_tuple(const std::vector<i64>& t, i64 radix) {
    tuple_key k = 0;
    for (size_t i = t.size(); i-- > 0;) {
        k = k * u128(radix) + u128(t[i]);
    }
    return k;
}

std::vector<i64> unpack_tuple(tuple_key k, i64 radix, int arity) {
    std::vector<i64> t(size_t(arity));
    for (int i = 0; i < arity; ++i) {
        t[size_t(i)] = i64(k % u128(radix));
        k /= u128(radix);
    }
    return t;
}

TupleSet::TupleSet(Group g, int arity) : group_(std::move(g)), arity_(arity) {
    if (arity < 0) throw usage_error("tuple arity must be >= 0");
    // 128-bit packing limit
    double bits = arity * std::log2(double(group_.order()));
    if (bits > 126.0) throw cap_error("tuple arity too large for packed keys");
}

void TupleSet::insert(const std::vector<i64>& t) {
    if (int(t.size()) != arity_) throw usage_error("tuple arity mismatch");
    for (i64 x : t)
        if (x < 0 || x >= group_.order()) throw usage_error("tuple coordinate out of range");
    insert_key(pack_tuple(t, group_.order()));
}

void TupleSet::check_cap() const {
    if (i64(keys_.size()) >= config().tensor_cap)
        throw cap_error("tuple set exceeds cap");
}

std::vector<std::vector<i64>> TupleSet::tuples_sorted() const {
    std::vector<tuple_key> ks(keys_.begin(), keys_.end());
    std::sort(ks.begin(), ks.end());
    std::vector<std::vector<i64>> out;
    out.reserve(ks.size());
    for (tuple_key k : ks) out.push_back(unpack_tuple(k, group_.order(), arity_));
    return out;
}

TupleSet tuple_product(const TupleSet& a, const TupleSet& b) {
    require_same_group(a.group(), b.group(), "tuple_product");
    TupleSet out(a.group(), a.arity() + b.arity());
    i64 n = a.group().order();
    u128 shift = 1;
    for (int i = 0; i < a.arity(); ++i) shift *= u128(n);
    for (tuple_key ka : a.keys())
        for (tuple_key kb : b.keys()) out.insert_key(ka + kb * shift);
    return out;
}

TupleSet as_tuples(const GSet& a) {
    TupleSet out(a.group(), 1);
    for (i64 x : a.elements()) out.insert_key(tuple_key(x));
    return out;
}

TupleSet diagonal(const GSet& a, int arity) {
    TupleSet out(a.group(), arity);
    for (i64 x : a.elements()) {
        std::vector<i64> t(size_t(arity), x);
        out.insert(t);
    }
    return out;
}

TupleSet tuple_shift(const TupleSet& y, const GSet& z, int sign) {
    require_same_group(y.group(), z.group(), "tuple_shift");
    TupleSet out(y.group(), y.arity());
    const Group& g = y.group();
    i64 n = g.order();
    auto ze = z.elements();
    for (tuple_key k : y.keys()) {
        auto t = unpack_tuple(k, n, y.arity());
        for (i64 zz : ze) {
            std::vector<i64> s(t.size());
            for (size_t i = 0; i < t.size(); ++i)
                s[i] = sign >= 0 ? g.add(t[i], zz) : g.sub(t[i], zz);
            out.insert_key(pack_tuple(s, n));
        }
    }
    return out;
}

} // namespace het
