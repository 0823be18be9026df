#pragma once

#include <unordered_set>
#include <vector>

#include "het/gset.hpp"

namespace het {

// Tuples are packed radix-N into 128 bits, coordinate 0 least significant.
using tuple_key = u128;

struct TupleKeyHash {
    size_t operator()(tuple_key k) const {
        u64 lo = u64(k), hi = u64(k >> 64);
        u64 h = lo * 0x9e3779b97f4a7c15ull;
        h ^= (hi + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
        return size_t(h);
    }
};

tuple_key pack_tuple(const std::vector<i64>& t, i64 radix);
std::vector<i64> unpack_tuple(tuple_key k, i64 radix, int arity);

// Finite subset of G^k stored sparsely.
class TupleSet {
public:
    TupleSet(Group g, int arity);

    const Group& group() const { return group_; }
    int arity() const { return arity_; }
    i64 size() const { return i64(keys_.size()); }

    bool contains(const std::vector<i64>& t) const {
        return keys_.count(pack_tuple(t, group_.order())) != 0;
    }
    bool contains_key(tuple_key k) const { return keys_.count(k) != 0; }

    void insert(const std::vector<i64>& t);
    void insert_key(tuple_key k) { check_cap(); keys_.insert(k); }

    const std::unordered_set<tuple_key, TupleKeyHash>& keys() const { return keys_; }
    std::vector<std::vector<i64>> tuples_sorted() const;

    bool operator==(const TupleSet& o) const {
        return group_ == o.group_ && arity_ == o.arity_ && keys_ == o.keys_;
    }

private:
    void check_cap() const;
    Group group_;
    int arity_;
    std::unordered_set<tuple_key, TupleKeyHash> keys_;
};

// Cartesian product, arities add.
TupleSet tuple_product(const TupleSet& a, const TupleSet& b);
TupleSet as_tuples(const GSet& a);
TupleSet diagonal(const GSet& a, int arity);

// Y +/- Delta(Z): every coordinate shifted by the same z
TupleSet tuple_shift(const TupleSet& y, const GSet& z, int sign);

} // namespace het
