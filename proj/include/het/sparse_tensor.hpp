#pragma once

#include <unordered_map>

#include "het/tupleset.hpp"

namespace het {

// Integer-valued function on G^arity stored sparsely; no explicit zeros.
class SparseTensor {
public:
    SparseTensor(Group g, int arity) : group_(std::move(g)), arity_(arity) {}

    const Group& group() const { return group_; }
    int arity() const { return arity_; }
    i64 size() const { return i64(entries_.size()); }

    void add(tuple_key k, i64 v) {
        if (v == 0) return;
        i64& slot = entries_[k];
        slot += v;
        if (slot == 0) entries_.erase(k);
        if (i64(entries_.size()) > config().tensor_cap)
            throw cap_error("sparse tensor exceeds cap");
    }

    i64 at(tuple_key k) const {
        auto it = entries_.find(k);
        return it == entries_.end() ? 0 : it->second;
    }
    i64 at(const std::vector<i64>& t) const { return at(pack_tuple(t, group_.order())); }

    const std::unordered_map<tuple_key, i64, TupleKeyHash>& entries() const { return entries_; }

    TupleSet support() const;

    i64 total_mass() const;              // sum of entries
    i64 moment(int power) const;         // sum of entries^power (exact, checked)

    bool operator==(const SparseTensor& o) const {
        return group_ == o.group_ && arity_ == o.arity_ && entries_ == o.entries_;
    }

private:
    Group group_;
    int arity_;
    std::unordered_map<tuple_key, i64, TupleKeyHash> entries_;
};

} // namespace het
