#pragma once

#include <vector>

#include "het/group.hpp"

namespace het {

// Subset of a group with bitset membership; all queries O(1).
class GSet {
public:
    explicit GSet(Group g);
    GSet(Group g, const std::vector<i64>& elems);

    static GSet full(const Group& g);

    const Group& group() const { return group_; }
    i64 size() const { return card_; }
    bool empty() const { return card_ == 0; }

    bool contains(i64 x) const {
        return (bits_[size_t(x) >> 6] >> (x & 63)) & 1;
    }

    void insert(i64 x);
    void erase(i64 x);

    std::vector<i64> elements() const;

    bool operator==(const GSet& o) const {
        return group_ == o.group_ && bits_ == o.bits_;
    }

    // A cap (A - s): elements a with a + s in A
    GSet restricted(i64 s) const;
    GSet restricted_vec(const std::vector<i64>& shifts) const;

private:
    Group group_;
    std::vector<u64> bits_;
    i64 card_ = 0;
};

GSet sumset(const GSet& a, const GSet& b);
GSet diffset(const GSet& a, const GSet& b);
GSet negated(const GSet& a);
GSet translate(const GSet& a, i64 t);

// nA - mA with the empty-sum convention 0A = {0}
GSet iterated(int n, int m, const GSet& a);

} // namespace het
