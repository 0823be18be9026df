#include "het/gset.hpp"

namespace het {

GSet::GSet(Group g) : group_(std::move(g)) {
    bits_.assign(size_t((group_.order() + 63) / 64), 0);
}

GSet::GSet(Group g, const std::vector<i64>& elems) : GSet(std::move(g)) {
    for (i64 e : elems) insert(e);
}

GSet GSet::full(const Group& g) {
    GSet s(g);
    for (i64 x = 0; x < g.order(); ++x) s.insert(x);
    return s;
}

void GSet::insert(i64 x) {
    if (x < 0 || x >= group_.order()) throw usage_error("element out of range");
    u64& w = bits_[size_t(x) >> 6];
    u64 m = u64(1) << (x & 63);
    if (!(w & m)) {
        w |= m;
        ++card_;
    }
}

void GSet::erase(i64 x) {
    u64& w = bits_[size_t(x) >> 6];
    u64 m = u64(1) << (x & 63);
    if (w & m) {
        w &= ~m;
        --card_;
    }
}

std::vector<i64> GSet::elements() const {
    std::vector<i64> out;
    out.reserve(size_t(card_));
    for (size_t w = 0; w < bits_.size(); ++w) {
        u64 v = bits_[w];
        while (v) {
            out.push_back(i64(w * 64 + size_t(__builtin_ctzll(v))));
            v &= v - 1;
        }
    }
    return out;
}

GSet GSet::restricted(i64 s) const {
    GSet out(group_);
    for (i64 a : elements())
        if (contains(group_.add(a, s))) out.insert(a);
    return out;
}

GSet GSet::restricted_vec(const std::vector<i64>& shifts) const {
    GSet out(group_);
    for (i64 a : elements()) {
        bool ok = true;
        for (i64 s : shifts)
            if (!contains(group_.add(a, s))) { ok = false; break; }
        if (ok) out.insert(a);
    }
    return out;
}

GSet sumset(const GSet& a, const GSet& b) {
    require_same_group(a.group(), b.group(), "sumset");
    GSet out(a.group());
    auto eb = b.elements();
    for (i64 x : a.elements())
        for (i64 y : eb) out.insert(a.group().add(x, y));
    return out;
}

GSet diffset(const GSet& a, const GSet& b) {
    require_same_group(a.group(), b.group(), "diffset");
    GSet out(a.group());
    auto eb = b.elements();
    for (i64 x : a.elements())
        for (i64 y : eb) out.insert(a.group().sub(x, y));
    return out;
}

GSet negated(const GSet& a) {
    GSet out(a.group());
    for (i64 x : a.elements()) out.insert(a.group().negate(x));
    return out;
}

GSet translate(const GSet& a, i64 t) {
    GSet out(a.group());
    for (i64 x : a.elements()) out.insert(a.group().add(x, t));
    return out;
}

GSet iterated(int n, int m, const GSet& a) {
    if (n < 0 || m < 0 || n + m < 1) throw usage_error("iterated: need n+m >= 1");
    GSet acc(a.group(), {0});
    for (int i = 0; i < n; ++i) acc = sumset(acc, a);
    for (int i = 0; i < m; ++i) acc = diffset(acc, a);
    return acc;
}

} // namespace het
