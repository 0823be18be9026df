#include "het/setops.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace het {

namespace {

void check_product_cap(const std::vector<GSet>& sets, const GSet& b) {
    i128 work = std::max<i64>(b.size(), 1);
    for (const GSet& s : sets) {
        work *= std::max<i64>(s.size(), 1);
        if (work > config().tensor_cap) throw cap_error("higher_diff: product of supports exceeds cap");
    }
}

} // namespace

TupleSet higher_diff(const std::vector<GSet>& sets, const GSet& b) {
    for (const GSet& s : sets) require_same_group(s.group(), b.group(), "higher_diff");
    check_product_cap(sets, b);
    const Group& g = b.group();
    int k = int(sets.size());
    TupleSet out(g, k);
    if (k == 0) {
        if (!b.empty()) out.insert_key(0);
        return out;
    }
    std::vector<std::vector<i64>> elems;
    elems.reserve(sets.size());
    for (const GSet& s : sets) {
        if (s.empty()) return out;
        elems.push_back(s.elements());
    }
    std::vector<i64> tup(size_t(k));
    for (i64 bb : b.elements()) {
        std::vector<size_t> idx(size_t(k), 0);
        while (true) {
            for (int i = 0; i < k; ++i) tup[size_t(i)] = g.sub(elems[size_t(i)][idx[size_t(i)]], bb);
            out.insert_key(pack_tuple(tup, g.order()));
            int i = 0;
            while (i < k) {
                if (++idx[size_t(i)] < elems[size_t(i)].size()) break;
                idx[size_t(i)] = 0;
                ++i;
            }
            if (i == k) break;
        }
    }
    return out;
}

TupleSet higher_diff_by_characterization(const std::vector<GSet>& sets, const GSet& b) {
    for (const GSet& s : sets) require_same_group(s.group(), b.group(), "higher_diff");
    const Group& g = b.group();
    int k = int(sets.size());
    TupleSet out(g, k);
    if (k == 0) {
        if (!b.empty()) out.insert_key(0);
        return out;
    }
    if (b.empty()) return out;
    // candidate coordinates x_i lie in A_i - B
    std::vector<std::vector<i64>> cands;
    i128 work = 1;
    for (const GSet& s : sets) {
        cands.push_back(diffset(s, b).elements());
        if (cands.back().empty()) return out;
        work *= i64(cands.back().size());
        if (work > config().tensor_cap) throw cap_error("higher_diff characterization exceeds cap");
    }
    auto be = b.elements();
    std::vector<size_t> idx(size_t(k), 0);
    std::vector<i64> tup(size_t(k));
    while (true) {
        for (int i = 0; i < k; ++i) tup[size_t(i)] = cands[size_t(i)][idx[size_t(i)]];
        bool nonempty = false;
        for (i64 bb : be) {
            bool in_all = true;
            for (int i = 0; i < k; ++i)
                if (!sets[size_t(i)].contains(g.add(bb, tup[size_t(i)]))) { in_all = false; break; }
            if (in_all) { nonempty = true; break; }
        }
        if (nonempty) out.insert_key(pack_tuple(tup, g.order()));
        int i = 0;
        while (i < k) {
            if (++idx[size_t(i)] < cands[size_t(i)].size()) break;
            idx[size_t(i)] = 0;
            ++i;
        }
        if (i == k) break;
    }
    return out;
}

TupleSet higher_diff_recursive(const std::vector<GSet>& sets, const GSet& b, int m) {
    int k = int(sets.size());
    if (m < 1 || m >= k) throw usage_error("higher_diff_recursive: need 1 <= m < k");
    const Group& g = b.group();
    std::vector<GSet> head(sets.begin(), sets.begin() + m);
    std::vector<GSet> tail(sets.begin() + m, sets.end());
    TupleSet front = higher_diff(head, b);
    TupleSet out(g, k);
    i64 n = g.order();
    u128 shift = 1;
    for (int i = 0; i < m; ++i) shift *= u128(n);
    for (tuple_key hk : front.keys()) {
        auto x = unpack_tuple(hk, n, m);
        GSet bb(g);
        for (i64 e : b.elements()) {
            bool in_all = true;
            for (int i = 0; i < m; ++i)
                if (!head[size_t(i)].contains(g.add(e, x[size_t(i)]))) { in_all = false; break; }
            if (in_all) bb.insert(e);
        }
        TupleSet rest = higher_diff(tail, bb);
        for (tuple_key rk : rest.keys()) out.insert_key(hk + rk * shift);
    }
    return out;
}

bool basis_depth_check(const GSet& b, int k) {
    if (k < 1) throw usage_error("basis depth must be >= 1");
    const Group& g = b.group();
    i64 n = g.order();
    if (std::pow(double(n), double(k)) > 1e9)
        throw cap_error("basis_depth_check: N^k exceeds iteration cap");
    if (b.empty()) return false;
    // DFS over shift tuples; stack[d] = B cap (B - shift[0]) ... cap (B - shift[d])
    std::vector<i64> shift(size_t(k), 0);
    std::vector<GSet> stack;
    int d = 0;
    while (true) {
        const GSet& base = d == 0 ? b : stack[size_t(d - 1)];
        GSet next(g);
        for (i64 a : base.elements())
            if (b.contains(g.add(a, shift[size_t(d)]))) next.insert(a);
        if (next.empty()) return false;
        if (d + 1 == k) {
            int dd = d;
            while (dd >= 0) {
                if (++shift[size_t(dd)] < n) break;
                shift[size_t(dd)] = 0;
                --dd;
            }
            if (dd < 0) return true;
            stack.resize(size_t(dd));
            d = dd;
        } else {
            stack.resize(size_t(d));
            stack.push_back(std::move(next));
            ++d;
        }
    }
}

GSet greedy_cover(const GSet& a) {
    if (a.empty()) throw usage_error("greedy_cover: empty set");
    const Group& g = a.group();
    i64 n = g.order();
    std::vector<char> covered(size_t(n), 0);
    i64 left = n;
    GSet x(g);
    auto ea = a.elements();
    while (left > 0) {
        i64 best = -1, best_cnt = -1;
        for (i64 t = 0; t < n; ++t) {
            i64 cnt = 0;
            for (i64 aa : ea)
                if (!covered[size_t(g.add(aa, t))]) ++cnt;
            if (cnt > best_cnt) { best_cnt = cnt; best = t; }
        }
        x.insert(best);
        for (i64 aa : ea) {
            i64 v = g.add(aa, best);
            if (!covered[size_t(v)]) { covered[size_t(v)] = 1; --left; }
        }
    }
    i64 bound = i64(std::ceil(double(n) / double(a.size()) * std::log(double(n)))) + 1;
    if (x.size() > bound) throw std::logic_error("greedy_cover exceeded its size bound");
    return x;
}

namespace {

Magnification magnify(const std::vector<std::vector<u64>>& masks,
                      const std::vector<i64>& elems, size_t words) {
    // DFS over nonempty subsets of A, OR-ing per-element tuple masks; visiting
    // order is lexicographic in the chosen-element list, which makes the tie
    // rules (ratio, then |Z|, then lexicographic) a simple comparison.
    Magnification best;
    bool have = false;
    std::vector<u64> acc(words, 0);
    std::vector<i64> chosen;
    size_t n = elems.size();
    std::function<void(size_t)> rec = [&](size_t start) {
        for (size_t i = start; i < n; ++i) {
            std::vector<u64> saved = acc;
            for (size_t w = 0; w < words; ++w) acc[w] |= masks[i][w];
            chosen.push_back(elems[i]);
            i64 card = 0;
            for (u64 w : acc) card += __builtin_popcountll(w);
            i64 zs = i64(chosen.size());
            bool better = false;
            if (!have) {
                better = true;
            } else {
                i128 l = i128(card) * best.ratio.den;
                i128 r = i128(best.ratio.num) * zs;
                if (l < r) better = true;
                else if (l == r) {
                    if (zs < i64(best.witness.size())) better = true;
                    else if (zs == i64(best.witness.size()) && chosen < best.witness) better = true;
                }
            }
            if (better) {
                i64 gg = std::gcd(card, zs);
                best.ratio = {card / gg, zs / gg};
                best.witness = chosen;
                have = true;
            }
            rec(i + 1);
            chosen.pop_back();
            acc = saved;
        }
    };
    rec(0);
    return best;
}

} // namespace

Magnification magnification_ratio(const TupleSet& b, const GSet& a) {
    require_same_group(b.group(), a.group(), "magnification_ratio");
    if (a.empty()) throw usage_error("magnification_ratio: empty A");
    if (a.size() > config().magnification_cap)
        throw cap_error("magnification_ratio: |A| over brute-force cap");
    auto elems = a.elements();
    const Group& g = a.group();
    i64 n = g.order();
    std::vector<tuple_key> universe;
    {
        std::unordered_set<tuple_key, TupleKeyHash> seen;
        for (i64 aa : elems) {
            for (tuple_key k : b.keys()) {
                auto t = unpack_tuple(k, n, b.arity());
                for (auto& c : t) c = g.add(c, aa);
                seen.insert(pack_tuple(t, n));
            }
        }
        universe.assign(seen.begin(), seen.end());
        std::sort(universe.begin(), universe.end());
    }
    std::unordered_map<tuple_key, size_t, TupleKeyHash> pos;
    for (size_t i = 0; i < universe.size(); ++i) pos[universe[i]] = i;
    size_t words = (universe.size() + 63) / 64;
    std::vector<std::vector<u64>> masks(elems.size(), std::vector<u64>(words, 0));
    for (size_t i = 0; i < elems.size(); ++i) {
        for (tuple_key k : b.keys()) {
            auto t = unpack_tuple(k, n, b.arity());
            for (auto& c : t) c = g.add(c, elems[i]);
            size_t p = pos[pack_tuple(t, n)];
            masks[i][p >> 6] |= u64(1) << (p & 63);
        }
    }
    return magnify(masks, elems, words);
}

Magnification magnification_ratio(const GSet& b, const GSet& a) {
    return magnification_ratio(as_tuples(b), a);
}

namespace {

double lp_norm(const std::vector<cplx>& v, int p) {
    double s = 0.0;
    for (const cplx& x : v) s += std::pow(std::abs(x), p);
    return std::pow(s, 1.0 / double(p));
}

} // namespace

AlmostPeriods cs_almost_periods(const GSet& a, const DenseFn& f, int p, double eps,
                                int k_samples, int trials, u64 rng_seed) {
    require_same_group(a.group(), f.group(), "cs_almost_periods");
    if (a.empty()) throw usage_error("cs_almost_periods: empty A");
    if (!(eps > 0.0 && eps < 1.0)) throw usage_error("cs_almost_periods: eps must be in (0,1)");
    if (p < 1) throw usage_error("cs_almost_periods: p must be >= 1");
    if (k_samples < 1) throw usage_error("cs_almost_periods: k_samples must be >= 1");
    const Group& g = a.group();
    i64 n = g.order();
    auto ea = a.elements();
    i64 m = a.size();

    std::vector<cplx> fA(size_t(n), cplx(0, 0));
    for (i64 x = 0; x < n; ++x) {
        cplx s(0, 0);
        for (i64 aa : ea) s += f.cval(g.sub(x, aa));
        fA[size_t(x)] = s;
    }
    double nf = f.norm_lp(double(p));

    Rng rng(rng_seed);
    AlmostPeriods res;
    for (int trial = 0; trial < trials && !res.found; ++trial) {
        std::vector<i64> shifts(size_t(k_samples));
        i64 a0 = ea[size_t(rng.below(u64(m)))];
        for (int j = 0; j < k_samples; ++j)
            shifts[size_t(j)] = g.sub(ea[size_t(rng.below(u64(m)))], a0);
        std::vector<i64> aprime;
        for (i64 aa : ea) {
            bool in_as = true;
            for (i64 s : shifts)
                if (!a.contains(g.add(aa, s))) { in_as = false; break; }
            if (!in_as) continue;
            // mu_{Delta(a)+s} * f, compared against f * mu_A
            std::vector<cplx> h(size_t(n));
            for (i64 y = 0; y < n; ++y) {
                cplx s(0, 0);
                for (i64 sh : shifts) s += f.cval(g.sub(y, g.add(aa, sh)));
                h[size_t(y)] = s / double(k_samples) - fA[size_t(y)] / double(m);
            }
            if (lp_norm(h, p) <= eps * nf / 2.0) aprime.push_back(aa);
        }
        if (aprime.empty()) continue;
        res.found = true;
        res.base = aprime.front();
        res.all_valid = true;
        double rhs = eps * nf * std::pow(double(m), 1.0 / double(p));
        for (i64 ap : aprime) {
            i64 t = g.sub(ap, res.base);
            res.periods.push_back(t);
            std::vector<cplx> d(size_t(n));
            for (i64 x = 0; x < n; ++x)
                d[size_t(x)] = fA[size_t(g.add(x, t))] - fA[size_t(x)];
            double lhs = lp_norm(d, p);
            res.worst_ratio = std::max(res.worst_ratio, rhs > 0 ? lhs / rhs : 0.0);
            if (lhs > rhs * (1.0 + 1e-9)) res.all_valid = false;
        }
    }
    return res;
}

} // namespace het
