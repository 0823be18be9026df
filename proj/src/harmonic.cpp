#include "het/harmonic.hpp"

#include <cmath>

namespace het {

namespace {

struct SuppVal {
    i64 x;
    i64 iv;
    cplx cv;
};

std::vector<SuppVal> support_values(const DenseFn& f) {
    std::vector<SuppVal> out;
    for (i64 x = 0; x < f.length(); ++x) {
        if (f.integral()) {
            if (f.ival(x) != 0) out.push_back({x, f.ival(x), cplx()});
        } else {
            cplx v = f.cval(x);
            if (v != cplx(0.0, 0.0)) out.push_back({x, 0, v});
        }
    }
    return out;
}

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer convolution overflow");
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer convolution overflow");
    return r;
}

} // namespace

DenseFn convolve(const DenseFn& f, const DenseFn& g) {
    require_same_group(f.group(), g.group(), "convolve");
    const Group& gr = f.group();
    auto sf = support_values(f), sg = support_values(g);
    if (f.integral() && g.integral()) {
        DenseFn out = DenseFn::zeros_int(gr);
        for (const auto& a : sf)
            for (const auto& b : sg) {
                i64& slot = out.ival(gr.add(a.x, b.x));
                slot = checked_add(slot, checked_mul(a.iv, b.iv));
            }
        return out;
    }
    DenseFn out = DenseFn::zeros_complex(gr);
    for (const auto& a : sf) {
        cplx va = f.cval(a.x);
        for (const auto& b : sg) out.cref(gr.add(a.x, b.x)) += va * g.cval(b.x);
    }
    return out;
}

DenseFn correlate(const DenseFn& f, const DenseFn& g) {
    require_same_group(f.group(), g.group(), "correlate");
    const Group& gr = f.group();
    auto sf = support_values(f), sg = support_values(g);
    if (f.integral() && g.integral()) {
        DenseFn out = DenseFn::zeros_int(gr);
        for (const auto& a : sf)
            for (const auto& b : sg) {
                i64& slot = out.ival(gr.sub(b.x, a.x));
                slot = checked_add(slot, checked_mul(a.iv, b.iv));
            }
        return out;
    }
    DenseFn out = DenseFn::zeros_complex(gr);
    for (const auto& a : sf) {
        cplx va = f.cval(a.x);
        for (const auto& b : sg) out.cref(gr.sub(b.x, a.x)) += va * g.cval(b.x);
    }
    return out;
}

DenseFn kfold_convolve(const DenseFn& f, int k) {
    if (k < 1) throw usage_error("kfold_convolve: k >= 1");
    DenseFn acc = f;
    for (int i = 1; i < k; ++i) acc = convolve(f, acc);
    return acc;
}

DenseFn autocorrelation(const GSet& a) {
    DenseFn ind = DenseFn::indicator(a);
    return correlate(ind, ind);
}

DenseFn correlate_sets(const GSet& a, const GSet& b) {
    return correlate(DenseFn::indicator(a), DenseFn::indicator(b));
}

SparseTensor gen_convolution(const std::vector<DenseFn>& fs) {
    if (fs.size() < 2) throw usage_error("gen_convolution: need k+1 >= 2 functions");
    const Group& g = fs.front().group();
    i128 work = 1;
    for (const DenseFn& f : fs) {
        require_same_group(f.group(), g, "gen_convolution");
        if (!f.integral()) throw usage_error("gen_convolution: integer-valued inputs only");
        work *= std::max<i64>(i64(f.support().size()), 1);
        if (work > config().tensor_cap) throw cap_error("gen_convolution: support product exceeds cap");
    }
    int k = int(fs.size()) - 1;
    SparseTensor out(g, k);
    std::vector<std::vector<SuppVal>> supp;
    supp.reserve(fs.size());
    for (const DenseFn& f : fs) {
        supp.push_back(support_values(f));
        if (supp.back().empty()) return out;
    }
    i64 n = g.order();
    std::vector<size_t> idx(size_t(k), 0);
    std::vector<i64> tup(size_t(k));
    for (const auto& z : supp[0]) {
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            i64 v = z.iv;
            for (int i = 0; i < k; ++i) {
                const auto& w = supp[size_t(i + 1)][idx[size_t(i)]];
                tup[size_t(i)] = g.sub(w.x, z.x);
                v = checked_mul(v, w.iv);
            }
            out.add(pack_tuple(tup, n), v);
            int i = 0;
            while (i < k) {
                if (++idx[size_t(i)] < supp[size_t(i + 1)].size()) break;
                idx[size_t(i)] = 0;
                ++i;
            }
            if (i == k) break;
        }
    }
    return out;
}

SparseTensor gen_convolution_pow(const DenseFn& f, int k_plus_1) {
    return gen_convolution(std::vector<DenseFn>(size_t(k_plus_1), f));
}

namespace {

// componentwise w - z over G^arity, keys packed radix N
tuple_key key_sub(const Group& g, int arity, tuple_key w, tuple_key z) {
    i64 n = g.order();
    auto tw = unpack_tuple(w, n, arity);
    auto tz = unpack_tuple(z, n, arity);
    for (int i = 0; i < arity; ++i) tw[size_t(i)] = g.sub(tw[size_t(i)], tz[size_t(i)]);
    return pack_tuple(tw, n);
}

} // namespace

SparseTensor tensor_correlate(const SparseTensor& f, const SparseTensor& g) {
    require_same_group(f.group(), g.group(), "tensor_correlate");
    if (f.arity() != g.arity()) throw usage_error("tensor_correlate: arity mismatch");
    SparseTensor out(f.group(), f.arity());
    for (const auto& [ky, vy] : f.entries())
        for (const auto& [kw, vw] : g.entries())
            out.add(key_sub(f.group(), f.arity(), kw, ky), checked_mul(vy, vw));
    return out;
}

SparseTensor gen_convolution_tensors(const std::vector<SparseTensor>& fs) {
    if (fs.size() < 2) throw usage_error("gen_convolution_tensors: need >= 2 inputs");
    const Group& g = fs.front().group();
    int m = fs.front().arity();
    i128 work = 1;
    for (const SparseTensor& f : fs) {
        require_same_group(f.group(), g, "gen_convolution_tensors");
        if (f.arity() != m) throw usage_error("gen_convolution_tensors: arity mismatch");
        work *= std::max<i64>(f.size(), 1);
        if (work > config().tensor_cap) throw cap_error("gen_convolution_tensors: cap exceeded");
    }
    int l = int(fs.size()) - 1;
    SparseTensor out(g, m * l);
    if (fs.front().size() == 0) return out;
    std::vector<std::vector<std::pair<tuple_key, i64>>> supp;
    for (const SparseTensor& f : fs) {
        supp.emplace_back(f.entries().begin(), f.entries().end());
        if (supp.back().empty()) return out;
    }
    u128 radix_m = 1;
    for (int i = 0; i < m; ++i) radix_m *= u128(g.order());
    std::vector<size_t> idx(size_t(l), 0);
    for (const auto& [kz, vz] : supp[0]) {
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            i64 v = vz;
            tuple_key key = 0;
            u128 shift = 1;
            for (int i = 0; i < l; ++i) {
                const auto& [kw, vw] = supp[size_t(i + 1)][idx[size_t(i)]];
                key += key_sub(g, m, kw, kz) * shift;
                shift *= radix_m;
                v = checked_mul(v, vw);
            }
            out.add(key, v);
            int i = 0;
            while (i < l) {
                if (++idx[size_t(i)] < supp[size_t(i + 1)].size()) break;
                idx[size_t(i)] = 0;
                ++i;
            }
            if (i == l) break;
        }
    }
    return out;
}

namespace {

std::vector<cplx> axis_transform(const Group& g, std::vector<cplx> a, int sign) {
    i64 n = g.order();
    i64 stride = 1;
    for (i64 nf : g.factors()) {
        std::vector<cplx> w(size_t(nf));
        for (i64 r = 0; r < nf; ++r) {
            double ang = sign * 2.0 * M_PI * double(r) / double(nf);
            w[size_t(r)] = {std::cos(ang), std::sin(ang)};
        }
        std::vector<cplx> line(size_t(nf)), out(size_t(nf));
        i64 blocks = n / (stride * nf);
        for (i64 hi = 0; hi < blocks; ++hi) {
            for (i64 lo = 0; lo < stride; ++lo) {
                i64 base = lo + hi * stride * nf;
                for (i64 j = 0; j < nf; ++j) line[size_t(j)] = a[size_t(base + j * stride)];
                for (i64 t = 0; t < nf; ++t) {
                    cplx s(0, 0);
                    for (i64 j = 0; j < nf; ++j) s += line[size_t(j)] * w[size_t((j * t) % nf)];
                    out[size_t(t)] = s;
                }
                for (i64 t = 0; t < nf; ++t) a[size_t(base + t * stride)] = out[size_t(t)];
            }
        }
        stride *= nf;
    }
    return a;
}

} // namespace

DenseFn dft(const DenseFn& f) {
    if (f.length() > config().dft_cap) throw cap_error("dft: order exceeds transform cap");
    return DenseFn::from_complex(f.group(), axis_transform(f.group(), f.to_complex(), -1));
}

DenseFn inverse_dft(const DenseFn& f) {
    if (f.length() > config().dft_cap) throw cap_error("dft: order exceeds transform cap");
    auto a = axis_transform(f.group(), f.to_complex(), +1);
    double inv = 1.0 / double(f.length());
    for (cplx& v : a) v *= inv;
    return DenseFn::from_complex(f.group(), a);
}

} // namespace het
