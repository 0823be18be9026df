#include "het/energy.hpp"

#include <cmath>

namespace het {

namespace {

i64 moment_of(const DenseFn& f, int power) {
    i128 s = 0;
    for (i64 x = 0; x < f.length(); ++x) {
        i128 term = 1;
        i64 v = f.ival(x);
        for (int i = 0; i < power; ++i) term *= v;
        s += term;
    }
    return checked_fit_i64(s, "energy moment");
}

i64 ipow(i64 base, int e) {
    i128 r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return checked_fit_i64(r, "power");
}

bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

i64 energy2(const GSet& a, const GSet& b) {
    require_same_group(a.group(), b.group(), "energy2");
    return moment_of(correlate_sets(a, b), 2);
}

i64 mult_energy(const GSet& a, const GSet& b) {
    require_same_group(a.group(), b.group(), "mult_energy");
    const Group& g = a.group();
    if (g.factors().size() != 1 || !is_prime(g.factors()[0]))
        throw usage_error("mult_energy needs prime-field mode (group Z/p, p prime)");
    i64 p = g.order();
    std::vector<i64> r(size_t(p), 0);
    for (i64 x : a.elements())
        for (i64 y : b.elements()) r[size_t((i128(x) * y) % p)] += 1;
    i128 s = 0;
    for (i64 v : r) s += i128(v) * v;
    return checked_fit_i64(s, "mult_energy");
}

i64 energy_kl_via_tensor(const GSet& a, int k, int l) {
    if (k < 2 || l < 1) throw usage_error("energy_kl_via_tensor: k >= 2, l >= 1");
    double work = std::pow(double(std::max<i64>(a.size(), 1)), double(k));
    if (work > double(config().tensor_cap)) throw cap_error("energy_kl: |A|^k exceeds cap");
    SparseTensor t = gen_convolution_pow(DenseFn::indicator(a), k);
    return t.moment(l);
}

i64 energy_kl(const GSet& a, int k, int l) {
    if (k < 1 || l < 1) throw usage_error("energy_kl: k, l >= 1");
    if (k == 1 || l == 1) return ipow(a.size(), std::max(k, l) + 1);
    if (k <= l) return energy_kl_via_tensor(a, k, l);
    return energy_kl_via_tensor(a, l, k);
}

i64 energy_k(const GSet& a, int k) { return energy_kl(a, 2, k); }

double energy_alpha(const GSet& a, double alpha) {
    if (!(alpha > 0)) throw usage_error("energy_alpha: alpha > 0");
    DenseFn c = autocorrelation(a);
    // Kahan summation over the support
    double s = 0.0, comp = 0.0;
    for (i64 x = 0; x < c.length(); ++x) {
        i64 v = c.ival(x);
        if (v == 0) continue;
        double term = std::pow(double(v), alpha);
        double y = term - comp;
        double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    return s;
}

i64 energy_mixed_corr(const GSet& a, const GSet& b) {
    require_same_group(a.group(), b.group(), "energy_mixed_corr");
    DenseFn ca = autocorrelation(a), cb = autocorrelation(b);
    i128 s = 0;
    for (i64 x = 0; x < ca.length(); ++x) s += i128(ca.ival(x)) * cb.ival(x);
    return checked_fit_i64(s, "energy_mixed_corr");
}

i64 t_k(const GSet& a, int k) {
    if (k < 1) throw usage_error("t_k: k >= 1");
    DenseFn rk = kfold_convolve(DenseFn::indicator(a), k);
    i64 exact = moment_of(rk, 2);
    if (a.group().order() <= config().dft_cap) {
        double four = t_k_fourier(DenseFn::indicator(a), k);
        double rel = std::abs(four - double(exact)) / std::max(1.0, double(exact));
        if (rel > 1e-6)
            throw std::logic_error("t_k: Fourier path disagrees with counting path");
    }
    return exact;
}

double t_k_fourier(const DenseFn& f, int k) {
    DenseFn fh = dft(f);
    double s = 0.0;
    for (i64 x = 0; x < fh.length(); ++x)
        s += std::pow(std::norm(fh.cval(x)), k);
    return s / double(f.length());
}

i64 sigma_k(const GSet& a, int k) {
    if (k < 1) throw usage_error("sigma_k: k >= 1");
    return kfold_convolve(DenseFn::indicator(a), k).ival(0);
}

} // namespace het
