#include "het/densefn.hpp"

#include <cmath>

namespace het {

DenseFn DenseFn::zeros_int(const Group& g) {
    DenseFn f(g, true);
    f.ivals_.assign(size_t(g.order()), 0);
    return f;
}

DenseFn DenseFn::zeros_complex(const Group& g) {
    DenseFn f(g, false);
    f.cvals_.assign(size_t(g.order()), cplx(0.0, 0.0));
    return f;
}

DenseFn DenseFn::indicator(const GSet& a) {
    DenseFn f = zeros_int(a.group());
    for (i64 x : a.elements()) f.ivals_[size_t(x)] = 1;
    return f;
}

DenseFn DenseFn::delta(const Group& g, i64 at) {
    DenseFn f = zeros_int(g);
    f.ivals_[size_t(at)] = 1;
    return f;
}

DenseFn DenseFn::from_int(const Group& g, std::vector<i64> vals) {
    if (i64(vals.size()) != g.order()) throw usage_error("DenseFn length mismatch");
    DenseFn f(g, true);
    f.ivals_ = std::move(vals);
    return f;
}

DenseFn DenseFn::from_complex(const Group& g, std::vector<cplx> vals) {
    if (i64(vals.size()) != g.order()) throw usage_error("DenseFn length mismatch");
    DenseFn f(g, false);
    f.cvals_ = std::move(vals);
    return f;
}

std::vector<cplx> DenseFn::to_complex() const {
    if (!integral_) return cvals_;
    std::vector<cplx> out(ivals_.size());
    for (size_t i = 0; i < ivals_.size(); ++i) out[i] = cplx(double(ivals_[i]), 0.0);
    return out;
}

std::vector<i64> DenseFn::support() const {
    std::vector<i64> out;
    for (i64 x = 0; x < length(); ++x) {
        if (integral_ ? (ivals_[size_t(x)] != 0) : (std::abs(cvals_[size_t(x)]) != 0.0))
            out.push_back(x);
    }
    return out;
}

double DenseFn::norm_lp(double p) const {
    double s = 0.0;
    for (i64 x = 0; x < length(); ++x) s += std::pow(std::abs(cval(x)), p);
    return std::pow(s, 1.0 / p);
}

double DenseFn::norm_inf() const {
    double m = 0.0;
    for (i64 x = 0; x < length(); ++x) m = std::max(m, std::abs(cval(x)));
    return m;
}

} // namespace het
