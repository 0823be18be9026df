#pragma once

#include <complex>
#include <vector>

#include "het/gset.hpp"

namespace het {

using cplx = std::complex<double>;

// Function on the whole group. Counting work stays on the exact integer path;
// the complex view is materialized on demand.
class DenseFn {
public:
    static DenseFn zeros_int(const Group& g);
    static DenseFn zeros_complex(const Group& g);
    static DenseFn indicator(const GSet& a);
    static DenseFn delta(const Group& g, i64 at);
    static DenseFn from_int(const Group& g, std::vector<i64> vals);
    static DenseFn from_complex(const Group& g, std::vector<cplx> vals);

    const Group& group() const { return group_; }
    i64 length() const { return group_.order(); }
    bool integral() const { return integral_; }

    i64 ival(i64 x) const { return ivals_[size_t(x)]; }
    i64& ival(i64 x) { return ivals_[size_t(x)]; }
    cplx cval(i64 x) const { return integral_ ? cplx(double(ivals_[size_t(x)]), 0.0) : cvals_[size_t(x)]; }
    cplx& cref(i64 x) { return cvals_[size_t(x)]; }

    const std::vector<i64>& ivalues() const { return ivals_; }
    const std::vector<cplx>& cvalues() const { return cvals_; }

    std::vector<cplx> to_complex() const;

    // nonzero positions
    std::vector<i64> support() const;

    double norm_lp(double p) const;
    double norm_inf() const;

private:
    DenseFn(Group g, bool integral) : group_(std::move(g)), integral_(integral) {}
    Group group_;
    bool integral_;
    std::vector<i64> ivals_;
    std::vector<cplx> cvals_;
};

} // namespace het
