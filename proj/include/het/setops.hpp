#pragma once

#include <optional>

#include "het/densefn.hpp"
#include "het/rng.hpp"
#include "het/tupleset.hpp"

namespace het {

// A1 x ... x Ak - Delta(B), direct image of (a1-b, ..., ak-b).
// An empty factor list gives the arity-0 set: one (empty) tuple iff B is
// nonempty, matching the image of B under the map into G^0.
TupleSet higher_diff(const std::vector<GSet>& sets, const GSet& b);

// Same set via the nonempty-intersection characterization:
// (x1..xk) present iff B cap (A1-x1) cap ... cap (Ak-xk) != {}.
TupleSet higher_diff_by_characterization(const std::vector<GSet>& sets, const GSet& b);

// Recursive decomposition splitting at position m (1 <= m < k).
TupleSet higher_diff_recursive(const std::vector<GSet>& sets, const GSet& b, int m);

// B (-)_k B = G^k test, i.e. every k-tuple of shifts meets B.
bool basis_depth_check(const GSet& b, int k);

// Greedy covering set X with A + X = G and |X| <= ceil((N/|A|) ln N) + 1.
GSet greedy_cover(const GSet& a);

struct Rational {
    i64 num = 0, den = 1; // reduced, den > 0
    double value() const { return double(num) / double(den); }
};

struct Magnification {
    Rational ratio;
    std::vector<i64> witness; // minimizing Z, ascending
};

// min over nonempty Z subset A of |B + Delta(Z)| / |Z|, exact.
// Ties: smaller ratio, then smaller |Z|, then lexicographic elements.
Magnification magnification_ratio(const TupleSet& b, const GSet& a);
Magnification magnification_ratio(const GSet& b, const GSet& a);

struct AlmostPeriods {
    i64 base = 0;             // the chosen a
    std::vector<i64> periods; // T = A'_s - a (contains 0 when found)
    bool found = false;       // some nonempty A'_s within the trial budget
    bool all_valid = false;   // every t passed the direct norm validation
    double worst_ratio = 0.0; // max lhs/rhs over returned t
};

// Randomized Croot-Sisask almost-period construction, post-validated against
// || (f*A)(x+t) - (f*A)(x) ||_p <= eps ||f||_p |A|^{1/p} by direct evaluation.
AlmostPeriods cs_almost_periods(const GSet& a, const DenseFn& f, int p, double eps,
                                int k_samples, int trials, u64 rng_seed);

} // namespace het
