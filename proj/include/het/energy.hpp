#pragma once

#include "het/harmonic.hpp"

namespace het {

// E(A,B): quadruples a1+b1 = a2+b2, exact. Equals sum_x (A o B)^2(x).
i64 energy2(const GSet& a, const GSet& b);
inline i64 energy2(const GSet& a) { return energy2(a, a); }

// multiplicative energy; requires Z/p with p prime ("prime-field mode")
i64 mult_energy(const GSet& a, const GSet& b);

// E_{k,l}(A) with the degenerate convention E_{k,1} = E_{1,k} = |A|^{k+1}.
// Internally materializes the tensor of the smaller index.
i64 energy_kl(const GSet& a, int k, int l);

// Forced orientation: sum over C_k(A) entries of entry^l. Requires k >= 2.
// Used to test the symmetry theorem against an independent route.
i64 energy_kl_via_tensor(const GSet& a, int k, int l);

// E_k(A) = E_{2,k}(A) = sum (A o A)^k
i64 energy_k(const GSet& a, int k);

// E_alpha(A) = sum over supp(A o A) of (A o A)^alpha; exact for integer alpha
double energy_alpha(const GSet& a, double alpha);

// E(A,B) generalized to the mixed form sum_x (A o A)(x) (B o B)(x)
i64 energy_mixed_corr(const GSet& a, const GSet& b);

// T_k(A): solution counting via r_k = A *_k A; the Fourier route
// (1/N) sum |A_hat|^{2k} must agree to 1e-6 relative or this throws.
i64 t_k(const GSet& a, int k);

// Fourier-side T_k of an arbitrary function, (1/N) sum_xi |f_hat(xi)|^{2k}
double t_k_fourier(const DenseFn& f, int k);

// sigma_k(A) = (A *_k A)(0)
i64 sigma_k(const GSet& a, int k);

struct EnergyValue {
    std::string kind;
    double value;
    bool exact;
};

} // namespace het
