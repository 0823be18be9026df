#pragma once

#include "het/densefn.hpp"
#include "het/sparse_tensor.hpp"

namespace het {

// (f*g)(x) = sum_y f(y) g(x-y);  (f o g)(x) = sum_y f(y) g(y+x).
DenseFn convolve(const DenseFn& f, const DenseFn& g);
DenseFn correlate(const DenseFn& f, const DenseFn& g);
DenseFn kfold_convolve(const DenseFn& f, int k);

// integer-path shorthands on indicator functions
DenseFn autocorrelation(const GSet& a);                   // A o A
DenseFn correlate_sets(const GSet& a, const GSet& b);     // A o B

// C_{k+1}(f_1,...,f_{k+1})(x_1..x_k) = sum_z f_1(z) f_2(z+x_1) ... f_{k+1}(z+x_k).
// Integer inputs only; the tensor is exact.
SparseTensor gen_convolution(const std::vector<DenseFn>& fs);
SparseTensor gen_convolution_pow(const DenseFn& f, int k_plus_1);

// Sparse functions on a power group: correlation of two tensors of equal arity
// (entrywise over G^arity) and the view of a tensor as DenseFn support pairs.
SparseTensor tensor_correlate(const SparseTensor& f, const SparseTensor& g);
SparseTensor gen_convolution_tensors(const std::vector<SparseTensor>& fs);

// f_hat(xi) = sum_x f(x) e(-xi.x); naive per-axis transform, O(N sum n_i).
DenseFn dft(const DenseFn& f);
DenseFn inverse_dft(const DenseFn& f);

} // namespace het
