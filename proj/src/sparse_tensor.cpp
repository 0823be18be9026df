#include "het/sparse_tensor.hpp"

namespace het {

TupleSet SparseTensor::support() const {
    TupleSet out(group_, arity_);
    for (const auto& [k, v] : entries_) out.insert_key(k);
    return out;
}

i64 SparseTensor::total_mass() const {
    i128 s = 0;
    for (const auto& [k, v] : entries_) s += v;
    return checked_fit_i64(s, "tensor mass");
}

i64 SparseTensor::moment(int power) const {
    if (power < 1) throw usage_error("tensor moment power >= 1");
    i128 s = 0;
    for (const auto& [k, v] : entries_) {
        i128 term = 1;
        for (int i = 0; i < power; ++i) {
            term *= v;
            if (term > i128(1) << 100 || term < -(i128(1) << 100))
                throw std::overflow_error("tensor moment overflow");
        }
        s += term;
    }
    return checked_fit_i64(s, "tensor moment");
}

} // namespace het
