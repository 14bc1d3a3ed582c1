#ifndef TITSFORGE_DETAIL_INTERPOLATE_HPP
#define TITSFORGE_DETAIL_INTERPOLATE_HPP

#include "titsforge/field.hpp"

namespace titsforge::detail {

/// Linear coefficient of a cubic map t -> f(t) with f(0) known, recovered
/// exactly from the values at t in {-1, 1, 2}. The node Vandermonde is
/// invertible whenever the characteristic is not 2 or 3, which FieldSpec
/// guarantees. V needs +, -, and Scalar * V.
template <class V, class Eval>
V cubic_linear_coefficient(const FieldSpec& field, Eval&& f, const V& f0) {
    const V g1 = f(Scalar::one(field)) - f0;
    const V gm1 = f(Scalar::from_int(field, -1)) - f0;
    const V g2 = f(Scalar::from_int(field, 2)) - f0;
    const Scalar half = small_inverse(2, field);
    const Scalar sixth = small_inverse(6, field);
    const Scalar three = Scalar::from_int(field, 3);
    return half * (g1 - gm1) - sixth * (g2 - three * g1 - gm1);
}

} // namespace titsforge::detail

#endif
