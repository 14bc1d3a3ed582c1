#ifndef TITSFORGE_DETAIL_SAMPLING_HPP
#define TITSFORGE_DETAIL_SAMPLING_HPP

#include "titsforge/cyclic.hpp"
#include "titsforge/rng.hpp"
#include "titsforge/tits.hpp"

namespace titsforge::detail {

inline AlgElement sample_element(const DescriptorPtr& d, SampleRng& rng) {
    return d->element(sample_coords(d->field(), d->dim(), rng));
}

inline TitsElement sample_tits_element(const TitsPtr& J, SampleRng& rng) {
    const auto& A = J->coeff();
    auto x0 = sample_element(A, rng);
    auto x1 = sample_element(A, rng);
    auto x2 = sample_element(A, rng);
    return J->element(std::move(x0), std::move(x1), std::move(x2));
}

} // namespace titsforge::detail

#endif
