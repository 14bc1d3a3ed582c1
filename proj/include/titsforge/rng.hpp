#ifndef TITSFORGE_RNG_HPP
#define TITSFORGE_RNG_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "titsforge/field.hpp"

namespace titsforge {

std::uint64_t fnv1a(std::string_view s);

/// SplitMix64. Every sample in a suite or scan derives its own stream from
/// (seed, tag, index), so results do not depend on evaluation order or on how
/// the index space is chunked across workers.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::string_view tag, std::uint64_t index);

    std::uint64_t next();
    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

/// Over F_p: uniform residue. Over Q: small fraction (numerator in [-4, 4],
/// denominator in {1, 2, 3}) to keep identity checks from blowing up.
Scalar sample_scalar(const FieldSpec& spec, SampleRng& rng);
Scalar sample_nonzero_scalar(const FieldSpec& spec, SampleRng& rng);
std::vector<Scalar> sample_coords(const FieldSpec& spec, int dim, SampleRng& rng);

} // namespace titsforge

#endif
