#include "titsforge/rng.hpp"

namespace titsforge {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {
std::uint64_t splitmix_next(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace

SampleRng::SampleRng(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
    state_ = seed ^ fnv1a(tag);
    state_ = state_ * 0x100000001b3ULL + 0x9e3779b97f4a7c15ULL;
    state_ ^= index * 0xd1342543de82ef95ULL + 1;
    // burn-in decorrelates nearby (seed, index) pairs
    splitmix_next(state_);
    splitmix_next(state_);
}

std::uint64_t SampleRng::next() { return splitmix_next(state_); }

std::uint64_t SampleRng::below(std::uint64_t n) { return next() % n; }

Scalar sample_scalar(const FieldSpec& spec, SampleRng& rng) {
    if (spec.is_prime())
        return Scalar::residue(static_cast<std::int64_t>(rng.below(spec.modulus())), spec.modulus());
    std::int64_t num = static_cast<std::int64_t>(rng.below(9)) - 4;
    std::int64_t den = static_cast<std::int64_t>(rng.below(3)) + 1;
    return Scalar::rational(num, den);
}

Scalar sample_nonzero_scalar(const FieldSpec& spec, SampleRng& rng) {
    for (;;) {
        Scalar s = sample_scalar(spec, rng);
        if (!s.is_zero()) return s;
    }
}

std::vector<Scalar> sample_coords(const FieldSpec& spec, int dim, SampleRng& rng) {
    std::vector<Scalar> out;
    out.reserve(dim);
    for (int i = 0; i < dim; ++i) out.push_back(sample_scalar(spec, rng));
    return out;
}

} // namespace titsforge
