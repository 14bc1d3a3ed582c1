#ifndef TITSFORGE_SCANS_HPP
#define TITSFORGE_SCANS_HPP

#include <optional>

#include "titsforge/generic.hpp"
#include "titsforge/report.hpp"

namespace titsforge {

enum class ScanMode { Exhaustive, Random };

ScanMode scan_mode_from_name(const std::string& name);

struct ScanOptions {
    ScanMode mode = ScanMode::Random;
    std::int64_t samples = 500; // random mode only
    std::uint64_t seed = 0;
    int workers = 0;
};

/// Hard ceiling on exhaustive state spaces (5^9 fits comfortably, 5^27 does
/// not); larger requests are rejected so a scan cannot silently run forever.
constexpr std::int64_t kExhaustiveStateCeiling = std::int64_t(1) << 26;

/// Searches for nonzero x with N(x) = 0. Exhaustive mode enumerates all
/// nonzero coordinate tuples over F_p in lexicographic order (streaming, no
/// materialized list) and reports the smallest isotropic witness; random mode
/// samples seeded tuples. Over Q exhaustive mode is an InfiniteDomain error.
VerificationReport anisotropy_scan(const TitsPtr& J, const ScanOptions& opt);

/// Tests, for each scanned x != 0, whether left and right multiplication by
/// x are bijective (matrix rank over F); the first singular witness ends an
/// exhaustive scan early.
VerificationReport division_scan(const GenericAlgebra& alg, const ScanOptions& opt);

/// Searches for nonzero x with x^# = 0. Each witness is pushed through the
/// six product equations relating N_A(x_i) to the cyclic products and
/// through the disjunction "A has zero divisors, or A is division and mu is
/// a norm of A^x".
VerificationReport sharp_zero_search(const TitsPtr& J, const ScanOptions& opt);

/// Composition law N(U_x(y)) = N(x)^2 N(y): hypothesis arms generate
/// x = (x0, 0, 0) with y restricted by each hypothesis class; the explore
/// arm samples unconstrained pairs and tallies observed failures.
VerificationReport weak_jordan_check(const TitsPtr& J, std::int64_t samples, std::uint64_t seed,
                                     int workers = 0);

// ---- decided facts used by the necessary-condition checks ----------------

enum class Decided { Yes, No, Unknown };
std::string decided_name(Decided d);

/// Is the coefficient algebra a division algebra? Fields are division by
/// construction; elsewhere the answer comes from a singular-element search
/// (exhaustive over small prime-field algebras, bounded deterministic probes
/// over Q, Unknown when nothing was found but the space was not exhausted).
Decided coeff_is_division(const DescriptorPtr& A);
/// First (x, y), both nonzero, with x y = 0, found by the same searches.
std::optional<std::pair<std::vector<Scalar>, std::vector<Scalar>>>
find_zero_divisor_pair(const DescriptorPtr& A, std::uint64_t seed);
/// mu in N_A(A^x)? Outside F 1 the answer is No outright (norms are
/// scalars); for scalar mu over a finite field the norm image is streamed
/// exhaustively; over Q the answer is Unknown.
Decided mu_is_norm(const TitsPtr& J);

} // namespace titsforge

#endif
