#ifndef TITSFORGE_IDENTITIES_HPP
#define TITSFORGE_IDENTITIES_HPP

#include <string>
#include <vector>

#include "titsforge/report.hpp"
#include "titsforge/scans.hpp"
#include "titsforge/tits.hpp"

namespace titsforge {

struct IdentityInfo {
    std::string id;
    std::string anchor;
    bool coefficient_level; // D-ids and L1 run on a coefficient algebra
};

/// The full registry: D1..D13 (coefficient level), J1..J7 (construction
/// level), C1..C12 (conditional lemmas), L1 (zero-divisor transfer to the
/// Jordan product).
const std::vector<IdentityInfo>& identity_registry();
const IdentityInfo& identity_info(const std::string& id);

/// Ids run when no filter is given.
std::vector<std::string> default_identity_ids(const DescriptorPtr& target);
std::vector<std::string> default_identity_ids(const TitsPtr& target);

/// Runs the requested identities on seeded samples. Conditional identities
/// generate hypothesis-satisfying inputs (classes rejected as unsatisfiable,
/// like norm-zero elements of a field, are flagged vacuous); iff-identities
/// resolve into a .verify or .falsify arm depending on whether the scalar
/// condition holds for this algebra.
VerificationReport run_identity_suite(const DescriptorPtr& target,
                                      const std::vector<std::string>& ids, std::int64_t samples,
                                      std::uint64_t seed, int workers = 0);
VerificationReport run_identity_suite(const TitsPtr& target, const std::vector<std::string>& ids,
                                      std::int64_t samples, std::uint64_t seed, int workers = 0);

} // namespace titsforge

#endif
