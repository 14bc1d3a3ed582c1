#ifndef TITSFORGE_REPORT_HPP
#define TITSFORGE_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace titsforge {

using Json = nlohmann::ordered_json;

/// One checked statement. The id carries the arm when it matters:
///   "D4"           plain verification, failures must be 0
///   "C2.falsify"   counterexample search, at least one violation expected
///   "G.norm.tally" informational tally, never gates anything
struct IdentityResult {
    std::string id;
    std::string anchor;
    std::int64_t samples = 0;
    std::int64_t passes = 0;
    std::int64_t failures = 0;
    Json witness; // null, or the first element (tuple) violating the statement
    bool vacuous = false;

    bool is_falsify_arm() const;
    bool is_tally() const;
    /// Verification arms are fine when nothing failed; falsification arms
    /// when the predicted counterexample materialized; tallies always.
    bool satisfied() const;
};

struct VerificationReport {
    std::string algebra; // fingerprint of the defining spec
    std::uint64_t seed = 0;
    std::vector<IdentityResult> results;
    std::int64_t timing_ms = -1; // -1: not measured (keeps reports byte-stable)

    bool all_satisfied() const;
    /// Canonical JSON form. timing_ms serializes as null unless measured and
    /// with_timing is set, so reruns stay byte-identical.
    Json to_json(bool with_timing = false) const;
};

} // namespace titsforge

#endif
