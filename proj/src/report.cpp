#include "titsforge/report.hpp"

namespace titsforge {

bool IdentityResult::is_falsify_arm() const {
    return id.size() > 8 && id.ends_with(".falsify");
}

bool IdentityResult::is_tally() const {
    return id.ends_with(".tally") || id.ends_with(".explore");
}

bool IdentityResult::satisfied() const {
    if (vacuous || is_tally()) return true;
    if (is_falsify_arm()) return passes >= 1;
    return failures == 0;
}

bool VerificationReport::all_satisfied() const {
    for (const auto& r : results)
        if (!r.satisfied()) return false;
    return true;
}

Json VerificationReport::to_json(bool with_timing) const {
    Json out;
    out["algebra"] = algebra;
    out["seed"] = seed;
    Json rows = Json::array();
    for (const auto& r : results) {
        Json row;
        row["id"] = r.id;
        row["anchor"] = r.anchor;
        row["samples"] = r.samples;
        row["passes"] = r.passes;
        row["failures"] = r.failures;
        row["witness"] = r.witness;
        row["vacuous"] = r.vacuous;
        rows.push_back(std::move(row));
    }
    out["results"] = std::move(rows);
    out["timing_ms"] = (with_timing && timing_ms >= 0) ? Json(timing_ms) : Json(nullptr);
    return out;
}

} // namespace titsforge
