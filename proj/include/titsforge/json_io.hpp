#ifndef TITSFORGE_JSON_IO_HPP
#define TITSFORGE_JSON_IO_HPP

#include <string>
#include <variant>

#include "titsforge/cyclic.hpp"
#include "titsforge/serialize.hpp"
#include "titsforge/tits.hpp"

namespace titsforge {

// Schemas:
//   field        {"kind":"Q"} | {"kind":"Fp","p":5}
//   algebra      {"field":..., "construction":"split_etale"|"cubic_field"|"mat3"|"cyclic_assoc",
//                 "minpoly":[c0,c1,c2], "sigma":[[...],...], "K":algebra, "c":scalar}
//   tits         {"A":algebra, "mu":[...], "variant":"ll"|"lr"|"rl"|"rr"}
//   cyclic       {"K":algebra, "mu":[...]}
// Rationals travel as text "n" / "n/d"; prime-field residues as integers.

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

Scalar scalar_from_json(const Json& j, const FieldSpec& spec);
std::vector<Scalar> coords_from_json(const Json& j, const FieldSpec& spec, int dim);
AlgElement element_from_json(const Json& j, const DescriptorPtr& desc);
TitsElement tits_element_from_json(const Json& j, const TitsPtr& J);
CyclicElement cyclic_element_from_json(const Json& j, const CyclicPtr& D);

Json algebra_to_json(const DescriptorPtr& desc);
DescriptorPtr algebra_from_json(const Json& j);

Json tits_to_json(const TitsPtr& J);
TitsPtr tits_from_json(const Json& j);

Json cyclic_to_json(const CyclicPtr& D);
CyclicPtr cyclic_from_json(const Json& j);

/// 16-hex-digit FNV fingerprint of the canonical dump of a spec.
std::string spec_fingerprint(const Json& spec);

using LoadedAlgebra = std::variant<DescriptorPtr, TitsPtr, CyclicPtr>;

/// Dispatches on the spec shape: "construction" -> coefficient algebra,
/// "A" -> Tits algebra, "K" -> cyclic algebra. Building validates eagerly.
LoadedAlgebra algebra_spec_from_json(const Json& j);
LoadedAlgebra load_spec_file(const std::string& path);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

} // namespace titsforge

#endif
