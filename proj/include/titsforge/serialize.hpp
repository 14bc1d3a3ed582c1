#ifndef TITSFORGE_SERIALIZE_HPP
#define TITSFORGE_SERIALIZE_HPP

#include <json.hpp>

#include "titsforge/algebra.hpp"
#include "titsforge/field.hpp"

namespace titsforge {

class TitsElement;
class CyclicElement;

using Json = nlohmann::ordered_json;

/// Rationals encode as text ("5", "-3/2"), prime-field residues as integers.
Json scalar_to_json(const Scalar& s);
Json coords_to_json(const std::vector<Scalar>& coords);
Json element_to_json(const AlgElement& x);
Json tits_element_to_json(const TitsElement& x);
Json cyclic_element_to_json(const CyclicElement& x);

} // namespace titsforge

#endif
