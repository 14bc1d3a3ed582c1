#include "titsforge/serialize.hpp"

#include "titsforge/cyclic.hpp"
#include "titsforge/tits.hpp"

namespace titsforge {

Json scalar_to_json(const Scalar& s) {
    if (s.spec().is_prime()) return Json(s.residue_value());
    return Json(s.str());
}

Json coords_to_json(const std::vector<Scalar>& coords) {
    Json arr = Json::array();
    for (const Scalar& s : coords) arr.push_back(scalar_to_json(s));
    return arr;
}

Json element_to_json(const AlgElement& x) { return coords_to_json(x.coords()); }

Json tits_element_to_json(const TitsElement& x) {
    return Json::array({element_to_json(x.slot(0)), element_to_json(x.slot(1)),
                        element_to_json(x.slot(2))});
}

Json cyclic_element_to_json(const CyclicElement& x) {
    return Json::array({element_to_json(x.coeff(0)), element_to_json(x.coeff(1)),
                        element_to_json(x.coeff(2))});
}

} // namespace titsforge
