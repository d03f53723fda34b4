#include "stringy/errors.hpp"

namespace stringy {

const char* errc_name(errc c) {
    switch (c) {
    case errc::non_square: return "NonSquare";
    case errc::zero_vector: return "ZeroVector";
    case errc::no_solution: return "NoSolution";
    case errc::not_unique: return "NotUnique";
    case errc::dependent_generators: return "DependentGenerators";
    case errc::not_a_fan: return "NotAFan";
    case errc::mixed_dimensions: return "MixedDimensions";
    case errc::ray_outside_support: return "RayOutsideSupport";
    case errc::ray_already_present: return "RayAlreadyPresent";
    case errc::not_q_gorenstein: return "NotQGorenstein";
    case errc::outside_support: return "OutsideSupport";
    case errc::origin_not_interior: return "OriginNotInterior";
    case errc::not_reflexive: return "NotReflexive";
    case errc::support_fn_undefined: return "SupportFnUndefined";
    case errc::bad_index: return "BadIndex";
    case errc::pole_at_one: return "PoleAtOne";
    case errc::fractional_exponent_unresolvable: return "FractionalExponentUnresolvable";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    }
    return "UnknownError";
}

} // namespace stringy
