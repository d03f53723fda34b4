#include "stringy/mirror.hpp"

#include "stringy/errors.hpp"

namespace stringy {

namespace {

BivariateRF signed_u_power(long long exponent, unsigned n) {
    // (-u^exponent)^n
    Int c = (n % 2 == 0) ? 1 : -1;
    return BivariateRF(BivariatePoly::term(exponent * static_cast<long long>(n), 0, c));
}

} // namespace

MirrorCheckReport check_est_mirror(const BivariateRF& ev, const BivariateRF& ew, unsigned n) {
    MirrorCheckReport rep;
    rep.lhs = ev;
    rep.rhs = signed_u_power(1, n) * ew.invert_u();
    rep.difference = rep.lhs - rep.rhs;
    rep.holds = rep.difference.is_zero();
    return rep;
}

PhiMirrorReport check_phi_mirror(const BivariateRF& ev, const BivariateRF& ew, unsigned n,
                                 const InvariantFamily& fam) {
    const long long a = fam.a(), b = fam.b();
    BivariateRF seed(fam.seed());

    PhiMirrorReport rep;
    rep.primary.lhs = ev.compose_powers(a, b) * seed;
    BivariateRF mirrored_e = signed_u_power(a, n) * ew.compose_powers(-a, b);
    rep.primary.rhs = mirrored_e * seed;
    rep.primary.difference = rep.primary.lhs - rep.primary.rhs;
    rep.primary.holds = rep.primary.difference.is_zero();

    rep.alt_rhs = mirrored_e * BivariateRF(fam.seed().invert_u());
    rep.alt_holds = (rep.primary.lhs - rep.alt_rhs).is_zero();
    return rep;
}

std::pair<Fan, Fan> batyrev_fans(const LatticePolytope& p) {
    if (!is_reflexive(p))
        fail(errc::not_reflexive, "polytope is not reflexive");
    LatticePolytope dual = polar_dual(p).to_lattice();
    return {face_fan(p), face_fan(dual)};
}

} // namespace stringy
