#ifndef STRINGY_MIRROR_HPP
#define STRINGY_MIRROR_HPP

#include "stringy/invariants.hpp"

#include <utility>

namespace stringy {

struct MirrorCheckReport {
    bool holds = false;
    BivariateRF lhs, rhs, difference;
};

/// Checks ev(u,v) = (-u)^n ew(1/u, v) exactly.
MirrorCheckReport check_est_mirror(const BivariateRF& ev, const BivariateRF& ew, unsigned n);

struct PhiMirrorReport {
    /// u -> 1/u applied to the E-factor only (the reading under which the
    /// identity holds for every seed).
    MirrorCheckReport primary;
    /// the same check with the substitution applied to the seed as well
    bool alt_holds = false;
    BivariateRF alt_rhs;
};

/// Checks phi_st(V) = (-u^a)^n phi_st(W; 1/u, v) with phi_st assembled as
/// E(u^a, v^b) times the seed; reports both substitution readings.
PhiMirrorReport check_phi_mirror(const BivariateRF& ev, const BivariateRF& ew, unsigned n,
                                 const InvariantFamily& fam);

/// Face fans of a reflexive polytope and of its polar dual.
/// Errors: not_reflexive.
std::pair<Fan, Fan> batyrev_fans(const LatticePolytope& p);

} // namespace stringy

#endif
