#ifndef STRINGY_INVARIANTS_HPP
#define STRINGY_INVARIANTS_HPP

#include "stringy/genfun.hpp"
#include "stringy/polyhedra.hpp"

#include <vector>

namespace stringy {

/// A bounded family of motivic invariants of type (a,b), represented by its
/// type and its value on the point class (the seed Laurent polynomial).
class InvariantFamily {
public:
    InvariantFamily(long long a, long long b, BivariatePoly seed);

    long long a() const { return a_; }
    long long b() const { return b_; }
    const BivariatePoly& seed() const { return seed_; }

private:
    long long a_ = 1, b_ = 1;
    BivariatePoly seed_;
};

/// Value of the family on the class of the k-th power of the affine line:
/// (u^a v^b)^k times the seed, for any integer k.
BivariateRF family_eval_L_power(const InvariantFamily& fam, long long k);

/// Class of the toric variety of f: sum over cones of (t-1)^(d - dim).
ScaledLaurent orbit_e_poly(const Fan& f);

/// Sum of t^(-phi(n)) over the lattice points of the closed cone (the
/// relative interior for the open variant), as an exact rational function.
RationalGF closed_cone_sum(const Cone& c, const SupportFn& sf);
RationalGF open_cone_sum(const Cone& c, const SupportFn& sf);

/// Stringy E-function: (t-1)^d times the sum of the open cone sums over all
/// cones of the fan, normalized.
RationalGF stringy_e(const Fan& f, const SupportFn& sf);

/// Discrepancies of the exceptional rays: phi(e') - 1, in ray order.
std::vector<Rat> discrepancies(const Refinement& r, const SupportFn& sf);

/// Class of the locally closed stratum attached to a subset J of the
/// exceptional rays (zero when the rays span no cone of the refined fan).
/// Errors: bad_index.
ScaledLaurent strata_class(const Refinement& r, const std::vector<size_t>& J);

struct StrataEntry {
    std::vector<size_t> subset; // indices into exceptional_rays()
    ScaledLaurent cls;
    RationalGF weight; // prod over j of (t-1)/(t^(a_j+1)-1)
};

/// All subsets with nonempty strata, with their classes and weights.
std::vector<StrataEntry> strata_report(const Refinement& r, const SupportFn& sf);

/// Stringy E-function assembled stratum by stratum from a smooth refinement.
RationalGF stringy_e_via_resolution(const Refinement& r, const SupportFn& sf);

/// Stringy phi-function of type (a,b) through a smooth refinement.
BivariateRF stringy_phi_resolution(const Fan& f, const Refinement& r, const InvariantFamily& fam);

/// Stringy phi-function via the closed-form lattice point sums.
BivariateRF stringy_phi(const Fan& f, const InvariantFamily& fam);

} // namespace stringy

#endif
