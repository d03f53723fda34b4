#include "stringy/invariants.hpp"

#include "stringy/errors.hpp"

#include <algorithm>
#include <set>

namespace stringy {

InvariantFamily::InvariantFamily(long long a, long long b, BivariatePoly seed)
    : a_(a), b_(b), seed_(std::move(seed)) {
    if (a_ == 0 && b_ == 0) fail(errc::validation_error, "family type (0,0) is not allowed");
}

BivariateRF family_eval_L_power(const InvariantFamily& fam, long long k) {
    return BivariateRF(fam.seed().shifted(fam.a() * k, fam.b() * k));
}

ScaledLaurent orbit_e_poly(const Fan& f) {
    ScaledLaurent tm1 = ScaledLaurent::t_power(1) - ScaledLaurent::one();
    ScaledLaurent sum;
    for (const Cone& c : f.cones())
        sum += tm1.pow(static_cast<unsigned>(f.ambient_dim() - c.dim()));
    return sum;
}

namespace {

Rat eval_on(const SupportFn& sf, const IntVec& n) {
    try {
        return eval_support(sf, n);
    } catch (const error& e) {
        if (e.code() == errc::outside_support)
            fail(errc::support_fn_undefined, "cone is not inside the fan of the support function");
        throw;
    }
}

// Sum over the fundamental parallelepiped of a simplicial cone divided by
// the geometric-series factors of its generators.
RationalGF simplicial_sum(const Cone& c, const SupportFn& sf, HalfOpen mode) {
    if (c.dim() == 0) return RationalGF::one();
    Rat shift = 0;
    std::map<Rat, int> den;
    for (const IntVec& v : c.rays()) {
        Rat cv = eval_on(sf, v);
        shift += cv;
        ++den[cv];
    }
    ScaledLaurent num;
    for (const IntVec& p : parallelepiped_points(c.rays(), mode))
        num += ScaledLaurent::t_power(shift - eval_on(sf, p));
    return RationalGF(std::move(num), std::move(den));
}

// Faces of the pulling triangulation of c whose relative interiors lie in
// the relative interior of c (they partition it).
std::vector<Cone> interior_triangulation_faces(const Cone& c) {
    std::set<Cone> faces;
    for (const Cone& piece : pulling_triangulation(c)) {
        auto fs = piece.faces();
        faces.insert(fs.begin(), fs.end());
    }
    std::vector<Cone> out;
    for (const Cone& g : faces) {
        if (g.dim() == 0) {
            if (c.dim() == 0) out.push_back(g);
            continue;
        }
        if (c.relint_contains(g.relint_point())) out.push_back(g);
    }
    return out;
}

void require_inside(const Cone& c, const SupportFn& sf) {
    for (const IntVec& r : c.rays())
        if (!sf.fan().supports(r))
            fail(errc::support_fn_undefined, "cone ray " + vec_str(r) + " outside the fan of the support function");
}

} // namespace

RationalGF closed_cone_sum(const Cone& c, const SupportFn& sf) {
    require_inside(c, sf);
    if (is_simplicial(c)) return simplicial_sum(c, sf, HalfOpen::Low);
    std::set<Cone> faces;
    for (const Cone& piece : pulling_triangulation(c)) {
        auto fs = piece.faces();
        faces.insert(fs.begin(), fs.end());
    }
    RationalGF sum;
    for (const Cone& g : faces) sum = gf_add(sum, simplicial_sum(g, sf, HalfOpen::High));
    return sum;
}

RationalGF open_cone_sum(const Cone& c, const SupportFn& sf) {
    require_inside(c, sf);
    RationalGF sum;
    for (const Cone& g : interior_triangulation_faces(c))
        sum = gf_add(sum, simplicial_sum(g, sf, HalfOpen::High));
    return sum;
}

RationalGF stringy_e(const Fan& f, const SupportFn& sf) {
    if (!(sf.fan() == f))
        fail(errc::support_fn_undefined, "support function belongs to a different fan");
    RationalGF sum;
    for (const Cone& c : f.cones()) sum = gf_add(sum, open_cone_sum(c, sf));
    ScaledLaurent tm1 = ScaledLaurent::t_power(1) - ScaledLaurent::one();
    RationalGF scaled = gf_mul(RationalGF(tm1.pow(static_cast<unsigned>(f.ambient_dim()))), sum);
    return gf_normalize(scaled);
}

std::vector<Rat> discrepancies(const Refinement& r, const SupportFn& sf) {
    if (!(sf.fan() == r.base()))
        fail(errc::support_fn_undefined, "support function does not belong to the base fan");
    std::vector<Rat> out;
    for (const IntVec& e : r.exceptional_rays()) {
        Rat a = eval_support(sf, e) - 1;
        if (a <= -1)
            fail(errc::validation_error,
                 "discrepancy of " + vec_str(e) + " is not greater than -1");
        out.push_back(a);
    }
    return out;
}

namespace {

ScaledLaurent strata_class_for_rays(const Refinement& r, const std::vector<IntVec>& sigma_rays) {
    const Fan& g = r.refined();
    // the rays must jointly span a cone of the refined fan
    if (!sigma_rays.empty()) {
        bool found = false;
        for (const Cone& c : g.cones())
            if (c.rays() == sigma_rays) {
                found = true;
                break;
            }
        if (!found) return ScaledLaurent(); // empty stratum
    }
    std::set<IntVec> in_J(sigma_rays.begin(), sigma_rays.end());
    std::set<IntVec> other_exceptional;
    for (const IntVec& e : r.exceptional_rays())
        if (!in_J.count(e)) other_exceptional.insert(e);

    ScaledLaurent tm1 = ScaledLaurent::t_power(1) - ScaledLaurent::one();
    ScaledLaurent sum;
    for (const Cone& c : g.cones()) {
        bool ok = true;
        for (const IntVec& e : sigma_rays)
            if (!c.has_ray(e)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (const IntVec& ray : c.rays())
            if (other_exceptional.count(ray)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        sum += tm1.pow(static_cast<unsigned>(g.ambient_dim() - c.dim()));
    }
    return sum;
}

} // namespace

ScaledLaurent strata_class(const Refinement& r, const std::vector<size_t>& J) {
    std::vector<IntVec> rays;
    std::set<size_t> seen;
    for (size_t j : J) {
        if (j >= r.exceptional_rays().size())
            fail(errc::bad_index, "exceptional index " + std::to_string(j) + " out of range");
        if (seen.insert(j).second) rays.push_back(r.exceptional_rays()[j]);
    }
    std::sort(rays.begin(), rays.end(), lex_less);
    return strata_class_for_rays(r, rays);
}

std::vector<StrataEntry> strata_report(const Refinement& r, const SupportFn& sf) {
    std::vector<Rat> disc = discrepancies(r, sf);
    std::map<IntVec, size_t> ray_index;
    for (size_t i = 0; i < r.exceptional_rays().size(); ++i)
        ray_index.emplace(r.exceptional_rays()[i], i);

    // The subsets with nonempty strata are exactly the ray sets of the
    // refined cones consisting solely of exceptional rays.
    std::set<std::vector<size_t>> subsets;
    subsets.insert(std::vector<size_t>{});
    for (const Cone& c : r.refined().cones()) {
        std::vector<size_t> J;
        bool all_exceptional = !c.rays().empty();
        for (const IntVec& ray : c.rays()) {
            auto it = ray_index.find(ray);
            if (it == ray_index.end()) {
                all_exceptional = false;
                break;
            }
            J.push_back(it->second);
        }
        if (!all_exceptional) continue;
        std::sort(J.begin(), J.end());
        subsets.insert(std::move(J));
    }

    ScaledLaurent tm1 = ScaledLaurent::t_power(1) - ScaledLaurent::one();
    std::vector<StrataEntry> out;
    for (const auto& J : subsets) {
        StrataEntry e;
        e.subset = J;
        e.cls = strata_class(r, J);
        std::map<Rat, int> den;
        for (size_t j : J) ++den[disc[j] + 1];
        e.weight = RationalGF(tm1.pow(static_cast<unsigned>(J.size())), std::move(den));
        if (!e.cls.is_zero() || J.empty()) out.push_back(std::move(e));
    }
    return out;
}

RationalGF stringy_e_via_resolution(const Refinement& r, const SupportFn& sf) {
    RationalGF sum;
    for (const StrataEntry& e : strata_report(r, sf))
        sum = gf_add(sum, gf_mul(RationalGF(e.cls), e.weight));
    return gf_normalize(sum);
}

BivariateRF stringy_phi_resolution(const Fan& f, const Refinement& r, const InvariantFamily& fam) {
    if (!(r.base() == f))
        fail(errc::validation_error, "refinement does not refine the given fan");
    for (const Cone& c : r.refined().max_cones())
        if (!is_smooth(c))
            fail(errc::validation_error, "refined fan is not smooth");
    SupportFn sf = support_function(f);
    RationalGF e_st = stringy_e_via_resolution(r, sf);
    return substitute_t(e_st, fam.a(), fam.b()) * BivariateRF(fam.seed());
}

BivariateRF stringy_phi(const Fan& f, const InvariantFamily& fam) {
    SupportFn sf = support_function(f);
    RationalGF e_st = stringy_e(f, sf);
    return substitute_t(e_st, fam.a(), fam.b()) * BivariateRF(fam.seed());
}

} // namespace stringy
