#include "stringy/polyhedra.hpp"

#include "stringy/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stringy {

Fan Fan::from_max_cones(const std::vector<Cone>& max_cones) {
    if (max_cones.empty())
        fail(errc::validation_error, "a fan needs at least one cone");
    Fan f;
    f.ambient_dim_ = max_cones.front().ambient_dim();
    for (const Cone& c : max_cones)
        if (c.ambient_dim() != f.ambient_dim_)
            fail(errc::mixed_dimensions, "cones live in different ambient spaces");

    std::vector<Cone> input = max_cones;
    std::sort(input.begin(), input.end());
    input.erase(std::unique(input.begin(), input.end()), input.end());

    std::vector<std::set<Cone>> face_sets;
    face_sets.reserve(input.size());
    for (const Cone& c : input) {
        auto fs = c.faces();
        face_sets.emplace_back(fs.begin(), fs.end());
    }

    for (size_t i = 0; i < input.size(); ++i)
        for (size_t j = i + 1; j < input.size(); ++j) {
            Cone common = intersect(input[i], input[j]);
            if (!face_sets[i].count(common) || !face_sets[j].count(common))
                fail(errc::not_a_fan,
                     "cones " + std::to_string(i) + " and " + std::to_string(j) +
                         " do not intersect in a common face");
        }

    std::set<Cone> closure;
    for (const auto& fs : face_sets) closure.insert(fs.begin(), fs.end());
    f.cones_.assign(closure.begin(), closure.end());

    for (size_t i = 0; i < input.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < input.size(); ++j) {
            if (i == j) continue;
            if (input[j].contains_cone(input[i]) && !(input[j] == input[i])) {
                maximal = false;
                break;
            }
        }
        if (maximal) f.max_cones_.push_back(input[i]);
    }

    for (const Cone& c : f.cones_)
        if (c.dim() == 1) f.rays_.push_back(c.rays().front());
    std::sort(f.rays_.begin(), f.rays_.end(), lex_less);
    return f;
}

bool Fan::has_ray(const IntVec& primitive_ray) const {
    return std::binary_search(rays_.begin(), rays_.end(), primitive_ray, lex_less);
}

bool Fan::supports(const IntVec& p) const { return max_cone_containing(p) >= 0; }

int Fan::max_cone_containing(const IntVec& p) const {
    for (size_t i = 0; i < max_cones_.size(); ++i)
        if (max_cones_[i].contains(p)) return static_cast<int>(i);
    return -1;
}

bool Fan::operator==(const Fan& o) const {
    return ambient_dim_ == o.ambient_dim_ && max_cones_ == o.max_cones_;
}

Fan triangulate(const Fan& f) {
    std::vector<Cone> pieces;
    for (const Cone& c : f.max_cones()) {
        auto t = pulling_triangulation(c);
        pieces.insert(pieces.end(), t.begin(), t.end());
    }
    return Fan::from_max_cones(pieces);
}

Fan stellar_subdivide(const Fan& f, const IntVec& ray) {
    IntVec p = primitive(ray);
    if (f.has_ray(p)) fail(errc::ray_already_present, "ray " + vec_str(p) + " is already in the fan");
    if (!f.supports(p)) fail(errc::ray_outside_support, "ray " + vec_str(p) + " lies outside the support");

    std::vector<Cone> out;
    for (const Cone& c : f.max_cones()) {
        if (!c.contains(p)) {
            out.push_back(c);
            continue;
        }
        for (const Cone& g : c.facets()) {
            if (g.contains(p)) continue;
            std::vector<IntVec> gens = g.rays();
            gens.push_back(p);
            out.emplace_back(std::move(gens), f.ambient_dim());
        }
    }
    return Fan::from_max_cones(out);
}

namespace {

// Exact cover check: inside each base cone the full-dimensional refined
// pieces must glue along every facet not on the base boundary.
void check_covers(const Fan& base, const Fan& refined) {
    for (const Cone& sigma : base.max_cones()) {
        std::vector<const Cone*> pieces;
        for (const Cone& tau : refined.max_cones())
            if (tau.dim() == sigma.dim() && sigma.contains_cone(tau)) pieces.push_back(&tau);
        if (pieces.empty())
            fail(errc::validation_error, "refinement misses a base cone entirely");
        std::map<Cone, int> interior_facets;
        for (const Cone* tau : pieces)
            for (const Cone& g : tau->facets())
                if (sigma.relint_contains(g.relint_point())) ++interior_facets[g];
        for (const auto& [g, count] : interior_facets)
            if (count != 2)
                fail(errc::validation_error, "refinement does not cover a base cone");
    }
}

} // namespace

Refinement::Refinement(Fan base, Fan refined) : base_(std::move(base)), refined_(std::move(refined)) {
    if (base_.ambient_dim() != refined_.ambient_dim())
        fail(errc::mixed_dimensions, "refinement across ambient spaces");
    for (const Cone& tau : refined_.max_cones()) {
        bool inside = false;
        for (const Cone& sigma : base_.max_cones())
            if (sigma.contains_cone(tau)) {
                inside = true;
                break;
            }
        if (!inside) fail(errc::validation_error, "refined cone not contained in any base cone");
    }
    check_covers(base_, refined_);
    for (const IntVec& r : base_.rays())
        if (!refined_.has_ray(r))
            fail(errc::validation_error, "refinement dropped base ray " + vec_str(r));
    for (const IntVec& r : refined_.rays())
        if (!base_.has_ray(r)) exceptional_.push_back(r);
}

Refinement resolve(const Fan& f) {
    Fan g = triangulate(f);
    while (true) {
        bool found = false;
        IntVec best;
        Int best_sum = 0;
        for (const Cone& c : g.max_cones()) {
            if (is_smooth(c)) continue;
            for (const IntVec& p : parallelepiped_points(c.rays(), HalfOpen::Low)) {
                if (is_zero(p)) continue;
                Int sum = 0;
                for (const Int& x : p) sum += x;
                if (!found || sum < best_sum || (sum == best_sum && lex_less(p, best))) {
                    found = true;
                    best = p;
                    best_sum = sum;
                }
            }
        }
        if (!found) break;
        g = stellar_subdivide(g, primitive(best));
    }
    return Refinement(f, g);
}

SupportFn support_function(const Fan& f) {
    std::vector<RatVec> forms;
    forms.reserve(f.max_cones().size());
    for (const Cone& c : f.max_cones()) {
        if (c.dim() == 0) {
            forms.emplace_back(f.ambient_dim(), Rat(0));
            continue;
        }
        RatVec ones(c.rays().size(), Rat(1));
        LinearSolution s = linear_solve(to_rat(c.rays()), ones);
        if (!s.consistent)
            fail(errc::not_q_gorenstein,
                 "no linear form takes the value 1 on all rays of a maximal cone");
        forms.push_back(s.x);
    }
    // cross-cone consistency: the form of every maximal cone containing a
    // fan ray must take the value 1 there
    for (size_t i = 0; i < f.max_cones().size(); ++i)
        for (const IntVec& e : f.rays())
            if (f.max_cones()[i].contains(e) && dot(forms[i], e) != 1)
                fail(errc::not_q_gorenstein, "support function is inconsistent across cones");

    // The Gorenstein index is the lcm of the denominators of the values on
    // the lattice points generating each cone's semigroup (rays plus the
    // fundamental parallelepiped points of a triangulation).
    Int index = 1;
    for (size_t i = 0; i < f.max_cones().size(); ++i) {
        const Cone& c = f.max_cones()[i];
        for (const Cone& piece : pulling_triangulation(c))
            for (const IntVec& p : parallelepiped_points(piece.rays(), HalfOpen::Low))
                index = int_lcm(index, rat_den(dot(forms[i], p)));
    }
    return SupportFn(f, std::move(forms), checked_ll(index, "gorenstein index"));
}

Rat eval_support(const SupportFn& sf, const IntVec& n) {
    int i = sf.fan().max_cone_containing(n);
    if (i < 0) fail(errc::outside_support, "point " + vec_str(n) + " is outside the fan support");
    return dot(sf.form(static_cast<size_t>(i)), n);
}

} // namespace stringy
