#ifndef STRINGY_POLYHEDRA_HPP
#define STRINGY_POLYHEDRA_HPP

#include "stringy/lattice.hpp"

#include <vector>

namespace stringy {

/// Strongly convex rational polyhedral cone, stored by its extreme rays.
/// Construction canonicalizes: rays are made primitive, deduplicated,
/// pruned to the extreme ones and sorted lexicographically. An exact
/// H-representation (span equations plus facet inequalities) is computed
/// up front and backs the membership tests.
class Cone {
public:
    Cone(std::vector<IntVec> generators, int ambient_dim);
    static Cone zero(int ambient_dim) { return Cone({}, ambient_dim); }

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return dim_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    /// Integer normals u with <u,x> >= 0 on the cone, one per facet, each
    /// lying in the span of the cone.
    const std::vector<IntVec>& facet_normals() const { return facet_normals_; }
    /// Integer equations cutting out the linear span.
    const std::vector<IntVec>& span_equations() const { return span_equations_; }

    bool contains(const IntVec& p) const;
    bool contains(const RatVec& p) const;
    bool relint_contains(const IntVec& p) const;
    bool contains_cone(const Cone& c) const;
    bool has_ray(const IntVec& primitive_ray) const;
    /// A lattice point in the relative interior (the sum of the rays; the
    /// origin for the zero cone).
    IntVec relint_point() const;

    std::vector<Cone> facets() const;
    /// Every face, including the cone itself and the zero cone.
    std::vector<Cone> faces() const;

    bool operator==(const Cone& o) const;
    bool operator<(const Cone& o) const; // canonical order: (dim, rays lex)

private:
    int ambient_dim_ = 0;
    int dim_ = 0;
    std::vector<IntVec> rays_;
    std::vector<IntVec> facet_normals_;
    std::vector<IntVec> span_equations_;
};

bool is_simplicial(const Cone& c);
bool is_smooth(const Cone& c);
/// Lattice index of the subgroup spanned by the rays inside the saturated
/// lattice of their span; 1 exactly for smooth simplicial cones.
Int multiplicity(const Cone& c);
/// Exact intersection of two cones in the same ambient space.
Cone intersect(const Cone& a, const Cone& b);
/// Simplicial subdivision of a single cone on its own rays (recursive
/// pulling at the lexicographically smallest ray).
std::vector<Cone> pulling_triangulation(const Cone& c);

/// Finite fan: a set of cones closed under faces, pairwise intersecting in
/// common faces. Stored as the face closure plus the list of maximal cones.
class Fan {
public:
    /// Builds the face closure after validating the fan conditions.
    /// Errors: not_a_fan, mixed_dimensions.
    static Fan from_max_cones(const std::vector<Cone>& max_cones);

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<Cone>& cones() const { return cones_; }
    const std::vector<Cone>& max_cones() const { return max_cones_; }
    /// Primitive generators of the 1-dimensional cones, lexicographic.
    const std::vector<IntVec>& rays() const { return rays_; }

    bool has_ray(const IntVec& primitive_ray) const;
    bool supports(const IntVec& p) const;
    /// Index into max_cones() of some maximal cone containing p, or -1.
    int max_cone_containing(const IntVec& p) const;

    bool operator==(const Fan& o) const;

private:
    Fan() = default;
    int ambient_dim_ = 0;
    std::vector<Cone> cones_;
    std::vector<Cone> max_cones_;
    std::vector<IntVec> rays_;
};

inline Fan fan_from_max_cones(const std::vector<Cone>& max_cones) {
    return Fan::from_max_cones(max_cones);
}

/// Simplicial refinement introducing no new rays; deterministic.
Fan triangulate(const Fan& f);

/// Stellar subdivision at a ray (normalized to its primitive generator).
/// Errors: ray_already_present, ray_outside_support.
Fan stellar_subdivide(const Fan& f, const IntVec& ray);

/// A subdivision of a fan together with the rays it introduced, in
/// lexicographic order. Construction validates refinement and equal support.
class Refinement {
public:
    Refinement(Fan base, Fan refined);

    const Fan& base() const { return base_; }
    const Fan& refined() const { return refined_; }
    const std::vector<IntVec>& exceptional_rays() const { return exceptional_; }

private:
    Fan base_;
    Fan refined_;
    std::vector<IntVec> exceptional_;
};

/// Smooth refinement: triangulation followed by stellar subdivisions at the
/// minimal-coordinate-sum, lexicographically smallest fundamental
/// parallelepiped point of the singular maximal cones.
Refinement resolve(const Fan& f);

/// Piecewise linear function taking the value 1 on every primitive ray
/// generator, one rational linear form per maximal cone.
class SupportFn {
public:
    SupportFn(Fan fan, std::vector<RatVec> forms, long long gorenstein_index)
        : fan_(std::move(fan)), forms_(std::move(forms)), index_(gorenstein_index) {}

    const Fan& fan() const { return fan_; }
    const RatVec& form(size_t max_cone_index) const { return forms_.at(max_cone_index); }
    long long gorenstein_index() const { return index_; }

private:
    Fan fan_;
    std::vector<RatVec> forms_; // aligned with fan_.max_cones()
    long long index_ = 1;
};

/// Solves <m_sigma, e> = 1 on each maximal cone and checks consistency.
/// Errors: not_q_gorenstein.
SupportFn support_function(const Fan& f);

/// Value of the support function at a lattice point of the support.
/// Errors: outside_support.
Rat eval_support(const SupportFn& sf, const IntVec& n);

/// Lattice polytope listed by its extreme points only (validated).
class LatticePolytope {
public:
    LatticePolytope(std::vector<IntVec> vertices, int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<IntVec>& vertices() const { return vertices_; }

    bool operator==(const LatticePolytope& o) const = default;

private:
    int ambient_dim_ = 0;
    std::vector<IntVec> vertices_; // lex sorted
};

/// Polytope with rational vertices (polar duals live here).
class QPolytope {
public:
    QPolytope(std::vector<RatVec> vertices, int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<RatVec>& vertices() const { return vertices_; }
    bool is_integral() const;
    /// Errors: validation_error when some vertex is not integral.
    LatticePolytope to_lattice() const;

private:
    int ambient_dim_ = 0;
    std::vector<RatVec> vertices_;
};

/// Polar dual { y : <x,y> >= -1 for all x }. Errors: origin_not_interior.
QPolytope polar_dual(const LatticePolytope& p);
bool is_reflexive(const LatticePolytope& p);
/// Fan of cones over the facets of p. Errors: origin_not_interior.
Fan face_fan(const LatticePolytope& p);

} // namespace stringy

#endif
