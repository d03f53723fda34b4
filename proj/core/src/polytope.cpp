#include "stringy/polyhedra.hpp"

#include "stringy/errors.hpp"

#include <algorithm>
#include <set>

namespace stringy {

namespace {

RatVec rat_vec(const IntVec& v) { return to_rat(v); }

int affine_rank(const RatMat& pts) {
    if (pts.size() <= 1) return 0;
    RatMat diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        RatVec d(pts[0].size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    return rank(diffs);
}

// p in conv(pts)? Caratheodory search over affinely independent subsets.
bool in_convex_hull(const RatVec& p, const RatMat& pts) {
    const size_t d = p.size();
    const size_t n = pts.size();
    if (n == 0) return false;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<size_t> sel;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sel.push_back(i);
        if (sel.size() > d + 1) continue;
        // barycentric system: coordinates plus the affine row
        RatMat cols(d + 1, RatVec(sel.size()));
        for (size_t j = 0; j < sel.size(); ++j) {
            for (size_t i = 0; i < d; ++i) cols[i][j] = pts[sel[j]][i];
            cols[d][j] = 1;
        }
        RatVec rhs = p;
        rhs.push_back(Rat(1));
        LinearSolution s = linear_solve(cols, rhs);
        if (!s.consistent || !s.unique) continue;
        bool nonneg = std::all_of(s.x.begin(), s.x.end(), [](const Rat& q) { return q >= 0; });
        if (nonneg) return true;
    }
    return false;
}

struct PFacet {
    IntVec normal;            // <normal, x> <= offset on the polytope
    Int offset;
    std::vector<size_t> tight; // indices of vertices on the facet
};

// Brute-force facet enumeration of a full-dimensional polytope.
std::vector<PFacet> facets_of(const RatMat& pts, int d) {
    const size_t n = pts.size();
    std::set<std::pair<IntVec, Int>> seen;
    std::vector<PFacet> out;
    std::vector<size_t> sel;
    auto process = [&]() {
        // hyperplane through the selected points: <a,x> = b
        RatMat m;
        for (size_t s : sel) {
            RatVec row = pts[s];
            row.push_back(Rat(-1));
            m.push_back(std::move(row));
        }
        RatMat ns = nullspace(m);
        if (ns.size() != 1) return;
        IntVec ab = clear_denominators(ns[0]);
        IntVec a(ab.begin(), ab.begin() + d);
        Int b = ab[d];
        if (is_zero(a)) return;
        Rat side = 0;
        for (size_t i = 0; i < n; ++i) {
            Rat s = -Rat(b);
            for (int j = 0; j < d; ++j) s += pts[i][j] * Rat(a[j]);
            if (s != 0) {
                side = s;
                break;
            }
        }
        if (side > 0) {
            a = vec_neg(a);
            b = -b;
        }
        PFacet f;
        f.normal = a;
        f.offset = b;
        for (size_t i = 0; i < n; ++i) {
            Rat s = -Rat(b);
            for (int j = 0; j < d; ++j) s += pts[i][j] * Rat(a[j]);
            if (s > 0) return; // not supporting
            if (s == 0) f.tight.push_back(i);
        }
        RatMat tight_pts;
        for (size_t i : f.tight) tight_pts.push_back(pts[i]);
        if (affine_rank(tight_pts) != d - 1) return;
        if (seen.insert({f.normal, f.offset}).second) out.push_back(std::move(f));
    };
    auto rec = [&](auto&& self, size_t start) -> void {
        if (sel.size() == static_cast<size_t>(d)) {
            process();
            return;
        }
        for (size_t i = start; i < n; ++i) {
            sel.push_back(i);
            self(self, i + 1);
            sel.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<PFacet> interior_origin_facets(const RatMat& pts, int d, const char* who) {
    if (affine_rank(pts) != d)
        fail(errc::origin_not_interior, std::string(who) + ": polytope is not full-dimensional");
    std::vector<PFacet> fs = facets_of(pts, d);
    for (const PFacet& f : fs)
        if (f.offset <= 0)
            fail(errc::origin_not_interior, std::string(who) + ": origin not strictly inside");
    return fs;
}

} // namespace

LatticePolytope::LatticePolytope(std::vector<IntVec> vertices, int ambient_dim)
    : ambient_dim_(ambient_dim) {
    if (ambient_dim_ <= 0) fail(errc::validation_error, "ambient dimension must be positive");
    if (vertices.empty()) fail(errc::validation_error, "polytope needs at least one vertex");
    for (const IntVec& v : vertices)
        if (v.size() != static_cast<size_t>(ambient_dim_))
            fail(errc::validation_error, "vertex dimension mismatch");
    std::sort(vertices.begin(), vertices.end(), lex_less);
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        fail(errc::validation_error, "duplicate vertex");
    if (vertices.size() > 20)
        fail(errc::validation_error, "vertex count exceeds the supported size");
    for (size_t i = 0; i < vertices.size(); ++i) {
        RatMat others;
        for (size_t j = 0; j < vertices.size(); ++j)
            if (j != i) others.push_back(rat_vec(vertices[j]));
        if (in_convex_hull(rat_vec(vertices[i]), others))
            fail(errc::validation_error,
                 "vertex " + vec_str(vertices[i]) + " is not an extreme point");
    }
    vertices_ = std::move(vertices);
}

QPolytope::QPolytope(std::vector<RatVec> vertices, int ambient_dim) : ambient_dim_(ambient_dim) {
    if (vertices.empty()) fail(errc::validation_error, "polytope needs at least one vertex");
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    vertices_ = std::move(vertices);
}

bool QPolytope::is_integral() const {
    for (const RatVec& v : vertices_)
        for (const Rat& q : v)
            if (!stringy::is_integral(q)) return false;
    return true;
}

LatticePolytope QPolytope::to_lattice() const {
    if (!is_integral()) fail(errc::validation_error, "polytope has non-integer vertices");
    std::vector<IntVec> vs;
    for (const RatVec& v : vertices_) {
        IntVec w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = rat_num(v[i]);
        vs.push_back(std::move(w));
    }
    return LatticePolytope(std::move(vs), ambient_dim_);
}

QPolytope polar_dual(const LatticePolytope& p) {
    RatMat pts = to_rat(p.vertices());
    auto fs = interior_origin_facets(pts, p.ambient_dim(), "polar_dual");
    std::vector<RatVec> duals;
    for (const PFacet& f : fs) {
        RatVec y(p.ambient_dim());
        for (int i = 0; i < p.ambient_dim(); ++i) y[i] = -Rat(f.normal[i]) / Rat(f.offset);
        duals.push_back(std::move(y));
    }
    return QPolytope(std::move(duals), p.ambient_dim());
}

bool is_reflexive(const LatticePolytope& p) { return polar_dual(p).is_integral(); }

Fan face_fan(const LatticePolytope& p) {
    RatMat pts = to_rat(p.vertices());
    auto fs = interior_origin_facets(pts, p.ambient_dim(), "face_fan");
    std::vector<Cone> cones;
    for (const PFacet& f : fs) {
        std::vector<IntVec> gens;
        for (size_t i : f.tight) gens.push_back(p.vertices()[i]);
        cones.emplace_back(std::move(gens), p.ambient_dim());
    }
    return Fan::from_max_cones(cones);
}

} // namespace stringy
