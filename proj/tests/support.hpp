#ifndef STRINGY_TESTS_SUPPORT_HPP
#define STRINGY_TESTS_SUPPORT_HPP

#include "stringy/invariants.hpp"
#include "stringy/polyhedra.hpp"

#include <initializer_list>
#include <map>
#include <random>
#include <vector>

namespace testsupport {

using namespace stringy;

inline IntVec iv(std::initializer_list<long long> xs) {
    IntVec v;
    for (long long x : xs) v.push_back(Int(x));
    return v;
}

inline Cone cone(std::initializer_list<std::initializer_list<long long>> rays, int d) {
    std::vector<IntVec> gens;
    for (auto r : rays) gens.push_back(iv(r));
    return Cone(std::move(gens), d);
}

// Deterministic source of small integers; raw modulo keeps the stream
// identical across standard library implementations.
struct Rng {
    std::mt19937_64 gen{0x5eed1e55ULL};
    long long range(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(gen() % static_cast<unsigned long long>(hi - lo + 1));
    }
};

// -- standard fans ------------------------------------------------------------

inline Fan p1_fan() {
    return Fan::from_max_cones({cone({{1}}, 1), cone({{-1}}, 1)});
}

inline Fan p2_fan() {
    return Fan::from_max_cones({cone({{1, 0}, {0, 1}}, 2), cone({{0, 1}, {-1, -1}}, 2),
                                cone({{-1, -1}, {1, 0}}, 2)});
}

inline Fan p1xp1_fan() {
    return Fan::from_max_cones({cone({{1, 0}, {0, 1}}, 2), cone({{0, 1}, {-1, 0}}, 2),
                                cone({{-1, 0}, {0, -1}}, 2), cone({{0, -1}, {1, 0}}, 2)});
}

inline Fan hirzebruch2_fan() {
    return Fan::from_max_cones({cone({{1, 0}, {0, 1}}, 2), cone({{0, 1}, {-1, 2}}, 2),
                                cone({{-1, 2}, {0, -1}}, 2), cone({{0, -1}, {1, 0}}, 2)});
}

inline Fan p3_fan() {
    return Fan::from_max_cones({cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3),
                                cone({{1, 0, 0}, {0, 1, 0}, {-1, -1, -1}}, 3),
                                cone({{1, 0, 0}, {0, 0, 1}, {-1, -1, -1}}, 3),
                                cone({{0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, 3)});
}

/// Affine A_{n-1} fan: faces of the cone over (1,0) and (1,n).
inline Fan a_series_fan(long long n) {
    return Fan::from_max_cones({Cone({iv({1, 0}), iv({1, n})}, 2)});
}

/// Affine 1/3(1,1) quotient fan.
inline Fan third_quotient_fan() {
    return Fan::from_max_cones({cone({{0, 1}, {3, -1}}, 2)});
}

/// Cone over the diamond at height one (two singular halves).
inline Fan diamond_cone_fan() {
    return Fan::from_max_cones({cone({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}, 3)});
}

// -- standard polytopes -------------------------------------------------------

inline LatticePolytope p2_triangle() {
    return LatticePolytope({iv({1, 0}), iv({0, 1}), iv({-1, -1})}, 2);
}

inline LatticePolytope square2() {
    return LatticePolytope({iv({1, 1}), iv({1, -1}), iv({-1, 1}), iv({-1, -1})}, 2);
}

inline LatticePolytope diamond2() {
    return LatticePolytope({iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})}, 2);
}

inline LatticePolytope cube3() {
    std::vector<IntVec> vs;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1}) vs.push_back(iv({x, y, z}));
    return LatticePolytope(std::move(vs), 3);
}

inline Fan square_face_fan() { return face_fan(square2()); }

// -- independent oracles ------------------------------------------------------

/// Cofactor-expansion determinant, kept separate from the library path.
inline Int oracle_det(const std::vector<IntVec>& m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int sum = 0;
    for (size_t j = 0; j < n; ++j) {
        std::vector<IntVec> minor;
        for (size_t i = 1; i < n; ++i) {
            IntVec row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Int term = m[0][j] * oracle_det(minor);
        if (j % 2) sum -= term;
        else sum += term;
    }
    return sum;
}

/// Lattice index of independent rows inside the saturation of their span:
/// gcd of all maximal minors, via the cofactor determinant above.
inline Int oracle_lattice_index(const std::vector<IntVec>& gens) {
    const size_t k = gens.size();
    if (k == 0) return 1;
    const size_t d = gens[0].size();
    Int g = 0;
    std::vector<size_t> sel;
    auto rec = [&](auto&& self, size_t start) -> void {
        if (sel.size() == k) {
            std::vector<IntVec> sub(k, IntVec(k));
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) sub[i][j] = gens[i][sel[j]];
            Int det = oracle_det(sub);
            g = int_gcd(g, det);
            return;
        }
        for (size_t i = start; i < d; ++i) {
            sel.push_back(i);
            self(self, i + 1);
            sel.pop_back();
        }
    };
    rec(rec, 0);
    return g < 0 ? -g : g;
}

// Test-local Gauss-Jordan; the oracles below must not share the library's
// elimination code.
struct TSolve {
    bool consistent = false, unique = false;
    RatVec x;
};

inline TSolve t_solve(RatMat a, RatVec b) {
    TSolve out;
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    size_t r = 0;
    std::vector<size_t> pivots;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        Rat inv = a[r][c];
        for (size_t j = c; j <= cols; ++j) a[r][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (a[i][cols] != 0) return out;
    out.consistent = true;
    out.unique = pivots.size() == cols;
    out.x.assign(cols, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) out.x[pivots[i]] = a[i][cols];
    return out;
}

/// p in conv(pts)? Caratheodory over subsets, with the test-local solver.
inline bool oracle_in_hull(const RatVec& p, const std::vector<RatVec>& pts) {
    const size_t d = p.size();
    const size_t n = pts.size();
    for (unsigned long long mask = 1; mask < (1ull << n); ++mask) {
        std::vector<size_t> sel;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) sel.push_back(i);
        if (sel.size() > d + 1) continue;
        RatMat cols(d + 1, RatVec(sel.size()));
        for (size_t j = 0; j < sel.size(); ++j) {
            for (size_t i = 0; i < d; ++i) cols[i][j] = pts[sel[j]][i];
            cols[d][j] = 1;
        }
        RatVec rhs = p;
        rhs.push_back(Rat(1));
        TSolve s = t_solve(cols, rhs);
        if (!s.consistent || !s.unique) continue;
        bool ok = true;
        for (const Rat& q : s.x)
            if (q < 0) ok = false;
        if (ok) return true;
    }
    return false;
}

/// Normalized volume d! vol(p) by brute-force lattice point counting of the
/// dilates 0..d and Ehrhart finite differences.
inline Int oracle_normalized_volume(const LatticePolytope& p) {
    const int d = p.ambient_dim();
    auto count_dilate = [&](long long k) {
        std::vector<RatVec> scaled;
        IntVec lo(d, Int(0)), hi(d, Int(0));
        for (const IntVec& v : p.vertices()) {
            RatVec w(d);
            for (int i = 0; i < d; ++i) {
                Int scaled_coord = v[i] * k;
                w[i] = Rat(scaled_coord);
                lo[i] = std::min(lo[i], scaled_coord);
                hi[i] = std::max(hi[i], scaled_coord);
            }
            scaled.push_back(std::move(w));
        }
        Int count = 0;
        IntVec pt = lo;
        while (true) {
            RatVec q(d);
            for (int i = 0; i < d; ++i) q[i] = Rat(pt[i]);
            if (oracle_in_hull(q, scaled)) ++count;
            int i = d;
            bool done = true;
            while (i > 0) {
                --i;
                if (pt[i] < hi[i]) {
                    ++pt[i];
                    for (int j = i + 1; j < d; ++j) pt[j] = lo[j];
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
        return count;
    };
    // d! * leading coefficient as the d-th finite difference at 0
    Int sum = 0;
    Int binom = 1;
    for (long long i = 0; i <= d; ++i) {
        Int term = binom * count_dilate(i);
        if ((d - i) % 2) sum -= term;
        else sum += term;
        binom = binom * Int(d - i) / Int(i + 1);
    }
    return sum;
}

// -- series expansion ---------------------------------------------------------

/// Coefficients of t^e, e >= -cutoff, of the expansion of x in descending
/// powers (each 1/(t^c - 1) becomes sum of t^(-jc), j >= 1).
inline std::map<Rat, Int> series_coeffs(const RationalGF& x, const Rat& cutoff) {
    std::map<Rat, Int> cur;
    for (const auto& [k, c] : x.num().terms()) cur[x.num().exponent(k)] = c;
    for (const auto& [c, mult] : x.den()) {
        for (int rep = 0; rep < mult; ++rep) {
            std::map<Rat, Int> next;
            for (const auto& [e, coeff] : cur)
                for (Rat je = e - c; je >= -cutoff; je -= c) next[je] += coeff;
            for (auto it = next.begin(); it != next.end();) {
                if (it->second == 0) it = next.erase(it);
                else ++it;
            }
            cur = std::move(next);
        }
    }
    return cur;
}

// -- random objects -----------------------------------------------------------

inline BivariatePoly random_seed(Rng& rng, int max_terms = 5) {
    BivariatePoly p;
    int terms = static_cast<int>(rng.range(1, max_terms));
    for (int i = 0; i < terms; ++i) {
        Int c = Int(rng.range(1, 5)) * (rng.range(0, 1) ? 1 : -1);
        p += BivariatePoly::term(rng.range(-3, 3), rng.range(-3, 3), c);
    }
    if (p.is_zero()) p = BivariatePoly::one();
    return p;
}

inline InvariantFamily random_family(Rng& rng) {
    long long a = 0, b = 0;
    while (a == 0 && b == 0) {
        a = rng.range(-3, 3);
        b = rng.range(-3, 3);
    }
    return InvariantFamily(a, b, random_seed(rng));
}

inline BivariateRF random_laurent_rf(Rng& rng, int max_terms = 5) {
    return BivariateRF(random_seed(rng, max_terms));
}

/// Random valid fan: a pool member refined by a few stellar subdivisions at
/// random support points.
inline Fan random_fan(Rng& rng) {
    Fan f = [&] {
        switch (rng.range(0, 4)) {
        case 0: return p2_fan();
        case 1: return p1xp1_fan();
        case 2: return a_series_fan(rng.range(2, 5));
        case 3: return hirzebruch2_fan();
        default: return square_face_fan();
        }
    }();
    int subdivisions = static_cast<int>(rng.range(0, 2));
    for (int s = 0; s < subdivisions; ++s) {
        const auto& maxes = f.max_cones();
        const Cone& c = maxes[static_cast<size_t>(rng.range(0, static_cast<long long>(maxes.size()) - 1))];
        IntVec pt(c.ambient_dim(), Int(0));
        for (const IntVec& r : c.rays()) {
            Int w = Int(rng.range(0, 2));
            for (int i = 0; i < c.ambient_dim(); ++i) pt[i] += w * r[i];
        }
        if (is_zero(pt)) continue;
        IntVec prim = primitive(pt);
        if (f.has_ray(prim)) continue;
        f = stellar_subdivide(f, prim);
    }
    return f;
}

} // namespace testsupport

#endif
