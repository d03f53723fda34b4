#include "stringy/lattice.hpp"

#include "stringy/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace stringy {

long long checked_ll(const Int& v, const char* what) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        fail(errc::validation_error, std::string(what) + " out of machine range");
    return static_cast<long long>(v);
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec vec_neg(const IntVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string vec_str(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

RatMat to_rat(const IntMat& m) {
    RatMat r;
    r.reserve(m.size());
    for (const auto& row : m) r.push_back(to_rat(row));
    return r;
}

IntVec clear_denominators(const RatVec& v) {
    Int scale = 1;
    for (const Rat& q : v) scale = int_lcm(scale, rat_den(q));
    IntVec r(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        r[i] = rat_num(v[i]) * (scale / rat_den(v[i]));
        g = int_gcd(g, r[i]);
    }
    if (g > 1)
        for (Int& x : r) x /= g;
    return r;
}

Int determinant(const IntMat& m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) fail(errc::non_square, "determinant requires a square matrix");
    if (n == 0) return 1;

    // Bareiss fraction-free elimination; divisions are exact.
    IntMat a = m;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntVec primitive(const IntVec& v) {
    if (is_zero(v)) fail(errc::zero_vector, "primitive of the zero vector");
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<size_t> rref(RatMat& a) {
    std::vector<size_t> pivots;
    if (a.empty()) return pivots;
    const size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        Rat inv = a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

LinearSolution linear_solve(const RatMat& a, const RatVec& b) {
    LinearSolution out;
    if (a.size() != b.size()) fail(errc::validation_error, "system row count mismatch");
    if (a.empty()) {
        out.consistent = true;
        out.unique = true; // no columns to determine
        return out;
    }
    const size_t rows = a.size(), cols = a[0].size();
    RatMat aug = a;
    for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(aug);
    // A pivot in the augmented column means 0 = 1 somewhere.
    if (!pivots.empty() && pivots.back() == cols) {
        out.consistent = false;
        return out;
    }
    out.consistent = true;
    out.unique = pivots.size() == cols;
    out.x.assign(cols, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) out.x[pivots[i]] = aug[i][cols];
    return out;
}

RatVec solve_rational(const IntMat& a, const RatVec& b) {
    LinearSolution s = linear_solve(to_rat(a), b);
    if (!s.consistent) fail(errc::no_solution, "inconsistent linear system");
    if (!s.unique) fail(errc::not_unique, "underdetermined linear system");
    return s.x;
}

int rank(const RatMat& m) {
    if (m.empty()) return 0;
    RatMat a = m;
    return static_cast<int>(rref(a).size());
}

int rank(const IntMat& m) { return rank(to_rat(m)); }

RatMat nullspace(const RatMat& m) {
    if (m.empty()) return {};
    const size_t cols = m[0].size();
    RatMat a = m;
    std::vector<size_t> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    RatMat basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(cols, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

Int lattice_index(const std::vector<IntVec>& gens) {
    const size_t k = gens.size();
    if (k == 0) return 1;
    const size_t d = gens[0].size();
    if (rank(gens) != static_cast<int>(k))
        fail(errc::dependent_generators, "generators are linearly dependent");
    // gcd over all k x k minors
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    Int g = 0;
    while (true) {
        IntMat sub(k, IntVec(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) sub[i][j] = gens[i][idx[j]];
        g = int_gcd(g, determinant(sub));
        // next k-combination of {0..d-1}
        size_t i = k;
        while (i > 0 && idx[i - 1] == i - 1 + d - k) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return g < 0 ? -g : g;
}

std::vector<IntVec> parallelepiped_points(const std::vector<IntVec>& gens, HalfOpen mode) {
    const size_t k = gens.size();
    if (k == 0) {
        // empty sum: the origin, in either mode
        return {IntVec{}};
    }
    const size_t d = gens[0].size();
    for (const auto& g : gens)
        if (g.size() != d) fail(errc::validation_error, "generator dimension mismatch");
    if (rank(gens) != static_cast<int>(k))
        fail(errc::dependent_generators, "parallelepiped generators must be independent");

    // columns are the generators
    RatMat cols(d, RatVec(k));
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < d; ++i) cols[i][j] = Rat(gens[j][i]);

    IntVec lo(d, Int(0)), hi(d, Int(0));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (gens[j][i] < 0) lo[i] += gens[j][i];
            else hi[i] += gens[j][i];
        }

    std::vector<IntVec> out;
    IntVec p = lo;
    while (true) {
        RatVec b(d);
        for (size_t i = 0; i < d; ++i) b[i] = Rat(p[i]);
        LinearSolution s = linear_solve(cols, b);
        if (s.consistent) {
            bool ok = true;
            for (const Rat& lam : s.x) {
                if (mode == HalfOpen::Low ? (lam < 0 || lam >= 1) : (lam <= 0 || lam > 1)) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(p);
        }
        // odometer advance, most significant coordinate first
        size_t i = d;
        bool done = true;
        while (i > 0) {
            --i;
            if (p[i] < hi[i]) {
                ++p[i];
                for (size_t j = i + 1; j < d; ++j) p[j] = lo[j];
                done = false;
                break;
            }
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

} // namespace stringy
