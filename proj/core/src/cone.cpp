#include "stringy/polyhedra.hpp"

#include "stringy/errors.hpp"

#include <algorithm>
#include <set>

namespace stringy {

namespace {

// { alpha : sum alpha_i cols_i = 0 } for column vectors cols
RatMat column_nullspace(const std::vector<IntVec>& cols, size_t dim) {
    if (cols.empty()) return {};
    RatMat m(dim, RatVec(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < dim; ++i) m[i][j] = Rat(cols[j][i]);
    return nullspace(m);
}

// Membership by search over linearly independent generator subsets
// (Caratheodory); used before the H-representation exists.
bool in_cone_generated(const IntVec& p, const std::vector<IntVec>& gens) {
    if (is_zero(p)) return true;
    const size_t d = p.size();
    const size_t n = gens.size();
    const int full_rank = rank(gens);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<IntVec> sub;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(gens[i]);
        if (sub.size() > static_cast<size_t>(full_rank)) continue;
        if (rank(sub) != static_cast<int>(sub.size())) continue;
        RatMat cols(d, RatVec(sub.size()));
        for (size_t j = 0; j < sub.size(); ++j)
            for (size_t i = 0; i < d; ++i) cols[i][j] = Rat(sub[j][i]);
        LinearSolution s = linear_solve(cols, to_rat(p));
        if (!s.consistent) continue;
        bool nonneg = std::all_of(s.x.begin(), s.x.end(), [](const Rat& q) { return q >= 0; });
        if (nonneg) return true;
    }
    return false;
}

// A nontrivial nonnegative dependence among the generators is exactly a
// line in the cone; minimally dependent subsets suffice to find one.
bool contains_line(const std::vector<IntVec>& gens, size_t dim) {
    const size_t n = gens.size();
    if (n < 2) return false;
    const int full_rank = rank(gens);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<IntVec> sub;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(gens[i]);
        if (sub.size() < 2 || sub.size() > static_cast<size_t>(full_rank) + 1) continue;
        if (rank(sub) != static_cast<int>(sub.size()) - 1) continue;
        RatMat ns = column_nullspace(sub, dim);
        if (ns.size() != 1) continue;
        const RatVec& alpha = ns[0];
        bool all_pos = true, all_neg = true;
        for (const Rat& a : alpha) {
            if (a <= 0) all_pos = false;
            if (a >= 0) all_neg = false;
        }
        if (all_pos || all_neg) return true;
    }
    return false;
}

} // namespace

Cone::Cone(std::vector<IntVec> generators, int ambient_dim) : ambient_dim_(ambient_dim) {
    if (ambient_dim_ <= 0) fail(errc::validation_error, "ambient dimension must be positive");
    std::vector<IntVec> gens;
    for (const IntVec& g : generators) {
        if (g.size() != static_cast<size_t>(ambient_dim_))
            fail(errc::validation_error, "generator dimension mismatch");
        if (!is_zero(g)) gens.push_back(primitive(g));
    }
    std::sort(gens.begin(), gens.end(), lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.size() > 20)
        fail(errc::validation_error, "generator count exceeds the supported size");

    if (gens.size() >= 2 && contains_line(gens, ambient_dim_))
        fail(errc::validation_error, "cone is not strongly convex");

    // prune generators that are nonnegative combinations of the others
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < gens.size(); ++i) {
            std::vector<IntVec> others;
            for (size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            if (in_cone_generated(gens[i], others)) {
                gens.erase(gens.begin() + i);
                changed = true;
                break;
            }
        }
    }
    rays_ = std::move(gens);
    dim_ = rank(rays_);

    // span equations: integer basis of the orthogonal complement of the span
    {
        RatMat m = to_rat(rays_);
        if (rays_.empty()) m = RatMat{RatVec(ambient_dim_, Rat(0))};
        for (const RatVec& row : nullspace(m)) span_equations_.push_back(clear_denominators(row));
    }

    // facet normals: for each (dim-1)-subset of rays spanning a hyperplane of
    // the span, the normal within the span supporting all rays on one side
    if (dim_ >= 1) {
        // independent spanning subset of the rays as a basis of the span
        std::vector<IntVec> basis;
        for (const IntVec& r : rays_) {
            basis.push_back(r);
            if (rank(basis) != static_cast<int>(basis.size())) basis.pop_back();
        }
        const size_t k = basis.size();
        std::set<IntVec> seen;
        const size_t n = rays_.size();
        // iterate subsets of size k-1
        auto process = [&](const std::vector<size_t>& subset) {
            RatMat m;
            for (size_t s : subset) {
                RatVec row(k);
                for (size_t j = 0; j < k; ++j) row[j] = Rat(dot(basis[j], rays_[s]));
                m.push_back(std::move(row));
            }
            RatMat ns;
            if (m.empty()) ns = RatMat{RatVec(1, Rat(1))}; // k == 1: any nonzero mu
            else ns = nullspace(m);
            if (ns.size() != 1) return;
            RatVec u_rat(ambient_dim_, Rat(0));
            for (size_t j = 0; j < k; ++j)
                for (int i = 0; i < ambient_dim_; ++i) u_rat[i] += ns[0][j] * Rat(basis[j][i]);
            IntVec u = clear_denominators(u_rat);
            if (is_zero(u)) return;
            Int side = 0;
            for (const IntVec& r : rays_) {
                side = dot(u, r);
                if (side != 0) break;
            }
            if (side < 0) u = vec_neg(u);
            for (const IntVec& r : rays_)
                if (dot(u, r) < 0) return;
            seen.insert(u);
        };
        if (k == 1) {
            process({});
        } else {
            std::vector<size_t> subset(k - 1);
            for (size_t i = 0; i < k - 1; ++i) subset[i] = i;
            while (true) {
                process(subset);
                size_t i = k - 1;
                while (i > 0 && subset[i - 1] == i - 1 + n - (k - 1)) --i;
                if (i == 0) break;
                ++subset[i - 1];
                for (size_t j = i; j < k - 1; ++j) subset[j] = subset[j - 1] + 1;
            }
        }
        facet_normals_.assign(seen.begin(), seen.end());
    }
}

bool Cone::contains(const IntVec& p) const { return contains(to_rat(p)); }

bool Cone::contains(const RatVec& p) const {
    for (const IntVec& e : span_equations_) {
        Rat s = 0;
        for (int i = 0; i < ambient_dim_; ++i) s += p[i] * Rat(e[i]);
        if (s != 0) return false;
    }
    for (const IntVec& u : facet_normals_) {
        Rat s = 0;
        for (int i = 0; i < ambient_dim_; ++i) s += p[i] * Rat(u[i]);
        if (s < 0) return false;
    }
    return true;
}

bool Cone::relint_contains(const IntVec& p) const {
    for (const IntVec& e : span_equations_)
        if (dot(e, p) != 0) return false;
    for (const IntVec& u : facet_normals_)
        if (dot(u, p) <= 0) return false;
    return true;
}

bool Cone::contains_cone(const Cone& c) const {
    for (const IntVec& r : c.rays())
        if (!contains(r)) return false;
    return true;
}

bool Cone::has_ray(const IntVec& primitive_ray) const {
    return std::binary_search(rays_.begin(), rays_.end(), primitive_ray, lex_less);
}

IntVec Cone::relint_point() const {
    IntVec p(ambient_dim_, Int(0));
    for (const IntVec& r : rays_) p = vec_add(p, r);
    return p;
}

std::vector<Cone> Cone::facets() const {
    std::vector<Cone> out;
    for (const IntVec& u : facet_normals_) {
        std::vector<IntVec> tight;
        for (const IntVec& r : rays_)
            if (dot(u, r) == 0) tight.push_back(r);
        out.emplace_back(std::move(tight), ambient_dim_);
    }
    return out;
}

std::vector<Cone> Cone::faces() const {
    std::set<Cone> seen;
    std::vector<Cone> stack{*this};
    while (!stack.empty()) {
        Cone c = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(c).second) continue;
        if (c.dim() > 0)
            for (Cone& f : c.facets()) stack.push_back(std::move(f));
    }
    return {seen.begin(), seen.end()};
}

bool Cone::operator==(const Cone& o) const {
    return ambient_dim_ == o.ambient_dim_ && rays_ == o.rays_;
}

bool Cone::operator<(const Cone& o) const {
    if (dim_ != o.dim_) return dim_ < o.dim_;
    return rays_ < o.rays_;
}

bool is_simplicial(const Cone& c) { return static_cast<int>(c.rays().size()) == c.dim(); }

Int multiplicity(const Cone& c) {
    if (!is_simplicial(c)) fail(errc::dependent_generators, "multiplicity of a non-simplicial cone");
    return lattice_index(c.rays());
}

bool is_smooth(const Cone& c) { return is_simplicial(c) && multiplicity(c) == 1; }

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim())
        fail(errc::mixed_dimensions, "cone intersection across ambient dimensions");
    const int d = a.ambient_dim();

    RatMat eqs;
    for (const IntVec& e : a.span_equations()) eqs.push_back(to_rat(e));
    for (const IntVec& e : b.span_equations()) eqs.push_back(to_rat(e));
    std::vector<IntVec> ineqs = a.facet_normals();
    ineqs.insert(ineqs.end(), b.facet_normals().begin(), b.facet_normals().end());

    auto satisfies = [&](const IntVec& v) {
        for (const IntVec& u : ineqs)
            if (dot(u, v) < 0) return false;
        return true;
    };

    // Extreme rays of { x : eqs x = 0, ineqs x >= 0 } arise from tight
    // subsets of rank d-1; brute-force over small subsets is exact.
    std::set<IntVec> candidates;
    const size_t n = ineqs.size();
    const size_t limit = static_cast<size_t>(d);
    auto try_subset = [&](const std::vector<size_t>& sel) {
        RatMat m = eqs;
        for (size_t s : sel) m.push_back(to_rat(ineqs[s]));
        if (m.empty()) m = RatMat{RatVec(d, Rat(0))};
        RatMat ns = nullspace(m);
        if (ns.size() != 1) return;
        IntVec v = clear_denominators(ns[0]);
        if (is_zero(v)) return;
        if (satisfies(v)) candidates.insert(v);
        else {
            IntVec w = vec_neg(v);
            if (satisfies(w)) candidates.insert(w);
        }
    };
    // all subsets of size <= d-1 (the rank filter is the nullspace dimension)
    const size_t max_size = limit > 0 ? limit - 1 : 0;
    std::vector<size_t> stack_sel;
    auto rec = [&](auto&& self, size_t start) -> void {
        try_subset(stack_sel);
        if (stack_sel.size() >= max_size) return;
        for (size_t i = start; i < n; ++i) {
            stack_sel.push_back(i);
            self(self, i + 1);
            stack_sel.pop_back();
        }
    };
    rec(rec, 0);

    return Cone(std::vector<IntVec>(candidates.begin(), candidates.end()), d);
}

std::vector<Cone> pulling_triangulation(const Cone& c) {
    if (is_simplicial(c)) return {c};
    const IntVec& v0 = c.rays().front(); // lex smallest
    std::vector<Cone> out;
    for (const Cone& g : c.facets()) {
        if (g.contains(v0)) continue;
        for (const Cone& s : pulling_triangulation(g)) {
            std::vector<IntVec> gens = s.rays();
            gens.push_back(v0);
            out.emplace_back(std::move(gens), c.ambient_dim());
        }
    }
    return out;
}

} // namespace stringy
