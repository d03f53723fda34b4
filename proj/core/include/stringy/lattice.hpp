#ifndef STRINGY_LATTICE_HPP
#define STRINGY_LATTICE_HPP

#include "stringy/numeric.hpp"

#include <vector>

namespace stringy {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>; // rows of equal length
using RatMat = std::vector<RatVec>;

// -- small vector helpers ---------------------------------------------------

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const IntVec& b);
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
bool is_zero(const IntVec& v);
bool lex_less(const IntVec& a, const IntVec& b);
std::string vec_str(const IntVec& v);

RatVec to_rat(const IntVec& v);
RatMat to_rat(const IntMat& m);

/// Primitive integer vector on the ray through a rational direction.
IntVec clear_denominators(const RatVec& v);

// -- exact linear algebra ---------------------------------------------------

/// Exact determinant of a square integer matrix (fraction-free elimination).
Int determinant(const IntMat& m);

/// v divided by the (positive) gcd of its entries; direction preserved.
IntVec primitive(const IntVec& v);

struct LinearSolution {
    bool consistent = false;
    bool unique = false;
    RatVec x; // a particular solution when consistent (free variables at 0)
};

/// Gauss-Jordan solve of rows(a) . x = b over the rationals.
LinearSolution linear_solve(const RatMat& a, const RatVec& b);

/// Unique rational solution of rows(a) . x = b.
/// Errors: no_solution if inconsistent, not_unique if underdetermined.
RatVec solve_rational(const IntMat& a, const RatVec& b);

int rank(const RatMat& m);
int rank(const IntMat& m);

/// Basis of { u : m . u = 0 }, as rational row vectors.
RatMat nullspace(const RatMat& m);

/// Index of the lattice spanned by the rows in the saturation of their span,
/// i.e. the gcd of all maximal minors. Errors: dependent_generators.
Int lattice_index(const std::vector<IntVec>& gens);

enum class HalfOpen { Low, High };

/// Lattice points sum lambda_i * gens_i with every lambda_i in [0,1)
/// (Low) or (0,1] (High). Generators must be linearly independent; the
/// enumeration is a bounding-box scan with an exact membership test.
/// Output is in lexicographic order.
std::vector<IntVec> parallelepiped_points(const std::vector<IntVec>& gens, HalfOpen mode);

} // namespace stringy

#endif
