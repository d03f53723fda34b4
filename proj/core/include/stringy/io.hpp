#ifndef STRINGY_IO_HPP
#define STRINGY_IO_HPP

#include "stringy/genfun.hpp"
#include "stringy/polyhedra.hpp"

#include <string>

namespace stringy {

// File grammars:
//   fan file:      "fan d r c", then r ray rows of d integers, then c rows
//                  "k i1 .. ik" listing 0-based ray indices of maximal cones
//   polytope file: "polytope d k", then k vertex rows of d integers
//   e-function:    JSON {"num": [[pu,pv,c],...], "den": [[pu,pv,c],...]}
//                  ("den" may be omitted for polynomials)
// Parse failures raise parse_error with a line/column position; violated
// fan or polytope invariants raise through the domain constructors.

Fan parse_fan_text(const std::string& text, const std::string& name = "<input>");
Fan parse_fan_file(const std::string& path);
LatticePolytope parse_polytope_text(const std::string& text, const std::string& name = "<input>");
LatticePolytope parse_polytope_file(const std::string& path);
BivariateRF parse_efunction_text(const std::string& text, const std::string& name = "<input>");
BivariateRF parse_efunction_file(const std::string& path);

/// Seed grammar: INT, u[^INT], v[^INT] joined by '*', '+', '-'.
BivariatePoly parse_seed(const std::string& text);

std::string print_fan(const Fan& f);
std::string print_polytope(const LatticePolytope& p);

// Polynomial text forms; terms in ascending order (exponent for the
// univariate forms, total degree then lexicographic for the bivariate).
std::string to_text(const ScaledLaurent& p);
std::string to_text(const RationalGF& x);
std::string to_text(const BivariatePoly& p);
std::string to_text(const BivariateRF& x);

// JSON renderings (emitted as strings so the JSON library stays internal).
std::string to_json_text(const ScaledLaurent& p);
std::string to_json_text(const RationalGF& x);
std::string to_json_text(const BivariatePoly& p);
std::string to_json_text(const BivariateRF& x);
std::string fan_to_json_text(const Fan& f);

} // namespace stringy

#endif
