#ifndef STRINGY_NUMERIC_HPP
#define STRINGY_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace stringy {

// Exact scalars. Every quantity in the library is an integer or a rational;
// nothing is ever rounded.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rat& q) { return rat_den(q) == 1; }

inline Int rat_floor(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int t = n / d;
    if (n < 0 && n % d != 0) --t;
    return t;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

long long checked_ll(const Int& v, const char* what);

inline std::string rat_str(const Rat& q) {
    if (is_integral(q)) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

} // namespace stringy

#endif
