#ifndef STRINGY_GENFUN_HPP
#define STRINGY_GENFUN_HPP

#include "stringy/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace stringy {

class BivariatePoly;
class BivariateRF;

/// Laurent polynomial sum c_k t^(k/scale) with integer coefficients.
/// The scale is kept minimal: the gcd of the scale and all stored
/// exponents is 1 (so equal values always have equal representations).
class ScaledLaurent {
public:
    ScaledLaurent() = default;
    static ScaledLaurent constant(const Int& c);
    static ScaledLaurent one() { return constant(1); }
    /// c * t^e
    static ScaledLaurent term(const Rat& e, const Int& c);
    static ScaledLaurent t_power(const Rat& e) { return term(e, 1); }

    bool is_zero() const { return terms_.empty(); }
    long long scale() const { return scale_; }
    /// Raw terms keyed by scaled exponent k, value c_k, meaning c_k t^(k/scale).
    const std::map<long long, Int>& terms() const { return terms_; }
    /// Exponent of a stored term as a rational.
    Rat exponent(long long key) const { return Rat(key) / Rat(scale_); }

    ScaledLaurent& operator+=(const ScaledLaurent& o);
    ScaledLaurent& operator-=(const ScaledLaurent& o);
    ScaledLaurent& operator*=(const ScaledLaurent& o);
    friend ScaledLaurent operator+(ScaledLaurent a, const ScaledLaurent& b) { return a += b; }
    friend ScaledLaurent operator-(ScaledLaurent a, const ScaledLaurent& b) { return a -= b; }
    friend ScaledLaurent operator*(ScaledLaurent a, const ScaledLaurent& b) { return a *= b; }
    ScaledLaurent operator-() const;
    bool operator==(const ScaledLaurent& o) const = default;

    ScaledLaurent pow(unsigned n) const;
    /// multiply by t^e
    ScaledLaurent shifted(const Rat& e) const;
    /// t -> 1/t
    ScaledLaurent inverted() const;
    Int eval_one() const;

    /// Exact quotient by (t^c - 1), c > 0, or nullopt if it does not divide.
    std::optional<ScaledLaurent> div_cyclo(const Rat& c) const;

    /// t -> u^a v^b. Errors fractional_exponent_unresolvable when some
    /// exponent a*e or b*e is not an integer.
    BivariatePoly substitute(long long a, long long b) const;

private:
    void normalize();

    long long scale_ = 1;
    std::map<long long, Int> terms_;
};

/// Rational function num / prod (t^c - 1) with the denominator kept as a
/// multiset of exponents c > 0. Equality of values is tested by
/// cross-multiplication, never by comparing representations.
class RationalGF {
public:
    RationalGF() = default;
    explicit RationalGF(ScaledLaurent num) : num_(std::move(num)) {}
    RationalGF(ScaledLaurent num, std::map<Rat, int> den);
    static RationalGF constant(const Int& c) { return RationalGF(ScaledLaurent::constant(c)); }
    static RationalGF one() { return constant(1); }

    const ScaledLaurent& num() const { return num_; }
    const std::map<Rat, int>& den() const { return den_; }
    ScaledLaurent den_expanded() const;
    bool is_zero() const { return num_.is_zero(); }

private:
    ScaledLaurent num_;
    std::map<Rat, int> den_; // factor exponent -> multiplicity
};

RationalGF gf_add(const RationalGF& x, const RationalGF& y);
RationalGF gf_sub(const RationalGF& x, const RationalGF& y);
RationalGF gf_mul(const RationalGF& x, const RationalGF& y);
RationalGF gf_neg(const RationalGF& x);
/// Cancels denominator factors that divide the numerator exactly. Idempotent.
RationalGF gf_normalize(const RationalGF& x);
/// Semantic equality by cross-multiplication.
bool gf_equal(const RationalGF& x, const RationalGF& y);
/// t -> 1/t as a RationalGF over positive factors again.
RationalGF gf_invert_t(const RationalGF& x);
/// Value at t = 1 after normalization. Errors pole_at_one if a factor remains.
Int euler_limit(const RationalGF& x);
/// t -> u^a v^b applied to numerator and every denominator factor.
BivariateRF substitute_t(const RationalGF& x, long long a, long long b);

/// Integer-coefficient Laurent polynomial in u and v.
class BivariatePoly {
public:
    using Key = std::pair<long long, long long>; // (u exponent, v exponent)

    BivariatePoly() = default;
    static BivariatePoly constant(const Int& c);
    static BivariatePoly one() { return constant(1); }
    /// c * u^pu v^pv
    static BivariatePoly term(long long pu, long long pv, const Int& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Int>& terms() const { return terms_; }

    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    BivariatePoly& operator*=(const BivariatePoly& o);
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(BivariatePoly a, const BivariatePoly& b) { return a *= b; }
    BivariatePoly operator-() const;
    bool operator==(const BivariatePoly& o) const = default;

    /// u -> u^a, v -> v^b (exponent map; terms may merge).
    BivariatePoly compose_powers(long long a, long long b) const;
    /// u -> 1/u
    BivariatePoly invert_u() const;
    /// multiply by u^pu v^pv
    BivariatePoly shifted(long long pu, long long pv) const;

private:
    std::map<Key, Int> terms_;
};

/// Quotient of two bivariate Laurent polynomials; denominator never zero.
/// Equality is semantic (cross-multiplied).
class BivariateRF {
public:
    BivariateRF() : den_(BivariatePoly::one()) {}
    BivariateRF(BivariatePoly num) : num_(std::move(num)), den_(BivariatePoly::one()) {}
    BivariateRF(BivariatePoly num, BivariatePoly den);

    const BivariatePoly& num() const { return num_; }
    const BivariatePoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;

    BivariateRF operator+(const BivariateRF& o) const;
    BivariateRF operator-(const BivariateRF& o) const;
    BivariateRF operator*(const BivariateRF& o) const;
    BivariateRF operator-() const;
    /// semantic equality
    bool equals(const BivariateRF& o) const;

    /// u -> u^a, v -> v^b. Errors validation_error if the denominator
    /// collapses to zero under the substitution.
    BivariateRF compose_powers(long long a, long long b) const;
    BivariateRF invert_u() const;

private:
    BivariatePoly num_, den_;
};

} // namespace stringy

#endif
