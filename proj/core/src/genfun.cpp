#include "stringy/genfun.hpp"

#include "stringy/errors.hpp"

#include <numeric>

namespace stringy {

// -- ScaledLaurent ------------------------------------------------------------

ScaledLaurent ScaledLaurent::constant(const Int& c) {
    ScaledLaurent p;
    if (c != 0) p.terms_[0] = c;
    return p;
}

ScaledLaurent ScaledLaurent::term(const Rat& e, const Int& c) {
    ScaledLaurent p;
    if (c == 0) return p;
    p.scale_ = checked_ll(rat_den(e), "exponent scale");
    p.terms_[checked_ll(rat_num(e), "exponent")] = c;
    return p;
}

void ScaledLaurent::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
    if (terms_.empty()) {
        scale_ = 1;
        return;
    }
    long long g = scale_;
    for (const auto& [k, c] : terms_) g = static_cast<long long>(std::gcd(g, k < 0 ? -k : k));
    if (g > 1) {
        std::map<long long, Int> reduced;
        for (const auto& [k, c] : terms_) reduced[k / g] = c;
        terms_ = std::move(reduced);
        scale_ /= g;
    }
}

namespace {

// terms of p rescaled so exponents are over the given common scale
std::map<long long, Int> rescaled(const ScaledLaurent& p, long long common) {
    long long f = common / p.scale();
    std::map<long long, Int> out;
    for (const auto& [k, c] : p.terms()) out[k * f] = c;
    return out;
}

} // namespace

ScaledLaurent& ScaledLaurent::operator+=(const ScaledLaurent& o) {
    long long common = std::lcm(scale_, o.scale_);
    auto a = rescaled(*this, common);
    for (const auto& [k, c] : rescaled(o, common)) a[k] += c;
    terms_ = std::move(a);
    scale_ = common;
    normalize();
    return *this;
}

ScaledLaurent& ScaledLaurent::operator-=(const ScaledLaurent& o) { return *this += -o; }

ScaledLaurent& ScaledLaurent::operator*=(const ScaledLaurent& o) {
    long long common = std::lcm(scale_, o.scale_);
    auto a = rescaled(*this, common);
    auto b = rescaled(o, common);
    std::map<long long, Int> prod;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) prod[ka + kb] += ca * cb;
    terms_ = std::move(prod);
    scale_ = common;
    normalize();
    return *this;
}

ScaledLaurent ScaledLaurent::operator-() const {
    ScaledLaurent r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

ScaledLaurent ScaledLaurent::pow(unsigned n) const {
    ScaledLaurent r = one();
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
}

ScaledLaurent ScaledLaurent::shifted(const Rat& e) const {
    return *this * t_power(e);
}

ScaledLaurent ScaledLaurent::inverted() const {
    ScaledLaurent r;
    r.scale_ = scale_;
    for (const auto& [k, c] : terms_) r.terms_[-k] = c;
    r.normalize();
    return r;
}

Int ScaledLaurent::eval_one() const {
    Int s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

std::optional<ScaledLaurent> ScaledLaurent::div_cyclo(const Rat& c) const {
    if (c <= 0) fail(errc::validation_error, "denominator factor exponent must be positive");
    if (is_zero()) return ScaledLaurent();
    // Work over the common scale; divide by s^m - 1 where s = t^(1/R).
    long long R = std::lcm(scale_, checked_ll(rat_den(c), "factor scale"));
    long long m = checked_ll(rat_num(c), "factor exponent") * (R / checked_ll(rat_den(c), "factor scale"));
    std::map<long long, Int> rem = rescaled(*this, R);
    std::map<long long, Int> quot;
    const long long lo = rem.begin()->first;
    // Long division from the top term down; stops once the top drops below
    // lo + m, past which nothing can still be reduced.
    while (!rem.empty() && std::prev(rem.end())->first >= lo + m) {
        auto top = std::prev(rem.end());
        long long k = top->first;
        Int coeff = top->second;
        quot[k - m] += coeff;
        rem.erase(top);
        rem[k - m] += coeff;
        if (rem[k - m] == 0) rem.erase(k - m);
    }
    if (!rem.empty()) return std::nullopt;
    ScaledLaurent q;
    q.scale_ = R;
    q.terms_ = std::move(quot);
    q.normalize();
    return q;
}

BivariatePoly ScaledLaurent::substitute(long long a, long long b) const {
    BivariatePoly out;
    for (const auto& [k, c] : terms_) {
        if ((a * k) % scale_ != 0 || (b * k) % scale_ != 0) {
            fail(errc::fractional_exponent_unresolvable,
                 "exponent " + rat_str(exponent(k)) + " does not clear under (a,b)=(" +
                     std::to_string(a) + "," + std::to_string(b) + "); scale " +
                     std::to_string(scale_) + " needed");
        }
        out += BivariatePoly::term(a * k / scale_, b * k / scale_, c);
    }
    return out;
}

// -- RationalGF ---------------------------------------------------------------

RationalGF::RationalGF(ScaledLaurent num, std::map<Rat, int> den)
    : num_(std::move(num)), den_(std::move(den)) {
    for (auto it = den_.begin(); it != den_.end();) {
        if (it->first <= 0) fail(errc::validation_error, "denominator factor exponent must be positive");
        if (it->second < 0) fail(errc::validation_error, "negative factor multiplicity");
        if (it->second == 0) it = den_.erase(it);
        else ++it;
    }
}

ScaledLaurent RationalGF::den_expanded() const {
    ScaledLaurent d = ScaledLaurent::one();
    for (const auto& [c, mult] : den_)
        for (int i = 0; i < mult; ++i) d *= ScaledLaurent::t_power(c) - ScaledLaurent::one();
    return d;
}

RationalGF gf_mul(const RationalGF& x, const RationalGF& y) {
    std::map<Rat, int> den = x.den();
    for (const auto& [c, m] : y.den()) den[c] += m;
    return RationalGF(x.num() * y.num(), std::move(den));
}

RationalGF gf_add(const RationalGF& x, const RationalGF& y) {
    // least common multiset of factors
    std::map<Rat, int> den = x.den();
    for (const auto& [c, m] : y.den()) {
        auto it = den.find(c);
        if (it == den.end()) den[c] = m;
        else it->second = std::max(it->second, m);
    }
    auto complement = [&den](const std::map<Rat, int>& part) {
        ScaledLaurent f = ScaledLaurent::one();
        for (const auto& [c, m] : den) {
            int extra = m;
            auto it = part.find(c);
            if (it != part.end()) extra -= it->second;
            for (int i = 0; i < extra; ++i)
                f *= ScaledLaurent::t_power(c) - ScaledLaurent::one();
        }
        return f;
    };
    ScaledLaurent num = x.num() * complement(x.den()) + y.num() * complement(y.den());
    return RationalGF(std::move(num), std::move(den));
}

RationalGF gf_neg(const RationalGF& x) { return RationalGF(-x.num(), x.den()); }

RationalGF gf_sub(const RationalGF& x, const RationalGF& y) { return gf_add(x, gf_neg(y)); }

RationalGF gf_normalize(const RationalGF& x) {
    if (x.num().is_zero()) return RationalGF();
    ScaledLaurent num = x.num();
    std::map<Rat, int> den = x.den();
    for (auto it = den.begin(); it != den.end();) {
        while (it->second > 0) {
            auto q = num.div_cyclo(it->first);
            if (!q) break;
            num = std::move(*q);
            --it->second;
        }
        if (it->second == 0) it = den.erase(it);
        else ++it;
    }
    return RationalGF(std::move(num), std::move(den));
}

bool gf_equal(const RationalGF& x, const RationalGF& y) {
    return x.num() * y.den_expanded() == y.num() * x.den_expanded();
}

RationalGF gf_invert_t(const RationalGF& x) {
    // 1/(t^-c - 1) = -t^c / (t^c - 1), applied per factor
    ScaledLaurent num = x.num().inverted();
    Rat shift = 0;
    int parity = 0;
    for (const auto& [c, m] : x.den()) {
        shift += c * m;
        parity += m;
    }
    num = num.shifted(shift);
    if (parity % 2) num = -num;
    return RationalGF(std::move(num), x.den());
}

Int euler_limit(const RationalGF& x) {
    RationalGF n = gf_normalize(x);
    if (!n.den().empty())
        fail(errc::pole_at_one, "denominator factor survives normalization");
    return n.num().eval_one();
}

BivariateRF substitute_t(const RationalGF& x, long long a, long long b) {
    if (a == 0 && b == 0) fail(errc::validation_error, "type (0,0) is not allowed");
    BivariatePoly num = x.num().substitute(a, b);
    BivariatePoly den = BivariatePoly::one();
    for (const auto& [c, mult] : x.den()) {
        // factor t^c - 1 -> u^(ac) v^(bc) - 1
        BivariatePoly f = ScaledLaurent(ScaledLaurent::t_power(c) - ScaledLaurent::one()).substitute(a, b);
        for (int i = 0; i < mult; ++i) den *= f;
    }
    return BivariateRF(std::move(num), std::move(den));
}

// -- BivariatePoly ------------------------------------------------------------

BivariatePoly BivariatePoly::constant(const Int& c) {
    BivariatePoly p;
    if (c != 0) p.terms_[{0, 0}] = c;
    return p;
}

BivariatePoly BivariatePoly::term(long long pu, long long pv, const Int& c) {
    BivariatePoly p;
    if (c != 0) p.terms_[{pu, pv}] = c;
    return p;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [k, c] : o.terms_) {
        Int& slot = terms_[k];
        slot += c;
        if (slot == 0) terms_.erase(k);
    }
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) { return *this += -o; }

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& o) {
    std::map<Key, Int> prod;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            Key k{ka.first + kb.first, ka.second + kb.second};
            prod[k] += ca * cb;
        }
    for (auto it = prod.begin(); it != prod.end();) {
        if (it->second == 0) it = prod.erase(it);
        else ++it;
    }
    terms_ = std::move(prod);
    return *this;
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

BivariatePoly BivariatePoly::compose_powers(long long a, long long b) const {
    BivariatePoly r;
    for (const auto& [k, c] : terms_) r += term(a * k.first, b * k.second, c);
    return r;
}

BivariatePoly BivariatePoly::invert_u() const {
    BivariatePoly r;
    for (const auto& [k, c] : terms_) r.terms_[{-k.first, k.second}] = c;
    return r;
}

BivariatePoly BivariatePoly::shifted(long long pu, long long pv) const {
    BivariatePoly r;
    for (const auto& [k, c] : terms_) r.terms_[{k.first + pu, k.second + pv}] = c;
    return r;
}

// -- BivariateRF --------------------------------------------------------------

BivariateRF::BivariateRF(BivariatePoly num, BivariatePoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(errc::validation_error, "zero denominator");
}

bool BivariateRF::is_polynomial() const {
    // exact only up to monomial denominators; callers print num/den otherwise
    return den_ == BivariatePoly::one();
}

BivariateRF BivariateRF::operator+(const BivariateRF& o) const {
    return BivariateRF(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

BivariateRF BivariateRF::operator-(const BivariateRF& o) const {
    return BivariateRF(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

BivariateRF BivariateRF::operator*(const BivariateRF& o) const {
    return BivariateRF(num_ * o.num_, den_ * o.den_);
}

BivariateRF BivariateRF::operator-() const { return BivariateRF(-num_, den_); }

bool BivariateRF::equals(const BivariateRF& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

BivariateRF BivariateRF::compose_powers(long long a, long long b) const {
    BivariatePoly den = den_.compose_powers(a, b);
    if (den.is_zero())
        fail(errc::validation_error, "denominator vanishes under power substitution");
    return BivariateRF(num_.compose_powers(a, b), std::move(den));
}

BivariateRF BivariateRF::invert_u() const {
    return BivariateRF(num_.invert_u(), den_.invert_u());
}

} // namespace stringy
