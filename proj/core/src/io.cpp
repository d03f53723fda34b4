#include "stringy/io.hpp"

#include "stringy/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace stringy {

namespace {

[[noreturn]] void parse_fail(const std::string& name, size_t line, size_t col,
                             const std::string& what) {
    fail(errc::parse_error,
         name + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
}

struct LineReader {
    std::istringstream in;
    std::string name;
    size_t lineno = 0;
    std::string line;

    LineReader(const std::string& text, std::string n) : in(text), name(std::move(n)) {}

    bool next() {
        while (std::getline(in, line)) {
            ++lineno;
            size_t h = line.find('#');
            if (h != std::string::npos) line.erase(h);
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    }

    [[noreturn]] void expected(const std::string& what, size_t col = 1) {
        parse_fail(name, lineno, col, "expected " + what);
    }
};

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

Int parse_int_tok(const std::string& tok, LineReader& r) {
    if (tok.empty()) r.expected("an integer");
    size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (start == tok.size()) r.expected("an integer");
    for (size_t i = start; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            r.expected("an integer, got '" + tok + "'");
    Int v(tok.substr(start));
    return tok[0] == '-' ? -v : v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, path + ": cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

Fan parse_fan_text(const std::string& text, const std::string& name) {
    LineReader r(text, name);
    if (!r.next()) r.expected("a 'fan d r c' header");
    auto head = split_ws(r.line);
    if (head.size() != 4 || head[0] != "fan") r.expected("a 'fan d r c' header");
    long long d = checked_ll(parse_int_tok(head[1], r), "dimension");
    long long nrays = checked_ll(parse_int_tok(head[2], r), "ray count");
    long long ncones = checked_ll(parse_int_tok(head[3], r), "cone count");
    if (d <= 0) parse_fail(name, r.lineno, 1, "dimension must be positive");
    if (nrays < 0 || ncones < 0) parse_fail(name, r.lineno, 1, "counts must be nonnegative");

    std::vector<IntVec> rays;
    for (long long i = 0; i < nrays; ++i) {
        if (!r.next()) r.expected("a ray row of " + std::to_string(d) + " integers");
        auto toks = split_ws(r.line);
        if (toks.size() != static_cast<size_t>(d))
            r.expected("a ray row of " + std::to_string(d) + " integers");
        IntVec v(d);
        for (long long j = 0; j < d; ++j) v[j] = parse_int_tok(toks[j], r);
        rays.push_back(std::move(v));
    }

    std::vector<Cone> max_cones;
    std::vector<bool> used(rays.size(), false);
    for (long long i = 0; i < ncones; ++i) {
        if (!r.next()) r.expected("a cone row 'k i1 .. ik'");
        auto toks = split_ws(r.line);
        if (toks.empty()) r.expected("a cone row 'k i1 .. ik'");
        long long k = checked_ll(parse_int_tok(toks[0], r), "cone size");
        if (k < 0 || toks.size() != static_cast<size_t>(k) + 1)
            r.expected("a cone row with " + toks[0] + " ray indices");
        std::vector<IntVec> gens;
        for (long long j = 1; j <= k; ++j) {
            long long idx = checked_ll(parse_int_tok(toks[j], r), "ray index");
            if (idx < 0 || idx >= nrays)
                parse_fail(name, r.lineno, 1, "ray index " + std::to_string(idx) + " out of range");
            used[idx] = true;
            gens.push_back(rays[idx]);
        }
        max_cones.emplace_back(std::move(gens), static_cast<int>(d));
    }
    if (r.next()) parse_fail(name, r.lineno, 1, "trailing content after the declared cones");
    for (size_t i = 0; i < used.size(); ++i)
        if (!used[i])
            fail(errc::validation_error, name + ": ray " + std::to_string(i) + " is used by no cone");
    if (max_cones.empty()) fail(errc::validation_error, name + ": fan declares no cones");
    return Fan::from_max_cones(max_cones);
}

Fan parse_fan_file(const std::string& path) { return parse_fan_text(read_file(path), path); }

LatticePolytope parse_polytope_text(const std::string& text, const std::string& name) {
    LineReader r(text, name);
    if (!r.next()) r.expected("a 'polytope d k' header");
    auto head = split_ws(r.line);
    if (head.size() != 3 || head[0] != "polytope") r.expected("a 'polytope d k' header");
    long long d = checked_ll(parse_int_tok(head[1], r), "dimension");
    long long k = checked_ll(parse_int_tok(head[2], r), "vertex count");
    if (d <= 0) parse_fail(name, r.lineno, 1, "dimension must be positive");
    std::vector<IntVec> verts;
    for (long long i = 0; i < k; ++i) {
        if (!r.next()) r.expected("a vertex row of " + std::to_string(d) + " integers");
        auto toks = split_ws(r.line);
        if (toks.size() != static_cast<size_t>(d))
            r.expected("a vertex row of " + std::to_string(d) + " integers");
        IntVec v(d);
        for (long long j = 0; j < d; ++j) v[j] = parse_int_tok(toks[j], r);
        verts.push_back(std::move(v));
    }
    if (r.next()) parse_fail(name, r.lineno, 1, "trailing content after the declared vertices");
    return LatticePolytope(std::move(verts), static_cast<int>(d));
}

LatticePolytope parse_polytope_file(const std::string& path) {
    return parse_polytope_text(read_file(path), path);
}

namespace {

Int json_int(const nlohmann::json& j, const std::string& name) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    fail(errc::parse_error, name + ": expected an integer (number or string)");
}

BivariatePoly poly_from_json(const nlohmann::json& arr, const std::string& name) {
    if (!arr.is_array()) fail(errc::parse_error, name + ": expected an array of terms");
    BivariatePoly p;
    for (const auto& t : arr) {
        if (!t.is_array() || t.size() != 3)
            fail(errc::parse_error, name + ": each term must be [pu, pv, coeff]");
        long long pu = checked_ll(json_int(t[0], name), "u exponent");
        long long pv = checked_ll(json_int(t[1], name), "v exponent");
        p += BivariatePoly::term(pu, pv, json_int(t[2], name));
    }
    return p;
}

} // namespace

BivariateRF parse_efunction_text(const std::string& text, const std::string& name) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, name + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("num"))
        fail(errc::parse_error, name + ": expected an object with a \"num\" array");
    BivariatePoly num = poly_from_json(j["num"], name);
    BivariatePoly den = BivariatePoly::one();
    if (j.contains("den")) den = poly_from_json(j["den"], name);
    if (den.is_zero()) fail(errc::validation_error, name + ": denominator is zero");
    return BivariateRF(std::move(num), std::move(den));
}

BivariateRF parse_efunction_file(const std::string& path) {
    return parse_efunction_text(read_file(path), path);
}

// -- seed grammar -------------------------------------------------------------

namespace {

struct SeedParser {
    const std::string& s;
    size_t pos = 0;

    explicit SeedParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    [[noreturn]] void bad(const std::string& what) {
        fail(errc::parse_error, "seed:1:" + std::to_string(pos + 1) + ": expected " + what);
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Int integer() {
        skip_ws();
        bool negative = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            negative = s[pos] == '-';
            ++pos;
        }
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) bad("an integer");
        Int v(s.substr(digits, pos - digits));
        return negative ? -v : v;
    }

    // factor := INT | u[^INT] | v[^INT]
    BivariatePoly factor() {
        skip_ws();
        if (pos >= s.size()) bad("a factor");
        char c = s[pos];
        if (c == 'u' || c == 'v') {
            ++pos;
            long long e = 1;
            if (eat('^')) e = checked_ll(integer(), "seed exponent");
            return c == 'u' ? BivariatePoly::term(e, 0, 1) : BivariatePoly::term(0, e, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return BivariatePoly::constant(integer());
        bad("a factor");
    }

    BivariatePoly term() {
        BivariatePoly p = factor();
        while (eat('*')) p *= factor();
        return p;
    }

    BivariatePoly expr() {
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else (void)eat('+');
        BivariatePoly p = term();
        if (neg) p = -p;
        while (true) {
            skip_ws();
            if (eat('+')) p += term();
            else if (eat('-')) p -= term();
            else break;
        }
        skip_ws();
        if (pos != s.size()) bad("'+', '-' or end of input");
        return p;
    }
};

} // namespace

BivariatePoly parse_seed(const std::string& text) {
    SeedParser p(text);
    return p.expr();
}

// -- printing -----------------------------------------------------------------

std::string print_fan(const Fan& f) {
    const auto& rays = f.rays();
    std::map<IntVec, size_t> index;
    for (size_t i = 0; i < rays.size(); ++i) index.emplace(rays[i], i);

    std::vector<std::vector<size_t>> cones;
    for (const Cone& c : f.max_cones()) {
        std::vector<size_t> idx;
        for (const IntVec& r : c.rays()) idx.push_back(index.at(r));
        std::sort(idx.begin(), idx.end());
        cones.push_back(std::move(idx));
    }
    std::sort(cones.begin(), cones.end());

    std::ostringstream os;
    os << "fan " << f.ambient_dim() << " " << rays.size() << " " << cones.size() << "\n";
    for (const IntVec& r : rays) {
        for (size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j];
        os << "\n";
    }
    for (const auto& c : cones) {
        os << c.size();
        for (size_t i : c) os << " " << i;
        os << "\n";
    }
    return os.str();
}

std::string print_polytope(const LatticePolytope& p) {
    std::ostringstream os;
    os << "polytope " << p.ambient_dim() << " " << p.vertices().size() << "\n";
    for (const IntVec& v : p.vertices()) {
        for (size_t j = 0; j < v.size(); ++j) os << (j ? " " : "") << v[j];
        os << "\n";
    }
    return os.str();
}

namespace {

void append_signed(std::ostringstream& os, bool first, const Int& coeff, const std::string& mono) {
    Int c = coeff;
    if (first) {
        if (c < 0) {
            os << "-";
            c = -c;
        }
    } else {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
    }
    if (mono.empty()) {
        os << c;
        return;
    }
    if (c != 1) os << c << "*";
    os << mono;
}

std::string t_monomial(const Rat& e) {
    if (e == 0) return "";
    if (e == 1) return "t";
    if (is_integral(e)) return "t^" + rat_num(e).str();
    return "t^(" + rat_str(e) + ")";
}

std::string uv_monomial(long long pu, long long pv) {
    std::string m;
    auto one_var = [&m](char name, long long e) {
        if (e == 0) return;
        if (!m.empty()) m += "*";
        m += name;
        if (e != 1) m += "^" + std::to_string(e);
    };
    one_var('u', pu);
    one_var('v', pv);
    return m;
}

} // namespace

std::string to_text(const ScaledLaurent& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        append_signed(os, first, c, t_monomial(p.exponent(k)));
        first = false;
    }
    return os.str();
}

std::string to_text(const RationalGF& x) {
    std::string num = to_text(x.num());
    if (x.den().empty()) return num;
    std::ostringstream os;
    os << "(" << num << ")/(";
    bool first = true;
    for (const auto& [c, mult] : x.den())
        for (int i = 0; i < mult; ++i) {
            if (!first) os << "*";
            first = false;
            if (c == 1) os << "(t-1)";
            else os << "(" << t_monomial(c) << "-1)";
        }
    os << ")";
    return os.str();
}

std::string to_text(const BivariatePoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<BivariatePoly::Key, Int>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        long long da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da < db;
        return a.first < b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
        append_signed(os, first, c, uv_monomial(k.first, k.second));
        first = false;
    }
    return os.str();
}

std::string to_text(const BivariateRF& x) {
    if (x.den() == BivariatePoly::one()) return to_text(x.num());
    return "(" + to_text(x.num()) + ")/(" + to_text(x.den()) + ")";
}

// -- JSON ---------------------------------------------------------------------

namespace {

nlohmann::json coeff_json(const Int& c) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return static_cast<long long>(c);
    return c.str();
}

nlohmann::json laurent_json(const ScaledLaurent& p) {
    nlohmann::json num = nlohmann::json::array();
    for (const auto& [k, c] : p.terms()) num.push_back({k, coeff_json(c)});
    return {{"scale", p.scale()}, {"num", num}};
}

nlohmann::json gf_json(const RationalGF& x) {
    nlohmann::json j = laurent_json(x.num());
    nlohmann::json den = nlohmann::json::array();
    for (const auto& [c, mult] : x.den())
        for (int i = 0; i < mult; ++i) {
            if (is_integral(c)) den.push_back(checked_ll(rat_num(c), "den exponent"));
            else den.push_back(rat_str(c));
        }
    j["den"] = den;
    return j;
}

nlohmann::json poly_json(const BivariatePoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : p.terms()) arr.push_back({k.first, k.second, coeff_json(c)});
    return arr;
}

} // namespace

std::string to_json_text(const ScaledLaurent& p) { return laurent_json(p).dump(); }
std::string to_json_text(const RationalGF& x) { return gf_json(x).dump(); }
std::string to_json_text(const BivariatePoly& p) { return poly_json(p).dump(); }

std::string to_json_text(const BivariateRF& x) {
    nlohmann::json j{{"num", poly_json(x.num())}, {"den", poly_json(x.den())}};
    return j.dump();
}

std::string fan_to_json_text(const Fan& f) {
    nlohmann::json rays = nlohmann::json::array();
    std::map<IntVec, size_t> index;
    for (size_t i = 0; i < f.rays().size(); ++i) {
        index.emplace(f.rays()[i], i);
        nlohmann::json row = nlohmann::json::array();
        for (const Int& x : f.rays()[i]) row.push_back(coeff_json(x));
        rays.push_back(row);
    }
    std::vector<std::vector<size_t>> cones;
    for (const Cone& c : f.max_cones()) {
        std::vector<size_t> idx;
        for (const IntVec& r : c.rays()) idx.push_back(index.at(r));
        std::sort(idx.begin(), idx.end());
        cones.push_back(std::move(idx));
    }
    std::sort(cones.begin(), cones.end());
    nlohmann::json j{{"ambient_dim", f.ambient_dim()}, {"rays", rays}, {"max_cones", cones}};
    return j.dump();
}

} // namespace stringy
