#pragma once

// Triangle-inequality bounds: each coefficient functional is split into
// groupings whose maxima over the Caratheodory class follow from the
// p-coefficient estimates, then summed and normalized.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hv/caratheodory.hpp"
#include "hv/claim.hpp"
#include "hv/classes.hpp"
#include "hv/hankel.hpp"
#include "hv/polynomial.hpp"

namespace hv {

enum class TermShape { PurePower, MixedPair, CubeVsP3 };

using Exponents5 = std::array<int, 5>;

struct Monomial5 {
    Rational coef;
    Exponents5 e{};
};

/// sign * p^prefactor * (c1 p_{n+k} + c2 p_n p_k)   (MixedPair)
/// sign * p^prefactor * (c1 p1^3 + c2 p3)          (CubeVsP3)
/// sum of pure monomials                           (PurePower)
struct GroupedTerm {
    TermShape shape = TermShape::PurePower;
    int sign = 1;
    Exponents5 prefactor{};
    Rational c1{0}, c2{0};
    int n = 1, k = 1;
    std::vector<Monomial5> pure;
    RadicalValue printed;  // the published bound of this grouping
};

namespace detail {

inline GroupedTerm mixed(int sign, Exponents5 pre, long long c1, long long c2, int n, int k, RadicalValue printed) {
    GroupedTerm t;
    t.shape = TermShape::MixedPair;
    t.sign = sign;
    t.prefactor = pre;
    t.c1 = c1;
    t.c2 = c2;
    t.n = n;
    t.k = k;
    t.printed = printed;
    return t;
}

inline GroupedTerm cube(int sign, Exponents5 pre, long long c1, long long c2, RadicalValue printed) {
    GroupedTerm t;
    t.shape = TermShape::CubeVsP3;
    t.sign = sign;
    t.prefactor = pre;
    t.c1 = c1;
    t.c2 = c2;
    t.printed = printed;
    return t;
}

inline GroupedTerm pure(std::vector<Monomial5> monos, RadicalValue printed) {
    GroupedTerm t;
    t.shape = TermShape::PurePower;
    t.pure = std::move(monos);
    t.printed = printed;
    return t;
}

inline RadicalValue whole(long long v) { return {Rational(v), 1}; }
inline RadicalValue root(long long c, long long num, long long den = 1) {
    return make_radical(Rational(c), make_rational(num, den));
}

inline int degree(const Exponents5& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

inline Rational pow2(int d) {
    Rational r = 1;
    for (int i = 0; i < d; ++i) r *= 2;
    return r;
}

inline Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace detail

inline void validate(const GroupedTerm& t) {
    for (int e : t.prefactor)
        if (e < 0) throw std::invalid_argument("negative exponent in prefactor");
    if (t.sign != 1 && t.sign != -1) throw std::invalid_argument("prefactor sign must be +1 or -1");
    switch (t.shape) {
        case TermShape::PurePower:
            if (t.pure.empty()) throw std::invalid_argument("empty pure grouping");
            for (const auto& m : t.pure)
                for (int e : m.e)
                    if (e < 0) throw std::invalid_argument("negative exponent");
            return;
        case TermShape::MixedPair:
            if (t.n < 1 || t.k < 1 || t.n + t.k > 5) throw std::invalid_argument("mixed pair indices outside 1..5");
            [[fallthrough]];
        case TermShape::CubeVsP3:
            if (t.c1 == 0) throw std::invalid_argument("leading coefficient must be nonzero");
            return;
    }
    throw std::invalid_argument("unknown grouping shape");
}

struct TermBound {
    RadicalValue exact;
    double value = 0;
};

/// 2^deg(prefactor) |c1| * inequality bound at nu = -c2/c1, or sum |c| 2^deg for
/// pure groupings.
inline TermBound bound_term(const GroupedTerm& t) {
    validate(t);
    using namespace detail;
    RadicalValue r;
    switch (t.shape) {
        case TermShape::PurePower: {
            Rational s = 0;
            for (const auto& m : t.pure) s += abs_q(m.coef) * pow2(degree(m.e));
            r = {s, 1};
            break;
        }
        case TermShape::MixedPair: {
            const Rational nu = -t.c2 / t.c1;
            r = {pow2(degree(t.prefactor)) * abs_q(t.c1) * bound_mixed_exact(nu), 1};
            break;
        }
        case TermShape::CubeVsP3: {
            const Rational nu = -t.c2 / t.c1;
            const RadicalValue b = bound_cube_exact(nu);
            r = make_radical(pow2(degree(t.prefactor)) * abs_q(t.c1) * b.coef, b.radicand);
            break;
        }
    }
    return {r, r.to_double()};
}

/// The grouping as a polynomial in p1..p5 (or evaluated at a sequence).
template <class S>
S evaluate_term(const GroupedTerm& t, const PSequence<S>& p) {
    auto q = [](const Rational& v) { return scalar_traits<S>::from_rational(v); };
    auto monomial = [&](const Exponents5& e) {
        S out = q(1);
        for (std::size_t i = 0; i < 5; ++i)
            for (int j = 0; j < e[i]; ++j) out = out * p(i + 1);
        return out;
    };
    switch (t.shape) {
        case TermShape::PurePower: {
            S s = q(0);
            for (const auto& m : t.pure) s = s + q(m.coef) * monomial(m.e);
            return s;
        }
        case TermShape::MixedPair:
            return q(Rational(t.sign)) * monomial(t.prefactor) *
                   (q(t.c1) * p(static_cast<std::size_t>(t.n + t.k)) +
                    q(t.c2) * p(static_cast<std::size_t>(t.n)) * p(static_cast<std::size_t>(t.k)));
        case TermShape::CubeVsP3:
            return q(Rational(t.sign)) * monomial(t.prefactor) * (q(t.c1) * p(1) * p(1) * p(1) + q(t.c2) * p(3));
    }
    throw std::invalid_argument("unknown grouping shape");
}

inline std::string describe(const GroupedTerm& t) {
    auto mono = [](const Exponents5& e) {
        std::string s;
        for (std::size_t i = 0; i < 5; ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += " ";
            s += "p" + std::to_string(i + 1);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    };
    auto signed_coef = [](const Rational& c, bool first) {
        if (first) return c.str();
        return (c < 0 ? std::string(" - ") + Rational(-c).str() : std::string(" + ") + c.str());
    };
    std::string body;
    switch (t.shape) {
        case TermShape::PurePower:
            for (std::size_t i = 0; i < t.pure.size(); ++i) {
                body += signed_coef(t.pure[i].coef, i == 0);
                const auto m = mono(t.pure[i].e);
                if (!m.empty()) body += " " + m;
            }
            return "|" + body + "|";
        case TermShape::MixedPair:
            body = signed_coef(t.c1, true) + " p" + std::to_string(t.n + t.k) + signed_coef(t.c2, false) + " p" +
                   std::to_string(t.n) + " p" + std::to_string(t.k);
            break;
        case TermShape::CubeVsP3:
            body = signed_coef(t.c1, true) + " p1^3" + signed_coef(t.c2, false) + " p3";
            break;
    }
    const auto m = mono(t.prefactor);
    return "|" + std::string(t.sign < 0 ? "-" : "") + (m.empty() ? "" : m + " ") + "(" + body + ")|";
}

// ---------------------------------------------------------------------------
// Term tables.

enum class Functional { T1, T2, T3, A6, A7 };

struct BoundTable {
    std::string id;  // claim id of the aggregate, e.g. "T1-BOUND"
    std::string term_prefix;
    ClassTag cls = ClassTag::StarlikeExp;
    Functional functional = Functional::T1;
    Rational denominator{1};
    std::vector<GroupedTerm> terms;
    std::string printed_aggregate;  // decimal or exact fraction as published
};

inline const std::vector<BoundTable>& bound_tables() {
    using namespace detail;
    using E = Exponents5;
    static const std::vector<BoundTable> tables = [] {
        const ClassTag S = ClassTag::StarlikeExp, C = ClassTag::ConvexExp;
        std::vector<BoundTable> t;
        t.push_back({"T1-BOUND", "T1-TERM", S, Functional::T1, Rational(5529600),
                     {cube(1, E{4, 0, 0, 0, 0}, 581, 5040, whole(235648)),
                      cube(1, E{2, 1, 0, 0, 0}, -7068, 25920, root(4976640, 15, 1571)),
                      cube(1, E{0, 0, 0, 1, 0}, 11040, -115200, root(1843200, 15, 217)),
                      cube(1, E{0, 2, 0, 0, 0}, 7920, -69120, root(442368, 30, 17)),
                      mixed(1, E{1, 1, 0, 0, 0}, 74880, -25920, 2, 2, whole(599040)),
                      pure({{Rational(57600), E{1, 0, 2, 0, 0}}}, whole(460800)),
                      mixed(1, E{0, 0, 0, 0, 1}, 138240, -103680, 1, 1, whole(552960))},
                     "0.616137"});
        t.push_back({"T2-BOUND", "T2-TERM", S, Functional::T2, Rational(22118400),
                     {cube(1, E{5, 0, 0, 0, 0}, 235, 8712, whole(617728)),
                      cube(1, E{3, 1, 0, 0, 0}, -1156, 37440, root(14376960, 65, 9071)),
                      cube(-1, E{1, 2, 0, 0, 0}, 14640, 63360, whole(1950720)),
                      cube(1, E{1, 0, 0, 1, 0}, -8400, 161280, root(737280, 42, 13)),
                      cube(1, E{0, 0, 0, 0, 1}, -76800, 368640, root(2949120, 6, 19)),
                      pure({{Rational(-8640), E{2, 3, 0, 0, 0}}}, whole(276480)),
                      mixed(1, E{0, 0, 0, 1, 0}, -345600, 172800, 2, 2, whole(1382400)),
                      mixed(-1, E{0, 0, 2, 0, 0}, 184320, 40320, 1, 1, whole(2119680)),
                      mixed(1, E{1, 1, 0, 0, 0}, -184320, 178560, 1, 4, whole(1474560))},
                     "0.543487"});
        t.push_back({"T3-BOUND", "T3-TERM", S, Functional::T3, Rational(597196800),
                     {cube(1, E{5, 0, 0, 0, 0}, 6120, 143424, whole(10745856)),
                      cube(-1, E{6, 0, 0, 0, 0}, 425, 9000, whole(1369600)),
                      cube(1, E{4, 1, 0, 0, 0}, 9000, 172800, whole(13363200)),
                      cube(1, E{0, 0, 2, 0, 0}, 302400, -2764800, root(58982400, 3, 19)),
                      cube(1, E{0, 1, 0, 1, 0}, 1036800, 6220800, whole(82944000)),
                      pure({{Rational(-17280), E{4, 2, 0, 0, 0}},
                            {Rational(-1036800), E{1, 1, 2, 0, 0}},
                            {Rational(-97200), E{5, 0, 0, 1, 0}},
                            {Rational(-172800), E{3, 3, 0, 0, 0}}},
                           whole(34974720)),
                      cube(1, E{0, 0, 0, 0, 1}, -2073600, 9953280, root(79626240, 6, 19)),
                      cube(1, E{3, 1, 0, 0, 0}, -64512, 967680, root(2211840, 210)),
                      cube(-1, E{2, 2, 0, 0, 0}, 32400, 777600, whole(29030400)),
                      cube(1, E{1, 0, 0, 1, 0}, -259200, 1244160, root(19906560, 6, 19)),
                      mixed(1, E{1, 0, 0, 1, 0}, -4665600, 1555200, 2, 2, whole(37324800)),
                      mixed(-1, E{1, 1, 0, 0, 0}, 4976640, 414720, 2, 3, whole(46448640)),
                      pure({{Rational(-829440), E{0, 1, 2, 0, 0}}, {Rational(-829440), E{2, 0, 2, 0, 0}}},
                           whole(19906560)),
                      mixed(1, E{2, 1, 0, 0, 0}, -622080, 414720, 2, 2, whole(9953280))},
                     "0.665582"});
        t.push_back({"U1-BOUND", "U1-TERM", C, Functional::T1, Rational(132710400),
                     {mixed(1, E{5, 0, 0, 0, 0}, -6304, 487, 1, 1, whole(40320)),
                      mixed(1, E{1, 2, 0, 0, 0}, -24960, 11440, 1, 1, whole(399360)),
                      cube(1, E{1, 0, 1, 0, 0}, 5280, 34560, whole(445440)),
                      mixed(1, E{0, 1, 1, 0, 0}, -53760, 19200, 1, 1, whole(430080)),
                      mixed(1, E{0, 0, 0, 1, 0}, -138240, 57600, 1, 2, whole(55296)),
                      mixed(1, E{0, 0, 0, 0, 1}, 184320, -92160, 1, 1, whole(73728)),
                      pure({{Rational(8640), E{3, 0, 0, 1, 0}}}, whole(138240))},
                     "0.0119242"});
        t.push_back({"U2-BOUND", "U2-TERM", C, Functional::T2, Rational(1592524800),
                     {mixed(1, E{6, 0, 0, 0, 0}, -2732, 463, 1, 1, whole(349696)),
                      pure({{Rational(-23472), E{4, 2, 0, 0, 0}}, {Rational(-14400), E{2, 3, 0, 0, 0}}},
                           whole(1963008)),
                      cube(1, E{2, 0, 1, 0, 0}, 14592, -108288, root(866304, 282, 61)),
                      mixed(1, E{1, 1, 1, 0, 0}, -138240, 92928, 1, 1, whole(2211840)),
                      mixed(1, E{2, 0, 0, 1, 0}, 373248, -25344, 1, 1, whole(5971968)),
                      mixed(1, E{0, 0, 0, 1, 0}, -995328, 276480, 2, 2, whole(3981312)),
                      mixed(1, E{0, 0, 0, 0, 1}, 1105920, -276480, 1, 2, whole(4423680)),
                      pure({{Rational(221184), E{1, 0, 1, 1, 0}},
                            {Rational(-161280), E{3, 0, 0, 0, 1}},
                            {Rational(-322560), E{0, 1, 2, 0, 0}}},
                           whole(6045696))},
                     "0.0168348"});
        t.push_back({"U3-BOUND", "U3-TERM", C, Functional::T3, Rational(38220595200LL),
                     {mixed(1, E{6, 0, 0, 0, 0}, -128256, 11424, 1, 1, whole(16416768)),
                      mixed(1, E{7, 0, 0, 0, 0}, 10812, -503, 1, 1, whole(2767872)),
                      pure({{Rational(69120), E{4, 2, 0, 0, 0}}, {Rational(552960), E{2, 3, 0, 0, 0}}},
                           whole(22118400)),
                      pure({{Rational(-42192), E{5, 2, 0, 0, 0}}, {Rational(-181440), E{3, 3, 0, 0, 0}}},
                           whole(17012736)),
                      mixed(1, E{4, 0, 1, 0, 0}, 206208, -11664, 1, 1, whole(13197312)),
                      mixed(1, E{1, 1, 1, 0, 0}, -1658880, 1889280, 1, 1, whole(33914880)),
                      pure({{Rational(-2211840), E{2, 0, 2, 0, 0}}, {Rational(-2211840), E{0, 1, 2, 0, 0}}},
                           whole(5308416)),
                      mixed(1, E{1, 0, 2, 0, 0}, -967680, 283392, 1, 1, whole(15482880)),
                      cube(1, E{1, 0, 0, 1, 0}, -483840, 3317760, root(106168320, 3, 41)),
                      mixed(1, E{3, 0, 0, 1, 0}, 1271808, -117504, 1, 1, whole(40697856)),
                      mixed(1, E{1, 0, 0, 1, 0}, -5971968, 1658880, 2, 2, whole(47775744)),
                      mixed(1, E{0, 0, 1, 1, 0}, 6635520, -331776, 1, 1, whole(53084160)),
                      mixed(1, E{0, 0, 0, 0, 1}, 26542080, -6635520, 1, 2, whole(106168320)),
                      pure({{Rational(244224), E{5, 0, 1, 0, 0}},
                            {Rational(-794880), E{2, 2, 1, 0, 0}},
                            {Rational(-2764800), E{0, 0, 3, 0, 0}},
                            {Rational(-829440), E{2, 1, 0, 1, 0}},
                            {Rational(-3870720), E{3, 0, 0, 0, 1}}},
                           whole(138387456))},
                     "0.015406"});
        t.push_back({"A6-STAR-BOUND", "A6-STAR-TERM", S, Functional::A6, Rational(57600),
                     {mixed(1, E{2, 0, 0, 0, 0}, -480, 220, 1, 2, whole(3840)),
                      mixed(1, E{1, 0, 0, 0, 0}, 720, -480, 2, 2, whole(2880)),
                      pure({{Rational(-17), E{5, 0, 0, 0, 0}}}, whole(544)),
                      mixed(1, E{}, 5760, -480, 2, 3, whole(11520))},
                     "587/1800"});
        t.push_back({"A7-STAR-BOUND", "A7-STAR-TERM", S, Functional::A7, Rational(8294400),
                     {mixed(1, E{4, 0, 0, 0, 0}, -13260, 881, 1, 1, whole(424320)),
                      mixed(1, E{0, 2, 0, 0, 0}, -14400, 48240, 1, 1, whole(656640)),
                      mixed(1, E{1, 0, 0, 0, 0}, 69120, -106560, 2, 3, whole(576000)),
                      mixed(1, E{2, 0, 0, 0, 0}, -56160, 29040, 1, 3, whole(449280)),
                      pure({{Rational(-57600), E{0, 0, 2, 0, 0}}, {Rational(-86400), E{0, 1, 0, 1, 0}}},
                           whole(576000))},
                     "1397/4320"});
        t.push_back({"A6-CONV-BOUND", "A6-CONV-TERM", C, Functional::A6, Rational(345600),
                     {mixed(1, E{}, 5760, -480, 2, 3, whole(11520)),
                      mixed(1, E{1, 0, 0, 0, 0}, 720, -480, 2, 2, whole(2880)),
                      pure({{Rational(-17), E{5, 0, 0, 0, 0}}}, whole(544)),
                      mixed(1, E{2, 0, 0, 0, 0}, -480, 220, 1, 2, whole(3840))},
                     "587/10800"});
        t.push_back({"A7-CONV-BOUND", "A7-CONV-TERM", C, Functional::A7, Rational(58060800),
                     {mixed(1, E{4, 0, 0, 0, 0}, -13260, 881, 1, 1, whole(424320)),
                      mixed(1, E{1, 1, 0, 0, 0}, -106560, 48240, 1, 2, whole(852480)),
                      cube(1, E{0, 0, 1, 0, 0}, 29040, -57600, root(921600, 15, 119)),
                      mixed(1, E{1, 0, 0, 0, 0}, 69120, -56160, 1, 4, whole(276480)),
                      mixed(-1, E{0, 1, 0, 0, 0}, 86400, 14400, 2, 2, whole(460800))},
                     "0.0403246"});
        return t;
    }();
    return tables;
}

inline const BoundTable& bound_table(const std::string& id) {
    for (const auto& t : bound_tables())
        if (t.id == id) return t;
    throw std::invalid_argument("unknown bound table '" + id + "'");
}

/// The functional a table decomposes, as a polynomial in p1..p6 (the
/// published closed forms; the a7 table targets the published a7).
inline Polynomial table_target(const BoundTable& t) {
    const auto sym = moment_symbols();
    PSequence<Polynomial> p;
    for (std::size_t n = 1; n <= 6; ++n) p(n) = sym[n - 1];
    const auto c = closed_coeffs(t.cls, p);
    switch (t.functional) {
        case Functional::T1: return t_functionals(c).t1;
        case Functional::T2: return t_functionals(c).t2;
        case Functional::T3: return t_functionals(c).t3;
        case Functional::A6: return c(6);
        case Functional::A7: return c(7);
    }
    throw std::invalid_argument("unknown functional");
}

/// denominator * functional - sum of groupings; zero when the table is a
/// faithful split of the functional.
inline Polynomial grouping_residual(const BoundTable& t) {
    const auto sym = moment_symbols();
    PSequence<Polynomial> p;
    for (std::size_t n = 1; n <= 6; ++n) p(n) = sym[n - 1];
    Polynomial sum(0);
    for (const auto& g : t.terms) sum += evaluate_term(g, p);
    return Polynomial(t.denominator) * table_target(t) - sum;
}

/// Rational part plus a list of radicals.
struct RadicalSum {
    Rational rational{0};
    std::vector<RadicalValue> radicals;

    void add(const RadicalValue& v) {
        if (v.is_rational()) {
            rational += v.coef;
            return;
        }
        for (auto& r : radicals)
            if (r.radicand == v.radicand) {
                r.coef += v.coef;
                return;
            }
        radicals.push_back(v);
    }
    RadicalSum divided(const Rational& d) const {
        RadicalSum out{rational / d, radicals};
        for (auto& r : out.radicals) r.coef /= d;
        return out;
    }
    bool is_rational() const { return radicals.empty(); }
    double to_double() const {
        double s = hv::to_double(rational);
        for (const auto& r : radicals) s += r.to_double();
        return s;
    }
    std::string str() const {
        std::string s = rational.str();
        for (const auto& r : radicals) s += " + " + r.str();
        return s;
    }
};

struct TermReport {
    std::string id;
    std::string label;
    TermBound computed;
    RadicalValue printed;
    bool matches = false;  // exact when rational, 5e-7 relative for radicals
};

struct BoundReport {
    std::string id;
    ClassTag cls = ClassTag::StarlikeExp;
    std::vector<TermReport> terms;
    RadicalSum exact;  // sum of term bounds / denominator
    double aggregate = 0;
    double printed_terms_aggregate = 0;  // same sum over the published term values
    std::string paper_value;
    ClaimRecord claim;
};

inline bool term_matches(const RadicalValue& computed, const RadicalValue& printed) {
    if (computed.is_rational() && printed.is_rational()) return computed.coef == printed.coef;
    const double c = computed.to_double(), p = printed.to_double();
    return std::abs(c - p) <= 5e-7 * std::abs(p);
}

inline ClaimValue parse_claim_value(const std::string& printed) {
    const auto slash = printed.find('/');
    if (slash == std::string::npos) return parse_printed(printed);
    return make_rational(std::stoll(printed.substr(0, slash)), std::stoll(printed.substr(slash + 1)));
}

inline double claim_tolerance(const std::string& printed) {
    return printed.find('/') == std::string::npos ? printed_tolerance(printed) : 0.0;
}

inline BoundReport evaluate_table(const BoundTable& t) {
    BoundReport r;
    r.id = t.id;
    r.cls = t.cls;
    r.paper_value = t.printed_aggregate;
    RadicalSum total, printed_total;
    for (std::size_t i = 0; i < t.terms.size(); ++i) {
        TermReport tr;
        tr.id = t.term_prefix + "-" + std::to_string(i + 1);
        tr.label = describe(t.terms[i]);
        tr.computed = bound_term(t.terms[i]);
        tr.printed = t.terms[i].printed;
        tr.matches = term_matches(tr.computed.exact, tr.printed);
        total.add(tr.computed.exact);
        printed_total.add(tr.printed);
        r.terms.push_back(std::move(tr));
    }
    r.exact = total.divided(t.denominator);
    r.aggregate = r.exact.to_double();
    r.printed_terms_aggregate = printed_total.divided(t.denominator).to_double();
    ClaimValue computed = r.exact.is_rational() ? ClaimValue(r.exact.rational) : ClaimValue(r.aggregate);
    r.claim = make_claim(t.id, parse_claim_value(t.printed_aggregate), computed, claim_tolerance(t.printed_aggregate),
                         "sum of grouping bounds / " + t.denominator.str() + " = " + t.printed_aggregate);
    return r;
}

/// Claims for the individual groupings of a table.
inline std::vector<ClaimRecord> term_claims(const BoundReport& r) {
    std::vector<ClaimRecord> out;
    for (const auto& t : r.terms) {
        const bool exact = t.computed.exact.is_rational() && t.printed.is_rational();
        ClaimValue paper = exact ? ClaimValue(t.printed.coef) : ClaimValue(t.printed.to_double());
        ClaimValue comp = exact ? ClaimValue(t.computed.exact.coef) : ClaimValue(t.computed.value);
        const double tol = exact ? 0.0 : 5e-7 * t.printed.to_double();
        out.push_back(make_claim(t.id, paper, comp, tol, t.label + " <= " + t.printed.str()));
    }
    return out;
}

inline std::array<double, 3> t_bounds() {
    return {evaluate_table(bound_table("T1-BOUND")).aggregate, evaluate_table(bound_table("T2-BOUND")).aggregate,
            evaluate_table(bound_table("T3-BOUND")).aggregate};
}

inline std::array<double, 3> u_bounds() {
    return {evaluate_table(bound_table("U1-BOUND")).aggregate, evaluate_table(bound_table("U2-BOUND")).aggregate,
            evaluate_table(bound_table("U3-BOUND")).aggregate};
}

inline std::pair<RadicalSum, RadicalSum> a67_bounds(ClassTag cls) {
    const bool star = cls == ClassTag::StarlikeExp;
    return {evaluate_table(bound_table(star ? "A6-STAR-BOUND" : "A6-CONV-BOUND")).exact,
            evaluate_table(bound_table(star ? "A7-STAR-BOUND" : "A7-CONV-BOUND")).exact};
}

// ---------------------------------------------------------------------------
// |H41| <= |a7| |H31| + |a6| |T1| + |a5| |T2| + |a4| |T3|.

struct H41Inputs {
    double h31 = 0, a7 = 0, a6 = 0, a5 = 0, a4 = 0, t1 = 0, t2 = 0, t3 = 0;
};

inline double h41_combine(const H41Inputs& in) {
    return in.a7 * in.h31 + in.a6 * in.t1 + in.a5 * in.t2 + in.a4 * in.t3;
}

struct H41Variant {
    std::string name;
    H41Inputs inputs;
    double value = 0;
};

struct H41Report {
    ClassTag cls = ClassTag::StarlikeExp;
    std::string paper_value;
    std::vector<H41Variant> variants;  // first one is the headline combination
};

inline constexpr double kEarlierH31Starlike = 0.385;
inline constexpr double kEarlierH31Convex = 0.021;

/// Published inputs: sharp H31, the stated a4..a7 estimates and the stated
/// T (or U) bounds.
inline H41Inputs stated_h41_inputs(ClassTag cls) {
    H41Inputs in;
    if (cls == ClassTag::StarlikeExp) {
        in.h31 = 1.0 / 9;
        in.a7 = 1397.0 / 4320;
        in.a6 = 587.0 / 1800;
        in.a5 = 25.0 / 72;
        in.a4 = 17.0 / 36;
        in.t1 = 0.616137;
        in.t2 = 0.543487;
        in.t3 = 0.665582;
    } else {
        in.h31 = 1.0 / 144;
        in.a7 = 0.0343723;
        in.a6 = 587.0 / 10800;
        in.a5 = 5.0 / 72;
        in.a4 = 17.0 / 144;
        in.t1 = 0.0119242;
        in.t2 = 0.0168348;
        in.t3 = 0.015406;
    }
    return in;
}

inline H41Report h41_aggregate(ClassTag cls) {
    H41Report r;
    r.cls = cls;
    const bool star = cls == ClassTag::StarlikeExp;
    r.paper_value = star ? "0.29059" : "0.00101775";
    auto push = [&](std::string name, H41Inputs in) { r.variants.push_back({std::move(name), in, h41_combine(in)}); };

    const H41Inputs stated = stated_h41_inputs(cls);
    push("stated inputs, sharp H31", stated);
    H41Inputs z = stated;
    z.h31 = star ? kEarlierH31Starlike : kEarlierH31Convex;
    push("stated inputs, earlier H31 estimate", z);

    H41Inputs rec = stated;
    const auto tb = star ? t_bounds() : u_bounds();
    rec.t1 = tb[0];
    rec.t2 = tb[1];
    rec.t3 = tb[2];
    const auto [a6, a7] = a67_bounds(cls);
    rec.a6 = a6.to_double();
    rec.a7 = a7.to_double();
    push("recomputed tables, sharp H31", rec);
    return r;
}

// ---------------------------------------------------------------------------
// Empirical check of every claimed upper bound on sampled class members.

struct FalsifyEntry {
    std::string quantity;
    ClassTag cls = ClassTag::StarlikeExp;
    double claimed = 0;
    double sup = 0;
    std::size_t violations = 0;
};

struct FalsifyReport {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<FalsifyEntry> entries;
};

inline constexpr unsigned kFalsifyShards = 16;

namespace detail {

inline std::vector<FalsifyEntry> falsify_template(ClassTag cls) {
    const auto in = stated_h41_inputs(cls);
    const bool star = cls == ClassTag::StarlikeExp;
    const std::string t = star ? "T" : "U";
    return {{t + "1", cls, in.t1},
            {t + "2", cls, in.t2},
            {t + "3", cls, in.t3},
            {"a6", cls, in.a6},
            {"a7", cls, in.a7},
            {"H31", cls, in.h31},
            {"H41", cls, star ? 0.29059 : 0.00101775}};
}

template <class S>
std::array<double, 7> falsify_values(ClassTag cls, const PSequence<S>& p) {
    const auto c = series_coeffs(cls, p);
    const auto t = t_functionals(c);
    return {magnitude(t.t1), magnitude(t.t2), magnitude(t.t3), magnitude(c(6)), magnitude(c(7)),
            magnitude(h31(c)), magnitude(hankel_det(c, {4, 1}))};
}

inline void record(std::vector<FalsifyEntry>& e, const std::array<double, 7>& v) {
    for (std::size_t i = 0; i < 7; ++i) {
        e[i].sup = std::max(e[i].sup, v[i]);
        if (v[i] > e[i].claimed + 1e-12) ++e[i].violations;
    }
}

}  // namespace detail

/// The first two samples are the all-2 sequence and the cube-root mixture
/// (the extremal function's sequence), evaluated exactly; the rest are seeded
/// random mixtures split over fixed shards, so results do not depend on the
/// thread count.
inline FalsifyReport falsify_bounds(std::size_t n_samples, std::uint64_t seed, unsigned threads = 0) {
    if (n_samples < 1) throw std::invalid_argument("need at least one sample");
    FalsifyReport rep;
    rep.samples = n_samples;
    rep.seed = seed;
    const std::array<ClassTag, 2> classes = {ClassTag::StarlikeExp, ClassTag::ConvexExp};

    std::array<std::vector<FalsifyEntry>, 2> base;
    for (std::size_t c = 0; c < 2; ++c) base[c] = detail::falsify_template(classes[c]);

    const std::size_t fixed = std::min<std::size_t>(n_samples, 2);
    for (std::size_t i = 0; i < fixed; ++i) {
        const auto p = i == 0 ? all_two_sequence() : cube_root_sequence();
        for (std::size_t c = 0; c < 2; ++c) detail::record(base[c], detail::falsify_values(classes[c], p));
    }

    const std::size_t rest = n_samples - fixed;
    std::vector<std::array<std::vector<FalsifyEntry>, 2>> shard_out(kFalsifyShards);
    auto run_shard = [&](unsigned s) {
        auto& out = shard_out[s];
        for (std::size_t c = 0; c < 2; ++c) {
            out[c] = detail::falsify_template(classes[c]);
        }
        std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), s};
        std::mt19937_64 rng(sq);
        const std::size_t count = rest / kFalsifyShards + (s < rest % kFalsifyShards ? 1 : 0);
        for (std::size_t i = 0; i < count; ++i) {
            const auto p = sample_mixture(random_mixture(rng));
            for (std::size_t c = 0; c < 2; ++c) detail::record(out[c], detail::falsify_values(classes[c], p));
        }
    };
    const unsigned workers =
        std::min(kFalsifyShards, threads ? threads : std::max(1u, std::thread::hardware_concurrency()));
    if (workers == 1) {
        for (unsigned s = 0; s < kFalsifyShards; ++s) run_shard(s);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (unsigned s = w; s < kFalsifyShards; s += workers) run_shard(s);
            });
        for (auto& th : pool) th.join();
    }

    for (std::size_t c = 0; c < 2; ++c) {
        for (const auto& sh : shard_out)
            for (std::size_t i = 0; i < base[c].size(); ++i) {
                base[c][i].sup = std::max(base[c][i].sup, sh[c][i].sup);
                base[c][i].violations += sh[c][i].violations;
            }
        rep.entries.insert(rep.entries.end(), base[c].begin(), base[c].end());
    }
    return rep;
}

}  // namespace hv
