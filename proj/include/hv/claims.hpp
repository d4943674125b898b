#pragma once

// Registry of every checked claim, grouped so a run can be restricted to one
// class, plus text and tree rendering of the resulting records.

#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hv/bounds.hpp"
#include "hv/claim.hpp"
#include "hv/classes.hpp"
#include "hv/hankel.hpp"
#include "hv/objective.hpp"
#include "hv/optimize.hpp"

namespace hv {

struct RunOptions {
    std::optional<ClassTag> cls;
    std::uint64_t seed = 1;
    std::size_t n = 100000;  // sampled parameters for majorization checks
    int grid = 100;
    double tol = 1e-10;
    std::size_t oracle_mixtures = 1000;
};

struct ClaimGroup {
    std::string name;
    std::optional<ClassTag> cls;  // empty: class-independent
    std::function<std::vector<ClaimRecord>(const RunOptions&)> run;
};

namespace detail {

inline Rational q(long long n, long long d = 1) { return make_rational(n, d); }

inline std::string cls_tag(ClassTag c) { return c == ClassTag::StarlikeExp ? "STAR" : "CONV"; }

inline std::vector<ClaimRecord> extremal_claims(ClassTag cls) {
    const bool star = cls == ClassTag::StarlikeExp;
    const auto f = extremal(star ? Extremal::F1 : Extremal::F2);
    const std::string fn = star ? "F1" : "F2";
    const Rational h = h31(f);
    std::vector<ClaimRecord> out;
    out.push_back(make_claim(fn + "-A4", star ? q(1, 3) : q(1, 12), f(4), 0,
                             star ? "f1 = z + z^4/3 + ..." : "f2 = z + z^4/12 + ..."));
    out.push_back(make_claim(fn + "-A7", star ? q(5, 36) : q(5, 252), f(7), 0,
                             star ? "a7(f1) = 5/36" : "a7(f2) = 5/252"));
    out.push_back(make_claim("H31-" + cls_tag(cls) + "-EXTREMAL", star ? q(1, 9) : q(1, 144), h < 0 ? Rational(-h) : h,
                             0, star ? "|H31(f1)| = 1/9" : "|H31(f2)| = 1/144"));
    return out;
}

inline std::vector<ClaimRecord> sharp_claims(ClassTag cls, const RunOptions& o) {
    const bool star = cls == ClassTag::StarlikeExp;
    auto f = [cls](const Point<3>& v) { return majorant(cls, CuboidPoint<double>{v[0], v[1], v[2]}); };
    const auto r = maximize_box(f, uniform_box<3>({0, 0, 0}, {2, 1, 1}, o.grid, o.tol));
    std::ostringstream note;
    note << "argmax (p,x,y) = (" << r.argmax[0] << ", " << r.argmax[1] << ", " << r.argmax[2] << ")";
    return {make_claim(star ? "H31-STAR-SHARP" : "H31-CONV-SHARP", star ? q(1, 9) : q(1, 144), r.value, 1e-9,
                       star ? "|H31(f)| <= 1/9, max of M over [0,2]x[0,1]x[0,1]"
                            : "|H31(f)| <= 1/144, max of N over [0,2]x[0,1]x[0,1]",
                       note.str())};
}

inline std::vector<ClaimRecord> coefficient_claims(ClassTag cls, const RunOptions& o) {
    const bool star = cls == ClassTag::StarlikeExp;
    std::vector<ClaimRecord> out;
    const auto witness = cube_root_sequence();
    const auto closed = closed_coeffs(cls, witness);
    const auto oracle = series_coeffs(cls, witness);
    out.push_back(make_claim(star ? "A7-STAR-FORMULA" : "A7-CONV-FORMULA", closed(7).re, oracle(7).re, 0,
                             star ? "closed a7 (denominator 8294400) at p = (0,0,2,0,0,2)"
                                  : "closed a7 (denominator 58060800) at p = (0,0,2,0,0,2)",
                             star ? "series minus closed form = p6/12" : "series minus closed form = p6/84"));

    std::mt19937_64 rng(o.seed);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < o.oracle_mixtures; ++i) {
        const auto p = sample_mixture(random_rational_mixture(rng));
        const auto c = closed_coeffs(cls, p);
        const auto s = series_coeffs(cls, p);
        for (std::size_t n = 2; n <= 6; ++n)
            if (!(c(n) == s(n))) {
                ++bad;
                break;
            }
    }
    out.push_back(make_claim("COEFF-" + cls_tag(cls) + "-ORACLE", Rational(0), Rational(static_cast<long long>(bad)), 0,
                             "closed a2..a6 equal the series coefficients",
                             std::to_string(o.oracle_mixtures) + " rational mixtures, count of disagreements"));
    return out;
}

inline std::vector<ClaimRecord> alexander_claims(const RunOptions& o) {
    std::mt19937_64 rng(o.seed + 1);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < o.oracle_mixtures; ++i) {
        const auto p = sample_mixture(random_rational_mixture(rng));
        const auto s = series_coeffs(ClassTag::StarlikeExp, p);
        const auto c = series_coeffs(ClassTag::ConvexExp, p);
        for (std::size_t n = 2; n <= 7; ++n)
            if (!(ComplexRational(Rational(static_cast<long long>(n))) * c(n) == s(n))) {
                ++bad;
                break;
            }
    }
    return {make_claim("ALEXANDER", Rational(0), Rational(static_cast<long long>(bad)), 0,
                       "f convex-type iff z f' starlike-type: n a_n(convex) = a_n(starlike)",
                       std::to_string(o.oracle_mixtures) + " rational mixtures, count of disagreements")};
}

inline std::vector<ClaimRecord> decomposition_claims(ClassTag cls, const RunOptions& o) {
    std::vector<ClaimRecord> out;
    std::mt19937_64 rng(o.seed + 2);
    std::size_t bad = 0;
    for (int i = 0; i < 200; ++i) {
        const auto sp = random_rational_schwarz_params(rng);
        const auto p5 = random_rational_disk_point(rng);
        if (!(reconstruct_h31(cls, sp) == h31(coeffs_from_params(cls, sp, p5)))) ++bad;
    }
    out.push_back(make_claim("H31-DECOMP-" + cls_tag(cls), Rational(0), Rational(static_cast<long long>(bad)), 0,
                             cls == ClassTag::StarlikeExp ? "H31 = (beta1 + beta2 eta + beta3 eta^2 + phi rho)/331776"
                                                          : "H31 = (alpha1 + alpha2 eta + alpha3 eta^2 + psi rho)/6635520",
                             "200 exact parameter draws, count of disagreements"));

    std::mt19937_64 frng(o.seed + 3);
    std::size_t viol = 0;
    for (std::size_t i = 0; i < o.n; ++i) {
        const auto sp = random_schwarz_params(frng);
        const CuboidPoint<double> pt{sp.p1, std::min(1.0, std::abs(sp.gamma)), std::min(1.0, std::abs(sp.eta))};
        if (std::abs(reconstruct_h31(cls, sp)) > majorant(cls, pt) + 1e-12) ++viol;
    }
    out.push_back(make_claim("MAJORIZATION-" + cls_tag(cls), Rational(0), Rational(static_cast<long long>(viol)), 0,
                             cls == ClassTag::StarlikeExp ? "|H31| <= M(p, |gamma|, |eta|)" : "|H31| <= N(p, |gamma|, |eta|)",
                             std::to_string(o.n) + " sampled parameters, count of violations"));
    return out;
}

inline std::vector<ClaimRecord> face_claims(ClassTag cls) {
    std::vector<ClaimRecord> out;
    for (Face f : kAllFaces) {
        if (face_class(f) != cls) continue;
        const auto up = face_upper(f);
        double worst = 0;
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                const double a = up[0] * (i + 0.5) / 10, b = up[1] * (j + 0.5) / 10;
                worst = std::max(worst, std::abs(face_restriction(f, a, b) - majorant_on_face(f, a, b)));
            }
        std::string id = f == Face::S2 ? "S2-PAREN" : face_name(f) + "-FACE";
        for (auto& ch : id) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        std::string note;
        if (f == Face::S2) note = "unbalanced parenthesis closed at the end; this reading equals M(p,0,y)";
        if (f == Face::C5) note = "printed c5 - N(p,x,1) = (4-p^2)^2 (x-5)(x-1)^2(x+1)/11520";
        out.push_back(make_claim(id, 0.0, worst, 1e-12,
                                 face_name(f) + "(" + face_variables(f) + ") equals the majorant on its face/edge",
                                 note));
    }
    return out;
}

inline std::vector<ClaimRecord> derivative_claims(ClassTag cls) {
    const bool star = cls == ClassTag::StarlikeExp;
    const double h = 1e-6;
    double worst = 0;
    for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 10; ++j)
            for (int l = 1; l <= 10; ++l) {
                const double p = 2.0 * i / 11, x = j / 11.0, y = l / 11.0;
                const double fd = (majorant(cls, CuboidPoint<double>{p, x, y + h}) -
                                   majorant(cls, CuboidPoint<double>{p, x, y - h})) /
                                  (2 * h);
                const double an = star ? dM_dy(p, x, y) : dN_dy(p, x, y);
                worst = std::max(worst, std::abs(an - fd));
            }
    return {make_claim(star ? "DM-DY" : "DN-DY", 0.0, worst, 1e-6,
                       star ? "dM/dy = (4-p^2)(1-x^2)/13824 * (...)" : "dN/dy = (1-x^2)(4-p^2)/138240 * (...)",
                       "max |printed - central difference| on a 10^3 interior grid")};
}

inline std::vector<ClaimRecord> critical_claims(ClassTag cls, const RunOptions& o) {
    static const std::vector<std::string> convex_ids = {"BETA0-ARGMAX", "T5-MAX", "N-AT-P2", "N-X1", "N-CORNER"};
    std::vector<ClaimRecord> out;
    for (auto& c : reproduce_critical_constants(o.tol)) {
        const bool conv = std::find(convex_ids.begin(), convex_ids.end(), c.id) != convex_ids.end();
        if (conv == (cls == ClassTag::ConvexExp)) out.push_back(std::move(c));
    }
    return out;
}

inline std::vector<ClaimRecord> table_claims(ClassTag cls) {
    std::vector<ClaimRecord> out;
    for (const auto& t : bound_tables()) {
        if (t.cls != cls) continue;
        const auto rep = evaluate_table(t);
        out.push_back(rep.claim);
        if (t.id == "A7-CONV-BOUND")
            out.push_back(make_claim("A7-CONV-LEMMA", 0.0343723, rep.aggregate, printed_tolerance("0.0343723"),
                                     "|a7| <= 0.0343723 as stated, versus the aggregate of its own groupings",
                                     "aggregate = " + rep.exact.str()));
        for (auto& c : term_claims(rep)) out.push_back(std::move(c));
    }
    return out;
}

inline std::vector<ClaimRecord> h41_claims(ClassTag cls) {
    const bool star = cls == ClassTag::StarlikeExp;
    const auto rep = h41_aggregate(cls);
    const std::string base = std::string("H41-") + cls_tag(cls);
    const std::array<std::string, 3> ids = {base + "-THEOREM", base + "-EARLIER-H31", base + "-RECOMPUTED"};
    std::vector<ClaimRecord> out;
    for (std::size_t i = 0; i < rep.variants.size(); ++i) {
        const auto& v = rep.variants[i];
        std::ostringstream note;
        note.precision(9);
        note << v.name << ": a7=" << v.inputs.a7 << " H31=" << v.inputs.h31 << " a6=" << v.inputs.a6
             << " a5=" << v.inputs.a5 << " a4=" << v.inputs.a4 << " T=(" << v.inputs.t1 << ", " << v.inputs.t2 << ", "
             << v.inputs.t3 << ")";
        out.push_back(make_claim(ids[i], parse_printed(rep.paper_value), v.value, printed_tolerance(rep.paper_value),
                                 std::string("|H41(f)| <= ") + rep.paper_value +
                                     " via |a7||H31| + |a6||T1| + |a5||T2| + |a4||T3|",
                                 note.str()));
    }
    if (star) {
        CoefficientVector<Rational> c;
        const Rational v[] = {2, 1, 1, 0, 1, 0};
        for (std::size_t n = 2; n <= 7; ++n) c(n) = v[n - 2];
        out.push_back(make_claim("T3-DEF", Rational(0), h41_decomposition_gap(c), 0,
                                 "H41 = a7 H31 - a6 T1 + a5 T2 - a4 T3 with T3 = a4(a3a5-a4^2) - a5(a2a5-a3a4) + a6(a4-a2a3)",
                                 "det - decomposition = -a4 a6 (a2a3 + a2a4 - a3^2 - a4), shown at a = (2,1,1,0,1,0); "
                                 "the cofactor form has a6(a2a4 - a3^2)"));
        std::mt19937_64 rng(99);
        std::size_t bad = 0;
        std::uniform_int_distribution<long long> num(-30, 30), den(1, 12);
        for (int i = 0; i < 1000; ++i) {
            CoefficientVector<Rational> rc;
            for (std::size_t n = 2; n <= 7; ++n) rc(n) = make_rational(num(rng), den(rng));
            if (!(h41_cofactor(rc) == hankel_det(rc, {4, 1})) ||
                !(h41_cofactor(rc) - h41_decomposed(rc) == h41_decomposition_gap(rc)))
                ++bad;
        }
        out.push_back(make_claim("H41-COFACTOR", Rational(0), Rational(static_cast<long long>(bad)), 0,
                                 "4x4 Hankel determinant = a7 H31 - a6 T1 + a5 T2 - a4 T3' with T3' from cofactors",
                                 "1000 exact coefficient vectors, count of disagreements"));
    }
    return out;
}

}  // namespace detail

inline const std::vector<ClaimGroup>& claim_registry() {
    using namespace detail;
    static const std::vector<ClaimGroup> reg = [] {
        std::vector<ClaimGroup> g;
        for (ClassTag c : {ClassTag::StarlikeExp, ClassTag::ConvexExp}) {
            const std::string t = to_string(c);
            g.push_back({"sharp-" + t, c, [c](const RunOptions& o) { return sharp_claims(c, o); }});
            g.push_back({"extremal-" + t, c, [c](const RunOptions&) { return extremal_claims(c); }});
            g.push_back({"coefficients-" + t, c, [c](const RunOptions& o) { return coefficient_claims(c, o); }});
            g.push_back({"decomposition-" + t, c, [c](const RunOptions& o) { return decomposition_claims(c, o); }});
            g.push_back({"faces-" + t, c, [c](const RunOptions&) { return face_claims(c); }});
            g.push_back({"derivatives-" + t, c, [c](const RunOptions&) { return derivative_claims(c); }});
            g.push_back({"critical-" + t, c, [c](const RunOptions& o) { return critical_claims(c, o); }});
            g.push_back({"tables-" + t, c, [c](const RunOptions&) { return table_claims(c); }});
            g.push_back({"h41-" + t, c, [c](const RunOptions&) { return h41_claims(c); }});
        }
        g.push_back({"alexander", std::nullopt, [](const RunOptions& o) { return alexander_claims(o); }});
        return g;
    }();
    return reg;
}

/// Groups run concurrently; output order follows the registry.
inline std::vector<ClaimRecord> run_claims(const RunOptions& o) {
    std::vector<std::future<std::vector<ClaimRecord>>> jobs;
    for (const auto& g : claim_registry()) {
        if (o.cls && g.cls && *g.cls != *o.cls) continue;
        jobs.push_back(std::async(std::launch::async, [&g, &o] { return g.run(o); }));
    }
    std::vector<ClaimRecord> out;
    for (auto& j : jobs)
        for (auto& c : j.get()) out.push_back(std::move(c));
    return out;
}

struct ClaimSummary {
    std::size_t match = 0, mismatch = 0, flagged = 0;
};

inline ClaimSummary summarize(const std::vector<ClaimRecord>& recs) {
    ClaimSummary s;
    for (const auto& r : recs) {
        if (r.status == ClaimStatus::Match) ++s.match;
        if (r.status == ClaimStatus::Mismatch) ++s.mismatch;
        if (r.status == ClaimStatus::Flagged) ++s.flagged;
    }
    return s;
}

/// 0 when nothing mismatches; strict mode also fails on flagged records.
inline int claims_exit_code(const std::vector<ClaimRecord>& recs, bool strict) {
    const auto s = summarize(recs);
    return (s.mismatch > 0 || (strict && s.flagged > 0)) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Rendering.

struct ReportMeta {
    std::string command;
    std::optional<std::string> timestamp;
    std::vector<std::pair<std::string, std::string>> parameters;
};

inline std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline std::string render_text(const std::vector<ClaimRecord>& recs, const ReportMeta& meta) {
    std::ostringstream os;
    os << "# hv " << meta.command;
    for (const auto& [k, v] : meta.parameters) os << " " << k << "=" << v;
    os << "\n";
    if (meta.timestamp) os << "# generated " << *meta.timestamp << "\n";
    char buf[512];
    std::snprintf(buf, sizeof buf, "%-22s %-24s %-24s %-10s %-10s %s\n", "id", "paper", "computed", "diff", "tol",
                  "status");
    os << buf;
    for (const auto& r : recs) {
        std::snprintf(buf, sizeof buf, "%-22s %-24s %-24s %-10.3g %-10.3g %-8s", r.id.c_str(),
                      format_value(r.paper_value).c_str(), format_value(r.computed_value).c_str(), r.abs_diff,
                      r.tolerance, to_string(r.status).c_str());
        os << buf << " | " << r.paper_anchor;
        if (!r.note.empty()) os << " | " << r.note;
        os << "\n";
    }
    const auto s = summarize(recs);
    os << "# " << recs.size() << " claims: " << s.match << " match, " << s.mismatch << " mismatch, " << s.flagged
       << " flagged\n";
    return os.str();
}

inline nlohmann::ordered_json value_json(const ClaimValue& v) {
    if (const auto* q = std::get_if<Rational>(&v))
        return {{"exact", to_string(*q)}, {"float", to_double(*q)}};
    return {{"float", std::get<double>(v)}};
}

inline nlohmann::ordered_json render_tree(const std::vector<ClaimRecord>& recs, const ReportMeta& meta) {
    nlohmann::ordered_json j;
    j["command"] = meta.command;
    if (meta.timestamp) j["generated"] = *meta.timestamp;
    auto& params = j["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : meta.parameters) params[k] = v;
    auto& arr = j["claims"] = nlohmann::ordered_json::array();
    for (const auto& r : recs) {
        nlohmann::ordered_json c;
        c["id"] = r.id;
        c["paper_value"] = value_json(r.paper_value);
        c["computed_value"] = value_json(r.computed_value);
        c["abs_diff"] = r.abs_diff;
        c["tolerance"] = r.tolerance;
        c["status"] = to_string(r.status);
        c["paper_anchor"] = r.paper_anchor;
        if (!r.note.empty()) c["note"] = r.note;
        arr.push_back(std::move(c));
    }
    const auto s = summarize(recs);
    j["summary"] = {{"claims", recs.size()}, {"match", s.match}, {"mismatch", s.mismatch}, {"flagged", s.flagged}};
    return j;
}

}  // namespace hv
