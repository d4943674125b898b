// hv: reproduce, inspect and stress the H31/H41 claims from the command line.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "hv/claims.hpp"

using namespace hv;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Flags {
    std::string cls;
    std::string only;
    bool strict = false;
    std::uint64_t seed = 1;
    std::size_t n = 100000;
    int grid = 100;
    double tol = 1e-10;
    std::string format = "text";
    bool no_timestamp = false;
    std::string out;
};

Rational parse_rational(const std::string& s) {
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw UsageError("not a rational number: '" + s + "'");
    }
}

std::vector<Rational> parse_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw UsageError("empty list");
    return out;
}

std::optional<ClassTag> class_of(const Flags& f) {
    if (f.cls.empty()) return std::nullopt;
    return parse_class(f.cls);
}

ClassTag require_class(const Flags& f) {
    const auto c = class_of(f);
    if (!c) throw UsageError("--class is required");
    return *c;
}

std::string class_id(ClassTag c) { return c == ClassTag::StarlikeExp ? "STAR" : "CONV"; }

// --- coeffs ---------------------------------------------------------------

PSequence<ComplexRational> sequence_from_w(const std::string& spec) {
    TruncatedSeries<ComplexRational> w(kCoefficientOrder);
    if (spec == "z3" || spec == "z") {
        w[spec == "z" ? 1 : 3] = ComplexRational(1);
    } else {
        const auto c = parse_list(spec);
        if (c.size() > 6) throw UsageError("--w takes at most 6 coefficients w1..w6");
        for (std::size_t i = 0; i < c.size(); ++i) w[i + 1] = c[i];
    }
    const auto one = TruncatedSeries<ComplexRational>::constant(kCoefficientOrder, ComplexRational(1));
    const auto p = div(add(one, w), sub(one, w));
    PSequence<ComplexRational> s;
    for (std::size_t n = 1; n <= 6; ++n) s(n) = p[n];
    return s;
}

std::vector<ClaimRecord> cmd_coeffs(const Flags& f, const std::string& p_list, const std::string& w_spec,
                                    const std::string& params) {
    const ClassTag cls = require_class(f);
    if ((!p_list.empty()) + (!w_spec.empty()) + (!params.empty()) != 1)
        throw UsageError("give exactly one of --p, --w, --params");
    PSequence<ComplexRational> p;
    std::string source;
    if (!p_list.empty()) {
        const auto v = parse_list(p_list);
        if (v.size() > 6) throw UsageError("--p takes at most 6 values p1..p6");
        for (std::size_t i = 0; i < v.size(); ++i) p(i + 1) = v[i];
        source = "p = (" + p_list + ")";
    } else if (!w_spec.empty()) {
        p = sequence_from_w(w_spec);
        source = "w = " + w_spec;
    } else {
        const auto v = parse_list(params);
        if (v.size() < 4 || v.size() > 5) throw UsageError("--params takes p1,gamma,eta,rho[,p5]");
        SchwarzParams<ComplexRational> sp{v[0], v[1], v[2], v[3]};
        try {
            validate(sp);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        p = sequence_from_params(sp, v.size() == 5 ? ComplexRational(v[4]) : ComplexRational(0));
        source = "params (" + params + ")";
    }
    if (const auto bad = p.first_violation()) throw UsageError("|p" + std::to_string(bad) + "| exceeds 2");

    const auto closed = closed_coeffs(cls, p);
    const auto series = series_coeffs(cls, p);
    const bool star = cls == ClassTag::StarlikeExp;
    std::vector<ClaimRecord> out;
    for (std::size_t n = 2; n <= 7; ++n) {
        const std::string id = "A" + std::to_string(n) + "-" + class_id(cls) + "-FORMULA";
        std::string note = source;
        if (n == 7)
            note += "; series minus closed form = p6/" + std::string(star ? "12" : "84") + " with p6 = " +
                    to_string(p(6).re);
        out.push_back(make_claim(id, closed(n).re, series(n).re, 0,
                                 "closed a" + std::to_string(n) + " (left) versus series-derived coefficient", note));
    }
    return out;
}

// --- maximize -------------------------------------------------------------

std::vector<ClaimRecord> cmd_maximize(const Flags& f, const std::string& target) {
    RunOptions o;
    o.grid = f.grid;
    o.tol = f.tol;
    const auto given = class_of(f);
    if (target == "M" || target == "N") {
        const ClassTag cls = target == "M" ? ClassTag::StarlikeExp : ClassTag::ConvexExp;
        if (given && *given != cls) throw UsageError("target " + target + " belongs to the other class");
        return detail::sharp_claims(cls, o);
    }
    Face face;
    try {
        face = parse_face(target);
    } catch (const std::invalid_argument&) {
        throw UsageError("unknown target '" + target + "' (M, N or a face name such as s3)");
    }
    if (given && *given != face_class(face)) throw UsageError("face " + target + " belongs to the other class");

    static const std::map<Face, std::string> printed = {
        {Face::R1, "0.0159535"}, {Face::S3, "0.0398426"}, {Face::R5, "0.0481125"}, {Face::T5, "0.00430331"}};
    const auto up = face_upper(face);
    auto run = [&](auto g) -> std::pair<double, std::string> {
        std::ostringstream where;
        if (face_arity(face) == 1) {
            const auto r = maximize_box([&](const Point<1>& v) { return g(v[0], 0.0); },
                                        uniform_box<1>({0}, {up[0]}, f.grid, f.tol));
            where << "argmax " << face_variables(face) << " = " << r.argmax[0];
            return {r.value, where.str()};
        }
        const auto r = maximize_box([&](const Point<2>& v) { return g(v[0], v[1]); },
                                    uniform_box<2>({0, 0}, {up[0], up[1]}, f.grid, f.tol));
        where << "argmax (" << face_variables(face) << ") = (" << r.argmax[0] << ", " << r.argmax[1] << ")";
        return {r.value, where.str()};
    };
    const auto [value, where] = run([face](double a, double b) { return face_restriction(face, a, b); });
    std::string id = face_name(face) + "-MAX";
    for (auto& ch : id) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (const auto it = printed.find(face); it != printed.end())
        return {make_claim(id, parse_printed(it->second), value, printed_tolerance(it->second),
                           "max of " + face_name(face) + " = " + it->second, where)};
    const auto [reference, ref_where] = run([face](double a, double b) { return majorant_on_face(face, a, b); });
    return {make_claim(id, reference, value, 1e-9,
                       "max of " + face_name(face) + " equals the max of the majorant on its face/edge",
                       where + "; majorant " + ref_where)};
}

// --- sample / bounds ------------------------------------------------------

std::vector<ClaimRecord> cmd_sample(const Flags& f) {
    const ClassTag cls = require_class(f);
    if (f.n == 0) throw UsageError("--n must be positive");
    const auto rep = falsify_bounds(f.n, f.seed);
    std::vector<ClaimRecord> out;
    for (const auto& e : rep.entries) {
        if (e.cls != cls) continue;
        std::string q = e.quantity;
        for (auto& ch : q) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        std::ostringstream note;
        note.precision(12);
        note << "sup = " << e.sup << ", claimed bound = " << e.claimed << ", samples = " << rep.samples;
        out.push_back(make_claim("SAMPLE-" + q + "-" + class_id(cls), Rational(0),
                                 Rational(static_cast<long long>(e.violations)), 0,
                                 "|" + e.quantity + "| never exceeds its stated bound", note.str()));
    }
    return out;
}

std::vector<ClaimRecord> cmd_bounds(const Flags& f) {
    const ClassTag cls = require_class(f);
    auto out = detail::table_claims(cls);
    for (auto& c : detail::h41_claims(cls)) out.push_back(std::move(c));
    return out;
}

int emit(const std::string& command, std::vector<ClaimRecord> recs, const Flags& f) {
    if (!f.only.empty()) {
        std::vector<ClaimRecord> kept;
        for (auto& r : recs)
            if (r.id == f.only) kept.push_back(std::move(r));
        if (kept.empty()) throw UsageError("no claim with id '" + f.only + "' in this command");
        recs = std::move(kept);
    }
    ReportMeta meta{command, f.no_timestamp ? std::nullopt : std::optional<std::string>(utc_timestamp()), {}};
    if (!f.cls.empty()) meta.parameters.emplace_back("class", f.cls);
    meta.parameters.emplace_back("seed", std::to_string(f.seed));
    meta.parameters.emplace_back("n", std::to_string(f.n));
    meta.parameters.emplace_back("grid", std::to_string(f.grid));
    std::ostringstream tol;
    tol << f.tol;
    meta.parameters.emplace_back("tol", tol.str());
    if (f.strict) meta.parameters.emplace_back("strict", "true");

    const std::string text = render_text(recs, meta);
    const std::string tree = render_tree(recs, meta).dump(2) + "\n";
    if (f.out.empty()) {
        std::cout << (f.format == "tree" ? tree : text);
    } else {
        std::ofstream file(f.out, std::ios::binary);
        if (!file) throw std::ios_base::failure("cannot open " + f.out + " for writing");
        std::cout << text;
        file << (f.format == "tree" ? tree : text);
        file.close();
        if (!file) throw std::ios_base::failure("failed writing " + f.out);
    }
    return claims_exit_code(recs, f.strict);
}

void add_common(CLI::App& app, Flags& f) {
    app.add_option("--class", f.cls, "function class")->check(CLI::IsMember({"starlike", "convex"}));
    app.add_option("--only", f.only, "report only this claim id");
    app.add_flag("--strict", f.strict, "treat flagged claims as failures");
    app.add_option("--seed", f.seed, "RNG seed");
    app.add_option("--n", f.n, "number of sampled parameters");
    app.add_option("--grid", f.grid, "grid density per axis")->check(CLI::Range(2, 100000));
    app.add_option("--tol", f.tol, "refinement tolerance")->check(CLI::PositiveNumber);
    app.add_option("--format", f.format, "report file format")->check(CLI::IsMember({"text", "tree"}));
    app.add_flag("--no-timestamp", f.no_timestamp, "omit the timestamp for reproducible reports");
    app.add_option("--out", f.out, "write the report to this file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hankel determinant bound verification"};
    app.require_subcommand(0, 1);
    Flags f;
    add_common(app, f);

    auto* reproduce = app.add_subcommand("reproduce", "evaluate every registered claim (default)");
    auto* coeffs = app.add_subcommand("coeffs", "closed-form versus series coefficients a2..a7");
    std::string p_list, w_spec, params;
    coeffs->add_option("--p", p_list, "p1,...,p6 (rationals; missing entries are 0)");
    coeffs->add_option("--w", w_spec, "Schwarz function: z3, z, or w1,...,w6");
    coeffs->add_option("--params", params, "p1,gamma,eta,rho[,p5]");
    auto* maximize = app.add_subcommand("maximize", "maximize a majorant or one of its face/edge restrictions");
    std::string target;
    maximize->add_option("--target", target, "M, N or a face name (s1..s5, r1..r5, c1..c5, t1..t5)")->required();
    auto* sample = app.add_subcommand("sample", "sampled falsification of the bound chain");
    auto* bounds = app.add_subcommand("bounds", "grouped-term tables and the H41 aggregation");
    for (auto* sub : {reproduce, coeffs, maximize, sample, bounds}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*coeffs) return emit("coeffs", cmd_coeffs(f, p_list, w_spec, params), f);
        if (*maximize) return emit("maximize", cmd_maximize(f, target), f);
        if (*sample) return emit("sample", cmd_sample(f), f);
        if (*bounds) return emit("bounds", cmd_bounds(f), f);
        RunOptions o;
        o.cls = class_of(f);
        o.seed = f.seed;
        o.n = f.n;
        o.grid = f.grid;
        o.tol = f.tol;
        return emit("reproduce", run_claims(o), f);
    } catch (const UsageError& e) {
        std::cerr << "hv: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "hv: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "hv: " << e.what() << "\n";
        return 2;
    }
}
