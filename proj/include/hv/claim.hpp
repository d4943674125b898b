#pragma once

// One checked claim: a published value, what the toolkit recomputes, and a verdict.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <variant>

#include "hv/scalar.hpp"

namespace hv {

using ClaimValue = std::variant<double, Rational>;

inline double value_as_double(const ClaimValue& v) {
    return std::visit([](const auto& x) { return to_double(x); }, v);
}

inline std::string format_value(const ClaimValue& v) {
    if (const auto* q = std::get_if<Rational>(&v)) return to_string(*q);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", std::get<double>(v));
    return buf;
}

enum class ClaimStatus { Match, Mismatch, Flagged };

inline std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Match: return "match";
        case ClaimStatus::Mismatch: return "mismatch";
        case ClaimStatus::Flagged: return "flagged";
    }
    return "?";
}

// Known discrepancies. Records with these ids are reported as flagged
// whatever their numeric diff.
inline constexpr std::array<std::string_view, 19> kFlaggedClaims = {
    "A7-STAR-FORMULA",     "A7-CONV-FORMULA",     "A7-CONV-LEMMA",   "S2-PAREN",  "C5-FACE",
    "T3-DEF",              "U1-BOUND",            "U2-BOUND",        "U1-TERM-1", "U1-TERM-5",
    "U1-TERM-6",           "U2-TERM-8",           "U3-TERM-7",       "H41-STAR-THEOREM",
    "H41-STAR-EARLIER-H31", "H41-STAR-RECOMPUTED", "H41-CONV-THEOREM", "H41-CONV-EARLIER-H31",
    "H41-CONV-RECOMPUTED"};

inline bool is_flagged_claim(std::string_view id) {
    return std::find(kFlaggedClaims.begin(), kFlaggedClaims.end(), id) != kFlaggedClaims.end();
}

struct ClaimRecord {
    std::string id;
    ClaimValue paper_value{0.0};
    ClaimValue computed_value{0.0};
    double abs_diff = 0.0;
    double tolerance = 0.0;
    ClaimStatus status = ClaimStatus::Match;
    std::string paper_anchor;
    std::string note;
};

/// Exact comparison when both sides are rational, floating otherwise.
inline ClaimRecord make_claim(std::string id, ClaimValue paper, ClaimValue computed, double tolerance,
                              std::string anchor, std::string note = {}) {
    ClaimRecord c;
    c.id = std::move(id);
    c.tolerance = tolerance;
    c.paper_anchor = std::move(anchor);
    c.note = std::move(note);
    const auto* pq = std::get_if<Rational>(&paper);
    const auto* cq = std::get_if<Rational>(&computed);
    bool within;
    if (pq && cq) {
        const Rational d = abs(Rational(*pq - *cq));
        c.abs_diff = to_double(d);
        within = d == 0 || c.abs_diff <= tolerance;
    } else {
        c.abs_diff = std::abs(value_as_double(paper) - value_as_double(computed));
        within = c.abs_diff <= tolerance;
    }
    c.paper_value = std::move(paper);
    c.computed_value = std::move(computed);
    if (is_flagged_claim(c.id))
        c.status = ClaimStatus::Flagged;
    else
        c.status = within ? ClaimStatus::Match : ClaimStatus::Mismatch;
    return c;
}

/// Half a unit in the last decimal of a printed number, e.g. "0.616137" -> 5e-7.
inline double printed_tolerance(std::string_view printed) {
    const auto dot = printed.find('.');
    if (dot == std::string_view::npos) return 0.5;
    std::size_t digits = 0;
    for (std::size_t i = dot + 1; i < printed.size() && printed[i] >= '0' && printed[i] <= '9'; ++i) ++digits;
    return 0.5 * std::pow(10.0, -static_cast<double>(digits));
}

inline double parse_printed(std::string_view printed) { return std::stod(std::string(printed)); }

inline constexpr double kRootTolerance = 1e-4;

}  // namespace hv
