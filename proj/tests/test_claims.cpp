#include <gtest/gtest.h>

#include <map>
#include <set>

#include "hv/claims.hpp"

using namespace hv;

namespace {

RunOptions quick() {
    RunOptions o;
    o.n = 5000;
    o.oracle_mixtures = 100;
    return o;
}

const std::vector<ClaimRecord>& full_run() {
    static const auto recs = run_claims(quick());
    return recs;
}

std::map<std::string, ClaimRecord> by_id(const std::vector<ClaimRecord>& recs) {
    std::map<std::string, ClaimRecord> m;
    for (const auto& r : recs) m.emplace(r.id, r);
    return m;
}

}  // namespace

TEST(MakeClaim, ExactAndFloatComparisons) {
    const auto exact = make_claim("X", make_rational(1, 3), make_rational(1, 3), 0, "a");
    EXPECT_EQ(exact.status, ClaimStatus::Match);
    EXPECT_EQ(exact.abs_diff, 0.0);
    const auto off = make_claim("X", make_rational(1, 3), make_rational(1, 2), 0, "a");
    EXPECT_EQ(off.status, ClaimStatus::Mismatch);
    EXPECT_NEAR(off.abs_diff, 1.0 / 6, 1e-15);
    EXPECT_EQ(make_claim("X", 0.616137, 0.6161373582, printed_tolerance("0.616137"), "a").status, ClaimStatus::Match);
    EXPECT_EQ(make_claim("X", 0.616137, 0.6161376, printed_tolerance("0.616137"), "a").status, ClaimStatus::Mismatch);
    EXPECT_EQ(make_claim("T3-DEF", 0.0, 0.0, 0, "a").status, ClaimStatus::Flagged);
}

TEST(PrintedTolerance, HalfUnitInLastPlace) {
    EXPECT_DOUBLE_EQ(printed_tolerance("0.616137"), 5e-7);
    EXPECT_DOUBLE_EQ(printed_tolerance("1.43461"), 5e-6);
    EXPECT_DOUBLE_EQ(printed_tolerance("0.00430331"), 5e-9);
}

TEST(Registry, IdsAreUniqueAndNothingMismatches) {
    const auto& recs = full_run();
    std::set<std::string> ids;
    for (const auto& r : recs) {
        EXPECT_TRUE(ids.insert(r.id).second) << "duplicate " << r.id;
        EXPECT_NE(r.status, ClaimStatus::Mismatch)
            << r.id << " paper " << format_value(r.paper_value) << " computed " << format_value(r.computed_value);
        EXPECT_FALSE(r.paper_anchor.empty()) << r.id;
    }
    EXPECT_GT(recs.size(), 80u);
}

TEST(Registry, FlaggedSetIsExactlyThePreregisteredList) {
    std::set<std::string> flagged;
    for (const auto& r : full_run())
        if (r.status == ClaimStatus::Flagged) flagged.insert(r.id);
    std::set<std::string> expected(kFlaggedClaims.begin(), kFlaggedClaims.end());
    EXPECT_EQ(flagged, expected);
}

TEST(Registry, KeyValues) {
    const auto m = by_id(full_run());
    EXPECT_EQ(std::get<Rational>(m.at("A7-STAR-FORMULA").paper_value), make_rational(-1, 36));
    EXPECT_EQ(std::get<Rational>(m.at("A7-STAR-FORMULA").computed_value), make_rational(5, 36));
    EXPECT_NEAR(m.at("A7-CONV-FORMULA").abs_diff, 1.0 / 42, 1e-15);
    EXPECT_EQ(std::get<Rational>(m.at("T3-DEF").computed_value), make_rational(-2));
    EXPECT_EQ(m.at("H31-STAR-SHARP").status, ClaimStatus::Match);
    EXPECT_EQ(m.at("H31-CONV-SHARP").status, ClaimStatus::Match);
    EXPECT_EQ(std::get<Rational>(m.at("H31-STAR-EXTREMAL").computed_value), make_rational(1, 9));
    EXPECT_EQ(std::get<Rational>(m.at("F2-A7").computed_value), make_rational(5, 252));
    EXPECT_NEAR(value_as_double(m.at("A7-CONV-LEMMA").computed_value), 0.0403246, 5e-8);
    EXPECT_NEAR(value_as_double(m.at("H41-STAR-THEOREM").computed_value), 0.7398735666255145, 1e-12);
    EXPECT_GT(m.at("C5-FACE").abs_diff, 1e-4);
    EXPECT_LE(m.at("S2-PAREN").abs_diff, 1e-15);
}

TEST(Registry, ClassFilter) {
    auto o = quick();
    o.cls = ClassTag::ConvexExp;
    for (const auto& r : run_claims(o)) {
        EXPECT_EQ(r.id.find("STAR"), std::string::npos) << r.id;
        EXPECT_NE(r.id, "T3-DEF");
        EXPECT_NE(r.id.rfind("F1-", 0), 0u) << r.id;
    }
}

TEST(Registry, DeterministicForFixedSeed) {
    auto o = quick();
    o.cls = ClassTag::StarlikeExp;
    const ReportMeta meta{"reproduce", std::nullopt, {}};
    EXPECT_EQ(render_text(run_claims(o), meta), render_text(run_claims(o), meta));
}

TEST(ExitCode, StrictFailsOnFlagged) {
    const auto& recs = full_run();
    EXPECT_EQ(claims_exit_code(recs, false), 0);
    EXPECT_EQ(claims_exit_code(recs, true), 1);
    std::vector<ClaimRecord> bad = {make_claim("X", 1.0, 2.0, 0.1, "a")};
    EXPECT_EQ(claims_exit_code(bad, false), 1);
    std::vector<ClaimRecord> good = {make_claim("X", 1.0, 1.0, 0.1, "a")};
    EXPECT_EQ(claims_exit_code(good, true), 0);
}

TEST(Render, TextHasOneLinePerClaim) {
    const auto& recs = full_run();
    const auto text = render_text(recs, {"reproduce", std::string("2026-01-01T00:00:00Z"), {{"seed", "1"}}});
    std::size_t lines = 0;
    for (char c : text) lines += c == '\n';
    EXPECT_EQ(lines, recs.size() + 4);
    EXPECT_NE(text.find("seed=1"), std::string::npos);
    EXPECT_NE(text.find("flagged"), std::string::npos);
}

TEST(Render, TreeRoundTrips) {
    const auto& recs = full_run();
    const auto j = nlohmann::json::parse(render_tree(recs, {"reproduce", std::nullopt, {}}).dump());
    ASSERT_EQ(j["claims"].size(), recs.size());
    EXPECT_FALSE(j.contains("generated"));
    EXPECT_EQ(j["summary"]["flagged"].get<std::size_t>(), kFlaggedClaims.size());
    for (const auto& c : j["claims"])
        if (c["id"] == "M-AT-P2") {
            EXPECT_EQ(c["computed_value"]["exact"], "13/5184");
        }
}
