#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "hv/bounds.hpp"

using namespace hv;

namespace {

Rational r(long long n, long long d = 1) { return make_rational(n, d); }

const std::set<std::string> kMisprintedTerms = {"U1-TERM-1", "U1-TERM-5", "U1-TERM-6", "U2-TERM-8", "U3-TERM-7"};

}  // namespace

TEST(BoundTerm, Examples) {
    using E = Exponents5;
    EXPECT_EQ(bound_term(detail::cube(1, E{4, 0, 0, 0, 0}, 581, 5040, {})).exact, (RadicalValue{r(235648), 1}));
    EXPECT_EQ(bound_term(detail::mixed(1, E{0, 0, 0, 0, 1}, 138240, -103680, 1, 1, {})).exact,
              (RadicalValue{r(552960), 1}));
    EXPECT_EQ(bound_term(detail::pure({{r(57600), E{1, 0, 2, 0, 0}}}, {})).exact, (RadicalValue{r(460800), 1}));
    const auto radical = bound_term(detail::cube(1, E{0, 0, 0, 1, 0}, 11040, -115200, {}));
    EXPECT_EQ(radical.exact.coef, r(1843200));
    EXPECT_EQ(radical.exact.radicand, r(15, 217));
    EXPECT_NEAR(radical.value, 1843200 * std::sqrt(15.0 / 217), 1e-6);
}

TEST(BoundTerm, RejectsUnsupportedShapes) {
    using E = Exponents5;
    EXPECT_THROW(bound_term(detail::mixed(1, E{}, 1, 1, 3, 3, {})), std::invalid_argument);
    EXPECT_THROW(bound_term(detail::mixed(1, E{}, 1, 1, 0, 2, {})), std::invalid_argument);
    EXPECT_THROW(bound_term(detail::cube(1, E{}, 0, 1, {})), std::invalid_argument);
    EXPECT_THROW(bound_term(detail::pure({}, {})), std::invalid_argument);
    EXPECT_THROW(bound_term(detail::cube(2, E{}, 1, 1, {})), std::invalid_argument);
}

TEST(BoundTerm, RadicalsSquareBackExactly) {
    for (const auto& t : bound_tables())
        for (const auto& g : t.terms) {
            const auto b = bound_term(g).exact;
            if (b.is_rational()) continue;
            // (value / rational factor)^2 is the square-free radicand.
            EXPECT_EQ(b.signed_square() / (b.coef * b.coef), b.radicand);
            Integer num = boost::multiprecision::numerator(b.radicand);
            EXPECT_EQ(detail::extract_square(num), 1);
        }
}

TEST(Tables, GroupingsExpandToTheFunctional) {
    for (const auto& t : bound_tables()) EXPECT_TRUE(grouping_residual(t).is_zero()) << t.id;
}

TEST(Tables, TermConstantsAgainstPublishedValues) {
    for (const auto& t : bound_tables()) {
        const auto rep = evaluate_table(t);
        for (const auto& term : rep.terms) {
            const bool misprinted = kMisprintedTerms.count(term.id) > 0;
            EXPECT_EQ(term.matches, !misprinted) << term.id << " " << term.label << " computed "
                                                 << term.computed.exact.str() << " printed " << term.printed.str();
        }
    }
}

TEST(Tables, MisprintedTermValues) {
    const auto u1 = evaluate_table(bound_table("U1-BOUND"));
    EXPECT_EQ(u1.terms[0].computed.exact.coef, 403456);
    EXPECT_EQ(u1.terms[4].computed.exact.coef, 552960);
    EXPECT_EQ(u1.terms[5].computed.exact.coef, 737280);
    EXPECT_EQ(evaluate_table(bound_table("U2-BOUND")).terms[7].computed.exact.coef, 6930432);
    EXPECT_EQ(evaluate_table(bound_table("U3-BOUND")).terms[6].computed.exact.coef, 53084160);
}

TEST(Aggregates, TBounds) {
    const auto t = t_bounds();
    EXPECT_NEAR(t[0], 0.616137, 5e-7);
    EXPECT_NEAR(t[1], 0.543487, 5e-7);
    EXPECT_NEAR(t[2], 0.665582, 5e-7);
    EXPECT_NEAR(t[0], 0.6161373582408756, 1e-13);
}

TEST(Aggregates, UBounds) {
    const auto u = u_bounds();
    EXPECT_NEAR(u[0], 0.023410493827160494, 1e-13);
    EXPECT_NEAR(u[1], 0.01739036052854101, 1e-13);
    EXPECT_NEAR(u[2], 0.015406017776831914, 1e-13);
    // The published U1 and U2 are the sums of the published (misprinted) term values.
    EXPECT_NEAR(evaluate_table(bound_table("U1-BOUND")).printed_terms_aggregate, 0.0119242, 5e-8);
    EXPECT_NEAR(evaluate_table(bound_table("U2-BOUND")).printed_terms_aggregate, 0.0168348, 5e-8);
}

TEST(Aggregates, A6A7) {
    const auto [s6, s7] = a67_bounds(ClassTag::StarlikeExp);
    ASSERT_TRUE(s6.is_rational());
    ASSERT_TRUE(s7.is_rational());
    EXPECT_EQ(s6.rational, r(587, 1800));
    EXPECT_EQ(s7.rational, r(1397, 4320));
    const auto [c6, c7] = a67_bounds(ClassTag::ConvexExp);
    EXPECT_EQ(c6.rational, r(587, 10800));
    ASSERT_EQ(c7.radicals.size(), 1u);
    EXPECT_EQ(c7.rational, r(2014080, 58060800));
    EXPECT_EQ(c7.radicals[0].radicand, r(15, 119));
    EXPECT_EQ(c7.radicals[0].coef, r(921600, 58060800));
    EXPECT_NEAR(c7.to_double(), 0.0403246, 5e-8);
    EXPECT_NEAR((2014080 + 921600 * std::sqrt(15.0 / 119)) / 58060800, c7.to_double(), 1e-16);
}

TEST(Aggregates, DominateEachNormalizedTerm) {
    for (const auto& t : bound_tables()) {
        const auto rep = evaluate_table(t);
        for (const auto& term : rep.terms) EXPECT_GE(rep.aggregate, term.computed.value / to_double(t.denominator));
    }
}

TEST(Aggregates, ClaimStatuses) {
    for (const auto& t : bound_tables()) {
        const auto c = evaluate_table(t).claim;
        if (t.id == "U1-BOUND" || t.id == "U2-BOUND") {
            EXPECT_EQ(c.status, ClaimStatus::Flagged) << t.id;
            EXPECT_GT(c.abs_diff, c.tolerance);
        } else {
            EXPECT_EQ(c.status, ClaimStatus::Match) << t.id;
        }
    }
}

TEST(Properties, TermBoundsHoldOnSampledSequences) {
    std::mt19937_64 rng(51);
    std::vector<std::pair<const GroupedTerm*, double>> all;
    for (const auto& t : bound_tables())
        for (const auto& g : t.terms) all.emplace_back(&g, bound_term(g).value);
    for (int it = 0; it < 10000; ++it) {
        const auto p = sample_mixture(random_mixture(rng));
        for (const auto& [g, b] : all) ASSERT_LE(std::abs(evaluate_term(*g, p)), b * (1 + 1e-12)) << describe(*g);
    }
}

TEST(Properties, AllTwoSequenceWithinTermBounds) {
    const auto p = all_two_sequence();
    for (const auto& t : bound_tables())
        for (const auto& g : t.terms) {
            const auto v = evaluate_term(g, p);
            const Rational a = v.re < 0 ? Rational(-v.re) : v.re;
            EXPECT_LE(to_double(a), bound_term(g).value * (1 + 1e-15)) << describe(g);
        }
}

TEST(H41, HeadlineAndVariants) {
    const auto s = h41_aggregate(ClassTag::StarlikeExp);
    ASSERT_EQ(s.variants.size(), 3u);
    EXPECT_NEAR(s.variants[0].value, 0.7398735666255145, 1e-12);
    EXPECT_NEAR(s.variants[1].value, 0.828443654074074, 1e-12);
    EXPECT_GT(s.variants[0].value, 0.29059);
    const auto c = h41_aggregate(ClassTag::ConvexExp);
    EXPECT_NEAR(c.variants[0].value, 0.003874646101851852, 1e-14);
    EXPECT_NEAR(c.variants[1].value, 0.004357767874074074, 1e-14);
    EXPECT_GT(c.variants[0].value, 0.00101775);
}

TEST(H41, ZeroInputsAndMonotonicity) {
    EXPECT_EQ(h41_combine(H41Inputs{}), 0.0);
    for (ClassTag cls : {ClassTag::StarlikeExp, ClassTag::ConvexExp}) {
        const H41Inputs base = stated_h41_inputs(cls);
        const double v = h41_combine(base);
        for (double H41Inputs::*field : {&H41Inputs::h31, &H41Inputs::a7, &H41Inputs::a6, &H41Inputs::a5,
                                         &H41Inputs::a4, &H41Inputs::t1, &H41Inputs::t2, &H41Inputs::t3}) {
            H41Inputs up = base;
            up.*field += 1e-3;
            EXPECT_GE(h41_combine(up), v);
        }
    }
}

TEST(Falsify, SingleAllTwoSample) {
    const auto rep = falsify_bounds(1, 0);
    for (const auto& e : rep.entries)
        if (e.quantity == "H31" && e.cls == ClassTag::StarlikeExp) {
            EXPECT_EQ(e.sup, to_double(r(13, 5184)));
        }
    EXPECT_THROW(falsify_bounds(0, 0), std::invalid_argument);
}

TEST(Falsify, SampledSupremaRespectClaims) {
    const auto rep = falsify_bounds(100000, 7);
    ASSERT_EQ(rep.entries.size(), 14u);
    for (const auto& e : rep.entries) {
        EXPECT_EQ(e.violations, 0u) << to_string(e.cls) << " " << e.quantity << " sup " << e.sup << " claimed "
                                    << e.claimed;
        if (e.quantity == "a6" && e.cls == ClassTag::StarlikeExp) {
            EXPECT_LE(e.sup, 587.0 / 1800);
        }
        if (e.quantity == "H31" && e.cls == ClassTag::ConvexExp) {
            EXPECT_LE(e.sup, 1.0 / 144 + 1e-15);
            EXPECT_GE(e.sup, 0.9 / 144);
        }
    }
}

TEST(Falsify, IndependentOfThreadCount) {
    const auto a = falsify_bounds(3000, 11, 1);
    const auto b = falsify_bounds(3000, 11, 5);
    ASSERT_EQ(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        EXPECT_EQ(a.entries[i].sup, b.entries[i].sup);
        EXPECT_EQ(a.entries[i].violations, b.entries[i].violations);
    }
}
