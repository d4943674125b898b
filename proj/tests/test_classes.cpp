#include <gtest/gtest.h>

#include <random>

#include "hv/classes.hpp"
#include "hv/polynomial.hpp"

using namespace hv;
using CQ = ComplexRational;
using RS = TruncatedSeries<Rational>;

namespace {

Rational r(long long n, long long d = 1) { return make_rational(n, d); }

PSequence<Rational> real_sequence(std::initializer_list<long long> v) {
    PSequence<Rational> s;
    std::size_t n = 1;
    for (long long x : v) s(n++) = Rational(x);
    return s;
}

void expect_coeffs(const CoefficientVector<Rational>& c, std::initializer_list<Rational> a2_up) {
    std::size_t n = 2;
    for (const auto& v : a2_up) {
        EXPECT_EQ(c(n), v) << "a" << n;
        ++n;
    }
}

}  // namespace

TEST(SchwarzFromP, Examples) {
    const RS geometric = div(RS(8, {1, 1}), RS(8, {1, -1}));
    EXPECT_EQ(schwarz_from_p(geometric), RS::monomial(8, 1));
    EXPECT_EQ(schwarz_from_p(RS::constant(8, 1)), RS(8));
    EXPECT_EQ(schwarz_from_p(RS(8, {1, 0, 0, 2, 0, 0, 2})), RS::monomial(8, 3));
    EXPECT_THROW(schwarz_from_p(RS(8, {2})), std::domain_error);
}

TEST(SolveStarlike, Examples) {
    expect_coeffs(solve_starlike(RS::monomial(8, 3)), {0, 0, r(1, 3), 0, 0, r(5, 36)});
    expect_coeffs(solve_starlike(RS(8)), {0, 0, 0, 0, 0, 0});
    expect_coeffs(solve_starlike(RS::monomial(8, 1)), {1, r(3, 4), r(17, 36), r(19, 72)});
    EXPECT_EQ(solve_starlike(RS::monomial(8, 1))(7), r(8351, 129600));
}

TEST(SolveConvex, Examples) {
    expect_coeffs(solve_convex(RS::monomial(8, 3)), {0, 0, r(1, 12), 0, 0, r(5, 252)});
    expect_coeffs(solve_convex(RS(8)), {0, 0, 0, 0, 0, 0});
    expect_coeffs(solve_convex(RS::monomial(8, 1)), {r(1, 2), r(1, 4), r(17, 144)});
}

TEST(Solve, Preconditions) {
    EXPECT_THROW(solve_starlike(RS::constant(8, 1)), std::domain_error);
    EXPECT_THROW(solve_convex(RS::monomial(5, 1)), std::invalid_argument);
}

TEST(ClosedCoeffs, AllTwoSequence) {
    const auto p = real_sequence({2, 2, 2, 2, 2});
    const auto star = closed_coeffs(ClassTag::StarlikeExp, p);
    expect_coeffs(star, {1, r(3, 4), r(17, 36), r(19, 72)});
    EXPECT_EQ(star(7), r(-847936, 8294400));
    expect_coeffs(closed_coeffs(ClassTag::ConvexExp, p), {r(1, 2), r(1, 4), r(17, 144)});
}

TEST(ClosedCoeffs, CubicWitness) {
    const auto star = closed_coeffs(ClassTag::StarlikeExp, real_sequence({0, 0, 2, 0, 0, 2}));
    EXPECT_EQ(star(4), r(1, 3));
    EXPECT_EQ(star(7), r(-1, 36));
    const auto oracle = series_coeffs(ClassTag::StarlikeExp, real_sequence({0, 0, 2, 0, 0, 2}));
    EXPECT_EQ(oracle(7), r(5, 36));
    EXPECT_EQ(oracle(7) - star(7), r(1, 6));
    const auto conv = closed_coeffs(ClassTag::ConvexExp, real_sequence({0, 0, 2, 0, 0, 2}));
    const auto conv_oracle = series_coeffs(ClassTag::ConvexExp, real_sequence({0, 0, 2, 0, 0, 2}));
    EXPECT_EQ(conv_oracle(7) - conv(7), r(1, 42));
}

TEST(ClosedCoeffs, IgnoresP6) {
    auto p = real_sequence({1, 2, 0, -1, 2, 0});
    const auto a = closed_coeffs(ClassTag::StarlikeExp, p);
    p(6) = 2;
    EXPECT_EQ(closed_coeffs(ClassTag::StarlikeExp, p), a);
}

TEST(CoeffsFromParams, Examples) {
    const SchwarzParams<CQ> degenerate{2, CQ(r(1, 3), r(1, 5)), CQ(r(-1, 2)), CQ(r(1, 7))};
    PSequence<CQ> twos;
    for (std::size_t n = 1; n <= 4; ++n) twos(n) = CQ(2);
    twos(5) = CQ(r(1, 9));
    EXPECT_EQ(coeffs_from_params(ClassTag::StarlikeExp, degenerate, CQ(r(1, 9))),
              closed_coeffs(ClassTag::StarlikeExp, twos));

    const SchwarzParams<CQ> cubic{0, CQ(0), CQ(1), CQ(0)};
    EXPECT_EQ(coeffs_from_params(ClassTag::StarlikeExp, cubic)(4), CQ(r(1, 3)));

    const SchwarzParams<CQ> quartic{0, CQ(0), CQ(0), CQ(1)};
    EXPECT_EQ(coeffs_from_params(ClassTag::StarlikeExp, quartic)(5), CQ(r(1, 4)));
}

TEST(Extremal, Functions) {
    const auto f1 = extremal(Extremal::F1);
    const auto f2 = extremal(Extremal::F2);
    expect_coeffs(f1, {0, 0, r(1, 3), 0, 0, r(5, 36)});
    expect_coeffs(f2, {0, 0, r(1, 12), 0, 0, r(5, 252)});
    EXPECT_EQ(f1(4), 4 * f2(4));
    EXPECT_EQ(f1.cls, ClassTag::StarlikeExp);
    EXPECT_EQ(f2.cls, ClassTag::ConvexExp);
}

TEST(ClassTagNames, RoundTrip) {
    EXPECT_EQ(parse_class("starlike"), ClassTag::StarlikeExp);
    EXPECT_EQ(parse_class(to_string(ClassTag::ConvexExp)), ClassTag::ConvexExp);
    EXPECT_THROW(parse_class("spiral"), std::invalid_argument);
}

TEST(Properties, AlexanderRelation) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long long> num(-9, 9), den(1, 6);
    for (int it = 0; it < 200; ++it) {
        RS w(8);
        for (std::size_t k = 1; k <= 8; ++k) w[k] = r(num(rng), den(rng));
        const auto s = solve_starlike(w);
        const auto c = solve_convex(w);
        for (std::size_t n = 2; n <= 7; ++n) ASSERT_EQ(Rational(static_cast<long long>(n)) * c(n), s(n));
    }
}

TEST(Properties, OracleAgreesWithClosedFormThroughA6) {
    std::mt19937_64 rng(22);
    for (int it = 0; it < 1000; ++it) {
        const auto p = sample_mixture(random_rational_mixture(rng));
        for (ClassTag cls : {ClassTag::StarlikeExp, ClassTag::ConvexExp}) {
            const auto closed = closed_coeffs(cls, p);
            const auto oracle = series_coeffs(cls, p);
            EXPECT_EQ(oracle(0), CQ(0));
            EXPECT_EQ(oracle(1), CQ(1));
            for (std::size_t n = 2; n <= 6; ++n) ASSERT_EQ(closed(n), oracle(n)) << "a" << n << " iteration " << it;
        }
    }
}

TEST(Symbolic, ClosedFormsMatchSeriesExceptTheP6Term) {
    const auto sym = moment_symbols();
    PSequence<Polynomial> p;
    for (std::size_t n = 1; n <= 6; ++n) p(n) = sym[n - 1];
    const Polynomial p6 = Polynomial::variable(6);
    for (ClassTag cls : {ClassTag::StarlikeExp, ClassTag::ConvexExp}) {
        const auto closed = closed_coeffs(cls, p);
        const auto oracle = series_coeffs(cls, p);
        for (std::size_t n = 2; n <= 6; ++n) EXPECT_EQ(closed(n), oracle(n)) << "a" << n;
        const Rational missing = cls == ClassTag::StarlikeExp ? r(1, 12) : r(1, 84);
        EXPECT_EQ(oracle(7) - closed(7), Polynomial(missing) * p6);
    }
}
