#include <gtest/gtest.h>

#include <random>

#include "hv/series.hpp"

using namespace hv;
using Q = Rational;
using RS = TruncatedSeries<Q>;

namespace {

Q r(long long n, long long d = 1) { return make_rational(n, d); }

RS random_series(std::mt19937_64& rng, std::size_t order, bool zero_constant = false) {
    std::uniform_int_distribution<long long> num(-20, 20), den(1, 9);
    RS s(order);
    for (std::size_t k = 0; k <= order; ++k) s[k] = r(num(rng), den(rng));
    if (zero_constant) s[0] = 0;
    return s;
}

}  // namespace

TEST(SeriesBasics, ConstructionKeepsOrder) {
    RS s(5, {r(1), r(2)});
    EXPECT_EQ(s.order(), 5u);
    EXPECT_EQ(s.coeffs().size(), 6u);
    EXPECT_EQ(s[1], 2);
    EXPECT_EQ(s[5], 0);
    EXPECT_THROW(RS(1, {r(1), r(2), r(3)}), std::invalid_argument);
    EXPECT_THROW(RS::from_coeffs({}), std::invalid_argument);
}

TEST(SeriesAdd, Examples) {
    EXPECT_EQ(add(RS(4, {1, 1}), RS(4, {1, -1})), RS(4, {2}));
    const RS s(4, {r(3), r(-1, 2), r(7)});
    EXPECT_EQ(add(RS(4), s), s);
    EXPECT_EQ(add(RS(4, {0, 1, 1}), RS(4, {0, 0, 1})), RS(4, {0, 1, 2}));
}

TEST(SeriesAdd, OrderMismatchThrows) {
    EXPECT_THROW(add(RS(3), RS(4)), std::invalid_argument);
    EXPECT_THROW(mul(RS(3), RS(4)), std::invalid_argument);
    EXPECT_THROW(div(RS(3, {1}), RS(4, {1})), std::invalid_argument);
}

TEST(SeriesMul, Examples) {
    EXPECT_EQ(mul(RS(2, {1, 1}), RS(2, {1, -1})), RS(2, {1, 0, -1}));
    EXPECT_EQ(mul(RS(4, {1, 1}), RS(4, {1, -1})), RS(4, {1, 0, -1}));
    const RS s(4, {r(2), r(5, 3), r(-1)});
    EXPECT_EQ(mul(s, RS::constant(4, 1)), s);
    EXPECT_EQ(mul(RS(3, {1, 1}), RS(3, {1, 1})), RS(3, {1, 2, 1}));
}

TEST(SeriesMul, TruncatesBeyondOrder) {
    const RS a(2, {0, 1, 1});
    EXPECT_EQ(mul(a, a), RS(2, {0, 0, 1}));
}

TEST(SeriesDiv, GeometricExpansion) {
    const RS q = div(RS(6, {1, 1}), RS(6, {1, -1}));
    EXPECT_EQ(q, RS(6, {1, 2, 2, 2, 2, 2, 2}));
}

TEST(SeriesDiv, SelfQuotientIsOne) {
    const RS s(5, {r(3), r(1, 2), r(-4), r(7, 3)});
    EXPECT_EQ(div(s, s), RS::constant(5, 1));
}

TEST(SeriesDiv, CubicQuotient) {
    // z^3 (2 + 2z^3 + 2z^6) = 2z^3 + 2z^6 + 2z^9, so the quotient is z^3 + O(z^9).
    const RS num(8, {0, 0, 0, 2, 0, 0, 2});
    const RS den(8, {2, 0, 0, 2, 0, 0, 2});
    const RS q = div(num, den);
    EXPECT_EQ(q, RS::monomial(8, 3));
}

TEST(SeriesDiv, ZeroConstantDivisorThrows) { EXPECT_THROW(div(RS(3, {1}), RS(3, {0, 1})), std::domain_error); }

TEST(SeriesExp, Examples) {
    EXPECT_EQ(exp(RS(4, {0, 1})), RS(4, {1, 1, r(1, 2), r(1, 6), r(1, 24)}));
    EXPECT_EQ(exp(RS(4)), RS::constant(4, 1));
    EXPECT_EQ(exp(RS::monomial(8, 3)), RS(8, {1, 0, 0, 1, 0, 0, r(1, 2)}));
    EXPECT_THROW(exp(RS(3, {1})), std::domain_error);
}

TEST(SeriesLog, Examples) {
    EXPECT_EQ(log(RS::constant(5, 1)), RS(5));
    EXPECT_EQ(log(exp(RS(7, {0, 1, 1}))), RS(7, {0, 1, 1}));
    EXPECT_EQ(log(RS(5, {1, 1})), RS(5, {0, 1, r(-1, 2), r(1, 3), r(-1, 4), r(1, 5)}));
    EXPECT_THROW(log(RS(3, {2})), std::domain_error);
}

TEST(SeriesIntegrateDivT, Examples) {
    EXPECT_EQ(integrate_div_t(RS::monomial(5, 3)), RS::monomial(5, 3, r(1, 3)));
    EXPECT_EQ(integrate_div_t(RS(4, {0, 1, 1})), RS(4, {0, 1, r(1, 2)}));
    const RS e = sub(exp(RS::monomial(8, 3)), RS::constant(8, 1));
    EXPECT_EQ(integrate_div_t(e), RS(8, {0, 0, 0, r(1, 3), 0, 0, r(1, 12)}));
    EXPECT_THROW(integrate_div_t(RS(3, {1})), std::domain_error);
}

TEST(SeriesCalculus, DeriveIntegrate) {
    EXPECT_EQ(derive(RS::monomial(4, 2)), RS::monomial(3, 1, r(2)));
    EXPECT_EQ(integrate(RS::constant(0, 1)), RS::monomial(1, 1));
    const RS s(4, {r(1), r(-2), r(3, 5)});
    EXPECT_EQ(derive(integrate(s)), s);
    EXPECT_EQ(integrate(RS(8, {1}), 8).order(), 8u);
    EXPECT_EQ(derive(RS::constant(0, 5)), RS(0));
}

TEST(SeriesFloat, ExpMatchesStdExp) {
    TruncatedSeries<double> a(10, {0.0, 1.0});
    const auto e = exp(a);
    double fact = 1.0;
    for (std::size_t k = 0; k <= 10; ++k) {
        if (k) fact *= static_cast<double>(k);
        EXPECT_NEAR(e[k], 1.0 / fact, 1e-15);
    }
}

// ---------------------------------------------------------------------------
// Properties on random rational series of order 10.

class SeriesProperties : public ::testing::Test {
protected:
    std::mt19937_64 rng{20240611};
};

TEST_F(SeriesProperties, RingLaws) {
    for (int it = 0; it < 50; ++it) {
        const RS a = random_series(rng, 10), b = random_series(rng, 10), c = random_series(rng, 10);
        EXPECT_EQ(mul(a, b), mul(b, a));
        EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
        EXPECT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
    }
}

TEST_F(SeriesProperties, ExpLogRoundTrips) {
    for (int it = 0; it < 30; ++it) {
        const RS a = random_series(rng, 10, true);
        EXPECT_EQ(log(exp(a)), a);
        RS b = random_series(rng, 10);
        b[0] = 1;
        EXPECT_EQ(exp(log(b)), b);
    }
}

TEST_F(SeriesProperties, DivisionInvertsMultiplication) {
    for (int it = 0; it < 50; ++it) {
        const RS a = random_series(rng, 10);
        RS b = random_series(rng, 10);
        if (b[0] == 0) b[0] = 1;
        EXPECT_EQ(div(mul(a, b), b), a);
    }
}

TEST_F(SeriesProperties, DeriveUndoesIntegrate) {
    for (std::size_t order = 0; order <= 9; ++order) {
        const RS a = random_series(rng, order);
        EXPECT_EQ(derive(integrate(a)), a);
    }
}
