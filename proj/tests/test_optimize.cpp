#include <gtest/gtest.h>

#include <cmath>

#include "hv/optimize.hpp"

using namespace hv;

namespace {

double m_at(const Point<3>& v) { return M(CuboidPoint<double>{v[0], v[1], v[2]}); }
double n_at(const Point<3>& v) { return N(CuboidPoint<double>{v[0], v[1], v[2]}); }

BoxSpec<3> cuboid(int density) { return uniform_box<3>({0, 0, 0}, {2, 1, 1}, density); }

}  // namespace

TEST(BoxSpec, Validation) {
    EXPECT_THROW(validate(uniform_box<1>({1}, {1}, 10)), std::invalid_argument);
    EXPECT_THROW(validate(uniform_box<2>({0, 0}, {1, 1}, 1)), std::invalid_argument);
    EXPECT_THROW(validate(uniform_box<1>({0}, {1}, 10, 0.0)), std::invalid_argument);
    EXPECT_NO_THROW(validate(uniform_box<3>({0, 0, 0}, {1, 1, 1}, 2)));
}

TEST(MaximizeBox, StarlikeMajorant) {
    const auto r = maximize_box(m_at, cuboid(100));
    EXPECT_NEAR(r.value, 1.0 / 9, 1e-9);
    EXPECT_NEAR(r.argmax[0], 0, 1e-6);
    EXPECT_NEAR(r.argmax[1], 0, 1e-6);
    EXPECT_NEAR(r.argmax[2], 1, 1e-6);
}

TEST(MaximizeBox, ConvexMajorant) {
    const auto r = maximize_box(n_at, cuboid(100));
    EXPECT_NEAR(r.value, 1.0 / 144, 1e-9);
    EXPECT_NEAR(r.argmax[0], 0, 1e-6);
    EXPECT_NEAR(r.argmax[1], 0, 1e-6);
    EXPECT_NEAR(r.argmax[2], 1, 1e-6);
}

TEST(MaximizeBox, InteriorEdgeMaximum) {
    const auto r = maximize_box([](const Point<1>& v) { return face_restriction(Face::R5, v[0]); },
                                uniform_box<1>({0}, {1}, 50));
    EXPECT_NEAR(r.argmax[0], 1 / std::sqrt(3.0), 1e-6);
    EXPECT_NEAR(r.value, 0.0481125, 5e-8);
}

TEST(MaximizeBox, ValueIsReevaluatedAtArgmax) {
    const auto r = maximize_box(m_at, cuboid(20));
    EXPECT_EQ(r.value, m_at(r.argmax));
    for (std::size_t d = 0; d < 3; ++d) {
        EXPECT_GE(r.argmax[d], 0.0);
        EXPECT_LE(r.argmax[d], d == 0 ? 2.0 : 1.0);
    }
}

TEST(MaximizeBox, NonFiniteObjectiveThrows) {
    auto bad = [](const Point<1>& v) { return 1.0 / (v[0] - 0.5); };
    EXPECT_THROW(maximize_box(bad, uniform_box<1>({0}, {1}, 3)), std::domain_error);
    auto nan_late = [](const Point<2>& v) { return v[0] > 0.9 && v[1] > 0.9 ? std::nan("") : v[0]; };
    auto spec = uniform_box<2>({0, 0}, {1, 1}, 11);
    spec.threads = 3;
    EXPECT_THROW(maximize_box(nan_late, spec), std::domain_error);
}

TEST(MaximizeBox, TiesGoToLexicographicallySmallestPoint) {
    auto flat = [](const Point<2>&) { return 1.0; };
    auto spec = uniform_box<2>({-1, 2}, {1, 3}, 7);
    spec.refinement_iterations = 0;
    const auto r = maximize_box(flat, spec);
    EXPECT_EQ(r.argmax[0], -1);
    EXPECT_EQ(r.argmax[1], 2);
    // Two separated peaks of equal height: the one with smaller first coordinate wins.
    auto twin = [](const Point<1>& v) { return -std::abs(std::abs(v[0]) - 0.5); };
    const auto t = maximize_box(twin, uniform_box<1>({-1}, {1}, 41));
    EXPECT_NEAR(t.argmax[0], -0.5, 1e-9);
}

TEST(MaximizeBox, DeterministicAcrossThreadCounts) {
    auto spec = cuboid(40);
    spec.threads = 1;
    const auto a = maximize_box(m_at, spec);
    for (unsigned w : {2u, 3u, 7u}) {
        spec.threads = w;
        const auto b = maximize_box(m_at, spec);
        EXPECT_EQ(a.argmax, b.argmax);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.evaluations, b.evaluations);
        EXPECT_EQ(a.trace, b.trace);
    }
}

TEST(MaximizeBox, RefinementIsMonotone) {
    for (Face f : {Face::S4, Face::C4, Face::S5, Face::S2}) {
        auto g = [f](const Point<2>& v) { return face_restriction(f, v[0], v[1]); };
        const auto up = face_upper(f);
        const auto r = maximize_box(g, uniform_box<2>({0, 0}, {up[0], up[1]}, 13));
        ASSERT_GE(r.trace.size(), 2u);
        for (std::size_t i = 1; i < r.trace.size(); ++i) EXPECT_GE(r.trace[i], r.trace[i - 1]) << face_name(f);
    }
}

TEST(MaximizeBox, PolishReachesOffGridPeak) {
    auto g = [](const Point<2>& v) { return -(v[0] - 0.3141592653) * (v[0] - 0.3141592653) - (v[1] - 0.2718281828) * (v[1] - 0.2718281828); };
    const auto r = maximize_box(g, uniform_box<2>({0, 0}, {1, 1}, 5, 1e-12));
    EXPECT_NEAR(r.argmax[0], 0.3141592653, 1e-8);
    EXPECT_NEAR(r.argmax[1], 0.2718281828, 1e-8);
}

TEST(MaximizeBox, DensityDoublingIsStable) {
    for (auto* f : {&m_at, &n_at}) {
        const double coarse = maximize_box(*f, cuboid(100)).value;
        const double fine = maximize_box(*f, cuboid(200)).value;
        EXPECT_LT(std::abs(coarse - fine), 1e-9);
    }
}

TEST(FindRoot, Examples) {
    EXPECT_NEAR(find_root_1d([](double p) { return s2_eliminant(p); }, 1, 2, 1e-8), 1.35596, 1e-4);
    EXPECT_NEAR(find_root_1d([](double p) { return r3_prime_scaled(p); }, 1, 2), 1.43461, 1e-4);
    EXPECT_NEAR(find_root_1d([](double p) { return s2_threshold(p); }, 1, 2), 1.68218, 1e-4);
    EXPECT_NEAR(find_root_1d([](double p) { return s2_eliminant(p); }, 1, 2), 1.35596203796655, 1e-9);
    EXPECT_NEAR(find_root_1d([](double p) { return r1_prime(p); }, 1, 2), 1.43669941218862, 1e-9);
}

TEST(FindRoot, Errors) {
    EXPECT_THROW(find_root_1d([](double x) { return x * x + 1; }, -1, 1), std::domain_error);
    EXPECT_THROW(find_root_1d([](double x) { return x; }, 1, -1), std::invalid_argument);
    EXPECT_EQ(find_root_1d([](double x) { return x; }, 0, 1), 0);
}

TEST(FindRoot, BracketWidth) {
    const double root = find_root_1d([](double x) { return x * x - 2; }, 0, 2, 1e-3);
    EXPECT_NEAR(root, std::sqrt(2.0), 1e-3);
}

TEST(Survey, RegionsCoverCuboid) {
    const auto star = survey_cuboid(ClassTag::StarlikeExp, 30);
    EXPECT_EQ(star.size(), 19u);
    double best = 0;
    for (const auto& r : star) best = std::max(best, r.value);
    EXPECT_NEAR(best, 1.0 / 9, 1e-12);
    for (const auto& r : star)
        if (r.region == "p=2") {
            EXPECT_NEAR(r.value, 13.0 / 5184, 1e-15);
        }
    const auto conv = survey_cuboid(ClassTag::ConvexExp, 30);
    best = 0;
    for (const auto& r : conv) best = std::max(best, r.value);
    EXPECT_NEAR(best, 1.0 / 144, 1e-12);
}

TEST(Survey, EdgeValuesMatchPrintedEdgeMaxima) {
    const auto star = survey_cuboid(ClassTag::StarlikeExp, 100);
    for (const auto& r : star) {
        if (r.region == "x=0,y=0") {
            EXPECT_NEAR(r.value, 0.0159535, 5e-8);
        }
        if (r.region == "p=0,y=0") {
            EXPECT_NEAR(r.value, 0.0481125, 5e-8);
        }
        if (r.region == "x=1,y=0") {
            EXPECT_NEAR(r.value, 0.0398426, 5e-8);
        }
    }
}

TEST(SignScan, FaceDerivativesKeepSign) {
    const auto s1 = scan_sign<2>([](const Point<2>& v) { return ds1_dy(v[0], v[1]); }, {0, 0}, {1, 1}, 60);
    EXPECT_EQ(s1.negative + s1.zero, 0u);
    const auto c1 = scan_sign<2>([](const Point<2>& v) { return dc1_dy(v[0], v[1]); }, {0, 0}, {1, 1}, 60);
    EXPECT_EQ(c1.negative + c1.zero, 0u);
    EXPECT_EQ(c1.positive, 3600u);
}

TEST(CriticalConstants, AllReproduce) {
    const auto claims = reproduce_critical_constants();
    EXPECT_GE(claims.size(), 13u);
    for (const auto& c : claims) {
        EXPECT_EQ(c.status, ClaimStatus::Match) << c.id << " paper " << format_value(c.paper_value) << " computed "
                                                << format_value(c.computed_value);
        EXPECT_FALSE(c.paper_anchor.empty());
    }
    bool saw_n = false;
    for (const auto& c : claims)
        if (c.id == "N-X1") {
            saw_n = true;
            EXPECT_EQ(std::get<Rational>(c.computed_value), make_rational(1, 270));
        }
    EXPECT_TRUE(saw_n);
}
