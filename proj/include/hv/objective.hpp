#pragma once

// The majorant surfaces M (starlike) and N (convex) of |H31| over the cuboid
// [0,2] x [0,1] x [0,1] in (p, x, y) = (p1, |gamma|, |eta|), the signed
// decomposition they majorize, and the printed face/edge restrictions and
// derivatives used in the case analysis.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hv/caratheodory.hpp"
#include "hv/classes.hpp"
#include "hv/scalar.hpp"

namespace hv {

template <class R>
struct CuboidPoint {
    R p{0};
    R x{0};
    R y{0};
};

template <class R>
void check_in_cuboid(const CuboidPoint<R>& pt) {
    if (!(pt.p >= R(0) && pt.p <= R(2) && pt.x >= R(0) && pt.x <= R(1) && pt.y >= R(0) && pt.y <= R(1)))
        throw std::out_of_range("point lies outside [0,2] x [0,1] x [0,1]");
}

inline constexpr long long kStarlikeDivisor = 331776;
inline constexpr long long kConvexDivisor = 6635520;

namespace detail {
template <class R>
R k(long long v) {
    return R(v);
}
template <class R>
R pw(const R& v, int n) {
    R out(1);
    for (int i = 0; i < n; ++i) out = out * v;
    return out;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Components m1..m4 and n1..n4 as printed.

template <class R>
std::array<R, 4> m_components(const R& p, const R& x) {
    using detail::k;
    using detail::pw;
    const R q = k<R>(4) - p * p;
    const R omx = k<R>(1) - x * x;
    std::array<R, 4> m;
    m[0] = k<R>(13) * pw(p, 6) + k<R>(36) * x * x * p * p * q * q + k<R>(360) * pw(x, 3) * p * p * q * q +
           k<R>(72) * pw(x, 4) * p * p * q * q + k<R>(78) * x * pw(p, 4) * q + k<R>(120) * pw(p, 4) * x * x * q +
           k<R>(324) * pw(p, 4) * pw(x, 3) * q + k<R>(1296) * x * x * p * p * q;
    m[1] = k<R>(24) * omx * q *
           (k<R>(17) * pw(p, 3) + k<R>(54) * x * pw(p, 3) + k<R>(30) * p * x * q + k<R>(12) * p * x * x * q);
    m[2] = k<R>(144) * omx * q * (k<R>(16) * q + k<R>(2) * x * x * q + k<R>(9) * p * p * x);
    m[3] = k<R>(1296) * omx * q * (k<R>(2) * x * q + p * p);
    return m;
}

template <class R>
std::array<R, 4> n_components(const R& p, const R& x) {
    using detail::k;
    using detail::pw;
    const R q = k<R>(4) - p * p;
    const R omx = k<R>(1) - x * x;
    std::array<R, 4> n;
    n[0] = k<R>(5) * pw(p, 6) + k<R>(180) * x * x * p * p * q * q + k<R>(1536) * pw(x, 3) * q * q +
           k<R>(240) * pw(x, 3) * p * p * q * q + k<R>(144) * pw(x, 4) * p * p * q * q + k<R>(12) * x * pw(p, 4) * q +
           k<R>(120) * pw(p, 4) * x * x * q;
    n[1] = omx * q * (k<R>(240) * pw(p, 3) + k<R>(288) * p * x * q + k<R>(576) * p * x * x * q);
    n[2] = omx * q * (k<R>(2880) * q + k<R>(576) * x * x * q);
    n[3] = k<R>(3456) * x * omx * q * q;
    return n;
}

namespace detail {
template <class R>
R combine(const std::array<R, 4>& c, const R& y, long long divisor) {
    return (c[0] + c[1] * y + c[2] * y * y + c[3] * (R(1) - y * y)) / R(divisor);
}
}  // namespace detail

/// Starlike majorant; throws std::out_of_range outside the cuboid.
template <class R>
R M(const CuboidPoint<R>& pt) {
    check_in_cuboid(pt);
    return detail::combine(m_components(pt.p, pt.x), pt.y, kStarlikeDivisor);
}

/// Convex majorant; throws std::out_of_range outside the cuboid.
template <class R>
R N(const CuboidPoint<R>& pt) {
    check_in_cuboid(pt);
    return detail::combine(n_components(pt.p, pt.x), pt.y, kConvexDivisor);
}

template <class R>
R majorant(ClassTag cls, const CuboidPoint<R>& pt) {
    return cls == ClassTag::StarlikeExp ? M(pt) : N(pt);
}

// ---------------------------------------------------------------------------
// H31 = (b1 + b2 eta + b3 eta^2 + phi rho) / divisor after substituting the
// three-parameter form of p2..p4.

template <class C>
struct SignedDecomposition {
    C b1{0}, b2{0}, b3{0}, phi{0};
    ClassTag cls = ClassTag::StarlikeExp;
};

template <class C>
SignedDecomposition<C> signed_decomposition(ClassTag cls, const SchwarzParams<C>& sp) {
    using detail::k;
    using detail::pw;
    const C p(sp.p1);
    const C& g = sp.gamma;
    const C& e = sp.eta;
    const C q = k<C>(4) - p * p;
    const C omg = C(1) - C(norm_of(g));
    const C ome = C(1) - C(norm_of(e));
    SignedDecomposition<C> d;
    d.cls = cls;
    if (cls == ClassTag::StarlikeExp) {
        d.b1 = -k<C>(13) * pw(p, 6) - k<C>(36) * g * g * p * p * q * q - k<C>(360) * pw(g, 3) * p * p * q * q +
               k<C>(72) * pw(g, 4) * p * p * q * q + k<C>(78) * g * pw(p, 4) * q + k<C>(120) * pw(p, 4) * g * g * q -
               k<C>(324) * pw(p, 4) * pw(g, 3) * q - k<C>(1296) * g * g * p * p * q;
        d.b2 = k<C>(24) * omg * q *
               (k<C>(17) * pw(p, 3) + k<C>(54) * g * pw(p, 3) + k<C>(30) * p * g * q - k<C>(12) * p * g * g * q);
        d.b3 = k<C>(144) * omg * q * (-k<C>(16) * q - k<C>(2) * C(norm_of(g)) * q + k<C>(9) * p * p * conj_of(g));
        d.phi = k<C>(1296) * omg * q * ome * (k<C>(2) * q * g - p * p);
    } else {
        d.b1 = -k<C>(5) * pw(p, 6) - k<C>(180) * g * g * p * p * q * q + k<C>(1536) * pw(g, 3) * q * q -
               k<C>(240) * pw(g, 3) * p * p * q * q + k<C>(144) * pw(g, 4) * p * p * q * q +
               k<C>(12) * g * pw(p, 4) * q - k<C>(120) * pw(p, 4) * g * g * q;
        d.b2 = omg * q * (k<C>(240) * pw(p, 3) - k<C>(288) * p * g * q - k<C>(576) * p * g * g * q);
        d.b3 = omg * q * (-k<C>(2880) * q - k<C>(576) * C(norm_of(g)) * q);
        d.phi = k<C>(3456) * g * omg * q * q * ome;
    }
    return d;
}

template <class C>
C reconstruct_h31(ClassTag cls, const SchwarzParams<C>& sp) {
    const auto d = signed_decomposition(cls, sp);
    const long long div = cls == ClassTag::StarlikeExp ? kStarlikeDivisor : kConvexDivisor;
    return (d.b1 + d.b2 * sp.eta + d.b3 * sp.eta * sp.eta + d.phi * sp.rho) / C(div);
}

// ---------------------------------------------------------------------------
// Face and edge restrictions.

enum class Face { S1, S2, S3, S4, S5, R1, R2, R3, R4, R5, C1, C2, C3, C4, C5, T1, T2, T3, T4, T5 };

inline constexpr std::array<Face, 20> kAllFaces = {Face::S1, Face::S2, Face::S3, Face::S4, Face::S5,
                                                   Face::R1, Face::R2, Face::R3, Face::R4, Face::R5,
                                                   Face::C1, Face::C2, Face::C3, Face::C4, Face::C5,
                                                   Face::T1, Face::T2, Face::T3, Face::T4, Face::T5};

inline std::string face_name(Face f) {
    static const char* names[] = {"s1", "s2", "s3", "s4", "s5", "r1", "r2", "r3", "r4", "r5",
                                  "c1", "c2", "c3", "c4", "c5", "t1", "t2", "t3", "t4", "t5"};
    return names[static_cast<int>(f)];
}

inline Face parse_face(std::string_view s) {
    for (Face f : kAllFaces)
        if (face_name(f) == s) return f;
    throw std::invalid_argument("unknown face id '" + std::string(s) + "'");
}

inline ClassTag face_class(Face f) { return static_cast<int>(f) < 10 ? ClassTag::StarlikeExp : ClassTag::ConvexExp; }

/// Number of free variables: 2 on faces, 1 on edges (s3 and c3 are printed
/// free of y, so they count as one).
inline int face_arity(Face f) {
    switch (f) {
        case Face::S1: case Face::S2: case Face::S4: case Face::S5:
        case Face::C1: case Face::C2: case Face::C4: case Face::C5:
            return 2;
        default:
            return 1;
    }
}

/// Names of the free variables, e.g. "x,y" for s1.
inline std::string face_variables(Face f) {
    switch (f) {
        case Face::S1: case Face::C1: return "x,y";
        case Face::S2: case Face::C2: return "p,y";
        case Face::S4: case Face::S5: case Face::C4: case Face::C5: return "p,x";
        case Face::R4: case Face::R5: case Face::T4: case Face::T5: return "x";
        default: return "p";
    }
}

/// Upper end of the domain of each free variable (lower end is 0).
inline std::array<double, 2> face_upper(Face f) {
    const auto vars = face_variables(f);
    return {vars[0] == 'p' ? 2.0 : 1.0, 1.0};
}

/// The cuboid point a face parametrizes; b is ignored on edges.
template <class R>
CuboidPoint<R> face_point(Face f, const R& a, const R& b = R(0)) {
    switch (f) {
        case Face::S1: case Face::C1: return {R(0), a, b};
        case Face::S2: case Face::C2: return {a, R(0), b};
        case Face::S3: case Face::C3: return {a, R(1), R(0)};
        case Face::S4: case Face::C4: return {a, b, R(0)};
        case Face::S5: case Face::C5: return {a, b, R(1)};
        case Face::R1: case Face::T1: return {a, R(0), R(0)};
        case Face::R2: case Face::T2: return {a, R(0), R(1)};
        case Face::R3: case Face::T3: return {a, R(1), R(1)};
        case Face::R4: case Face::T4: return {R(0), a, R(1)};
        case Face::R5: case Face::T5: return {R(0), a, R(0)};
    }
    throw std::invalid_argument("unknown face");
}

/// The printed closed form on a face (a, b are the free variables in the
/// order given by face_variables). s2 reads its unbalanced parenthesis as
/// closing at the end; c5 is evaluated as printed.
template <class R>
R face_restriction(Face f, const R& a, const R& b = R(0)) {
    using detail::k;
    using detail::pw;
    const R S(kStarlikeDivisor), C(kConvexDivisor);
    switch (f) {
        case Face::S1: {
            const R &x = a, &y = b;
            return (R(1) - x * x) * (k<R>(8) * y * y + x * x * y * y + k<R>(9) * x * (R(1) - y * y)) / k<R>(72);
        }
        case Face::S2: {
            const R &p = a, &y = b;
            const R q = k<R>(4) - p * p;
            return (k<R>(13) * pw(p, 6) +
                    q * (k<R>(408) * pw(p, 3) * y + k<R>(2304) * y * y * q + k<R>(1296) * p * p * (R(1) - y * y))) /
                   S;
        }
        case Face::S3:
        case Face::R3: {
            const R& p = a;
            return (k<R>(12672) * p * p - k<R>(2952) * pw(p, 4) - k<R>(41) * pw(p, 6)) / S;
        }
        case Face::S4: {
            const R &p = a, &x = b;
            return (k<R>(41472) * x * (R(1) - x * x) +
                    k<R>(576) * p * p * (k<R>(9) - k<R>(36) * x + x * x + k<R>(46) * pw(x, 3) + k<R>(2) * pw(x, 4)) -
                    k<R>(24) * pw(p, 4) *
                        (k<R>(54) - k<R>(121) * x - k<R>(8) * x * x + k<R>(174) * pw(x, 3) + k<R>(24) * pw(x, 4)) +
                    pw(p, 6) * (k<R>(13) - k<R>(78) * x - k<R>(84) * x * x + k<R>(36) * pw(x, 3) + k<R>(72) * pw(x, 4))) /
                   S;
        }
        case Face::S5: {
            const R &p = a, &x = b;
            return (k<R>(2304) * p * x * (k<R>(5) + k<R>(2) * x - k<R>(5) * x * x - k<R>(2) * pw(x, 3)) -
                    k<R>(4608) * (k<R>(-8) + k<R>(7) * x * x + pw(x, 4)) +
                    k<R>(576) * p * p * (k<R>(-32) + k<R>(9) * x + k<R>(38) * x * x + pw(x, 3) + k<R>(6) * pw(x, 4)) -
                    k<R>(24) * pw(p, 5) *
                        (k<R>(17) + k<R>(24) * x - k<R>(29) * x * x - k<R>(24) * pw(x, 3) + k<R>(12) * pw(x, 4)) +
                    k<R>(96) * pw(p, 3) *
                        (k<R>(17) - k<R>(6) * x - k<R>(41) * x * x + k<R>(6) * pw(x, 3) + k<R>(24) * pw(x, 4)) -
                    k<R>(24) * pw(p, 4) *
                        (k<R>(-96) + k<R>(41) * x + k<R>(130) * x * x + k<R>(12) * pw(x, 3) + k<R>(36) * pw(x, 4)) +
                    pw(p, 6) * (k<R>(13) - k<R>(78) * x - k<R>(84) * x * x + k<R>(36) * pw(x, 3) + k<R>(72) * pw(x, 4))) /
                   S;
        }
        case Face::R1: {
            const R& p = a;
            return (k<R>(5184) * p * p - k<R>(1296) * pw(p, 4) + k<R>(13) * pw(p, 6)) / S;
        }
        case Face::R2: {
            const R& p = a;
            return (k<R>(36864) - k<R>(18432) * p * p + k<R>(1632) * pw(p, 3) + k<R>(2304) * pw(p, 4) -
                    k<R>(408) * pw(p, 5) + k<R>(13) * pw(p, 6)) /
                   S;
        }
        case Face::R4: {
            const R& x = a;
            return (k<R>(8) - k<R>(7) * x * x - pw(x, 4)) / k<R>(72);
        }
        case Face::R5: {
            const R& x = a;
            return x * (R(1) - x * x) / k<R>(8);
        }
        case Face::C1: {
            const R &x = a, &y = b;
            return (y * y * (k<R>(15) - k<R>(12) * x * x - k<R>(3) * pw(x, 4)) + k<R>(18) * x * (R(1) - y * y) -
                    k<R>(2) * pw(x, 3) * (k<R>(5) - k<R>(9) * y * y)) /
                   k<R>(2160);
        }
        case Face::C2: {
            const R &p = a, &y = b;
            const R s = pw(p, 3) + k<R>(96) * y - k<R>(24) * p * p * y;
            return s * s / k<R>(1327104);
        }
        case Face::C3:
        case Face::T3: {
            const R& p = a;
            return (k<R>(24576) - k<R>(3264) * p * p - k<R>(2448) * pw(p, 4) + k<R>(437) * pw(p, 6)) / C;
        }
        case Face::C4: {
            const R &p = a, &x = b;
            return (k<R>(6144) * x * (k<R>(9) - k<R>(5) * x * x) +
                    k<R>(192) * p * p * x * (k<R>(-144) + k<R>(15) * x + k<R>(100) * x * x + k<R>(12) * pw(x, 3)) -
                    k<R>(48) * pw(p, 4) * x * (k<R>(-73) + k<R>(20) * x + k<R>(80) * x * x + k<R>(24) * pw(x, 3)) +
                    pw(p, 6) *
                        (k<R>(5) - k<R>(12) * x + k<R>(60) * x * x + k<R>(240) * pw(x, 3) + k<R>(144) * pw(x, 4))) /
                   C;
        }
        case Face::C5: {
            const R &p = a, &x = b;
            const R q = k<R>(4) - p * p;
            const R omx = R(1) - x * x;
            return (k<R>(5) * pw(p, 6) +
                    q * (k<R>(12) * pw(p, 4) * x + k<R>(120) * pw(p, 4) * x * x + k<R>(180) * p * p * q * x * x +
                         k<R>(1536) * q * pw(x, 3) + k<R>(240) * p * p * q * pw(x, 3) +
                         k<R>(144) * p * p * q * pw(x, 4) + k<R>(3456) * q * x * omx +
                         k<R>(48) * omx *
                             (pw(p, 3) * (k<R>(5) - k<R>(6) * x - k<R>(12) * x * x) +
                              k<R>(24) * p * x * (R(1) + k<R>(2) * x)))) /
                   C;
        }
        case Face::T1: {
            const R& p = a;
            return pw(p, 6) / k<R>(1327104);
        }
        case Face::T2: {
            const R& p = a;
            const R s = k<R>(96) - k<R>(24) * p * p + pw(p, 3);
            return s * s / k<R>(1327104);
        }
        case Face::T4: {
            const R& x = a;
            return (k<R>(15) - k<R>(12) * x * x + k<R>(8) * pw(x, 3) - k<R>(3) * pw(x, 4)) / k<R>(2160);
        }
        case Face::T5: {
            const R& x = a;
            return x * (k<R>(9) - k<R>(5) * x * x) / k<R>(1080);
        }
    }
    throw std::invalid_argument("unknown face");
}

template <class R>
R face_restriction(ClassTag cls, Face f, const R& a, const R& b = R(0)) {
    if (face_class(f) != cls) throw std::invalid_argument("face " + face_name(f) + " belongs to the other class");
    return face_restriction(f, a, b);
}

/// The majorant itself restricted to a face, for cross-checking the printed
/// closed forms.
template <class R>
R majorant_on_face(Face f, const R& a, const R& b = R(0)) {
    return majorant(face_class(f), face_point(f, a, b));
}

// ---------------------------------------------------------------------------
// Printed derivatives and stationary points.

template <class R>
R dM_dy(const R& p, const R& x, const R& y) {
    using detail::k;
    using detail::pw;
    return (k<R>(4) - p * p) * (R(1) - x * x) / k<R>(13824) *
           (k<R>(24) * p * x * (k<R>(5) + k<R>(2) * x) + pw(p, 3) * (k<R>(17) + k<R>(24) * x - k<R>(12) * x * x) +
            k<R>(96) * (k<R>(8) - k<R>(9) * x + x * x) * y - k<R>(12) * p * p * (k<R>(25) - k<R>(27) * x + k<R>(2) * x * x) * y);
}

template <class R>
R dN_dy(const R& p, const R& x, const R& y) {
    using detail::k;
    using detail::pw;
    return (R(1) - x * x) * (k<R>(4) - p * p) / k<R>(138240) *
           (k<R>(24) * p * x * (R(1) + k<R>(2) * x) - pw(p, 3) * (k<R>(-5) + k<R>(6) * x + k<R>(12) * x * x) +
            k<R>(96) * (k<R>(5) - k<R>(6) * x + x * x) * y - k<R>(24) * p * p * (k<R>(5) - k<R>(6) * x + x * x) * y);
}

template <class R>
R ds1_dy(const R& x, const R& y) {
    return (R(1) - x * x) * (x - R(1)) * (x - R(8)) * y / R(36);
}

template <class R>
R dc1_dy(const R& x, const R& y) {
    return y * (R(1) - x) * (R(1) - x) * (x + R(1)) * (R(5) - x) / R(360);
}

template <class R>
R ds4_dx(const R& p, const R& x) {
    using detail::k;
    using detail::pw;
    return (k<R>(-82944) * x * x + k<R>(41472) * (R(1) - x * x) +
            k<R>(576) * p * p * (k<R>(-36) + k<R>(2) * x + k<R>(138) * x * x + k<R>(8) * pw(x, 3)) -
            k<R>(24) * pw(p, 4) * (k<R>(-121) - k<R>(16) * x + k<R>(522) * x * x + k<R>(96) * pw(x, 3)) +
            pw(p, 6) * (k<R>(-78) - k<R>(168) * x + k<R>(108) * x * x + k<R>(288) * pw(x, 3))) /
           R(kStarlikeDivisor);
}

template <class R>
R ds4_dp(const R& p, const R& x) {
    using detail::k;
    using detail::pw;
    return (k<R>(6) * pw(p, 5) * (k<R>(13) - k<R>(78) * x - k<R>(84) * x * x + k<R>(36) * pw(x, 3) + k<R>(72) * pw(x, 4)) -
            k<R>(96) * pw(p, 3) * (k<R>(54) - k<R>(121) * x - k<R>(8) * x * x + k<R>(174) * pw(x, 3) + k<R>(24) * pw(x, 4)) +
            k<R>(1152) * p * (k<R>(9) - k<R>(36) * x + x * x + k<R>(46) * pw(x, 3) + k<R>(2) * pw(x, 4))) /
           R(kStarlikeDivisor);
}

template <class R>
R dc4_dx(const R& p, const R& x) {
    using detail::k;
    using detail::pw;
    return (k<R>(-61440) * x * x - k<R>(6144) * (k<R>(-9) + k<R>(5) * x * x) +
            k<R>(192) * p * p * x * (k<R>(15) + k<R>(200) * x + k<R>(36) * x * x) -
            k<R>(48) * pw(p, 4) * x * (k<R>(20) + k<R>(160) * x + k<R>(72) * x * x) +
            k<R>(192) * p * p * (k<R>(-144) + k<R>(15) * x + k<R>(100) * x * x + k<R>(12) * pw(x, 3)) -
            k<R>(48) * pw(p, 4) * (k<R>(-73) + k<R>(20) * x + k<R>(80) * x * x + k<R>(24) * pw(x, 3)) +
            pw(p, 6) * (k<R>(-12) + k<R>(120) * x + k<R>(720) * x * x + k<R>(576) * pw(x, 3))) /
           R(kConvexDivisor);
}

template <class R>
R dc4_dp(const R& p, const R& x) {
    using detail::k;
    using detail::pw;
    return (k<R>(384) * p * x * (k<R>(-144) + k<R>(15) * x + k<R>(100) * x * x + k<R>(12) * pw(x, 3)) -
            k<R>(192) * pw(p, 3) * x * (k<R>(-73) + k<R>(20) * x + k<R>(80) * x * x + k<R>(24) * pw(x, 3)) +
            k<R>(6) * pw(p, 5) * (k<R>(5) - k<R>(12) * x + k<R>(60) * x * x + k<R>(240) * pw(x, 3) + k<R>(144) * pw(x, 4))) /
           R(kConvexDivisor);
}

/// Zero of the printed dM/dy (starlike) or dN/dy (convex) in y; empty when
/// the printed denominator vanishes.
template <class R>
std::optional<R> stationary_y(ClassTag cls, const R& p, const R& x) {
    using detail::k;
    using detail::pw;
    if (cls == ClassTag::StarlikeExp) {
        const R den = k<R>(12) * (k<R>(-64) + k<R>(25) * p * p + k<R>(72) * x - k<R>(27) * p * p * x - k<R>(8) * x * x +
                                  k<R>(2) * p * p * x * x);
        if (den == R(0)) return std::nullopt;
        return p * (k<R>(17) * p * p + k<R>(120) * x + k<R>(24) * p * p * x + k<R>(48) * x * x - k<R>(12) * p * p * x * x) /
               den;
    }
    const R q = k<R>(4) - p * p;
    const R den = k<R>(24) * q * (k<R>(6) * x - x * x - k<R>(5));
    if (den == R(0)) return std::nullopt;
    return (k<R>(5) * pw(p, 3) + k<R>(6) * p * x * q * (R(1) + k<R>(2) * x)) / den;
}

/// Where d s2/dy vanishes: 17 p^3 / (12 (25 p^2 - 64)).
template <class R>
std::optional<R> s2_stationary_y(const R& p) {
    const R den = R(12) * (R(25) * p * p - R(64));
    if (den == R(0)) return std::nullopt;
    return R(17) * p * p * p / den;
}

/// Where d c2/dy vanishes: -p^3 / (24 (4 - p^2)).
template <class R>
std::optional<R> c2_stationary_y(const R& p) {
    const R den = R(24) * (R(4) - p * p);
    if (den == R(0)) return std::nullopt;
    return -(p * p * p) / den;
}

/// The printed numerator of d s2/dp.
template <class R>
R s2_dp_numerator(const R& p, const R& y) {
    using detail::k;
    using detail::pw;
    return k<R>(1728) * p - k<R>(864) * pw(p, 3) + k<R>(13) * pw(p, 5) + k<R>(816) * p * p * y -
           k<R>(340) * pw(p, 4) * y - k<R>(7872) * p * y * y + k<R>(2400) * pw(p, 3) * y * y;
}

/// The printed degree-9 polynomial obtained by eliminating y from the s2
/// stationarity system.
template <class R>
R s2_eliminant(const R& p) {
    using detail::k;
    using detail::pw;
    return k<R>(21233664) * p - k<R>(27205632) * pw(p, 3) + k<R>(11472192) * pw(p, 5) - k<R>(1613016) * pw(p, 7) +
           k<R>(2700) * pw(p, 9);
}

/// Proportional to the derivative of r3 (and s3).
template <class R>
R r3_prime_scaled(const R& p) {
    using detail::pw;
    return R(4224) * p - R(1968) * pw(p, 3) - R(41) * pw(p, 5);
}

/// Exact derivative of r1.
template <class R>
R r1_prime(const R& p) {
    using detail::pw;
    return (R(10368) * p - R(5184) * pw(p, 3) + R(78) * pw(p, 5)) / R(kStarlikeDivisor);
}

/// Vanishes where the s2 stationary value y reaches 1.
template <class R>
R s2_threshold(const R& p) {
    return R(17) * p * p * p - R(12) * (R(25) * p * p - R(64));
}

}  // namespace hv
