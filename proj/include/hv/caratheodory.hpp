#pragma once

// Functions with positive real part: the three-parameter description of
// p2..p4 in terms of p1 and three points of the closed disk, moment
// sequences sampled from mixtures of half-plane kernels, and the
// coefficient inequalities used by the bound tables.

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hv/scalar.hpp"

namespace hv {

template <class C>
struct SchwarzParams {
    real_t<C> p1{};
    C gamma{};
    C eta{};
    C rho{};
};

namespace detail {
template <class R>
bool within_unit(const R& norm_value, double slack) {
    if constexpr (std::is_same_v<R, double>)
        return norm_value <= 1.0 + slack;
    else
        return norm_value <= 1;
}
}  // namespace detail

/// Throws std::invalid_argument unless 0 <= p1 <= 2 and every disk point
/// has modulus at most 1 (exactly for rationals, within 1e-12 for floats).
template <class C>
void validate(const SchwarzParams<C>& sp) {
    using R = real_t<C>;
    if (sp.p1 < R(0) || sp.p1 > R(2)) throw std::invalid_argument("p1 must lie in [0,2]");
    const char* names[] = {"gamma", "eta", "rho"};
    const C* vals[] = {&sp.gamma, &sp.eta, &sp.rho};
    for (int i = 0; i < 3; ++i)
        if (!detail::within_unit(norm_of(*vals[i]), 1e-12))
            throw std::invalid_argument(std::string(names[i]) + " lies outside the closed unit disk");
}

template <class C>
C p2_from(const SchwarzParams<C>& sp) {
    const C p(sp.p1);
    const C q = C(4) - p * p;
    return (p * p + sp.gamma * q) / C(2);
}

template <class C>
C p3_from(const SchwarzParams<C>& sp) {
    const C p(sp.p1);
    const C q = C(4) - p * p;
    const C& g = sp.gamma;
    const C one_minus_g2 = C(1) - C(norm_of(g));
    return (p * p * p + C(2) * p * q * g - p * q * g * g + C(2) * q * one_minus_g2 * sp.eta) / C(4);
}

template <class C>
C p4_from(const SchwarzParams<C>& sp) {
    const C p(sp.p1);
    const C q = C(4) - p * p;
    const C& g = sp.gamma;
    const C& e = sp.eta;
    const C one_minus_g2 = C(1) - C(norm_of(g));
    const C one_minus_e2 = C(1) - C(norm_of(e));
    const C lead = p * p * p * p + q * g * (p * p * (g * g - C(3) * g + C(3)) + C(4) * g);
    const C tail = C(4) * q * one_minus_g2 * (p * (g - C(1)) * e + conj_of(g) * e * e - one_minus_e2 * sp.rho);
    return (lead - tail) / C(8);
}

/// Moments p1..p6 (1-based access through operator()).
template <class C>
struct PSequence {
    std::array<C, 6> p{};

    PSequence() = default;
    explicit PSequence(const std::array<C, 6>& v) : p(v) {}

    const C& operator()(std::size_t n) const { return p.at(n - 1); }
    C& operator()(std::size_t n) { return p.at(n - 1); }

    /// First n with |p_n| > 2 (+1e-12 for floats), or 0 if none.
    std::size_t first_violation() const {
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto nv = norm_of(p[n - 1]);
            if constexpr (std::is_same_v<decltype(nv), const double>) {
                if (nv > 4.0 + 1e-12) return n;
            } else if (nv > 4) {
                return n;
            }
        }
        return 0;
    }
};

/// Sequence built from Schwarz-type parameters; p5 is an explicit extra input
/// and p6 is left at zero.
template <class C>
PSequence<C> sequence_from_params(const SchwarzParams<C>& sp, const C& p5 = C(0)) {
    PSequence<C> s;
    s(1) = C(sp.p1);
    s(2) = p2_from(sp);
    s(3) = p3_from(sp);
    s(4) = p4_from(sp);
    s(5) = p5;
    return s;
}

// ---------------------------------------------------------------------------
// Mixtures of half-plane kernels (1 + u z)/(1 - u z), |u| = 1. The moments
// of sum_j w_j (1 + u_j z)/(1 - u_j z) are p_n = 2 sum_j w_j u_j^n.

struct MoebiusMixture {
    std::vector<double> weights;
    std::vector<double> angles;
};

inline void validate(const MoebiusMixture& m) {
    if (m.weights.empty() || m.weights.size() != m.angles.size())
        throw std::invalid_argument("mixture needs equally many weights and angles, at least one");
    double total = 0.0;
    for (double w : m.weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("mixture weights must be non-negative");
        total += w;
    }
    for (double a : m.angles)
        if (!std::isfinite(a)) throw std::invalid_argument("mixture angles must be finite");
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("mixture weights must sum to 1");
}

inline PSequence<ComplexDouble> sample_mixture(const MoebiusMixture& m, std::size_t n_max = 6) {
    validate(m);
    if (n_max > 6) throw std::invalid_argument("moments are tracked up to p6");
    PSequence<ComplexDouble> s;
    for (std::size_t n = 1; n <= n_max; ++n) {
        ComplexDouble acc{};
        for (std::size_t j = 0; j < m.weights.size(); ++j)
            acc += m.weights[j] * std::polar(1.0, static_cast<double>(n) * m.angles[j]);
        s(n) = 2.0 * acc;
    }
    return s;
}

/// Exact counterpart: atoms are rational points of the unit circle.
struct RationalMixture {
    std::vector<Rational> weights;
    std::vector<ComplexRational> atoms;
};

/// ((1 - t^2) + 2 t i) / (1 + t^2), a rational point on the unit circle.
inline ComplexRational unit_circle_point(const Rational& t) {
    const Rational d = 1 + t * t;
    return {(1 - t * t) / d, 2 * t / d};
}

inline void validate(const RationalMixture& m) {
    if (m.weights.empty() || m.weights.size() != m.atoms.size())
        throw std::invalid_argument("mixture needs equally many weights and atoms, at least one");
    Rational total = 0;
    for (const auto& w : m.weights) {
        if (w < 0) throw std::invalid_argument("mixture weights must be non-negative");
        total += w;
    }
    if (total != 1) throw std::invalid_argument("mixture weights must sum to 1");
    for (const auto& u : m.atoms)
        if (u.norm() != 1) throw std::invalid_argument("mixture atoms must lie on the unit circle");
}

inline PSequence<ComplexRational> sample_mixture(const RationalMixture& m, std::size_t n_max = 6) {
    validate(m);
    if (n_max > 6) throw std::invalid_argument("moments are tracked up to p6");
    PSequence<ComplexRational> s;
    std::vector<ComplexRational> power(m.atoms.size(), ComplexRational(1));
    for (std::size_t n = 1; n <= n_max; ++n) {
        ComplexRational acc(0);
        for (std::size_t j = 0; j < m.atoms.size(); ++j) {
            power[j] *= m.atoms[j];
            acc += ComplexRational(m.weights[j]) * power[j];
        }
        s(n) = ComplexRational(2) * acc;
    }
    return s;
}

/// p(z) = (1+z)/(1-z): every moment equals 2.
inline MoebiusMixture half_plane_mixture() { return {{1.0}, {0.0}}; }

/// Three equal atoms at the cube roots of unity; realizes w(z) = z^3.
inline MoebiusMixture cube_root_mixture() {
    const double third = 1.0 / 3.0;
    return {{third, third, 1.0 - 2.0 * third}, {0.0, 2.0 * std::numbers::pi / 3.0, 4.0 * std::numbers::pi / 3.0}};
}

/// The exact moments of the cube-root mixture, (0, 0, 2, 0, 0, 2).
inline PSequence<ComplexRational> cube_root_sequence() {
    PSequence<ComplexRational> s;
    s(3) = ComplexRational(2);
    s(6) = ComplexRational(2);
    return s;
}

inline PSequence<ComplexRational> all_two_sequence() {
    PSequence<ComplexRational> s;
    for (std::size_t n = 1; n <= 6; ++n) s(n) = ComplexRational(2);
    return s;
}

/// Between 1 and max_atoms atoms; weights are normalized exponentials and
/// angles are uniform on [0, 2pi).
inline MoebiusMixture random_mixture(std::mt19937_64& rng, std::size_t max_atoms = 5) {
    std::uniform_int_distribution<std::size_t> count(1, max_atoms);
    std::exponential_distribution<double> expo(1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const std::size_t m = count(rng);
    MoebiusMixture out;
    double total = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        out.weights.push_back(expo(rng));
        out.angles.push_back(angle(rng));
        total += out.weights.back();
    }
    for (double& w : out.weights) w /= total;
    return out;
}

/// Exact mixture with small-denominator weights and circle points.
inline RationalMixture random_rational_mixture(std::mt19937_64& rng, std::size_t max_atoms = 5) {
    std::uniform_int_distribution<std::size_t> count(1, max_atoms);
    std::uniform_int_distribution<long long> weight(1, 9);
    std::uniform_int_distribution<long long> num(-12, 12);
    std::uniform_int_distribution<long long> den(1, 7);
    const std::size_t m = count(rng);
    RationalMixture out;
    Rational total = 0;
    for (std::size_t j = 0; j < m; ++j) {
        out.weights.emplace_back(weight(rng));
        total += out.weights.back();
        out.atoms.push_back(unit_circle_point(make_rational(num(rng), den(rng))));
    }
    for (auto& w : out.weights) w /= total;
    return out;
}

/// Uniform point of the closed unit disk.
inline ComplexDouble random_disk_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    return std::polar(std::sqrt(u(rng)), angle(rng));
}

inline SchwarzParams<ComplexDouble> random_schwarz_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> p1(0.0, 2.0);
    SchwarzParams<ComplexDouble> sp;
    sp.p1 = p1(rng);
    sp.gamma = random_disk_point(rng);
    sp.eta = random_disk_point(rng);
    sp.rho = random_disk_point(rng);
    return sp;
}

/// Rational radius times a rational circle point; hits the boundary and the
/// centre with positive probability.
inline ComplexRational random_rational_disk_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> rnum(0, 8);
    std::uniform_int_distribution<long long> tnum(-9, 9);
    std::uniform_int_distribution<long long> tden(1, 5);
    const Rational r = make_rational(rnum(rng), 8);
    return ComplexRational(r) * unit_circle_point(make_rational(tnum(rng), tden(rng)));
}

inline SchwarzParams<ComplexRational> random_rational_schwarz_params(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> pnum(0, 16);
    SchwarzParams<ComplexRational> sp;
    sp.p1 = make_rational(pnum(rng), 8);
    sp.gamma = random_rational_disk_point(rng);
    sp.eta = random_rational_disk_point(rng);
    sp.rho = random_rational_disk_point(rng);
    return sp;
}

// ---------------------------------------------------------------------------
// Coefficient inequalities: |p_n| <= 2, |p_{n+k} - nu p_n p_k| and
// |p1^3 - nu p3|.

inline double bound_pn() { return 2.0; }

inline double bound_mixed(double nu) { return (nu >= 0.0 && nu <= 1.0) ? 2.0 : 2.0 * std::abs(2.0 * nu - 1.0); }

inline double bound_cube(double nu) {
    if (nu <= 4.0 / 3.0) return 2.0 * std::abs(nu - 4.0);
    return 2.0 * nu * std::sqrt(nu / (nu - 1.0));
}

/// coef * sqrt(radicand), radicand > 0 kept with square factors pulled out.
struct RadicalValue {
    Rational coef{0};
    Rational radicand{1};

    double to_double() const { return hv::to_double(coef) * std::sqrt(hv::to_double(radicand)); }
    bool is_rational() const { return radicand == 1 || coef == 0; }
    /// Signed square, coef^2 * radicand with the sign of coef.
    Rational signed_square() const { return (coef < 0 ? -1 : 1) * coef * coef * radicand; }

    std::string str() const {
        if (is_rational()) return coef.str();
        return coef.str() + "*sqrt(" + radicand.str() + ")";
    }

    friend bool operator==(const RadicalValue& a, const RadicalValue& b) {
        return a.signed_square() == b.signed_square();
    }
    friend bool operator!=(const RadicalValue& a, const RadicalValue& b) { return !(a == b); }
};

namespace detail {
/// Splits n = s^2 * r with r square-free; returns s and replaces n by r.
inline Integer extract_square(Integer& n) {
    Integer s = 1;
    for (Integer d = 2; d * d <= n; ++d) {
        const Integer d2 = d * d;
        while (n % d2 == 0) {
            n /= d2;
            s *= d;
        }
    }
    return s;
}
}  // namespace detail

inline RadicalValue make_radical(const Rational& coef, const Rational& radicand) {
    if (radicand < 0) throw std::domain_error("negative radicand");
    if (radicand == 0 || coef == 0) return {0, 1};
    Integer n = boost::multiprecision::numerator(radicand);
    Integer d = boost::multiprecision::denominator(radicand);
    const Integer sn = detail::extract_square(n);
    const Integer sd = detail::extract_square(d);
    return {coef * Rational(sn) / Rational(sd), Rational(n) / Rational(d)};
}

inline Rational bound_mixed_exact(const Rational& nu) {
    if (nu >= 0 && nu <= 1) return 2;
    const Rational t = 2 * nu - 1;
    return 2 * (t < 0 ? Rational(-t) : t);
}

inline RadicalValue bound_cube_exact(const Rational& nu) {
    if (nu <= make_rational(4, 3)) {
        const Rational t = nu - 4;
        return {2 * (t < 0 ? Rational(-t) : t), 1};
    }
    return make_radical(2 * nu, nu / (nu - 1));
}

}  // namespace hv
