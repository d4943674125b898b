#pragma once

// Taylor coefficients a2..a7 of the exponential starlike and convex classes,
// derived two ways: by series solving from a Schwarz function, and by the
// closed polynomial formulas in p1..p5 (evaluated as printed).

#include <array>
#include <stdexcept>
#include <string>

#include "hv/caratheodory.hpp"
#include "hv/scalar.hpp"
#include "hv/series.hpp"

namespace hv {

enum class ClassTag { StarlikeExp, ConvexExp };

inline std::string to_string(ClassTag c) { return c == ClassTag::StarlikeExp ? "starlike" : "convex"; }

inline ClassTag parse_class(const std::string& s) {
    if (s == "starlike") return ClassTag::StarlikeExp;
    if (s == "convex") return ClassTag::ConvexExp;
    throw std::invalid_argument("unknown class '" + s + "' (expected starlike or convex)");
}

/// a[0..7] with a0 = 0 and a1 = 1.
template <class S>
struct CoefficientVector {
    std::array<S, 8> a{};
    ClassTag cls = ClassTag::StarlikeExp;

    CoefficientVector() {
        a.fill(S(0));
        a[1] = S(1);
    }
    explicit CoefficientVector(ClassTag c) : CoefficientVector() { cls = c; }

    const S& operator()(std::size_t n) const { return a.at(n); }
    S& operator()(std::size_t n) { return a.at(n); }

    friend bool operator==(const CoefficientVector& x, const CoefficientVector& y) {
        return x.cls == y.cls && x.a == y.a;
    }
};

/// 1 + p1 z + ... + p6 z^6.
template <class C>
TruncatedSeries<C> p_series_from(const PSequence<C>& p, std::size_t order = kCoefficientOrder) {
    TruncatedSeries<C> s(order);
    s[0] = C(1);
    for (std::size_t n = 1; n <= 6 && n <= order; ++n) s[n] = p(n);
    return s;
}

/// w = (p - 1)/(p + 1).
template <class S>
TruncatedSeries<S> schwarz_from_p(const TruncatedSeries<S>& p) {
    if (!is_zero<S>(p[0] - S(1))) throw std::domain_error("p(0) must equal 1");
    const auto one = TruncatedSeries<S>::constant(p.order(), S(1));
    return div(sub(p, one), add(p, one));
}

namespace detail {
/// exp of the integral of (e^w - 1)/t: equals f/z (starlike) or f' (convex).
template <class S>
TruncatedSeries<S> exp_integral(const TruncatedSeries<S>& w) {
    if (!is_zero(w[0])) throw std::domain_error("Schwarz function must vanish at 0");
    if (w.order() < 6) throw std::invalid_argument("need w through degree 6 to reach a7");
    const auto one = TruncatedSeries<S>::constant(w.order(), S(1));
    return exp(integrate_div_t(sub(exp(w), one)));
}

template <class S>
CoefficientVector<S> extract(const TruncatedSeries<S>& f, ClassTag cls) {
    if (!is_zero(f[0]) || !is_zero<S>(f[1] - S(1))) throw std::logic_error("derived function is not normalized");
    CoefficientVector<S> out(cls);
    for (std::size_t n = 2; n <= 7; ++n) out(n) = n <= f.order() ? f[n] : S(0);
    return out;
}
}  // namespace detail

/// f = z exp(int_0^z (e^{w(t)} - 1)/t dt).
template <class S>
CoefficientVector<S> solve_starlike(const TruncatedSeries<S>& w) {
    const auto e = detail::exp_integral(w);
    TruncatedSeries<S> f(e.order() + 1);
    for (std::size_t k = 0; k <= e.order(); ++k) f[k + 1] = e[k];
    return detail::extract(f, ClassTag::StarlikeExp);
}

/// f = int_0^z exp(int_0^y (e^{w(t)} - 1)/t dt) dy.
template <class S>
CoefficientVector<S> solve_convex(const TruncatedSeries<S>& w) {
    const auto e = detail::exp_integral(w);
    return detail::extract(integrate(e, e.order() + 1), ClassTag::ConvexExp);
}

template <class S>
CoefficientVector<S> solve(ClassTag cls, const TruncatedSeries<S>& w) {
    return cls == ClassTag::StarlikeExp ? solve_starlike(w) : solve_convex(w);
}

/// Series-derived coefficients for a moment sequence.
template <class C>
CoefficientVector<C> series_coeffs(ClassTag cls, const PSequence<C>& p) {
    return solve(cls, schwarz_from_p(p_series_from(p)));
}

/// The closed formulas for a2..a7 as printed; p6 is not referenced.
template <class S>
CoefficientVector<S> closed_coeffs(ClassTag cls, const PSequence<S>& p) {
    const S& p1 = p(1);
    const S& p2 = p(2);
    const S& p3 = p(3);
    const S& p4 = p(4);
    const S& p5 = p(5);
    auto k = [](long long v) { return ratio<S>(v); };
    const bool star = cls == ClassTag::StarlikeExp;

    CoefficientVector<S> out(cls);
    out(2) = p1 * ratio<S>(1, star ? 2 : 4);
    out(3) = (k(4) * p2 + p1 * p1) * ratio<S>(1, star ? 16 : 48);
    out(4) = (-(p1 * p1 * p1) + k(12) * p1 * p2 + k(48) * p3) * ratio<S>(1, star ? 288 : 1152);
    out(5) = (p1 * p1 * p1 * p1 - k(12) * p1 * p1 * p2 + k(24) * p1 * p3 + k(144) * p4) *
             ratio<S>(1, star ? 1152 : 5760);
    out(6) = (k(-17) * p1 * p1 * p1 * p1 * p1 + k(220) * p1 * p1 * p1 * p2 - k(480) * p1 * p2 * p2 -
              k(480) * p1 * p1 * p3 - k(480) * p2 * p3 + k(720) * p1 * p4 + k(5760) * p5) *
             ratio<S>(1, star ? 57600 : 345600);
    const S p1_2 = p1 * p1;
    out(7) = (k(881) * p1_2 * p1_2 * p1_2 - k(13260) * p1_2 * p1_2 * p2 + k(48240) * p1_2 * p2 * p2 -
              k(14400) * p2 * p2 * p2 + k(29040) * p1_2 * p1 * p3 - k(106560) * p1 * p2 * p3 -
              k(57600) * p3 * p3 - k(56160) * p1_2 * p4 - k(86400) * p2 * p4 + k(69120) * p1 * p5) *
             ratio<S>(1, star ? 8294400 : 58060800);
    return out;
}

template <class C>
CoefficientVector<C> coeffs_from_params(ClassTag cls, const SchwarzParams<C>& sp, const C& p5 = C(0)) {
    return closed_coeffs(cls, sequence_from_params(sp, p5));
}

enum class Extremal { F1, F2 };

/// Coefficients generated by w(z) = z^3: F1 in the starlike class, F2 in the
/// convex class.
inline CoefficientVector<Rational> extremal(Extremal which) {
    const auto w = TruncatedSeries<Rational>::monomial(kCoefficientOrder, 3);
    return which == Extremal::F1 ? solve_starlike(w) : solve_convex(w);
}

}  // namespace hv
