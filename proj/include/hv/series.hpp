#pragma once

// Truncated formal power series c0 + c1 z + ... + c_N z^N over a scalar ring.
// Every operation works modulo z^(N+1).

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hv/scalar.hpp"

namespace hv {

/// Order used for coefficient derivation: a7 needs degree 7 of f and
/// degree 6 of w and p.
inline constexpr std::size_t kCoefficientOrder = 8;

/// Upper cap on the order produced by integrate().
inline constexpr std::size_t kMaxSeriesOrder = 32;

template <class S>
class TruncatedSeries {
public:
    using scalar_type = S;

    explicit TruncatedSeries(std::size_t order = kCoefficientOrder) : c_(order + 1, S(0)) {}

    TruncatedSeries(std::size_t order, std::initializer_list<S> leading) : c_(order + 1, S(0)) {
        if (leading.size() > c_.size()) throw std::invalid_argument("more coefficients than the truncation order allows");
        std::size_t k = 0;
        for (const S& v : leading) c_[k++] = v;
    }

    /// Takes the coefficients as given; order is size-1.
    static TruncatedSeries from_coeffs(std::vector<S> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("series needs at least a constant term");
        TruncatedSeries s(coeffs.size() - 1);
        s.c_ = std::move(coeffs);
        return s;
    }

    static TruncatedSeries constant(std::size_t order, const S& v) {
        TruncatedSeries s(order);
        s.c_[0] = v;
        return s;
    }

    /// coef * z^k, or zero if k exceeds the order.
    static TruncatedSeries monomial(std::size_t order, std::size_t k, const S& coef = S(1)) {
        TruncatedSeries s(order);
        if (k <= order) s.c_[k] = coef;
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const S& operator[](std::size_t k) const { return c_.at(k); }
    S& operator[](std::size_t k) { return c_.at(k); }
    const std::vector<S>& coeffs() const { return c_; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    std::vector<S> c_;
};

namespace detail {
template <class S>
void require_same_order(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()));
}

template <class S>
bool is_one(const S& v) {
    return is_zero<S>(v - S(1));
}
}  // namespace detail

template <class S>
TruncatedSeries<S> add(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
    detail::require_same_order(a, b);
    TruncatedSeries<S> out(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) out[k] = a[k] + b[k];
    return out;
}

template <class S>
TruncatedSeries<S> sub(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
    detail::require_same_order(a, b);
    TruncatedSeries<S> out(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) out[k] = a[k] - b[k];
    return out;
}

template <class S>
TruncatedSeries<S> scale(const TruncatedSeries<S>& a, const S& factor) {
    TruncatedSeries<S> out(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) out[k] = a[k] * factor;
    return out;
}

/// Cauchy product.
template <class S>
TruncatedSeries<S> mul(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
    detail::require_same_order(a, b);
    const std::size_t n = a.order();
    TruncatedSeries<S> out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; i + j <= n; ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

/// q with q*b = a; q_k = (a_k - sum_{i=1..k} b_i q_{k-i}) / b_0.
template <class S>
TruncatedSeries<S> div(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
    detail::require_same_order(a, b);
    if (is_zero(b[0])) throw std::domain_error("series division by a divisor with zero constant term");
    const std::size_t n = a.order();
    TruncatedSeries<S> q(n);
    for (std::size_t k = 0; k <= n; ++k) {
        S acc = a[k];
        for (std::size_t i = 1; i <= k; ++i) acc = acc - b[i] * q[k - i];
        q[k] = acc / b[0];
    }
    return q;
}

/// exp(a) for a(0) = 0, via y' = a'y: y_k = (1/k) sum_{j=1..k} j a_j y_{k-j}.
template <class S>
TruncatedSeries<S> exp(const TruncatedSeries<S>& a) {
    if (!is_zero(a[0])) throw std::domain_error("series exp needs a zero constant term");
    const std::size_t n = a.order();
    TruncatedSeries<S> y(n);
    y[0] = S(1);
    for (std::size_t k = 1; k <= n; ++k) {
        S acc(0);
        for (std::size_t j = 1; j <= k; ++j) acc = acc + ratio<S>(static_cast<long long>(j)) * a[j] * y[k - j];
        y[k] = acc * ratio<S>(1, static_cast<long long>(k));
    }
    return y;
}

/// log(a) for a(0) = 1: L_k = a_k - (1/k) sum_{j=1..k-1} j L_j a_{k-j}.
template <class S>
TruncatedSeries<S> log(const TruncatedSeries<S>& a) {
    if (!detail::is_one(a[0])) throw std::domain_error("series log needs constant term 1");
    const std::size_t n = a.order();
    TruncatedSeries<S> out(n);
    for (std::size_t k = 1; k <= n; ++k) {
        S acc(0);
        for (std::size_t j = 1; j < k; ++j) acc = acc + ratio<S>(static_cast<long long>(j)) * out[j] * a[k - j];
        out[k] = a[k] - acc * ratio<S>(1, static_cast<long long>(k));
    }
    return out;
}

/// Term-wise integral of a(t)/t from 0 to z: a_k -> a_k / k.
template <class S>
TruncatedSeries<S> integrate_div_t(const TruncatedSeries<S>& a) {
    if (!is_zero(a[0])) throw std::domain_error("integrand a(t)/t has a pole at 0");
    TruncatedSeries<S> out(a.order());
    for (std::size_t k = 1; k <= a.order(); ++k) out[k] = a[k] * ratio<S>(1, static_cast<long long>(k));
    return out;
}

/// Derivative; the order drops by one (a constant stays a zero constant).
template <class S>
TruncatedSeries<S> derive(const TruncatedSeries<S>& a) {
    const std::size_t n = a.order() == 0 ? 0 : a.order() - 1;
    TruncatedSeries<S> out(n);
    for (std::size_t k = 1; k <= a.order(); ++k) out[k - 1] = ratio<S>(static_cast<long long>(k)) * a[k];
    return out;
}

/// Antiderivative with zero constant; the order rises by one up to max_order.
template <class S>
TruncatedSeries<S> integrate(const TruncatedSeries<S>& a, std::size_t max_order = kMaxSeriesOrder) {
    const std::size_t n = std::min(a.order() + 1, std::max(max_order, a.order()));
    TruncatedSeries<S> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k + 1] = a[k] * ratio<S>(1, static_cast<long long>(k + 1));
    return out;
}

/// z * a, keeping the order.
template <class S>
TruncatedSeries<S> shift_up(const TruncatedSeries<S>& a) {
    TruncatedSeries<S> out(a.order());
    for (std::size_t k = 1; k <= a.order(); ++k) out[k] = a[k - 1];
    return out;
}

template <class S>
TruncatedSeries<S> operator+(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) { return add(a, b); }
template <class S>
TruncatedSeries<S> operator-(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) { return sub(a, b); }
template <class S>
TruncatedSeries<S> operator*(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) { return mul(a, b); }
template <class S>
TruncatedSeries<S> operator/(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) { return div(a, b); }

template <class S>
std::ostream& operator<<(std::ostream& os, const TruncatedSeries<S>& s) {
    os << "[";
    for (std::size_t k = 0; k <= s.order(); ++k) os << (k ? ", " : "") << format_scalar(s[k]);
    return os << "]";
}

}  // namespace hv
