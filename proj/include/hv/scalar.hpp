#pragma once

// Scalar rings shared by every module: exact rationals (GMP-backed),
// Gaussian rationals, and the double / std::complex<double> float kernel.

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>

namespace hv {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(num) / Rational(den);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

/// Minimal complex number over an arbitrary ordered field. Used for exact
/// Gaussian-rational arithmetic where std::complex<T> is not an option.
template <class T>
struct Complex {
    T re{};
    T im{};

    Complex() = default;
    Complex(T r) : re(std::move(r)), im(0) {}  // NOLINT: implicit real embedding
    Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}
    template <std::integral I>
    Complex(I v) : re(T(v)), im(0) {}  // NOLINT

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        T r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        T n = o.re * o.re + o.im * o.im;
        if (n == T(0)) throw std::domain_error("complex division by zero");
        T r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = std::move(r);
        return *this;
    }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

    /// |z|^2, exact.
    T norm() const { return re * re + im * im; }
    Complex conj() const { return {re, -im}; }
};

using ComplexRational = Complex<Rational>;
using ComplexDouble = std::complex<double>;

template <class T>
std::ostream& operator<<(std::ostream& os, const Complex<T>& z) {
    os << z.re;
    if (z.im != T(0)) os << (z.im < T(0) ? " - " : " + ") << (z.im < T(0) ? T(-z.im) : z.im) << "i";
    return os;
}

// ---------------------------------------------------------------------------
// scalar_traits: the handful of operations generic code needs beyond + - * /.

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    using real_type = double;
    static constexpr bool exact = false;
    static constexpr bool complex = false;
    static double ratio(long long n, long long d) { return static_cast<double>(n) / static_cast<double>(d); }
    static double from_rational(const Rational& r) { return to_double(r); }
    static double conj(double x) { return x; }
    static double norm(double x) { return x * x; }
    static ComplexDouble to_complex_double(double x) { return {x, 0.0}; }
    static double magnitude(double x) { return std::abs(x); }
    static bool is_zero(double x) { return x == 0.0; }
};

template <>
struct scalar_traits<ComplexDouble> {
    using real_type = double;
    static constexpr bool exact = false;
    static constexpr bool complex = true;
    static ComplexDouble ratio(long long n, long long d) { return {static_cast<double>(n) / static_cast<double>(d), 0.0}; }
    static ComplexDouble from_rational(const Rational& r) { return {to_double(r), 0.0}; }
    static ComplexDouble conj(const ComplexDouble& z) { return std::conj(z); }
    static double norm(const ComplexDouble& z) { return std::norm(z); }
    static ComplexDouble to_complex_double(const ComplexDouble& z) { return z; }
    static double magnitude(const ComplexDouble& z) { return std::abs(z); }
    static bool is_zero(const ComplexDouble& z) { return z == ComplexDouble{}; }
};

template <>
struct scalar_traits<Rational> {
    using real_type = Rational;
    static constexpr bool exact = true;
    static constexpr bool complex = false;
    static Rational ratio(long long n, long long d) { return make_rational(n, d); }
    static Rational from_rational(const Rational& r) { return r; }
    static Rational conj(const Rational& x) { return x; }
    static Rational norm(const Rational& x) { return x * x; }
    static ComplexDouble to_complex_double(const Rational& x) { return {to_double(x), 0.0}; }
    static double magnitude(const Rational& x) { return std::abs(to_double(x)); }
    static bool is_zero(const Rational& x) { return x == 0; }
};

template <>
struct scalar_traits<ComplexRational> {
    using real_type = Rational;
    static constexpr bool exact = true;
    static constexpr bool complex = true;
    static ComplexRational ratio(long long n, long long d) { return {make_rational(n, d)}; }
    static ComplexRational from_rational(const Rational& r) { return {r}; }
    static ComplexRational conj(const ComplexRational& z) { return z.conj(); }
    static Rational norm(const ComplexRational& z) { return z.norm(); }
    static ComplexDouble to_complex_double(const ComplexRational& z) { return {to_double(z.re), to_double(z.im)}; }
    static double magnitude(const ComplexRational& z) { return std::abs(to_complex_double(z)); }
    static bool is_zero(const ComplexRational& z) { return z.re == 0 && z.im == 0; }
};

template <class S>
using real_t = typename scalar_traits<S>::real_type;

template <class S>
inline constexpr bool is_exact_v = scalar_traits<S>::exact;

template <class S>
S ratio(long long n, long long d = 1) { return scalar_traits<S>::ratio(n, d); }

template <class S>
S conj_of(const S& s) { return scalar_traits<S>::conj(s); }

template <class S>
auto norm_of(const S& s) { return scalar_traits<S>::norm(s); }

template <class S>
double magnitude(const S& s) { return scalar_traits<S>::magnitude(s); }

template <class S>
ComplexDouble to_complex_double(const S& s) { return scalar_traits<S>::to_complex_double(s); }

template <class S>
bool is_zero(const S& s) { return scalar_traits<S>::is_zero(s); }

template <class S>
std::string format_scalar(const S& s) {
    std::ostringstream os;
    if constexpr (std::is_same_v<S, double>) {
        os.precision(17);
        os << s;
    } else if constexpr (std::is_same_v<S, ComplexDouble>) {
        os.precision(17);
        os << s.real();
        if (s.imag() != 0.0) os << (s.imag() < 0 ? "-" : "+") << std::abs(s.imag()) << "i";
    } else {
        os << s;
    }
    return os.str();
}

}  // namespace hv
