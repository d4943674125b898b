#pragma once

// Sparse polynomial in the moment variables p1..p6 with rational
// coefficients. Doubles as a scalar ring so the same generic formulas
// (closed-form coefficients, Hankel functionals, series oracle) can be
// run symbolically and compared term by term.

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hv/scalar.hpp"

namespace hv {

class Polynomial {
public:
    static constexpr std::size_t kVars = 6;
    using Exponents = std::array<std::uint8_t, kVars>;
    using Terms = std::map<Exponents, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& c) { add_term(Exponents{}, c); }  // NOLINT
    Polynomial(long long c) : Polynomial(Rational(c)) {}          // NOLINT
    Polynomial(int c) : Polynomial(Rational(c)) {}                // NOLINT

    /// The variable p_index (1-based).
    static Polynomial variable(std::size_t index) {
        if (index < 1 || index > kVars) throw std::out_of_range("polynomial variable index");
        Exponents e{};
        e[index - 1] = 1;
        Polynomial out;
        out.add_term(e, Rational(1));
        return out;
    }

    static Polynomial monomial(const Rational& c, const Exponents& e) {
        Polynomial out;
        out.add_term(e, c);
        return out;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{}); }
    Rational constant_term() const {
        auto it = terms_.find(Exponents{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Coefficient of the monomial with exponents e.
    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Highest total degree in any single variable index.
    int degree_in(std::size_t index) const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max<int>(d, e[index - 1]);
        return d;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator/=(const Polynomial& o) {
        if (!o.is_constant() || o.is_zero()) throw std::domain_error("polynomial division only by a nonzero constant");
        const Rational inv = Rational(1) / o.constant_term();
        for (auto& [e, c] : terms_) c *= inv;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator/(Polynomial a, const Polynomial& b) { return a /= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e{};
                for (std::size_t i = 0; i < kVars; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
                out.add_term(e, ca * cb);
            }
        return out;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Evaluate at (p1..p6) in any scalar ring that embeds the rationals.
    template <class S>
    S evaluate(const std::array<S, kVars>& p) const {
        S acc(0);
        for (const auto& [e, c] : terms_) {
            S term = scalar_traits<S>::from_rational(c);
            for (std::size_t i = 0; i < kVars; ++i)
                for (int k = 0; k < e[i]; ++k) term = term * p[i];
            acc = acc + term;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational mag = c < 0 ? Rational(-c) : c;
            os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            bool has_var = e != Exponents{};
            if (!has_var || mag != 1) os << mag;
            bool need_sep = !has_var || mag != 1;
            for (std::size_t i = 0; i < kVars; ++i) {
                if (e[i] == 0) continue;
                os << (need_sep ? " " : "") << "p" << (i + 1);
                if (e[i] > 1) os << "^" << int(e[i]);
                need_sep = true;
            }
            first = false;
        }
        return os.str();
    }

private:
    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

template <>
struct scalar_traits<Polynomial> {
    using real_type = Polynomial;
    static constexpr bool exact = true;
    static constexpr bool complex = false;
    static Polynomial ratio(long long n, long long d) { return Polynomial(make_rational(n, d)); }
    static Polynomial from_rational(const Rational& r) { return Polynomial(r); }
    static Polynomial conj(const Polynomial& x) { return x; }
    static bool is_zero(const Polynomial& x) { return x.is_zero(); }
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

/// The symbolic moment sequence (p1, ..., p6).
inline std::array<Polynomial, Polynomial::kVars> moment_symbols() {
    std::array<Polynomial, Polynomial::kVars> out;
    for (std::size_t i = 0; i < Polynomial::kVars; ++i) out[i] = Polynomial::variable(i + 1);
    return out;
}

}  // namespace hv
