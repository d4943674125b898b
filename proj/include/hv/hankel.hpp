#pragma once

// Hankel determinants of the coefficient sequence a1 = 1, a2, ..., a7.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hv/classes.hpp"
#include "hv/scalar.hpp"

namespace hv {

struct HankelSpec {
    int q = 1;
    int n = 1;
};

/// det [a_{n+i+j}]_{i,j<q} by fraction-free (Bareiss) elimination with row
/// swaps on a zero pivot. Exact in the rational kernels.
template <class S>
S hankel_det(const CoefficientVector<S>& c, HankelSpec spec) {
    if (spec.q < 1 || spec.n < 1) throw std::invalid_argument("Hankel spec needs q >= 1 and n >= 1");
    const int last = spec.n + 2 * spec.q - 2;
    if (last > 7) throw std::out_of_range("H(" + std::to_string(spec.q) + "," + std::to_string(spec.n) + ") needs a" +
                                          std::to_string(last) + ", only a1..a7 are available");
    const int q = spec.q;
    std::vector<std::vector<S>> m(q, std::vector<S>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) m[i][j] = c(static_cast<std::size_t>(spec.n + i + j));

    S sign(1);
    S prev(1);
    for (int k = 0; k < q - 1; ++k) {
        if (is_zero(m[k][k])) {
            int r = k + 1;
            while (r < q && is_zero(m[r][k])) ++r;
            if (r == q) return S(0);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < q; ++i)
            for (int j = k + 1; j < q; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[q - 1][q - 1];
}

/// 2 a2 a3 a4 - a3^3 - a4^2 - a2^2 a5 + a3 a5.
template <class S>
S h31(const CoefficientVector<S>& c) {
    const S &a2 = c(2), &a3 = c(3), &a4 = c(4), &a5 = c(5);
    return ratio<S>(2) * a2 * a3 * a4 - a3 * a3 * a3 - a4 * a4 - a2 * a2 * a5 + a3 * a5;
}

template <class S>
struct TFunctionals {
    S t1{0};
    S t2{0};
    S t3{0};
};

/// The three auxiliary functionals exactly as printed (the convex class uses
/// the same expressions under the names U1..U3).
template <class S>
TFunctionals<S> t_functionals(const CoefficientVector<S>& c) {
    const S &a2 = c(2), &a3 = c(3), &a4 = c(4), &a5 = c(5), &a6 = c(6);
    TFunctionals<S> t;
    t.t1 = a6 * (a3 - a2 * a2) + a3 * (a2 * a5 - a3 * a4) - a4 * (a5 - a2 * a4);
    t.t2 = a3 * (a3 * a5 - a4 * a4) - a5 * (a5 - a2 * a4) + a6 * (a4 - a2 * a3);
    t.t3 = a4 * (a3 * a5 - a4 * a4) - a5 * (a2 * a5 - a3 * a4) + a6 * (a4 - a2 * a3);
    return t;
}

/// Same as t_functionals except that the third one is the true cofactor,
/// whose a6 factor is a2 a4 - a3^2.
template <class S>
TFunctionals<S> cofactor_functionals(const CoefficientVector<S>& c) {
    auto t = t_functionals(c);
    const S &a2 = c(2), &a3 = c(3), &a4 = c(4), &a5 = c(5), &a6 = c(6);
    t.t3 = a4 * (a3 * a5 - a4 * a4) - a5 * (a2 * a5 - a3 * a4) + a6 * (a2 * a4 - a3 * a3);
    return t;
}

/// a7 H31 - a6 T1 + a5 T2 - a4 T3 with the printed functionals.
template <class S>
S h41_decomposed(const CoefficientVector<S>& c) {
    const auto t = t_functionals(c);
    return c(7) * h31(c) - c(6) * t.t1 + c(5) * t.t2 - c(4) * t.t3;
}

/// The same combination with the cofactor third functional; equals H(4,1).
template <class S>
S h41_cofactor(const CoefficientVector<S>& c) {
    const auto t = cofactor_functionals(c);
    return c(7) * h31(c) - c(6) * t.t1 + c(5) * t.t2 - c(4) * t.t3;
}

/// H(4,1) minus the printed decomposition: -a4 a6 (a2 a3 + a2 a4 - a3^2 - a4).
template <class S>
S h41_decomposition_gap(const CoefficientVector<S>& c) {
    const S &a2 = c(2), &a3 = c(3), &a4 = c(4), &a6 = c(6);
    return -(a4 * a6 * (a2 * a3 + a2 * a4 - a3 * a3 - a4));
}

}  // namespace hv
