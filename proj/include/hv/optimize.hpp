#pragma once

// Grid scan plus golden-section polish on small boxes, bisection for roots,
// and the cuboid survey that mirrors the face/edge case split.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hv/claim.hpp"
#include "hv/objective.hpp"

namespace hv {

template <std::size_t D>
using Point = std::array<double, D>;

template <std::size_t D>
struct BoxSpec {
    Point<D> lower{};
    Point<D> upper{};
    std::array<int, D> density{};
    int refinement_iterations = 200;
    double tolerance = 1e-10;
    unsigned threads = 0;  // 0: hardware concurrency
};

template <std::size_t D>
void validate(const BoxSpec<D>& spec) {
    static_assert(D >= 1 && D <= 3, "boxes have 1 to 3 dimensions");
    for (std::size_t d = 0; d < D; ++d) {
        if (!(spec.lower[d] < spec.upper[d])) throw std::invalid_argument("box needs lower < upper in every dimension");
        if (spec.density[d] < 2) throw std::invalid_argument("grid density must be at least 2");
    }
    if (!(spec.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
    if (spec.refinement_iterations < 0) throw std::invalid_argument("refinement iterations must be non-negative");
}

template <std::size_t D>
BoxSpec<D> uniform_box(Point<D> lower, Point<D> upper, int density, double tol = 1e-10) {
    BoxSpec<D> s;
    s.lower = lower;
    s.upper = upper;
    s.density.fill(density);
    s.tolerance = tol;
    return s;
}

template <std::size_t D>
struct OptResult {
    Point<D> argmax{};
    double value = -std::numeric_limits<double>::infinity();
    std::size_t evaluations = 0;
    std::vector<double> trace;  // incumbent after the grid scan and after each polish sweep
    std::size_t trace_length() const { return trace.size(); }
};

namespace detail {

template <class F, std::size_t D>
double checked_eval(const F& f, const Point<D>& x) {
    const double v = f(x);
    if (!std::isfinite(v)) throw std::domain_error("objective is not finite inside the box");
    return v;
}

template <std::size_t D>
double grid_coord(const BoxSpec<D>& s, std::size_t d, long long i) {
    if (i == s.density[d] - 1) return s.upper[d];
    return s.lower[d] + (s.upper[d] - s.lower[d]) * static_cast<double>(i) / (s.density[d] - 1);
}

template <std::size_t D>
Point<D> grid_point(const BoxSpec<D>& s, long long flat) {
    Point<D> x{};
    for (std::size_t d = D; d-- > 0;) {
        x[d] = grid_coord(s, d, flat % s.density[d]);
        flat /= s.density[d];
    }
    return x;
}

// Golden-section maximization of g on [a, b]; endpoints are candidates too.
template <class G>
std::pair<double, double> golden_max(const G& g, double a, double b, double tol, std::size_t& evals) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double best_x = a, best_v = g(a);
    const double vb = g(b);
    evals += 2;
    if (vb > best_v) best_x = b, best_v = vb;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = g(c), fd = g(d);
    evals += 2;
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = g(d);
        }
        ++evals;
    }
    for (auto [x, v] : {std::pair{c, fc}, std::pair{d, fd}})
        if (v > best_v) best_x = x, best_v = v;
    return {best_x, best_v};
}

}  // namespace detail

/// Deterministic for a fixed spec: the grid maximum is reduced exactly, and
/// among grid points within 1e-15 of it the lexicographically smallest seeds
/// the polish.
template <std::size_t D, class F>
OptResult<D> maximize_box(const F& f, const BoxSpec<D>& spec) {
    validate(spec);
    long long total = 1;
    for (int n : spec.density) total *= n;

    std::vector<double> values(static_cast<std::size_t>(total));
    const long long slab = spec.density[0];
    const long long per_slab = total / slab;
    unsigned workers = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<long long>(workers, slab));

    std::vector<std::exception_ptr> errors(workers);
    auto scan = [&](unsigned w) {
        try {
            for (long long s = w; s < slab; s += workers)
                for (long long j = 0; j < per_slab; ++j) {
                    const long long flat = s * per_slab + j;
                    values[static_cast<std::size_t>(flat)] = detail::checked_eval(f, detail::grid_point(spec, flat));
                }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    const double grid_max = *std::max_element(values.begin(), values.end());
    // Flat index order is lexicographic order of grid points.
    const auto seed = std::find_if(values.begin(), values.end(), [&](double v) { return v >= grid_max - 1e-15; });

    OptResult<D> r;
    r.evaluations = static_cast<std::size_t>(total);
    r.argmax = detail::grid_point(spec, seed - values.begin());
    r.value = *seed;
    r.trace.push_back(r.value);

    Point<D> step;
    for (std::size_t d = 0; d < D; ++d) step[d] = (spec.upper[d] - spec.lower[d]) / (spec.density[d] - 1);
    for (int it = 0; it < spec.refinement_iterations; ++it) {
        for (std::size_t d = 0; d < D; ++d) {
            const double a = std::max(spec.lower[d], r.argmax[d] - step[d]);
            const double b = std::min(spec.upper[d], r.argmax[d] + step[d]);
            Point<D> x = r.argmax;
            auto line = [&](double t) {
                x[d] = t;
                return detail::checked_eval(f, x);
            };
            const auto [t, v] = detail::golden_max(line, a, b, spec.tolerance, r.evaluations);
            if (v > r.value) {
                r.argmax[d] = t;
                r.value = v;
            }
        }
        r.trace.push_back(r.value);
        double widest = 0;
        for (std::size_t d = 0; d < D; ++d) widest = std::max(widest, step[d] *= 0.5);
        if (widest < spec.tolerance) break;
    }
    r.value = detail::checked_eval(f, r.argmax);
    return r;
}

/// Bisection on a sign change; returns the midpoint of the final bracket.
template <class G>
double find_root_1d(const G& g, double lo, double hi, double tol = 1e-10) {
    if (!(lo < hi) || !(tol > 0)) throw std::invalid_argument("need lo < hi and tol > 0");
    double glo = g(lo);
    const double ghi = g(hi);
    if (glo == 0) return lo;
    if (ghi == 0) return hi;
    if ((glo < 0) == (ghi < 0)) throw std::domain_error("no sign change on the bracket");
    while (hi - lo > tol) {
        const double mid = lo + (hi - lo) / 2;
        const double gm = g(mid);
        if (gm == 0) return mid;
        if ((gm < 0) == (glo < 0))
            lo = mid, glo = gm;
        else
            hi = mid;
    }
    return lo + (hi - lo) / 2;
}

// ---------------------------------------------------------------------------
// Cuboid survey: the interior, the six faces and the twelve edges as boxes of
// dimension 3, 2 and 1. Fixed coordinates are pinned at 0 or their upper end.

struct RegionMax {
    std::string region;  // e.g. "x=0,y=1" for an edge, "interior" for the whole cuboid
    Point<3> argmax{};
    double value = 0;
};

inline std::vector<RegionMax> survey_cuboid(ClassTag cls, int density = 100, double tol = 1e-10) {
    const Point<3> upper{2.0, 1.0, 1.0};
    const char* names[] = {"p", "x", "y"};
    auto objective = [cls](const Point<3>& v) { return majorant(cls, CuboidPoint<double>{v[0], v[1], v[2]}); };
    std::vector<RegionMax> out;

    {
        const auto r = maximize_box(objective, uniform_box<3>({0, 0, 0}, upper, density, tol));
        out.push_back({"interior", r.argmax, r.value});
    }
    for (std::size_t fixed = 0; fixed < 3; ++fixed)
        for (double end : {0.0, upper[fixed]}) {
            std::array<std::size_t, 2> free{};
            for (std::size_t d = 0, k = 0; d < 3; ++d)
                if (d != fixed) free[k++] = d;
            auto g = [&](const Point<2>& u) {
                Point<3> v{};
                v[fixed] = end;
                v[free[0]] = u[0];
                v[free[1]] = u[1];
                return objective(v);
            };
            const auto r = maximize_box(g, uniform_box<2>({0, 0}, {upper[free[0]], upper[free[1]]}, density, tol));
            Point<3> at{};
            at[fixed] = end;
            at[free[0]] = r.argmax[0];
            at[free[1]] = r.argmax[1];
            out.push_back({std::string(names[fixed]) + "=" + (end == 0 ? "0" : std::to_string(int(end))), at, r.value});
        }
    for (std::size_t freed = 0; freed < 3; ++freed) {
        std::array<std::size_t, 2> pinned{};
        for (std::size_t d = 0, k = 0; d < 3; ++d)
            if (d != freed) pinned[k++] = d;
        for (double e0 : {0.0, upper[pinned[0]]})
            for (double e1 : {0.0, upper[pinned[1]]}) {
                auto g = [&](const Point<1>& u) {
                    Point<3> v{};
                    v[pinned[0]] = e0;
                    v[pinned[1]] = e1;
                    v[freed] = u[0];
                    return objective(v);
                };
                const auto r = maximize_box(g, uniform_box<1>({0}, {upper[freed]}, density, tol));
                Point<3> at{};
                at[pinned[0]] = e0;
                at[pinned[1]] = e1;
                at[freed] = r.argmax[0];
                out.push_back({std::string(names[pinned[0]]) + "=" + std::to_string(int(e0)) + "," + names[pinned[1]] +
                                   "=" + std::to_string(int(e1)),
                               at, r.value});
            }
    }
    return out;
}

struct SignScan {
    std::size_t positive = 0, negative = 0, zero = 0;
};

/// Sign census of g on the open box (grid points strictly inside).
template <std::size_t D, class G>
SignScan scan_sign(const G& g, const Point<D>& lower, const Point<D>& upper, int density) {
    SignScan s;
    std::array<int, D> idx{};
    idx.fill(1);
    while (true) {
        Point<D> x;
        for (std::size_t d = 0; d < D; ++d) x[d] = lower[d] + (upper[d] - lower[d]) * idx[d] / (density + 1);
        const double v = g(x);
        (v > 0 ? s.positive : v < 0 ? s.negative : s.zero)++;
        std::size_t d = D;
        while (d-- > 0) {
            if (++idx[d] <= density) break;
            idx[d] = 1;
        }
        if (d == static_cast<std::size_t>(-1)) break;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Constants located by 1-D searches along edges and by root finding.

inline std::vector<ClaimRecord> reproduce_critical_constants(double tol = 1e-10) {
    std::vector<ClaimRecord> out;
    auto edge_max = [&](Face f) {
        auto g = [f](const Point<1>& v) { return face_restriction(f, v[0]); };
        return maximize_box(g, uniform_box<1>({0}, {face_upper(f)[0]}, 2001, tol));
    };
    auto printed = [&](const char* id, const char* text, double computed, const char* anchor) {
        out.push_back(make_claim(id, parse_printed(text), computed, printed_tolerance(text), anchor));
    };
    auto root = [&](const char* id, const char* text, double computed, const char* anchor) {
        out.push_back(make_claim(id, parse_printed(text), computed, kRootTolerance, anchor));
    };
    auto exact = [&](const char* id, Rational paper, Rational computed, const char* anchor) {
        out.push_back(make_claim(id, paper, computed, 0.0, anchor));
    };

    const auto r1 = edge_max(Face::R1);
    root("DELTA1-ROOT", "1.4367", r1.argmax[0], "r1'(p) = 0 at p = delta1 := 1.4367");
    root("DELTA1-R1PRIME-ROOT", "1.4367", find_root_1d([](double p) { return r1_prime(p); }, 1.0, 2.0, tol),
         "r1'(p) = (10368 p - 5184 p^3 + 78 p^5)/331776");
    printed("R1-MAX", "0.0159535", r1.value, "M(p,0,0) <= 0.0159535");

    const auto s3 = edge_max(Face::S3);
    root("DELTA3-ROOT", "1.43461", find_root_1d([](double p) { return r3_prime_scaled(p); }, 1.0, 2.0, tol),
         "4224 p - 1968 p^3 - 41 p^5 = 0 at p = delta3 := 1.43461");
    printed("S3-MAX", "0.0398426", s3.value, "s3(p) <= 0.0398426");

    const auto r5 = edge_max(Face::R5);
    out.push_back(make_claim("DELTA4-ARGMAX", 1 / std::sqrt(3.0), r5.argmax[0], 1e-6,
                             "r5(x) = x(1 - x^2)/8 peaks at delta4 = 1/sqrt(3)"));
    printed("R5-MAX", "0.0481125", r5.value, "M(0,x,0) <= 0.0481125");

    const auto t5 = edge_max(Face::T5);
    out.push_back(make_claim("BETA0-ARGMAX", std::sqrt(0.6), t5.argmax[0], 1e-6, "t5 peaks at x = beta0 := sqrt(3/5)"));
    printed("T5-MAX", "0.00430331", t5.value, "N(0,x,0) <= 0.00430331");

    root("S2-ELIMINANT-ROOT", "1.35596", find_root_1d([](double p) { return s2_eliminant(p); }, 1.0, 2.0, tol),
         "21233664 p - 27205632 p^3 + ... + 2700 p^9 = 0 at p ~ 1.35596");
    root("S2-THRESHOLD-ROOT", "1.68218", find_root_1d([](double p) { return s2_threshold(p); }, 1.0, 2.0, tol),
         "17 p^3 - 12(25 p^2 - 64) = 0, y_p reaches 1 at p ~ 1.68218");

    using R = Rational;
    exact("M-AT-P2", make_rational(13, 5184), M(CuboidPoint<R>{2, make_rational(1, 3), make_rational(2, 7)}),
          "M(2,x,y) = 13/5184");
    exact("N-AT-P2", make_rational(1, 20736), N(CuboidPoint<R>{2, make_rational(1, 3), make_rational(2, 7)}),
          "N(2,x,y) = 1/20736");
    exact("N-X1", make_rational(1, 270), N(CuboidPoint<R>{0, 1, make_rational(3, 5)}), "N(0,1,y) = 1/270");
    exact("M-CORNER", make_rational(1, 9), M(CuboidPoint<R>{0, 0, 1}), "M(0,0,1) = 1/9");
    exact("N-CORNER", make_rational(1, 144), N(CuboidPoint<R>{0, 0, 1}), "N(0,0,1) = 1/144");
    return out;
}

}  // namespace hv
