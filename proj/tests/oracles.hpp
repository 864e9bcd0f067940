// Test-only oracles, deliberately independent of the library's computation
// paths: subset enumeration instead of the expansion recurrence, float grid
// bisection instead of Sturm isolation, Simpson quadrature instead of
// tanh-sinh.
#ifndef FINFREE_TESTS_ORACLES_HPP
#define FINFREE_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "finfree/numeric.hpp"
#include "finfree/polynomial.hpp"

namespace oracles {

using finfree::BigFloat;
using finfree::BigPoly;
using finfree::Rational;

/// e_i by explicit sums over all i-subsets; exponential, keep d small.
inline std::vector<Rational> elementary_symmetric_bruteforce(const std::vector<Rational>& roots) {
    const std::size_t d = roots.size();
    std::vector<Rational> e(d + 1, Rational(0));
    e[0] = 1;
    for (unsigned long mask = 1; mask < (1ul << d); ++mask) {
        Rational prod = 1;
        unsigned bits = 0;
        for (std::size_t j = 0; j < d; ++j)
            if (mask & (1ul << j)) {
                prod *= roots[j];
                ++bits;
            }
        e[bits] += prod;
    }
    return e;
}

/// All roots of a polynomial known to have `count` simple positive roots in
/// (0, hi): sign scan on a geometric grid plus plain float bisection in
/// BigFloat arithmetic (no exact evaluation anywhere).
inline std::vector<BigFloat> positive_roots_float_bisection(const finfree::FloatPoly& f,
                                                            const BigFloat& lo, const BigFloat& hi,
                                                            unsigned grid, unsigned iters) {
    std::vector<BigFloat> out;
    BigFloat ratio = pow(hi / lo, 1.0 / static_cast<double>(grid));
    BigFloat a = lo;
    BigFloat fa = f.eval(a);
    for (unsigned g = 1; g <= grid; ++g) {
        BigFloat b = (g == grid) ? hi : BigFloat(lo * pow(ratio, static_cast<double>(g)));
        BigFloat fb = f.eval(b);
        if (fa == 0) out.push_back(a);
        if ((fa < 0 && fb > 0) || (fa > 0 && fb < 0)) {
            BigFloat x = a, y = b, fx = fa;
            for (unsigned i = 0; i < iters; ++i) {
                BigFloat m = sqrt(x * y);
                BigFloat fm = f.eval(m);
                if (fm == 0) {
                    x = y = m;
                    break;
                }
                if ((fm < 0) == (fx < 0)) {
                    x = m;
                    fx = fm;
                } else {
                    y = m;
                }
            }
            out.push_back(sqrt(x * y));
        }
        a = b;
        fa = fb;
    }
    std::sort(out.begin(), out.end(), std::greater<BigFloat>());
    return out;
}

/// Adaptive Simpson on [a, b].
inline double simpson(const std::function<double(double)>& f, double a, double b, double tol,
                      int depth = 24) {
    std::function<double(double, double, double, double, double, double, int)> rec =
        [&](double x0, double x2, double f0, double f1, double f2, double whole, int d) {
            const double x1l = 0.5 * (x0 + 0.5 * (x0 + x2));
            const double x1r = 0.5 * (0.5 * (x0 + x2) + x2);
            const double fm = f(x1l), fp = f(x1r);
            const double xm = 0.5 * (x0 + x2);
            const double left = (xm - x0) / 6.0 * (f0 + 4.0 * fm + f1);
            const double right = (x2 - xm) / 6.0 * (f1 + 4.0 * fp + f2);
            if (d <= 0 || std::abs(left + right - whole) < 15.0 * tol)
                return left + right + (left + right - whole) / 15.0;
            return rec(x0, xm, f0, fm, f1, left, d - 1) + rec(xm, x2, f1, fp, f2, right, d - 1);
        };
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return rec(a, b, fa, fm, fb, whole, depth);
}

inline double mp_density(double t) {
    if (t <= 0.0 || t >= 4.0) return 0.0;
    return std::sqrt(t * (4.0 - t)) / (2.0 * 3.14159265358979323846 * t);
}

/// CDF of the Marchenko-Pastur density via the substitution t = u^2, which
/// removes the 1/sqrt(t) singularity at the origin.
inline double mp_cdf_by_quadrature(double x, double tol) {
    if (x <= 0.0) return 0.0;
    const double upper = std::sqrt(std::min(x, 4.0));
    return simpson([](double u) { return std::sqrt(4.0 - u * u) / 3.14159265358979323846; },
                   0.0, upper, tol);
}

/// Deterministic random rational root sets: numerators in {0..9}, one shared
/// small denominator, degree in [1, max_degree].
class RootSampler {
public:
    explicit RootSampler(unsigned seed) : rng_(seed) {}

    std::vector<Rational> roots(unsigned max_degree, bool allow_zero) {
        return roots_of_degree(1 + static_cast<unsigned>(rng_() % max_degree), allow_zero);
    }

    std::vector<Rational> roots_of_degree(unsigned d, bool allow_zero) {
        const unsigned long q = 1 + rng_() % 9;
        std::vector<Rational> out;
        out.reserve(d);
        for (unsigned i = 0; i < d; ++i) {
            unsigned long num = rng_() % 10;
            if (!allow_zero && num == 0) num = 1 + rng_() % 9;
            out.emplace_back(num, q);
        }
        return out;
    }

private:
    std::mt19937 rng_;
};

}  // namespace oracles

#endif
