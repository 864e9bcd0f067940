#ifndef FINFREE_POLYNOMIAL_HPP
#define FINFREE_POLYNOMIAL_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "finfree/numeric.hpp"

namespace finfree {

/// Dense univariate polynomial with coefficients stored leading-first
/// (coeffs()[0] is the coefficient of x^degree). The zero polynomial has an
/// empty coefficient vector and degree -1.
template <class Scalar>
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Scalar> leading_first) : c_(std::move(leading_first)) {
        trim();
    }

    static Poly from_roots(const std::vector<Scalar>& roots) {
        // Incremental expansion of prod (x - r); O(d^2), no subset enumeration.
        std::vector<Scalar> c{Scalar(1)};
        for (const Scalar& r : roots) {
            c.push_back(Scalar(0));
            for (std::size_t i = c.size() - 1; i >= 1; --i) c[i] -= r * c[i - 1];
        }
        return Poly(std::move(c));
    }

    static Poly monomial(unsigned degree) {
        std::vector<Scalar> c(degree + 1, Scalar(0));
        c[0] = Scalar(1);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Scalar>& coeffs() const { return c_; }

    const Scalar& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.front();
    }

    bool is_monic() const { return !is_zero() && c_.front() == Scalar(1); }

    /// Coefficient of x^k (zero when k > degree).
    Scalar coeff_of(unsigned k) const {
        if (static_cast<int>(k) > degree()) return Scalar(0);
        return c_[c_.size() - 1 - k];
    }

    Scalar eval(const Scalar& x) const {
        Scalar acc(0);
        for (const Scalar& c : c_) acc = acc * x + c;
        return acc;
    }

    Poly derivative() const {
        if (degree() <= 0) return Poly();
        std::vector<Scalar> d(c_.size() - 1);
        const int n = degree();
        for (int i = 0; i < n; ++i) d[i] = c_[i] * Scalar(n - i);
        return Poly(std::move(d));
    }

    Poly operator-() const {
        std::vector<Scalar> d(c_);
        for (Scalar& v : d) v = -v;
        return Poly(std::move(d));
    }

    Poly operator*(const Poly& other) const {
        if (is_zero() || other.is_zero()) return Poly();
        std::vector<Scalar> d(c_.size() + other.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < other.c_.size(); ++j) d[i + j] += c_[i] * other.c_[j];
        return Poly(std::move(d));
    }

    Poly operator*(const Scalar& s) const {
        std::vector<Scalar> d(c_);
        for (Scalar& v : d) v *= s;
        return Poly(std::move(d));
    }

    Poly operator-(const Poly& other) const {
        std::vector<Scalar> a(c_), b(other.c_);
        const std::size_t n = std::max(a.size(), b.size());
        std::vector<Scalar> d(n, Scalar(0));
        for (std::size_t i = 0; i < a.size(); ++i) d[n - a.size() + i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) d[n - b.size() + i] -= b[i];
        return Poly(std::move(d));
    }

    bool operator==(const Poly& other) const { return c_ == other.c_; }

private:
    void trim() {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == Scalar(0)) ++lead;
        if (lead > 0) c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    }

    std::vector<Scalar> c_;
};

using BigPoly = Poly<Rational>;
using FloatPoly = Poly<BigFloat>;
using IntPoly = Poly<Integer>;

/// Euclidean division over a field scalar: a = q*b + r with deg r < deg b.
template <class Scalar>
std::pair<Poly<Scalar>, Poly<Scalar>> poly_divmod(const Poly<Scalar>& a, const Poly<Scalar>& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Scalar> rem(a.coeffs());
    const int db = b.degree();
    int dr = a.degree();
    if (dr < db) return {Poly<Scalar>(), a};
    std::vector<Scalar> quo(static_cast<std::size_t>(dr - db) + 1, Scalar(0));
    while (dr >= db && !(rem.empty())) {
        // leading entry of rem sits at index (orig size - (dr+1))
        const std::size_t off = rem.size() - static_cast<std::size_t>(dr) - 1;
        Scalar factor = rem[off] / b.leading();
        quo[quo.size() - static_cast<std::size_t>(dr - db) - 1] = factor;
        for (int j = 0; j <= db; ++j)
            rem[off + static_cast<std::size_t>(j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
        // the leading term cancels exactly
        --dr;
        while (dr >= 0) {
            const std::size_t idx = rem.size() - static_cast<std::size_t>(dr) - 1;
            if (rem[idx] != Scalar(0)) break;
            --dr;
        }
    }
    std::vector<Scalar> rtrim;
    if (dr >= 0) {
        rtrim.assign(rem.end() - (dr + 1), rem.end());
    }
    return {Poly<Scalar>(std::move(quo)), Poly<Scalar>(std::move(rtrim))};
}

/// Exact quotient; throws if the division leaves a remainder.
template <class Scalar>
Poly<Scalar> poly_exact_div(const Poly<Scalar>& a, const Poly<Scalar>& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("polynomial division expected to be exact");
    return q;
}

}  // namespace finfree

#endif
