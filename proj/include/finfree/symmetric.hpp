#ifndef FINFREE_SYMMETRIC_HPP
#define FINFREE_SYMMETRIC_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "finfree/numeric.hpp"
#include "finfree/polynomial.hpp"

namespace finfree {

/// Multiset of non-negative real roots, kept sorted in descending order.
/// Multiplicity is represented by repeated entries.
template <class Scalar>
class RootMultiset {
public:
    explicit RootMultiset(std::vector<Scalar> roots) : roots_(std::move(roots)) {
        if (roots_.empty()) throw std::invalid_argument("root multiset must be non-empty");
        for (const Scalar& r : roots_)
            if (r < Scalar(0)) throw std::invalid_argument("root multiset requires non-negative roots");
        std::sort(roots_.begin(), roots_.end(), std::greater<Scalar>());
    }

    unsigned degree() const { return static_cast<unsigned>(roots_.size()); }
    const Scalar& operator[](std::size_t i) const { return roots_[i]; }
    const std::vector<Scalar>& values() const { return roots_; }
    auto begin() const { return roots_.begin(); }
    auto end() const { return roots_.end(); }

    unsigned zero_count() const {
        unsigned k = 0;
        for (auto it = roots_.rbegin(); it != roots_.rend() && *it == Scalar(0); ++it) ++k;
        return k;
    }

private:
    std::vector<Scalar> roots_;
};

/// Normalized elementary symmetric profile of a non-negative-rooted monic
/// polynomial: the values e_i/binom(d,i) for i = 0..d. Carries an exact
/// rational vector whenever the source data is exact, and always a natural-log
/// vector (with -inf for the structural zeros forced by zero roots).
class SymmetricProfile {
public:
    static SymmetricProfile from_e_tilde(std::vector<Rational> e_tilde);
    static SymmetricProfile from_logs(std::vector<double> log_e_tilde);

    unsigned degree() const { return static_cast<unsigned>(log_.size()) - 1; }
    unsigned zero_count() const { return zero_count_; }

    bool has_exact() const { return exact_.has_value(); }
    const std::vector<Rational>& e_tilde() const;
    const std::vector<double>& log_e_tilde() const { return log_; }

    /// Same profile with the exact representation dropped.
    SymmetricProfile log_only() const { return from_logs(log_); }

    bool operator==(const SymmetricProfile& other) const {
        if (has_exact() && other.has_exact())
            return exact_ == other.exact_;
        return log_ == other.log_;
    }

private:
    SymmetricProfile() = default;

    unsigned zero_count_ = 0;
    std::optional<std::vector<Rational>> exact_;
    std::vector<double> log_;  // natural logs
};

/// e_0..e_d by incremental expansion of prod (x + lambda_j); O(d^2).
template <class Scalar>
std::vector<Scalar> elementary_symmetric(const RootMultiset<Scalar>& roots) {
    std::vector<Scalar> e(roots.degree() + 1, Scalar(0));
    e[0] = Scalar(1);
    std::size_t used = 0;
    for (const Scalar& lambda : roots) {
        ++used;
        for (std::size_t i = used; i >= 1; --i) e[i] += lambda * e[i - 1];
    }
    return e;
}

SymmetricProfile profile_from_roots(const RootMultiset<Rational>& roots);

/// Float-root path: the expansion runs at >= 256 bits so huge degrees with
/// wide-magnitude roots cannot overflow; only the log vector is retained.
SymmetricProfile profile_from_roots(const RootMultiset<BigFloat>& roots);

/// Monic coefficients (-1)^i binom(d,i) e~_i on x^{d-i}; exact profile required.
BigPoly profile_to_coefficients(const SymmetricProfile& profile);

/// Log-domain rendering of the coefficients at the requested precision.
/// Throws precision_error when a log magnitude exceeds the exponent budget.
FloatPoly to_float_poly(const SymmetricProfile& profile, unsigned precision_bits);

/// Inverse of profile_to_coefficients; rejects polynomials whose recovered
/// e~ values are negative or break the positive-then-zero suffix rule.
SymmetricProfile coefficients_to_profile(const BigPoly& poly);

/// Maps every root to root^alpha in log domain (0 maps to 0); alpha > 0.
RootMultiset<BigFloat> root_power_map(const RootMultiset<BigFloat>& roots, const Rational& alpha);
RootMultiset<BigFloat> root_power_map(const RootMultiset<Rational>& roots, const Rational& alpha);

/// Exact path for integer exponents.
RootMultiset<Rational> root_power_map(const RootMultiset<Rational>& roots, unsigned long exponent);

}  // namespace finfree

#endif
