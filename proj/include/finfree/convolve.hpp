#ifndef FINFREE_CONVOLVE_HPP
#define FINFREE_CONVOLVE_HPP

#include <optional>
#include <vector>

#include "finfree/symmetric.hpp"

namespace finfree {

/// Limits of the n-th roots of the ordered roots of the n-fold multiplicative
/// power: the ratios e~_i/e~_{i-1} on the positive block, then zero_count zeros.
class LimitRoots {
public:
    unsigned degree() const { return static_cast<unsigned>(log_values_.size()); }
    unsigned zero_count() const { return zero_count_; }

    bool has_exact() const { return exact_.has_value(); }
    const std::vector<Rational>& exact() const;
    const std::vector<double>& log_values() const { return log_values_; }

    double value_double(std::size_t i) const {
        return log_values_[i] == kNegInf ? 0.0 : std::exp(log_values_[i]);
    }

    RootMultiset<Rational> as_rational_roots() const { return RootMultiset<Rational>(exact()); }

private:
    friend LimitRoots lln_limit_roots(const SymmetricProfile&);

    unsigned zero_count_ = 0;
    std::optional<std::vector<Rational>> exact_;
    std::vector<double> log_values_;  // natural logs, -inf for the zero tail
};

/// Pointwise product of the e~ profiles; degrees must match.
/// The zero count of the result is max of the inputs' zero counts.
SymmetricProfile multiplicative_convolve(const SymmetricProfile& p, const SymmetricProfile& q);

/// n-fold multiplicative power, computed purely in log domain (n * log e~_i).
SymmetricProfile multiplicative_power(const SymmetricProfile& p, unsigned long n);

/// n-fold multiplicative power on the exact path (e~_i^n as rationals).
SymmetricProfile multiplicative_power_exact(const SymmetricProfile& p, unsigned long n);

/// Degree-preserving additive convolution via the factorial-weighted double
/// sum over coefficient pairs; both inputs monic of equal degree.
BigPoly additive_convolve(const BigPoly& p, const BigPoly& q);

LimitRoots lln_limit_roots(const SymmetricProfile& p);

/// x^k * prod (x - R_i) expanded exactly.
BigPoly lln_limit_polynomial(const SymmetricProfile& p);

/// Profile of d! (-d)^{-d} L_{0,d}(d x): e~_j = d!/(d^j (d-j)!), no zero roots.
SymmetricProfile laguerre_profile(unsigned d);

/// Profile of x^d (x-1)^d (degree 2d): e~_j = binom(d,j)/binom(2d,j) up to j=d,
/// zero afterwards.
SymmetricProfile two_root_profile(unsigned d);

}  // namespace finfree

#endif
