#ifndef FINFREE_EMPIRICAL_HPP
#define FINFREE_EMPIRICAL_HPP

#include <functional>
#include <iosfwd>
#include <vector>

#include "finfree/convolve.hpp"
#include "finfree/limit_oracle.hpp"
#include "finfree/symmetric.hpp"

namespace finfree {

/// Finite atom list with uniform weights, plus an optional explicit extra mass
/// at zero (total mass stays 1; each atom then carries (1 - extra)/N).
class EmpiricalMeasure {
public:
    explicit EmpiricalMeasure(std::vector<double> atoms, double extra_zero_mass = 0.0);

    static EmpiricalMeasure from_roots(const RootMultiset<Rational>& roots);
    static EmpiricalMeasure from_roots(const RootMultiset<BigFloat>& roots);
    static EmpiricalMeasure from_limit_roots(const LimitRoots& limits);

    std::size_t size() const { return atoms_.size(); }
    const std::vector<double>& atoms() const { return atoms_; }  // ascending
    double extra_zero_mass() const { return extra_zero_mass_; }

    bool has_zero_atom() const { return extra_zero_mass_ > 0.0 || (!atoms_.empty() && atoms_.front() == 0.0); }

    double cdf(double x) const;
    double cdf_left(double x) const;  // mass strictly below x

    /// Generalized inverse of the CDF: smallest atom (or 0 for the extra zero
    /// mass) with cdf >= t, for t in (0, 1].
    double quantile(double t) const;

private:
    std::vector<double> atoms_;
    double extra_zero_mass_;
};

/// Sup distance between the empirical CDF and a target CDF, evaluated via
/// both one-sided gaps at every jump point (the atoms, zero, and any declared
/// target jumps). target_cdf_left supplies the target's left limits; omit it
/// for continuous targets.
double ks_distance(const EmpiricalMeasure& emp, const std::function<double(double)>& target_cdf,
                   const std::function<double(double)>& target_cdf_left = nullptr,
                   const std::vector<double>& target_jump_points = {});
double ks_distance(const EmpiricalMeasure& emp, const PhiTarget& target);
double ks_distance(const EmpiricalMeasure& emp, const MeasureSpec& target);

/// Exact-arithmetic KS distance for rational atoms (uniform weights) against
/// a target CDF that is rational at rational points.
Rational ks_distance_exact(const std::vector<Rational>& atoms,
                           const std::function<Rational(const Rational&)>& target_cdf,
                           const std::function<Rational(const Rational&)>& target_cdf_left = nullptr);

/// Mean of log over the atoms; rejects measures carrying any mass at zero.
BigFloat log_moment(const EmpiricalMeasure& emp);

struct MeanHarmonic {
    double mean = 0;
    double harmonic_inverse = 0;
    bool zero_flag = false;  // set when a zero atom forces harmonic_inverse = 0
};

MeanHarmonic mean_and_harmonic(const EmpiricalMeasure& emp);

/// Midpoint-quantile values Q((i - 1/2)/d) for i = 1..d, descending.
std::vector<double> midpoint_sample(const std::function<double(double)>& quantile, unsigned d);

/// Midpoint-quantile discretization of a measure. Quantiles are taken as the
/// upper (right-continuous) inverse of the CDF, so a zero mass of m yields
/// exactly floor(m*d) zero entries.
RootMultiset<BigFloat> discretize_measure(const MeasureSpec& mu, unsigned d);

/// Exact-path discretization for discrete measures with rational data.
RootMultiset<Rational> discretize_discrete_exact(const MeasureSpec& mu, unsigned d);

/// One atom per row: columns (index, location).
void write_empirical_csv(std::ostream& os, const EmpiricalMeasure& emp);

}  // namespace finfree

#endif
