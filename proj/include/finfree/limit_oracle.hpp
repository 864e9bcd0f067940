#ifndef FINFREE_LIMIT_ORACLE_HPP
#define FINFREE_LIMIT_ORACLE_HPP

#include <optional>
#include <vector>

#include "finfree/numeric.hpp"

namespace finfree {

enum class MeasureKind { discrete, marchenko_pastur, bernoulli_half };

/// Compactly supported probability measure on [0, inf): a finite atom list, or
/// one of two named analytic measures (Marchenko-Pastur on (0,4); the fair
/// two-point measure on {0,1}).
class MeasureSpec {
public:
    struct Atom {
        Rational weight;
        Rational location;
    };

    static MeasureSpec discrete(std::vector<Atom> atoms);
    static MeasureSpec point_mass(const Rational& location);
    static MeasureSpec marchenko_pastur();
    static MeasureSpec bernoulli_half();

    MeasureKind kind() const { return kind_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    Rational zero_mass() const;
    double mean() const;

    bool is_point_mass() const;
    bool is_zero_point_mass() const { return zero_mass() == 1; }

private:
    MeasureSpec() = default;
    MeasureKind kind_ = MeasureKind::discrete;
    std::vector<Atom> atoms_;  // ascending by location, discrete only
};

/// psi(z) = integral of tz/(1-tz) d(mu); strictly increasing on z < 0 with
/// range (zero_mass - 1, 0). Rejects the point mass at zero.
double psi_transform(const MeasureSpec& mu, double z);

enum class SPath {
    automatic,  // closed form where one is wired in (Marchenko-Pastur)
    numeric,    // always invert psi numerically
};

/// S(t) = ((t+1)/t) psi^{-1}(t) for t in (zero_mass - 1, 0).
double s_transform(const MeasureSpec& mu, double t, SPath path = SPath::automatic);

/// Quantile of the multiplicative LLN limit above its zero atom:
/// Q(t) = 1 / S(t - 1) for t in (zero_mass, 1).
double phi_quantile(const MeasureSpec& mu, double t, SPath path = SPath::automatic);

/// (inverse harmonic moment, mean); the support of the limit law is the
/// closure of the open interval between them. Lower endpoint is 0 when the
/// harmonic integral diverges.
std::pair<double, double> support_endpoints(const MeasureSpec& mu);

/// Marchenko-Pastur distribution function and its inverse.
double mp_cdf(double x);
double mp_quantile(double t);

/// CDF of a measure itself (not the limit law); used by discretization.
double measure_cdf(const MeasureSpec& mu, double x);

/// Left limit of the CDF, i.e. mass strictly below x.
double measure_cdf_left(const MeasureSpec& mu, double x);

/// Locations where the CDF jumps (atom positions; empty for densities).
std::vector<double> measure_jump_points(const MeasureSpec& mu);

/// Distribution view of the LLN limit law of mu: quantile above the zero atom
/// and the full CDF on [0, inf).
class PhiTarget {
public:
    explicit PhiTarget(MeasureSpec mu);

    double zero_mass() const { return zero_mass_; }
    double quantile(double t) const;
    double cdf(double x) const;
    double cdf_left(double x) const;
    std::vector<double> jump_points() const;

private:
    MeasureSpec mu_;
    double zero_mass_ = 0;
    std::optional<double> point_location_;  // limit of a point mass is itself
};

}  // namespace finfree

#endif
