#include "finfree/limit_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace finfree {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

/// tanh-sinh quadrature on (a, b); robust against endpoint singularities and
/// features clustered at the endpoints.
double tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol) {
    const double half = 0.5 * (b - a);
    const double center = 0.5 * (a + b);

    auto node_value = [&](double t, double& weight) {
        const double s = std::sinh(t);
        const double u = std::tanh(0.5 * kPi * s);
        const double ch = std::cosh(0.5 * kPi * s);
        weight = 0.5 * kPi * std::cosh(t) / (ch * ch);
        return u;
    };

    auto pair_term = [&](double t) {
        double w;
        const double u = node_value(t, w);
        const double xr = center + half * u;
        const double xl = center - half * u;
        double term = 0.0;
        if (xr > a && xr < b) term += f(xr) * w;
        if (xl > a && xl < b) term += f(xl) * w;
        return term;
    };

    double h = 1.0;
    double sum;
    {
        double w;
        const double u = node_value(0.0, w);
        sum = f(center + half * u) * w;
    }
    for (int k = 1; k * h <= 7.0; ++k) sum += pair_term(k * h);
    double integral = sum * h * half;

    for (int level = 1; level <= 14; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (int k = 1; k * h <= 7.0; k += 2) add += pair_term(k * h);
        sum += add;
        double next = sum * h * half;
        if (level >= 4 && std::abs(next - integral) <= tol * std::max(1.0, std::abs(next))) {
            return next;
        }
        integral = next;
    }
    return integral;
}

double psi_discrete(const std::vector<MeasureSpec::Atom>& atoms, double z) {
    double acc = 0.0;
    for (const auto& atom : atoms) {
        const double t = atom.location.convert_to<double>();
        if (t == 0.0) continue;
        acc += atom.weight.convert_to<double>() * t * z / (1.0 - t * z);
    }
    return acc;
}

double psi_mp(double z) {
    // (z / 2 pi) * integral_0^4 sqrt(t(4-t)) / (1 - t z) dt
    auto integrand = [z](double t) { return std::sqrt(t * (4.0 - t)) / (1.0 - t * z); };
    return z / (2.0 * kPi) * tanh_sinh(integrand, 0.0, 4.0, 1e-15);
}

/// Monotone inversion of psi on z < 0, working on the magnitude u = -z.
double psi_inverse(const MeasureSpec& mu, double t) {
    const double floor_value = mu.zero_mass().convert_to<double>() - 1.0;
    if (!(t > floor_value && t < 0.0))
        throw std::domain_error("psi inverse argument outside (zero_mass - 1, 0)");

    auto psi_neg = [&](double u) { return psi_transform(mu, -u); };  // decreasing in u

    double ulo = 1.0, uhi = 1.0;
    int guard = 0;
    while (psi_neg(ulo) <= t) {  // shrink magnitude until psi above t
        ulo *= 0.5;
        if (++guard > 1100) throw std::domain_error("psi inverse bracket collapse near 0");
    }
    guard = 0;
    while (psi_neg(uhi) >= t) {  // grow magnitude until psi below t
        uhi *= 2.0;
        if (++guard > 1100) throw std::domain_error("psi inverse bracket blowup");
    }
    // geometric bisection on magnitudes
    for (int i = 0; i < 400; ++i) {
        double mid = std::sqrt(ulo * uhi);
        if (psi_neg(mid) > t)
            ulo = mid;
        else
            uhi = mid;
        if (uhi - ulo <= 1e-15 * uhi) break;
    }
    return -0.5 * (ulo + uhi);
}

}  // namespace

MeasureSpec MeasureSpec::discrete(std::vector<Atom> atoms) {
    if (atoms.empty()) throw std::invalid_argument("discrete measure needs at least one atom");
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.location < b.location; });
    std::vector<Atom> merged;
    for (const Atom& a : atoms) {
        if (a.weight <= 0) throw std::invalid_argument("atom weights must be positive");
        if (a.location < 0) throw std::invalid_argument("atom locations must be non-negative");
        if (!merged.empty() && merged.back().location == a.location)
            merged.back().weight += a.weight;
        else
            merged.push_back(a);
    }
    Rational total = 0;
    for (const Atom& a : merged) total += a.weight;
    if (total != 1) throw std::invalid_argument("atom weights must sum to 1");
    MeasureSpec mu;
    mu.kind_ = MeasureKind::discrete;
    mu.atoms_ = std::move(merged);
    return mu;
}

MeasureSpec MeasureSpec::point_mass(const Rational& location) {
    return discrete({Atom{Rational(1), location}});
}

MeasureSpec MeasureSpec::marchenko_pastur() {
    MeasureSpec mu;
    mu.kind_ = MeasureKind::marchenko_pastur;
    return mu;
}

MeasureSpec MeasureSpec::bernoulli_half() {
    MeasureSpec mu;
    mu.kind_ = MeasureKind::bernoulli_half;
    mu.atoms_ = {Atom{Rational(1, 2), Rational(0)}, Atom{Rational(1, 2), Rational(1)}};
    return mu;
}

Rational MeasureSpec::zero_mass() const {
    switch (kind_) {
        case MeasureKind::marchenko_pastur:
            return 0;
        case MeasureKind::bernoulli_half:
            return Rational(1, 2);
        case MeasureKind::discrete:
            for (const Atom& a : atoms_)
                if (a.location == 0) return a.weight;
            return 0;
    }
    return 0;
}

double MeasureSpec::mean() const {
    switch (kind_) {
        case MeasureKind::marchenko_pastur:
            return 1.0;
        case MeasureKind::bernoulli_half:
            return 0.5;
        case MeasureKind::discrete: {
            Rational m = 0;
            for (const Atom& a : atoms_) m += a.weight * a.location;
            return m.convert_to<double>();
        }
    }
    return 0.0;
}

bool MeasureSpec::is_point_mass() const {
    return kind_ == MeasureKind::discrete && atoms_.size() == 1;
}

double psi_transform(const MeasureSpec& mu, double z) {
    if (!(z < 0)) throw std::domain_error("psi is evaluated on z < 0");
    if (mu.is_zero_point_mass())
        throw std::domain_error("S-transform machinery is undefined for the point mass at 0");
    switch (mu.kind()) {
        case MeasureKind::marchenko_pastur:
            return psi_mp(z);
        case MeasureKind::bernoulli_half:
        case MeasureKind::discrete:
            return psi_discrete(mu.atoms(), z);
    }
    return 0.0;
}

double s_transform(const MeasureSpec& mu, double t, SPath path) {
    if (mu.is_zero_point_mass())
        throw std::domain_error("S-transform machinery is undefined for the point mass at 0");
    const double floor_value = mu.zero_mass().convert_to<double>() - 1.0;
    if (!(t > floor_value && t < 0.0))
        throw std::domain_error("S-transform argument outside (zero_mass - 1, 0)");
    if (path == SPath::automatic && mu.kind() == MeasureKind::marchenko_pastur)
        return 1.0 / (1.0 + t);
    return (t + 1.0) / t * psi_inverse(mu, t);
}

double phi_quantile(const MeasureSpec& mu, double t, SPath path) {
    const double zm = mu.zero_mass().convert_to<double>();
    if (!(t > zm && t < 1.0))
        throw std::domain_error("quantile argument outside (zero_mass, 1)");
    return 1.0 / s_transform(mu, t - 1.0, path);
}

std::pair<double, double> support_endpoints(const MeasureSpec& mu) {
    switch (mu.kind()) {
        case MeasureKind::marchenko_pastur:
            return {0.0, 1.0};  // harmonic integral diverges at 0
        case MeasureKind::bernoulli_half:
            return {0.0, 0.5};
        case MeasureKind::discrete: {
            Rational mean = 0;
            Rational harmonic = 0;
            bool has_zero = false;
            for (const auto& a : mu.atoms()) {
                mean += a.weight * a.location;
                if (a.location == 0)
                    has_zero = true;
                else
                    harmonic += a.weight / a.location;
            }
            double lower = has_zero ? 0.0 : (Rational(1) / harmonic).convert_to<double>();
            return {lower, mean.convert_to<double>()};
        }
    }
    return {0.0, 0.0};
}

double mp_cdf(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 4.0) return 1.0;
    const double theta = std::asin(0.5 * std::sqrt(x));
    return (2.0 * theta + std::sin(2.0 * theta)) / kPi;
}

double mp_quantile(double t) {
    if (!(t > 0.0 && t < 1.0)) throw std::domain_error("quantile argument outside (0, 1)");
    double lo = 0.0, hi = 4.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mp_cdf(mid) < t)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-14) break;
    }
    return 0.5 * (lo + hi);
}

double measure_cdf(const MeasureSpec& mu, double x) {
    switch (mu.kind()) {
        case MeasureKind::marchenko_pastur:
            return mp_cdf(x);
        case MeasureKind::bernoulli_half:
        case MeasureKind::discrete: {
            double acc = 0.0;
            for (const auto& a : mu.atoms())
                if (a.location.convert_to<double>() <= x) acc += a.weight.convert_to<double>();
            return acc;
        }
    }
    return 0.0;
}

double measure_cdf_left(const MeasureSpec& mu, double x) {
    if (mu.kind() == MeasureKind::marchenko_pastur) return mp_cdf(x);
    double acc = 0.0;
    for (const auto& a : mu.atoms())
        if (a.location.convert_to<double>() < x) acc += a.weight.convert_to<double>();
    return acc;
}

std::vector<double> measure_jump_points(const MeasureSpec& mu) {
    std::vector<double> out;
    for (const auto& a : mu.atoms()) out.push_back(a.location.convert_to<double>());
    return out;
}

PhiTarget::PhiTarget(MeasureSpec mu) : mu_(std::move(mu)) {
    zero_mass_ = mu_.zero_mass().convert_to<double>();
    if (mu_.is_zero_point_mass())
        throw std::domain_error("limit law of the point mass at 0 is outside this machinery");
    if (mu_.is_point_mass())
        point_location_ = mu_.atoms().front().location.convert_to<double>();
}

double PhiTarget::quantile(double t) const {
    if (point_location_) return *point_location_;
    return phi_quantile(mu_, t);
}

double PhiTarget::cdf_left(double x) const {
    if (point_location_) return x > *point_location_ ? 1.0 : 0.0;
    // the limit law is continuous away from its only atom at zero
    if (x <= 0.0) return 0.0;
    return cdf(x);
}

std::vector<double> PhiTarget::jump_points() const {
    if (point_location_) return {*point_location_};
    if (zero_mass_ > 0.0) return {0.0};
    return {};
}

double PhiTarget::cdf(double x) const {
    if (x < 0.0) return 0.0;
    if (point_location_) return x >= *point_location_ ? 1.0 : 0.0;
    switch (mu_.kind()) {
        case MeasureKind::marchenko_pastur:
            // limit law is uniform on (0, 1)
            return std::min(1.0, std::max(0.0, x));
        case MeasureKind::bernoulli_half:
            if (x >= 0.5) return 1.0;
            return 0.5 / (1.0 - x);
        case MeasureKind::discrete:
            break;
    }
    // Numeric inversion of the strictly increasing quantile.
    constexpr double edge = 1e-13;
    const double tlo_limit = zero_mass_ + edge;
    const double thi_limit = 1.0 - edge;
    if (x <= quantile(tlo_limit)) return zero_mass_;
    if (x >= quantile(thi_limit)) return 1.0;
    double tlo = tlo_limit, thi = thi_limit;
    for (int i = 0; i < 100; ++i) {
        double mid = 0.5 * (tlo + thi);
        if (quantile(mid) < x)
            tlo = mid;
        else
            thi = mid;
        if (thi - tlo <= 1e-13) break;
    }
    return 0.5 * (tlo + thi);
}

}  // namespace finfree
