#include "finfree/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace finfree {

EmpiricalMeasure::EmpiricalMeasure(std::vector<double> atoms, double extra_zero_mass)
    : atoms_(std::move(atoms)), extra_zero_mass_(extra_zero_mass) {
    if (atoms_.empty()) throw std::invalid_argument("empirical measure needs atoms");
    if (extra_zero_mass_ < 0.0 || extra_zero_mass_ >= 1.0)
        throw std::invalid_argument("extra zero mass must lie in [0, 1)");
    for (double a : atoms_) {
        if (!(a >= 0.0)) throw std::invalid_argument("empirical atoms must be non-negative");
    }
    std::sort(atoms_.begin(), atoms_.end());
}

EmpiricalMeasure EmpiricalMeasure::from_roots(const RootMultiset<Rational>& roots) {
    std::vector<double> atoms;
    atoms.reserve(roots.degree());
    for (const Rational& r : roots) atoms.push_back(r.convert_to<double>());
    return EmpiricalMeasure(std::move(atoms));
}

EmpiricalMeasure EmpiricalMeasure::from_roots(const RootMultiset<BigFloat>& roots) {
    std::vector<double> atoms;
    atoms.reserve(roots.degree());
    for (const BigFloat& r : roots) atoms.push_back(r.convert_to<double>());
    return EmpiricalMeasure(std::move(atoms));
}

EmpiricalMeasure EmpiricalMeasure::from_limit_roots(const LimitRoots& limits) {
    std::vector<double> atoms;
    atoms.reserve(limits.degree());
    if (limits.has_exact()) {
        for (const Rational& r : limits.exact()) atoms.push_back(r.convert_to<double>());
    } else {
        for (std::size_t i = 0; i < limits.degree(); ++i) atoms.push_back(limits.value_double(i));
    }
    return EmpiricalMeasure(std::move(atoms));
}

double EmpiricalMeasure::cdf(double x) const {
    if (x < 0.0) return 0.0;
    const double atom_weight = (1.0 - extra_zero_mass_) / static_cast<double>(atoms_.size());
    auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x);
    return extra_zero_mass_ + atom_weight * static_cast<double>(it - atoms_.begin());
}

double EmpiricalMeasure::cdf_left(double x) const {
    if (x <= 0.0) return 0.0;
    const double atom_weight = (1.0 - extra_zero_mass_) / static_cast<double>(atoms_.size());
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x);
    return extra_zero_mass_ + atom_weight * static_cast<double>(it - atoms_.begin());
}

double EmpiricalMeasure::quantile(double t) const {
    if (!(t > 0.0 && t <= 1.0)) throw std::domain_error("quantile argument outside (0, 1]");
    if (t <= extra_zero_mass_) return 0.0;
    const double atom_weight = (1.0 - extra_zero_mass_) / static_cast<double>(atoms_.size());
    const double needed = (t - extra_zero_mass_) / atom_weight;
    std::size_t index = static_cast<std::size_t>(std::ceil(needed - 1e-12));
    if (index == 0) index = 1;
    if (index > atoms_.size()) index = atoms_.size();
    return atoms_[index - 1];
}

double ks_distance(const EmpiricalMeasure& emp, const std::function<double(double)>& target_cdf,
                   const std::function<double(double)>& target_cdf_left,
                   const std::vector<double>& target_jump_points) {
    // Jump points of either CDF; between consecutive candidates both curves
    // are constant or continuous, so the two one-sided gaps at the candidates
    // dominate the sup.
    std::vector<double> candidates(emp.atoms());
    candidates.push_back(0.0);
    candidates.insert(candidates.end(), target_jump_points.begin(), target_jump_points.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    double best = 0.0;
    for (double x : candidates) {
        best = std::max(best, std::abs(target_cdf(x) - emp.cdf(x)));
        const double left = target_cdf_left ? target_cdf_left(x) : target_cdf(x);
        best = std::max(best, std::abs(left - emp.cdf_left(x)));
    }
    return best;
}

double ks_distance(const EmpiricalMeasure& emp, const PhiTarget& target) {
    return ks_distance(
        emp, [&target](double x) { return target.cdf(x); },
        [&target](double x) { return target.cdf_left(x); }, target.jump_points());
}

double ks_distance(const EmpiricalMeasure& emp, const MeasureSpec& target) {
    return ks_distance(
        emp, [&target](double x) { return measure_cdf(target, x); },
        [&target](double x) { return measure_cdf_left(target, x); }, measure_jump_points(target));
}

Rational ks_distance_exact(const std::vector<Rational>& atoms,
                           const std::function<Rational(const Rational&)>& target_cdf,
                           const std::function<Rational(const Rational&)>& target_cdf_left) {
    if (atoms.empty()) throw std::invalid_argument("empirical measure needs atoms");
    std::vector<Rational> candidates(atoms);
    candidates.push_back(0);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    const Rational weight(1, static_cast<unsigned long>(atoms.size()));
    std::vector<Rational> sorted(atoms);
    std::sort(sorted.begin(), sorted.end());
    auto emp_cdf = [&](const Rational& x, bool strict) {
        std::size_t count = 0;
        for (const Rational& a : sorted) {
            if (strict ? a < x : a <= x)
                ++count;
            else
                break;
        }
        return weight * Rational(static_cast<unsigned long>(count));
    };

    Rational best = 0;
    for (const Rational& x : candidates) {
        best = std::max(best, static_cast<Rational>(abs(target_cdf(x) - emp_cdf(x, false))));
        const Rational left = target_cdf_left ? target_cdf_left(x) : target_cdf(x);
        best = std::max(best, static_cast<Rational>(abs(left - emp_cdf(x, true))));
    }
    return best;
}

BigFloat log_moment(const EmpiricalMeasure& emp) {
    if (emp.has_zero_atom())
        throw std::domain_error("log moment diverges for measures with mass at zero");
    BigFloat acc(0);
    for (double a : emp.atoms()) acc += log(BigFloat(a));
    return acc / static_cast<unsigned long>(emp.size());
}

MeanHarmonic mean_and_harmonic(const EmpiricalMeasure& emp) {
    MeanHarmonic out;
    double sum = 0.0, inv_sum = 0.0;
    for (double a : emp.atoms()) {
        sum += a;
        if (a == 0.0)
            out.zero_flag = true;
        else
            inv_sum += 1.0 / a;
    }
    if (emp.extra_zero_mass() > 0.0) out.zero_flag = true;
    const double n = static_cast<double>(emp.size());
    out.mean = (1.0 - emp.extra_zero_mass()) * sum / n;
    out.harmonic_inverse = out.zero_flag ? 0.0 : n / inv_sum;
    return out;
}

std::vector<double> midpoint_sample(const std::function<double(double)>& quantile, unsigned d) {
    if (d == 0) throw std::invalid_argument("discretization needs d >= 1");
    std::vector<double> out;
    out.reserve(d);
    for (unsigned i = d; i >= 1; --i)
        out.push_back(quantile((static_cast<double>(i) - 0.5) / static_cast<double>(d)));
    return out;
}

namespace {

/// Upper quantile of a discrete measure: smallest location with F > t.
Rational discrete_upper_quantile(const MeasureSpec& mu, const Rational& t) {
    Rational acc = 0;
    for (const auto& atom : mu.atoms()) {
        acc += atom.weight;
        if (acc > t) return atom.location;
    }
    return mu.atoms().back().location;
}

}  // namespace

RootMultiset<BigFloat> discretize_measure(const MeasureSpec& mu, unsigned d) {
    if (d == 0) throw std::invalid_argument("discretization needs d >= 1");
    std::vector<BigFloat> roots;
    roots.reserve(d);
    if (mu.kind() == MeasureKind::marchenko_pastur) {
        for (unsigned i = 1; i <= d; ++i)
            roots.emplace_back(mp_quantile((i - 0.5) / static_cast<double>(d)));
    } else {
        for (unsigned i = 1; i <= d; ++i) {
            Rational t(2 * i - 1, 2 * d);
            roots.emplace_back(discrete_upper_quantile(mu, t));
        }
    }
    return RootMultiset<BigFloat>(std::move(roots));
}

RootMultiset<Rational> discretize_discrete_exact(const MeasureSpec& mu, unsigned d) {
    if (mu.kind() == MeasureKind::marchenko_pastur)
        throw std::invalid_argument("exact discretization requires a discrete measure");
    if (d == 0) throw std::invalid_argument("discretization needs d >= 1");
    std::vector<Rational> roots;
    roots.reserve(d);
    for (unsigned i = 1; i <= d; ++i)
        roots.push_back(discrete_upper_quantile(mu, Rational(2 * i - 1, 2 * d)));
    return RootMultiset<Rational>(std::move(roots));
}

void write_empirical_csv(std::ostream& os, const EmpiricalMeasure& emp) {
    os << "index,location\n";
    for (std::size_t i = 0; i < emp.size(); ++i)
        os << i + 1 << ',' << format_decimal(emp.atoms()[i]) << '\n';
}

}  // namespace finfree
