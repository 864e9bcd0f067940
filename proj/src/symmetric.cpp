#include "finfree/symmetric.hpp"

#include <cmath>

namespace finfree {

namespace {

unsigned zero_suffix_length_exact(const std::vector<Rational>& e_tilde) {
    const unsigned d = static_cast<unsigned>(e_tilde.size()) - 1;
    unsigned k = 0;
    while (k < d && e_tilde[d - k] == 0) ++k;
    return k;
}

void check_profile_shape(const std::vector<Rational>& e_tilde) {
    if (e_tilde.empty() || e_tilde.size() < 2)
        throw std::invalid_argument("profile needs degree >= 1");
    if (e_tilde[0] != 1) throw std::invalid_argument("profile requires e~_0 = 1");
    const unsigned d = static_cast<unsigned>(e_tilde.size()) - 1;
    const unsigned k = zero_suffix_length_exact(e_tilde);
    for (unsigned i = 0; i <= d - k; ++i)
        if (e_tilde[i] <= 0)
            throw std::invalid_argument("profile values must be strictly positive before the zero suffix");
    // Newton's inequality: e~_i^2 >= e~_{i-1} e~_{i+1} on the positive block.
    // A violation means the data cannot come from a real-rooted polynomial.
    for (unsigned i = 1; i + 1 <= d - k; ++i)
        if (e_tilde[i] * e_tilde[i] < e_tilde[i - 1] * e_tilde[i + 1])
            throw std::invalid_argument("profile violates Newton's inequality (not real-rooted)");
}

void check_log_shape(const std::vector<double>& logs) {
    if (logs.size() < 2) throw std::invalid_argument("profile needs degree >= 1");
    if (logs[0] != 0.0) throw std::invalid_argument("profile requires log e~_0 = 0");
    bool in_suffix = false;
    for (double v : logs) {
        if (std::isnan(v)) throw std::invalid_argument("NaN in log profile");
        if (v == kNegInf) {
            in_suffix = true;
        } else if (in_suffix) {
            throw std::invalid_argument("zero suffix of profile must be terminal");
        }
    }
}

}  // namespace

SymmetricProfile SymmetricProfile::from_e_tilde(std::vector<Rational> e_tilde) {
    check_profile_shape(e_tilde);
    SymmetricProfile p;
    p.zero_count_ = zero_suffix_length_exact(e_tilde);
    p.log_.reserve(e_tilde.size());
    for (const Rational& v : e_tilde) p.log_.push_back(log_rational(v));
    p.exact_ = std::move(e_tilde);
    return p;
}

SymmetricProfile SymmetricProfile::from_logs(std::vector<double> log_e_tilde) {
    check_log_shape(log_e_tilde);
    SymmetricProfile p;
    p.zero_count_ = 0;
    for (auto it = log_e_tilde.rbegin(); it != log_e_tilde.rend() && *it == kNegInf; ++it)
        ++p.zero_count_;
    p.log_ = std::move(log_e_tilde);
    return p;
}

const std::vector<Rational>& SymmetricProfile::e_tilde() const {
    if (!exact_) throw std::logic_error("profile has no exact representation");
    return *exact_;
}

SymmetricProfile profile_from_roots(const RootMultiset<Rational>& roots) {
    const unsigned d = roots.degree();
    std::vector<Rational> e = elementary_symmetric(roots);
    for (unsigned i = 0; i <= d; ++i) e[i] /= Rational(binomial(d, i));
    return SymmetricProfile::from_e_tilde(std::move(e));
}

SymmetricProfile profile_from_roots(const RootMultiset<BigFloat>& roots) {
    const unsigned d = roots.degree();
    unsigned work_digits = bits_to_digits10(256);
    for (const BigFloat& r : roots.values())
        work_digits = std::max(work_digits, r.precision());

    std::vector<BigFloat> e(d + 1, BigFloat(0, work_digits));
    e[0] = BigFloat(1, work_digits);
    std::size_t used = 0;
    for (const BigFloat& lambda : roots) {
        ++used;
        for (std::size_t i = used; i >= 1; --i) e[i] += lambda * e[i - 1];
    }
    std::vector<double> logs(d + 1);
    logs[0] = 0.0;
    for (unsigned i = 1; i <= d; ++i) {
        if (e[i] == 0) {
            logs[i] = kNegInf;
        } else {
            BigFloat l = log(e[i]) - log_rational_big(Rational(binomial(d, i)));
            logs[i] = l.convert_to<double>();
        }
    }
    return SymmetricProfile::from_logs(std::move(logs));
}

BigPoly profile_to_coefficients(const SymmetricProfile& profile) {
    const auto& et = profile.e_tilde();
    const unsigned d = profile.degree();
    std::vector<Rational> c(d + 1);
    for (unsigned i = 0; i <= d; ++i) {
        c[i] = Rational(binomial(d, i)) * et[i];
        if (i % 2 == 1) c[i] = -c[i];
    }
    return BigPoly(std::move(c));
}

FloatPoly to_float_poly(const SymmetricProfile& profile, unsigned precision_bits) {
    const unsigned d = profile.degree();
    const auto& logs = profile.log_e_tilde();
    // mpfr exponents are bounded; far below that, doubles for the log values
    // themselves stop being meaningful.
    constexpr double exponent_budget = 1e15;
    const unsigned digits = bits_to_digits10(precision_bits);
    std::vector<BigFloat> c(d + 1, BigFloat(0, digits));
    for (unsigned i = 0; i <= d; ++i) {
        if (logs[i] == kNegInf) continue;
        if (std::abs(logs[i]) > exponent_budget)
            throw precision_error("profile magnitude exceeds float exponent budget", std::abs(logs[i]));
        BigFloat v = exp(BigFloat(logs[i], digits)) * BigFloat(binomial(d, i));
        c[i] = (i % 2 == 1) ? BigFloat(-v) : v;
    }
    return FloatPoly(std::move(c));
}

SymmetricProfile coefficients_to_profile(const BigPoly& poly) {
    if (!poly.is_monic()) throw std::invalid_argument("profile recovery requires a monic polynomial");
    const int d = poly.degree();
    if (d < 1) throw std::invalid_argument("profile recovery requires degree >= 1");
    std::vector<Rational> et(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        Rational v = poly.coeffs()[static_cast<std::size_t>(i)];
        if (i % 2 == 1) v = -v;
        if (v < 0)
            throw std::invalid_argument("coefficient signs do not alternate weakly");
        et[static_cast<std::size_t>(i)] = v / Rational(binomial(static_cast<unsigned>(d), static_cast<unsigned>(i)));
    }
    return SymmetricProfile::from_e_tilde(std::move(et));  // enforces the zero-suffix rule
}

namespace {

template <class Scalar>
RootMultiset<BigFloat> power_map_log_domain(const std::vector<Scalar>& values, const Rational& alpha) {
    if (alpha <= 0) throw std::invalid_argument("root power map requires alpha > 0");
    BigFloat a(alpha);
    std::vector<BigFloat> out;
    out.reserve(values.size());
    for (const Scalar& r : values) {
        if (r == Scalar(0)) {
            out.emplace_back(0);
        } else {
            BigFloat x(r);
            out.push_back(exp(a * log(x)));
        }
    }
    return RootMultiset<BigFloat>(std::move(out));
}

}  // namespace

RootMultiset<BigFloat> root_power_map(const RootMultiset<BigFloat>& roots, const Rational& alpha) {
    return power_map_log_domain(roots.values(), alpha);
}

RootMultiset<BigFloat> root_power_map(const RootMultiset<Rational>& roots, const Rational& alpha) {
    return power_map_log_domain(roots.values(), alpha);
}

RootMultiset<Rational> root_power_map(const RootMultiset<Rational>& roots, unsigned long exponent) {
    if (exponent == 0) throw std::invalid_argument("root power map requires a positive exponent");
    std::vector<Rational> out;
    out.reserve(roots.degree());
    for (const Rational& r : roots) out.push_back(pow_rational(r, exponent));
    return RootMultiset<Rational>(std::move(out));
}

}  // namespace finfree
