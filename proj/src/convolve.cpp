#include "finfree/convolve.hpp"

#include <cmath>

namespace finfree {

const std::vector<Rational>& LimitRoots::exact() const {
    if (!exact_) throw std::logic_error("limit roots have no exact representation");
    return *exact_;
}

SymmetricProfile multiplicative_convolve(const SymmetricProfile& p, const SymmetricProfile& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("multiplicative convolution requires equal degrees");
    if (p.has_exact() && q.has_exact()) {
        const auto& a = p.e_tilde();
        const auto& b = q.e_tilde();
        std::vector<Rational> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
        return SymmetricProfile::from_e_tilde(std::move(out));
    }
    const auto& la = p.log_e_tilde();
    const auto& lb = q.log_e_tilde();
    std::vector<double> out(la.size());
    for (std::size_t i = 0; i < la.size(); ++i)
        out[i] = (la[i] == kNegInf || lb[i] == kNegInf) ? kNegInf : la[i] + lb[i];
    return SymmetricProfile::from_logs(std::move(out));
}

SymmetricProfile multiplicative_power(const SymmetricProfile& p, unsigned long n) {
    if (n == 0) throw std::invalid_argument("multiplicative power requires n >= 1");
    const auto& logs = p.log_e_tilde();
    std::vector<double> out(logs.size());
    for (std::size_t i = 0; i < logs.size(); ++i)
        out[i] = logs[i] == kNegInf ? kNegInf : static_cast<double>(n) * logs[i];
    return SymmetricProfile::from_logs(std::move(out));
}

SymmetricProfile multiplicative_power_exact(const SymmetricProfile& p, unsigned long n) {
    if (n == 0) throw std::invalid_argument("multiplicative power requires n >= 1");
    const auto& et = p.e_tilde();
    std::vector<Rational> out(et.size());
    for (std::size_t i = 0; i < et.size(); ++i) out[i] = pow_rational(et[i], n);
    return SymmetricProfile::from_e_tilde(std::move(out));
}

BigPoly additive_convolve(const BigPoly& p, const BigPoly& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("additive convolution requires equal degrees");
    if (!p.is_monic() || !q.is_monic())
        throw std::invalid_argument("additive convolution requires monic inputs");
    const unsigned d = static_cast<unsigned>(p.degree());
    if (d == 0) throw std::invalid_argument("additive convolution requires degree >= 1");

    // p_i in p(x) = sum (-1)^i p_i x^{d-i}
    std::vector<Rational> pu(d + 1), qu(d + 1);
    for (unsigned i = 0; i <= d; ++i) {
        pu[i] = (i % 2 == 1) ? Rational(-p.coeffs()[i]) : p.coeffs()[i];
        qu[i] = (i % 2 == 1) ? Rational(-q.coeffs()[i]) : q.coeffs()[i];
    }

    const Integer d_fact = factorial(d);
    std::vector<Rational> out(d + 1, Rational(0));
    for (unsigned i = 0; i <= d; ++i) {
        for (unsigned j = 0; i + j <= d; ++j) {
            const Rational weight(factorial(d - i) * factorial(d - j),
                                  factorial(d - i - j) * d_fact);
            out[i + j] += weight * pu[i] * qu[j];
        }
    }
    for (unsigned m = 0; m <= d; ++m)
        if (m % 2 == 1) out[m] = -out[m];
    return BigPoly(std::move(out));
}

LimitRoots lln_limit_roots(const SymmetricProfile& p) {
    const unsigned d = p.degree();
    const unsigned k = p.zero_count();
    LimitRoots out;
    out.zero_count_ = k;
    out.log_values_.assign(d, kNegInf);
    const auto& logs = p.log_e_tilde();
    for (unsigned i = 1; i <= d - k; ++i) out.log_values_[i - 1] = logs[i] - logs[i - 1];
    if (p.has_exact()) {
        const auto& et = p.e_tilde();
        std::vector<Rational> exact(d, Rational(0));
        for (unsigned i = 1; i <= d - k; ++i) exact[i - 1] = et[i] / et[i - 1];
        out.exact_ = std::move(exact);
    }
    return out;
}

BigPoly lln_limit_polynomial(const SymmetricProfile& p) {
    LimitRoots limits = lln_limit_roots(p);
    return BigPoly::from_roots(limits.exact());
}

SymmetricProfile laguerre_profile(unsigned d) {
    if (d == 0) throw std::invalid_argument("degree must be positive");
    std::vector<Rational> et(d + 1);
    et[0] = 1;
    for (unsigned j = 1; j <= d; ++j) et[j] = et[j - 1] * Rational(d - j + 1, d);
    return SymmetricProfile::from_e_tilde(std::move(et));
}

SymmetricProfile two_root_profile(unsigned d) {
    if (d == 0) throw std::invalid_argument("degree must be positive");
    std::vector<Rational> et(2 * d + 1, Rational(0));
    for (unsigned j = 0; j <= d; ++j)
        et[j] = Rational(binomial(d, j), binomial(2 * d, j));
    return SymmetricProfile::from_e_tilde(std::move(et));
}

}  // namespace finfree
