#include "finfree/numeric.hpp"

#include <cmath>
#include <sstream>

namespace finfree {

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer result;
    mpz_bin_uiui(result.backend().data(), n, k);
    return result;
}

Integer factorial(unsigned n) {
    Integer result;
    mpz_fac_ui(result.backend().data(), n);
    return result;
}

Rational pow_rational(const Rational& base, unsigned long exponent) {
    Rational result;
    mpz_pow_ui(mpq_numref(result.backend().data()),
               mpq_numref(base.backend().data()), exponent);
    mpz_pow_ui(mpq_denref(result.backend().data()),
               mpq_denref(base.backend().data()), exponent);
    return result;  // base canonical => powers canonical
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational value(text);
        if (denominator(value) == 0) throw std::invalid_argument("zero denominator");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
}

std::string rational_to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

double log_rational(const Rational& value) {
    if (value < 0) throw std::domain_error("log of negative rational");
    if (value == 0) return kNegInf;
    // log(num) - log(den) via mpz log2 with 64-bit mantissa accuracy.
    signed long exp_num = 0;
    signed long exp_den = 0;
    double mant_num = mpz_get_d_2exp(&exp_num, numerator(value).backend().data());
    double mant_den = mpz_get_d_2exp(&exp_den, denominator(value).backend().data());
    constexpr double ln2 = 0.693147180559945309417232121458;
    return std::log(mant_num) - std::log(mant_den) +
           ln2 * static_cast<double>(exp_num - exp_den);
}

BigFloat log_rational_big(const Rational& value) {
    if (value < 0) throw std::domain_error("log of negative rational");
    if (value == 0) {
        BigFloat result(0);
        result = -std::numeric_limits<double>::infinity();
        return result;
    }
    BigFloat num(numerator(value));
    BigFloat den(denominator(value));
    return log(num) - log(den);
}

std::string format_decimal(const BigFloat& value, unsigned digits) {
    return value.str(digits);
}

std::string format_decimal(double value, unsigned digits) {
    std::ostringstream os;
    os.precision(digits);
    os << value;
    return os.str();
}

}  // namespace finfree
