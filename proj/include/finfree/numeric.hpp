#ifndef FINFREE_NUMERIC_HPP
#define FINFREE_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace finfree {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using BigFloat = boost::multiprecision::mpfr_float;  // runtime-variable precision

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Thrown when a computation cannot reach the requested accuracy within the
/// configured precision/iteration budget. Carries the accuracy actually reached.
class precision_error : public std::runtime_error {
public:
    precision_error(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved_tolerance() const { return achieved_; }

private:
    double achieved_;
};

inline unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(bits * 0.3010299957) + 3;
}

/// RAII guard for the process-wide mpfr working precision (boost stores it in
/// decimal digits). Not safe to construct concurrently; parallel sections must
/// establish one ambient precision before fanning out.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits)
        : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(bits_to_digits10(bits));
    }
    ~PrecisionScope() { BigFloat::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

Rational pow_rational(const Rational& base, unsigned long exponent);

/// Parses "p/q", "p", or "-p/q" (exact, arbitrary size).
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& value);

/// Natural log of a non-negative rational as a double; 0 maps to -inf.
double log_rational(const Rational& value);

/// Natural log of a non-negative rational at the ambient BigFloat precision.
BigFloat log_rational_big(const Rational& value);

/// Decimal rendering with the given number of significant digits.
std::string format_decimal(const BigFloat& value, unsigned digits = 30);
std::string format_decimal(double value, unsigned digits = 17);

}  // namespace finfree

#endif
