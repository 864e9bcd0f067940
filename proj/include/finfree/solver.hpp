#ifndef FINFREE_SOLVER_HPP
#define FINFREE_SOLVER_HPP

#include <utility>
#include <vector>

#include "finfree/convolve.hpp"
#include "finfree/polynomial.hpp"
#include "finfree/symmetric.hpp"

namespace finfree {

/// Sturm sign-variation machinery over exact integers. The chain is built from
/// the square-free part, so counts are counts of distinct roots. Endpoint
/// semantics are half-open: count_distinct(a, b) is the number of distinct
/// real roots in (a, b].
class SturmChain {
public:
    explicit SturmChain(const BigPoly& poly);

    int count_distinct(const Rational& a, const Rational& b) const;

    /// Degree of gcd(p, p'); zero iff p is square-free.
    int gcd_degree() const { return gcd_degree_; }
    bool square_free() const { return gcd_degree_ == 0; }

private:
    int sign_variations_at(const Rational& x) const;

    std::vector<IntPoly> chain_;  // chain of the square-free part
    int gcd_degree_ = 0;
};

/// Distinct real roots of an exact monic polynomial in (a, b].
int sturm_count(const BigPoly& poly, const Rational& a, const Rational& b);

/// Yun decomposition p = prod f_m^m with the f_m square-free and coprime,
/// each normalized monic. Pairs are (factor, multiplicity).
std::vector<std::pair<BigPoly, unsigned>> square_free_decomposition(const BigPoly& poly);

/// Interval certified to contain `count` roots (with multiplicity) in
/// (lower, upper]; lower == upper encodes an exactly known rational root.
struct RootBracket {
    Rational lower;
    Rational upper;
    int count = 1;
};

/// A-priori enclosures for the ordered roots of the n-fold multiplicative
/// power: entry i-1 brackets the i-th largest root inside
/// [R_i^n / binom(d,i-1), binom(d,i) R_i^n]. min_disjoint_n is the smallest n
/// making consecutive brackets disjoint (0 when that never happens, i.e. all
/// seed roots coincide).
struct PowerBrackets {
    std::vector<RootBracket> brackets;  // positive block only, descending
    unsigned long min_disjoint_n = 0;
};

PowerBrackets power_root_brackets(const SymmetricProfile& profile, unsigned long n);

struct SolveOptions {
    double rel_tol = 1e-30;
    unsigned precision_bits = 0;  // 0: derive from the input magnitudes
    unsigned max_bisection_steps = 20000;
    // Use the already-established process-wide precision instead of opening a
    // scope; required when solving from worker threads (the default is global).
    bool assume_ambient_precision = false;
};

/// One distinct root with its certified rational enclosure. The enclosure
/// satisfies upper - lower <= rel_tol * lower (positive roots) or is exact.
struct CertifiedRoot {
    Rational lower;
    Rational upper;
    unsigned multiplicity = 1;
    BigFloat value;
};

/// All roots of a monic, real-rooted, non-negative-rooted exact polynomial,
/// descending. Certification: exact sign evaluation plus Sturm counting; the
/// only float use is choosing interior bisection points.
std::vector<CertifiedRoot> isolate_roots(const BigPoly& poly, const SolveOptions& opts = {});

/// Working precision policy for the n-fold power of a profile.
unsigned solve_precision_bits(const SymmetricProfile& profile, unsigned long n);

/// Roots of the n-fold multiplicative power of an exact profile, each to
/// relative tolerance rel_tol, with multiplicity expanded.
RootMultiset<BigFloat> roots_of_power(const SymmetricProfile& profile, unsigned long n,
                                      double rel_tol = 1e-30);

/// Same computation, exposing the certified enclosures.
std::vector<CertifiedRoot> roots_of_power_certified(const SymmetricProfile& profile,
                                                    unsigned long n,
                                                    const SolveOptions& opts = {});

/// exp(log(lambda)/n) per root, zero fixed at zero.
RootMultiset<BigFloat> nth_root_of_roots(const RootMultiset<BigFloat>& roots, unsigned long n);

}  // namespace finfree

#endif
