#include "finfree/solver.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>

namespace finfree {

namespace {

Integer poly_content(const IntPoly& f) {
    Integer g = 0;
    for (const Integer& c : f.coeffs()) g = gcd(g, c);
    return g;  // non-negative
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    Integer g = poly_content(f);
    std::vector<Integer> c(f.coeffs());
    for (Integer& v : c) v /= g;
    return IntPoly(std::move(c));
}

IntPoly to_int_primitive(const BigPoly& p) {
    Integer common_den = 1;
    for (const Rational& c : p.coeffs()) common_den = lcm(common_den, denominator(c));
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs())
        out.push_back(numerator(c) * (common_den / denominator(c)));
    return primitive_part(IntPoly(std::move(out)));
}

BigPoly to_monic_rational(const IntPoly& f) {
    std::vector<Rational> c;
    c.reserve(f.coeffs().size());
    for (const Integer& v : f.coeffs()) c.emplace_back(v, f.leading());
    return BigPoly(std::move(c));
}

/// Primitive part of -(a mod b), with the sign handled so that the result is a
/// positive multiple of the true negated remainder (required for Sturm chains).
IntPoly neg_rem_primitive(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r(a.coeffs());
    const auto& bc = b.coeffs();
    const int db = b.degree();
    const Integer& lcb = b.leading();
    unsigned long mults = 0;

    auto deg_of = [](const std::vector<Integer>& v) {
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        return static_cast<int>(v.size() - lead) - 1;
    };

    int dr = deg_of(r);
    while (dr >= db) {
        const std::size_t off = r.size() - static_cast<std::size_t>(dr) - 1;
        Integer lead = r[off];
        for (std::size_t i = off; i < r.size(); ++i) r[i] *= lcb;
        for (int j = 0; j <= db; ++j)
            r[off + static_cast<std::size_t>(j)] -= lead * bc[static_cast<std::size_t>(j)];
        ++mults;
        dr = deg_of(r);
    }
    // r now equals lcb^mults * (a mod b)
    std::vector<Integer> trimmed;
    if (dr >= 0) trimmed.assign(r.end() - (dr + 1), r.end());
    IntPoly rem(std::move(trimmed));
    const bool lc_power_negative = (lcb < 0) && (mults % 2 == 1);
    return primitive_part(lc_power_negative ? rem : -rem);
}

/// Remainder chain from (f, f'); the last nonzero entry is gcd(f, f') up to a
/// positive constant.
std::vector<IntPoly> remainder_chain(const IntPoly& f) {
    std::vector<IntPoly> chain;
    chain.push_back(f);
    IntPoly df = primitive_part(f.derivative());
    if (df.is_zero()) return chain;
    chain.push_back(std::move(df));
    while (true) {
        const IntPoly& prev = chain[chain.size() - 2];
        const IntPoly& last = chain.back();
        if (last.degree() == 0) break;
        IntPoly next = neg_rem_primitive(prev, last);
        if (next.is_zero()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

int sign_of(const Integer& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

/// Exact sign of f at u/v via the homogenized integer Horner scheme.
int sign_at(const IntPoly& f, const Rational& x) {
    if (f.is_zero()) return 0;
    const Integer u = numerator(x);
    const Integer v = denominator(x);  // > 0 in canonical form
    const auto& c = f.coeffs();
    Integer acc = c[0];
    Integer vpow = 1;
    for (std::size_t j = 1; j < c.size(); ++j) {
        vpow *= v;
        acc = acc * u + c[j] * vpow;
    }
    return sign_of(acc);
}

int sign_at(const BigPoly& f, const Rational& x) {
    Rational val = f.eval(x);
    return val == 0 ? 0 : (val > 0 ? 1 : -1);
}

IntPoly int_gcd_poly(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) return primitive_part(a);
    std::vector<IntPoly> chain;
    chain.push_back(a);
    chain.push_back(b);
    while (true) {
        const IntPoly& prev = chain[chain.size() - 2];
        const IntPoly& last = chain.back();
        if (last.degree() == 0) return IntPoly({Integer(1)});
        IntPoly next = neg_rem_primitive(prev, last);
        if (next.is_zero()) break;
        chain.push_back(std::move(next));
    }
    IntPoly g = chain.back();
    if (g.leading() < 0) g = -g;
    return g;
}

BigPoly poly_gcd_monic(const BigPoly& a, const BigPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return to_monic_rational(int_gcd_poly(to_int_primitive(a), to_int_primitive(b)));
}

}  // namespace

SturmChain::SturmChain(const BigPoly& poly) {
    if (poly.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
    IntPoly f = to_int_primitive(poly);
    if (f.degree() == 0) {
        gcd_degree_ = 0;
        chain_ = {std::move(f)};
        return;
    }
    std::vector<IntPoly> chain = remainder_chain(f);
    const IntPoly& tail = chain.back();
    gcd_degree_ = chain.size() >= 2 ? tail.degree() : f.degree();
    if (gcd_degree_ > 0) {
        // Rebuild from the square-free part so the zero-skip variation count
        // stays right-continuous at multiple roots.
        BigPoly sf = poly_exact_div(to_monic_rational(f), to_monic_rational(tail));
        chain_ = remainder_chain(to_int_primitive(sf));
    } else {
        chain_ = std::move(chain);
    }
}

int SturmChain::sign_variations_at(const Rational& x) const {
    int variations = 0;
    int prev = 0;
    for (const IntPoly& f : chain_) {
        int s = sign_at(f, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int SturmChain::count_distinct(const Rational& a, const Rational& b) const {
    if (!(a < b)) throw std::invalid_argument("Sturm count requires a < b");
    if (chain_.size() == 1) return 0;  // constant polynomial
    return sign_variations_at(a) - sign_variations_at(b);
}

int sturm_count(const BigPoly& poly, const Rational& a, const Rational& b) {
    return SturmChain(poly).count_distinct(a, b);
}

std::vector<std::pair<BigPoly, unsigned>> square_free_decomposition(const BigPoly& poly) {
    if (!poly.is_monic()) throw std::invalid_argument("square-free decomposition requires a monic polynomial");
    if (poly.degree() < 1) throw std::invalid_argument("square-free decomposition requires degree >= 1");

    BigPoly dp = poly.derivative();
    BigPoly g = poly_gcd_monic(poly, dp);
    if (g.degree() == 0) return {{poly, 1u}};

    // Yun's algorithm.
    std::vector<std::pair<BigPoly, unsigned>> factors;
    BigPoly w = poly_exact_div(poly, g);
    BigPoly y = poly_exact_div(dp, g);
    BigPoly z = y - w.derivative();
    unsigned i = 1;
    while (w.degree() > 0) {
        BigPoly h = poly_gcd_monic(w, z);
        if (h.degree() > 0) factors.emplace_back(h, i);
        w = poly_exact_div(w, h);
        y = poly_exact_div(z, h);
        z = y - w.derivative();
        ++i;
    }
    return factors;
}

namespace {

Rational cauchy_upper_bound(const BigPoly& f) {
    Rational m = 0;
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        m = std::max(m, static_cast<Rational>(abs(f.coeffs()[i])));
    return 1 + m;
}

Rational positive_root_lower_bound(const BigPoly& f) {
    // Bound for 1/root from the reversed polynomial; constant term nonzero.
    const Rational& c0 = f.coeffs().back();
    Rational m = 0;
    for (std::size_t i = 0; i + 1 < f.coeffs().size(); ++i)
        m = std::max(m, static_cast<Rational>(abs(f.coeffs()[i] / c0)));
    return Rational(1) / (1 + m);
}

Rational geometric_midpoint(const Rational& a, const Rational& b) {
    BigFloat mid = sqrt(BigFloat(a) * BigFloat(b));
    Rational m(mid);
    if (m <= a || m >= b) m = (a + b) / 2;
    return m;
}

/// Interior split point where f does not vanish.
Rational split_point(const BigPoly& f, const Rational& a, const Rational& b) {
    Rational mid = geometric_midpoint(a, b);
    if (sign_at(f, mid) != 0) return mid;
    const int d = f.degree();
    for (int j = 1; j <= d + 1; ++j) {
        Rational cand = mid + (b - mid) * Rational(j, 2 * (d + 2));
        if (cand > a && cand < b && sign_at(f, cand) != 0) return cand;
    }
    throw std::logic_error("could not find a non-root split point");
}

struct Enclosure {
    Rational lower;
    Rational upper;
};

Enclosure refine_bracket(const BigPoly& f, Rational a, Rational b, const Rational& rel_tol,
                         unsigned max_steps) {
    int sa = sign_at(f, a);
    int sb = sign_at(f, b);
    if (sb == 0) return {b, b};
    if (sa == 0 || sa == sb)
        throw std::logic_error("refinement bracket without sign change");
    for (unsigned step = 0; step < max_steps; ++step) {
        if (b - a <= rel_tol * a) return {a, b};
        Rational mid = geometric_midpoint(a, b);
        int s = sign_at(f, mid);
        if (s == 0) return {mid, mid};
        if (s == sa)
            a = mid;
        else
            b = mid;
    }
    double achieved = Rational((b - a) / a).convert_to<double>();
    throw precision_error("bisection budget exhausted", achieved);
}

/// Isolating brackets for all roots of a square-free positive-rooted factor.
/// `hint` carries a-priori disjoint brackets; it is abandoned wholesale on any
/// verification failure.
std::vector<Enclosure> isolate_square_free(const BigPoly& f, const Rational& rel_tol,
                                           unsigned max_steps,
                                           const std::vector<RootBracket>* hint) {
    std::vector<Enclosure> out;
    const int d = f.degree();
    if (d < 1) return out;

    SturmChain chain(f);
    const Rational hi = cauchy_upper_bound(f);
    const Rational lo = positive_root_lower_bound(f) / 2;

    std::deque<std::pair<Enclosure, int>> work;

    bool seeded = false;
    if (hint && static_cast<int>(hint->size()) == d) {
        bool ok = true;
        for (const RootBracket& rb : *hint) {
            if (!(rb.lower < rb.upper) || rb.lower <= 0 || sign_at(f, rb.lower) == 0 ||
                sign_at(f, rb.upper) == 0 || chain.count_distinct(rb.lower, rb.upper) != 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (const RootBracket& rb : *hint) work.push_back({{rb.lower, rb.upper}, 1});
            seeded = true;
        }
    }
    if (!seeded) {
        int total = chain.count_distinct(lo, hi);
        if (total != d)
            throw std::logic_error("positive-root count mismatch; input not non-negative-rooted?");
        work.push_back({{lo, hi}, total});
    }

    while (!work.empty()) {
        auto [iv, count] = work.front();
        work.pop_front();
        if (count == 0) continue;
        if (count == 1) {
            out.push_back(refine_bracket(f, iv.lower, iv.upper, rel_tol, max_steps));
            continue;
        }
        Rational mid = split_point(f, iv.lower, iv.upper);
        int left = chain.count_distinct(iv.lower, mid);
        work.push_back({{iv.lower, mid}, left});
        work.push_back({{mid, iv.upper}, count - left});
    }

    std::sort(out.begin(), out.end(),
              [](const Enclosure& x, const Enclosure& y) { return x.lower > y.lower; });
    return out;
}

unsigned default_precision_for(const BigPoly& poly) {
    double max_mag = 0.0;
    for (const Rational& c : poly.coeffs()) {
        if (c == 0) continue;
        max_mag = std::max(max_mag, std::abs(log_rational(static_cast<Rational>(abs(c)))));
    }
    constexpr double log2e = 1.4426950408889634;
    double bits = 2.0 * max_mag * log2e + 64.0;
    return std::max(128u, static_cast<unsigned>(std::ceil(bits)));
}

std::vector<CertifiedRoot> isolate_roots_impl(const BigPoly& poly, const SolveOptions& opts,
                                              const std::vector<RootBracket>* hint) {
    if (!poly.is_monic()) throw std::invalid_argument("root isolation requires a monic polynomial");
    if (poly.degree() < 1) throw std::invalid_argument("root isolation requires degree >= 1");
    if (!(opts.rel_tol > 0.0 && opts.rel_tol < 1.0))
        throw std::invalid_argument("rel_tol must lie in (0, 1)");

    std::optional<PrecisionScope> scope;
    if (!opts.assume_ambient_precision)
        scope.emplace(opts.precision_bits ? opts.precision_bits : default_precision_for(poly));
    const Rational rel_tol(opts.rel_tol);

    // Weak sign alternation is necessary for all-non-negative real roots.
    for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
        Rational v = poly.coeffs()[i];
        if (i % 2 == 1) v = -v;
        if (v < 0)
            throw std::invalid_argument("coefficient signs do not weakly alternate; roots not all non-negative");
    }

    // Factor out x^k: zero roots are structural.
    unsigned k = 0;
    while (static_cast<int>(k) < poly.degree() && poly.coeff_of(k) == 0) ++k;

    std::vector<CertifiedRoot> out;
    if (k > 0) {
        CertifiedRoot zero;
        zero.lower = zero.upper = 0;
        zero.multiplicity = k;
        zero.value = BigFloat(0);
        out.push_back(std::move(zero));
    }
    const unsigned d = static_cast<unsigned>(poly.degree());
    if (k == d) return out;

    std::vector<Rational> shifted(poly.coeffs().begin(),
                                  poly.coeffs().end() - static_cast<long>(k));
    BigPoly positive_part{std::move(shifted)};

    auto factors = square_free_decomposition(positive_part);
    unsigned degree_check = 0;
    for (const auto& [f, mult] : factors) degree_check += mult * static_cast<unsigned>(f.degree());
    if (degree_check != d - k) throw std::logic_error("square-free decomposition degree mismatch");

    const bool single_simple_factor = factors.size() == 1 && factors[0].second == 1;
    for (const auto& [f, mult] : factors) {
        const std::vector<RootBracket>* factor_hint =
            (single_simple_factor && hint) ? hint : nullptr;
        for (const Enclosure& e : isolate_square_free(f, rel_tol, opts.max_bisection_steps, factor_hint)) {
            CertifiedRoot root;
            root.lower = e.lower;
            root.upper = e.upper;
            root.multiplicity = mult;
            root.value = BigFloat(Rational((e.lower + e.upper) / 2));
            out.push_back(std::move(root));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CertifiedRoot& x, const CertifiedRoot& y) { return x.lower > y.lower; });
    return out;
}

}  // namespace

std::vector<CertifiedRoot> isolate_roots(const BigPoly& poly, const SolveOptions& opts) {
    return isolate_roots_impl(poly, opts, nullptr);
}

PowerBrackets power_root_brackets(const SymmetricProfile& profile, unsigned long n) {
    if (n == 0) throw std::invalid_argument("bracket computation requires n >= 1");
    LimitRoots limits = lln_limit_roots(profile);
    const auto& r = limits.exact();
    const unsigned d = profile.degree();
    const unsigned positive = d - profile.zero_count();

    PowerBrackets out;
    for (unsigned i = 1; i <= positive; ++i) {
        Rational rn = pow_rational(r[i - 1], n);
        RootBracket rb;
        rb.lower = rn / Rational(binomial(d, i - 1));
        rb.upper = rn * Rational(binomial(d, i));
        rb.count = 1;
        out.brackets.push_back(std::move(rb));
    }

    // Smallest n making consecutive brackets disjoint.
    auto disjoint_at = [&](unsigned long m) {
        for (unsigned i = 1; i < positive; ++i) {
            Rational lower_i = pow_rational(r[i - 1], m) / Rational(binomial(d, i - 1));
            Rational upper_next = pow_rational(r[i], m) * Rational(binomial(d, i + 1));
            if (!(upper_next < lower_i)) return false;
        }
        return true;
    };

    unsigned long needed = 1;
    bool possible = true;
    for (unsigned i = 1; i < positive; ++i) {
        if (r[i - 1] == r[i]) {
            possible = false;
            break;
        }
        double gap = log_rational(r[i - 1]) - log_rational(r[i]);
        double thresh = (log_rational(Rational(binomial(d, i + 1))) +
                         log_rational(Rational(binomial(d, i - 1)))) / gap;
        unsigned long ni = thresh <= 0 ? 1 : static_cast<unsigned long>(std::floor(thresh)) + 1;
        needed = std::max(needed, ni);
    }
    if (!possible || positive == 0) {
        out.min_disjoint_n = positive <= 1 ? 1 : 0;
        return out;
    }
    constexpr unsigned long exact_cap = 65536;
    if (needed <= exact_cap) {
        while (needed > 1 && disjoint_at(needed - 1)) --needed;
        while (needed <= exact_cap && !disjoint_at(needed)) ++needed;
    }
    out.min_disjoint_n = needed;
    return out;
}

unsigned solve_precision_bits(const SymmetricProfile& profile, unsigned long n) {
    double max_mag = 0.0;
    for (double l : profile.log_e_tilde())
        if (l != kNegInf) max_mag = std::max(max_mag, std::abs(l));
    constexpr double log2e = 1.4426950408889634;
    double bits = 2.0 * static_cast<double>(n) * max_mag * log2e + 64.0;
    return std::max(128u, static_cast<unsigned>(std::ceil(bits)));
}

std::vector<CertifiedRoot> roots_of_power_certified(const SymmetricProfile& profile,
                                                    unsigned long n, const SolveOptions& opts) {
    if (!profile.has_exact())
        throw std::invalid_argument("power root extraction requires an exact profile");
    if (n == 0) throw std::invalid_argument("power root extraction requires n >= 1");

    SolveOptions local = opts;
    std::optional<PrecisionScope> scope;
    if (!local.assume_ambient_precision) {
        if (local.precision_bits == 0) local.precision_bits = solve_precision_bits(profile, n);
        scope.emplace(local.precision_bits);
        local.assume_ambient_precision = true;
    }

    BigPoly poly = profile_to_coefficients(multiplicative_power_exact(profile, n));

    PowerBrackets pb = power_root_brackets(profile, n);
    const bool hinted = pb.min_disjoint_n != 0 && n >= pb.min_disjoint_n;
    return isolate_roots_impl(poly, local, hinted ? &pb.brackets : nullptr);
}

RootMultiset<BigFloat> roots_of_power(const SymmetricProfile& profile, unsigned long n,
                                      double rel_tol) {
    SolveOptions opts;
    opts.rel_tol = rel_tol;
    auto certified = roots_of_power_certified(profile, n, opts);
    std::vector<BigFloat> values;
    for (const CertifiedRoot& root : certified)
        for (unsigned m = 0; m < root.multiplicity; ++m) values.push_back(root.value);
    return RootMultiset<BigFloat>(std::move(values));
}

RootMultiset<BigFloat> nth_root_of_roots(const RootMultiset<BigFloat>& roots, unsigned long n) {
    if (n == 0) throw std::invalid_argument("n-th root requires n >= 1");
    std::vector<BigFloat> out;
    out.reserve(roots.degree());
    for (const BigFloat& r : roots)
        out.push_back(r == 0 ? BigFloat(0) : BigFloat(exp(log(r) / n)));
    return RootMultiset<BigFloat>(std::move(out));
}

}  // namespace finfree
