#include "finfree/experiments.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace finfree {

namespace {

/// Runs fn(i) for i in [0, count) on a small pool; results land by index so
/// output order never depends on scheduling. The ambient BigFloat precision
/// must be established before calling (it is process-global).
template <class Out, class Fn>
std::vector<Out> parallel_map(std::size_t count, Fn&& fn) {
    std::vector<Out> out(count);
    if (count == 0) return out;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

enum class Containment { inside, boundary, outside };

Containment bracket_containment(const Rational& lo, const Rational& hi, const RootBracket& rb) {
    if (lo >= rb.lower && hi <= rb.upper) return Containment::inside;
    if (hi < rb.lower || lo > rb.upper) return Containment::outside;
    return Containment::boundary;
}

void require_strictly_increasing(const std::vector<unsigned long>& schedule) {
    if (schedule.empty()) throw std::invalid_argument("schedule must be non-empty");
    for (std::size_t i = 0; i + 1 < schedule.size(); ++i)
        if (!(schedule[i] < schedule[i + 1]))
            throw std::invalid_argument("schedule must be strictly increasing");
}

constexpr double kPi = 3.14159265358979323846264338328;

/// tanh-sinh quadrature of f over (0, 1); tolerates endpoint singularities of
/// log type.
template <class Fn>
double tanh_sinh_unit(Fn&& f, double tol) {
    auto node = [](double t, double& x, double& w) {
        const double s = std::sinh(t);
        x = 0.5 * (1.0 + std::tanh(0.5 * kPi * s));
        const double ch = std::cosh(0.5 * kPi * s);
        w = 0.25 * kPi * std::cosh(t) / (ch * ch);
    };
    auto pair_term = [&](double t) {
        double x, w, term = 0.0;
        node(t, x, w);
        if (x > 0.0 && x < 1.0) term += f(x) * w;
        node(-t, x, w);
        if (x > 0.0 && x < 1.0) term += f(x) * w;
        return term;
    };

    double h = 1.0;
    double x, w;
    node(0.0, x, w);
    double sum = f(x) * w;
    for (int k = 1; k * h <= 7.5; ++k) sum += pair_term(k * h);
    double integral = sum * h;

    for (int level = 1; level <= 14; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (int k = 1; k * h <= 7.5; k += 2) add += pair_term(k * h);
        sum += add;
        const double next = sum * h;
        if (level >= 5 && std::abs(next - integral) <= tol * std::max(1.0, std::abs(next)))
            return next;
        integral = next;
    }
    return integral;
}

}  // namespace

double phi_log_moment(const MeasureSpec& mu) {
    if (mu.zero_mass() != 0)
        throw std::domain_error("log moment of the limit law diverges when the measure charges 0");
    // Clamping the abscissa keeps t - 1 representable; the bias is far below
    // the quadrature tolerance since log Q is integrable at both ends.
    static constexpr double edge = 1e-12;
    return tanh_sinh_unit(
        [&mu](double t) {
            return std::log(phi_quantile(mu, std::min(1.0 - edge, std::max(edge, t))));
        },
        1e-12);
}

LlnResult run_lln(const SymmetricProfile& profile) {
    LlnResult out{lln_limit_roots(profile), BigPoly()};
    out.limit_polynomial = lln_limit_polynomial(profile);
    return out;
}

Table lln_table(const LlnResult& result) {
    Table t;
    t.header = {"i", "limit_root_exact", "limit_root_decimal"};
    const auto& exact = result.limits.exact();
    PrecisionScope scope(128);
    for (std::size_t i = 0; i < exact.size(); ++i) {
        t.rows.push_back({std::to_string(i + 1), rational_to_string(exact[i]),
                          format_decimal(BigFloat(exact[i]), 30)});
    }
    return t;
}

std::vector<ConvergeRow> run_converge(const SymmetricProfile& seed,
                                      const std::vector<unsigned long>& n_schedule,
                                      const SolveOptions& opts) {
    require_strictly_increasing(n_schedule);
    if (!seed.has_exact())
        throw std::invalid_argument("convergence study requires an exact seed profile");

    const unsigned bits = opts.precision_bits
                              ? opts.precision_bits
                              : solve_precision_bits(seed, n_schedule.back());
    PrecisionScope scope(bits);

    const unsigned d = seed.degree();
    const unsigned k = seed.zero_count();
    LimitRoots limits = lln_limit_roots(seed);

    auto rows_for = [&](std::size_t idx) {
        const unsigned long n = n_schedule[idx];
        SolveOptions local = opts;
        local.precision_bits = 0;
        local.assume_ambient_precision = true;

        auto certified = roots_of_power_certified(seed, n, local);
        PowerBrackets pb = power_root_brackets(seed, n);

        // multiplicity-expanded view, descending
        std::vector<const CertifiedRoot*> flat;
        for (const CertifiedRoot& r : certified)
            for (unsigned m = 0; m < r.multiplicity; ++m) flat.push_back(&r);

        std::vector<ConvergeRow> rows;
        rows.reserve(d);
        for (unsigned i = 1; i <= d; ++i) {
            ConvergeRow row;
            row.n = n;
            row.index = i;
            row.limit_exact = limits.exact()[i - 1];
            if (i > d - k) {
                row.zero_root = true;
                row.nth_root = BigFloat(0);
                row.log_error = BigFloat(0);
                row.n_log_error = BigFloat(0);
                row.bracket_ok = true;
            } else {
                const CertifiedRoot& root = *flat[i - 1];
                BigFloat log_lambda = log(root.value);
                row.nth_root = exp(log_lambda / n);
                row.log_error = log_lambda / n - log_rational_big(row.limit_exact);
                row.n_log_error = row.log_error * n;
                row.bracket_ok = bracket_containment(root.lower, root.upper,
                                                     pb.brackets[i - 1]) != Containment::outside;
            }
            rows.push_back(std::move(row));
        }
        return rows;
    };

    auto chunks = parallel_map<std::vector<ConvergeRow>>(n_schedule.size(), rows_for);
    std::vector<ConvergeRow> out;
    for (auto& chunk : chunks)
        for (auto& row : chunk) out.push_back(std::move(row));
    return out;
}

Table converge_table(const std::vector<ConvergeRow>& rows) {
    Table t;
    t.header = {"n", "i", "nth_root", "limit_exact", "limit_decimal",
                "log_error", "n_log_error", "bracket_ok"};
    PrecisionScope scope(128);
    for (const ConvergeRow& r : rows) {
        t.rows.push_back({std::to_string(r.n), std::to_string(r.index),
                          format_decimal(r.nth_root, 30), rational_to_string(r.limit_exact),
                          format_decimal(BigFloat(r.limit_exact), 30),
                          format_decimal(r.log_error, 30), format_decimal(r.n_log_error, 30),
                          r.bracket_ok ? "1" : "0"});
    }
    return t;
}

std::vector<ConjectureRow> run_conjecture(ConjectureSeed seed,
                                          const std::optional<MeasureSpec>& mu,
                                          const std::vector<unsigned>& d_schedule) {
    if (d_schedule.empty()) throw std::invalid_argument("schedule must be non-empty");
    for (std::size_t i = 0; i + 1 < d_schedule.size(); ++i)
        if (!(d_schedule[i] < d_schedule[i + 1]))
            throw std::invalid_argument("schedule must be strictly increasing");

    MeasureSpec measure = [&] {
        switch (seed) {
            case ConjectureSeed::laguerre:
                return MeasureSpec::marchenko_pastur();
            case ConjectureSeed::two_root:
                return MeasureSpec::bernoulli_half();
            case ConjectureSeed::discretize:
                if (!mu) throw std::invalid_argument("discretize seeding requires a measure");
                return *mu;
        }
        throw std::logic_error("unreachable");
    }();

    PhiTarget target(measure);
    const auto endpoints = support_endpoints(measure);
    const bool target_zero_free = measure.zero_mass() == 0;
    std::optional<double> target_log_moment;
    if (target_zero_free) target_log_moment = phi_log_moment(measure);

    PrecisionScope scope(256);

    auto row_for = [&](std::size_t idx) {
        const unsigned d = d_schedule[idx];
        SymmetricProfile profile = [&] {
            switch (seed) {
                case ConjectureSeed::laguerre:
                    return laguerre_profile(d);
                case ConjectureSeed::two_root:
                    return two_root_profile(d);
                case ConjectureSeed::discretize:
                    // exact path whenever the quantiles are rational
                    if (measure.kind() == MeasureKind::marchenko_pastur)
                        return profile_from_roots(discretize_measure(measure, d));
                    return profile_from_roots(discretize_discrete_exact(measure, d));
            }
            throw std::logic_error("unreachable");
        }();

        LimitRoots limits = lln_limit_roots(profile);
        EmpiricalMeasure nu = EmpiricalMeasure::from_limit_roots(limits);

        ConjectureRow row;
        row.d = d;
        row.atom_count = profile.degree();
        row.ks = ks_distance(nu, target);
        row.r1_error = std::abs(limits.value_double(0) - measure.mean());
        if (!nu.has_zero_atom()) {
            row.rd_error = std::abs(limits.value_double(limits.degree() - 1) - endpoints.first);
            row.log_moment_emp = log_moment(nu).convert_to<double>();
            row.log_moment_target = target_log_moment;
        }
        return row;
    };

    return parallel_map<ConjectureRow>(d_schedule.size(), row_for);
}

Table conjecture_table(const std::vector<ConjectureRow>& rows) {
    Table t;
    t.header = {"d", "atoms", "ks", "r1_error", "rd_error", "log_moment_emp", "log_moment_target"};
    for (const ConjectureRow& r : rows) {
        t.rows.push_back({std::to_string(r.d), std::to_string(r.atom_count),
                          format_decimal(r.ks), format_decimal(r.r1_error),
                          r.rd_error ? format_decimal(*r.rd_error) : "",
                          r.log_moment_emp ? format_decimal(*r.log_moment_emp) : "",
                          r.log_moment_target ? format_decimal(*r.log_moment_target) : ""});
    }
    return t;
}

std::vector<RateRow> run_rate_d2(unsigned long n_max, const SolveOptions& opts) {
    if (n_max == 0) throw std::invalid_argument("rate study requires n_max >= 1");
    const SymmetricProfile seed = laguerre_profile(2);  // x^2 - 2x + 1/2
    const unsigned bits =
        opts.precision_bits ? opts.precision_bits : solve_precision_bits(seed, n_max);
    PrecisionScope scope(bits);
    const BigFloat log2 = log(BigFloat(2));

    auto row_for = [&](std::size_t idx) {
        const unsigned long n = idx + 1;
        SolveOptions local = opts;
        local.precision_bits = 0;
        local.assume_ambient_precision = true;

        RateRow row;
        row.n = n;

        const Rational two_pow_minus_n = pow_rational(Rational(1, 2), n);
        BigPoly power = profile_to_coefficients(multiplicative_power_exact(seed, n));
        row.constant_coeff_exact = power.coeff_of(0) == two_pow_minus_n &&
                                   power.coeff_of(1) == Rational(-2) && power.is_monic();

        auto certified = roots_of_power_certified(seed, n, local);
        std::vector<BigFloat> values;
        for (const CertifiedRoot& r : certified)
            for (unsigned m = 0; m < r.multiplicity; ++m) values.push_back(r.value);
        row.lambda1 = values[0];
        row.lambda2 = values[1];

        BigFloat eps(two_pow_minus_n);
        BigFloat s = sqrt(1 - eps);
        row.closed1 = 1 + s;
        row.closed2 = eps / (1 + s);  // cancellation-free form of 1 - sqrt(1 - 2^-n)

        row.rel_dev1 = abs(row.lambda1 - row.closed1) / row.closed1;
        row.rel_dev2 = abs(row.lambda2 - row.closed2) / row.closed2;

        row.n_log_error1 = log(row.lambda1);
        row.n_log_error2 = log(row.lambda2) + log2 * static_cast<double>(n);
        return row;
    };

    return parallel_map<RateRow>(static_cast<std::size_t>(n_max), row_for);
}

Table rate_table(const std::vector<RateRow>& rows) {
    Table t;
    t.header = {"n", "constant_coeff_exact", "lambda1", "lambda2", "closed1", "closed2",
                "rel_dev1", "rel_dev2", "n_log_error1", "n_log_error2"};
    for (const RateRow& r : rows) {
        t.rows.push_back({std::to_string(r.n), r.constant_coeff_exact ? "1" : "0",
                          format_decimal(r.lambda1, 30), format_decimal(r.lambda2, 30),
                          format_decimal(r.closed1, 30), format_decimal(r.closed2, 30),
                          format_decimal(r.rel_dev1, 30), format_decimal(r.rel_dev2, 30),
                          format_decimal(r.n_log_error1, 30), format_decimal(r.n_log_error2, 30)});
    }
    return t;
}

std::vector<PhiRow> run_phi_table(const MeasureSpec& mu, unsigned points) {
    if (points == 0) throw std::invalid_argument("table needs at least one point");
    const double zm = mu.zero_mass().convert_to<double>();
    std::vector<PhiRow> rows;
    rows.reserve(points);
    for (unsigned j = 1; j <= points; ++j) {
        PhiRow row;
        row.t = zm + (1.0 - zm) * static_cast<double>(j) / (points + 1.0);
        row.quantile = phi_quantile(mu, row.t);
        rows.push_back(row);
    }
    return rows;
}

Table phi_table(const std::vector<PhiRow>& rows) {
    Table t;
    t.header = {"t", "quantile"};
    for (const PhiRow& r : rows)
        t.rows.push_back({format_decimal(r.t), format_decimal(r.quantile)});
    return t;
}

}  // namespace finfree
