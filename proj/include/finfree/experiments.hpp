#ifndef FINFREE_EXPERIMENTS_HPP
#define FINFREE_EXPERIMENTS_HPP

#include <optional>
#include <vector>

#include "finfree/convolve.hpp"
#include "finfree/empirical.hpp"
#include "finfree/limit_oracle.hpp"
#include "finfree/serialize.hpp"
#include "finfree/solver.hpp"

namespace finfree {

/// integral of log t against the limit law of mu (quadrature over the
/// quantile); requires zero_mass(mu) = 0.
double phi_log_moment(const MeasureSpec& mu);

struct LlnResult {
    LimitRoots limits;
    BigPoly limit_polynomial;
};

LlnResult run_lln(const SymmetricProfile& profile);
Table lln_table(const LlnResult& result);

struct ConvergeRow {
    unsigned long n = 0;
    unsigned index = 0;  // 1-based root index
    bool zero_root = false;
    BigFloat nth_root;    // (lambda_i^(n))^{1/n}
    Rational limit_exact; // R_i
    BigFloat log_error;   // log of nth_root minus log R_i
    BigFloat n_log_error;
    bool bracket_ok = true;
};

/// Convergence study of the n-th roots of the power roots toward the limit
/// values, with the a-priori bracket containment checked per row. Schedule
/// points run in parallel under one ambient precision.
std::vector<ConvergeRow> run_converge(const SymmetricProfile& seed,
                                      const std::vector<unsigned long>& n_schedule,
                                      const SolveOptions& opts = {});
Table converge_table(const std::vector<ConvergeRow>& rows);

enum class ConjectureSeed { laguerre, two_root, discretize };

struct ConjectureRow {
    unsigned d = 0;
    unsigned atom_count = 0;
    double ks = 0;
    double r1_error = 0;
    std::optional<double> rd_error;           // zero-free seeds only
    std::optional<double> log_moment_emp;     // zero-free seeds only
    std::optional<double> log_moment_target;  // zero-free measures only
};

/// Degree sweep comparing the empirical limit-root distribution against the
/// LLN limit law of the seed measure.
std::vector<ConjectureRow> run_conjecture(ConjectureSeed seed,
                                          const std::optional<MeasureSpec>& mu,
                                          const std::vector<unsigned>& d_schedule);
Table conjecture_table(const std::vector<ConjectureRow>& rows);

struct RateRow {
    unsigned long n = 0;
    bool constant_coeff_exact = false;  // trailing coefficient equals 2^-n
    BigFloat lambda1;                   // solver values
    BigFloat lambda2;
    BigFloat closed1;                   // 1 + sqrt(1 - 2^-n)
    BigFloat closed2;                   // 2^-n / (1 + sqrt(1 - 2^-n))
    BigFloat rel_dev1;
    BigFloat rel_dev2;
    BigFloat n_log_error1;  // converges to log 2
    BigFloat n_log_error2;  // converges to -log 2
};

/// The degree-2 rate study: exact power coefficients, closed-form roots
/// against the generic solver, and the two n-scaled log errors.
std::vector<RateRow> run_rate_d2(unsigned long n_max, const SolveOptions& opts = {});
Table rate_table(const std::vector<RateRow>& rows);

struct PhiRow {
    double t = 0;
    double quantile = 0;
};

std::vector<PhiRow> run_phi_table(const MeasureSpec& mu, unsigned points);
Table phi_table(const std::vector<PhiRow>& rows);

}  // namespace finfree

#endif
