#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "finfree/experiments.hpp"
#include "oracles.hpp"

using namespace finfree;

TEST_CASE("lln runs") {
    SUBCASE("Laguerre degree 5") {
        auto result = run_lln(laguerre_profile(5));
        for (unsigned i = 1; i <= 5; ++i)
            CHECK(result.limits.exact()[i - 1] == Rational(6 - i, 5));
        auto table = lln_table(result);
        CHECK(table.rows.size() == 5);
        CHECK(table.rows[0][1] == "1");
        CHECK(table.rows[4][1] == "1/5");
    }
    SUBCASE("two-root degree 2 seed x^2 (x-1)^2") {
        auto result = run_lln(two_root_profile(2));
        CHECK(result.limits.exact() ==
              std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(0), Rational(0)});
        // limit polynomial x^2 (x - 1/2)(x - 1/3)
        CHECK(result.limit_polynomial ==
              BigPoly::from_roots({Rational(1, 2), Rational(1, 3), Rational(0), Rational(0)}));
    }
    SUBCASE("constant seed") {
        auto p = profile_from_roots(RootMultiset<Rational>(std::vector<Rational>(3, Rational(4))));
        auto result = run_lln(p);
        for (const Rational& r : result.limits.exact()) CHECK(r == 4);
    }
}

TEST_CASE("convergence study") {
    SUBCASE("equal-root seed has zero error at every n") {
        auto p = profile_from_roots(RootMultiset<Rational>(std::vector<Rational>(3, Rational(2))));
        auto rows = run_converge(p, {2, 4, 8});
        for (const auto& row : rows) {
            CHECK(row.bracket_ok);
            CHECK(abs(row.log_error).convert_to<double>() < 1e-28);
        }
    }
    SUBCASE("Laguerre degree 3 satisfies the binomial log bound") {
        auto rows = run_converge(laguerre_profile(3), {4, 16, 64, 256});
        for (const auto& row : rows) {
            CHECK(row.bracket_ok);
            if (row.n == 256)
                CHECK(abs(row.n_log_error).convert_to<double>() <= std::log(3.0) + 0.01);
        }
    }
    SUBCASE("zero roots produce zero rows") {
        auto rows = run_converge(two_root_profile(1), {2, 4});
        for (const auto& row : rows) {
            if (row.index == 2) {
                CHECK(row.zero_root);
                CHECK(row.nth_root == 0);
            }
        }
    }
    SUBCASE("schedules are validated") {
        CHECK_THROWS_AS(run_converge(laguerre_profile(2), {4, 4}), std::invalid_argument);
        CHECK_THROWS_AS(run_converge(laguerre_profile(2), {}), std::invalid_argument);
        CHECK_THROWS_AS(run_converge(laguerre_profile(2).log_only(), {2}), std::invalid_argument);
    }
    SUBCASE("table output is deterministic") {
        auto t1 = converge_table(run_converge(laguerre_profile(2), {2, 4, 8}));
        auto t2 = converge_table(run_converge(laguerre_profile(2), {2, 4, 8}));
        REQUIRE(t1.rows.size() == t2.rows.size());
        for (std::size_t i = 0; i < t1.rows.size(); ++i) CHECK(t1.rows[i] == t2.rows[i]);
    }
}

TEST_CASE("conjecture sweep") {
    SUBCASE("Laguerre family against the uniform limit") {
        auto rows = run_conjecture(ConjectureSeed::laguerre, std::nullopt, {10, 50, 100});
        REQUIRE(rows.size() == 3);
        for (const auto& row : rows) {
            CHECK(row.ks <= 1.0 / row.d + 1e-12);
            CHECK(row.r1_error < 1e-14);  // R_1 = 1 = mean(MP) exactly
            REQUIRE(row.log_moment_emp.has_value());
            REQUIRE(row.log_moment_target.has_value());
        }
        // log moment of the uniform limit is -1; the lattice value differs by
        // log(2 pi d)/(2d) + O(1/d^2) (Stirling)
        CHECK(*rows[2].log_moment_target == doctest::Approx(-1.0).epsilon(1e-9));
        const double d = 100.0;
        const double stirling_gap = std::log(2.0 * 3.14159265358979 * d) / (2.0 * d);
        CHECK(*rows[2].log_moment_emp - *rows[2].log_moment_target ==
              doctest::Approx(stirling_gap).epsilon(1e-2));
        CHECK(rows[2].ks < rows[0].ks);
    }
    SUBCASE("two-root family against the mixed limit") {
        auto rows = run_conjecture(ConjectureSeed::two_root, std::nullopt, {25, 100, 200});
        for (const auto& row : rows) {
            CHECK(row.ks <= 2.0 / row.d + 1e-12);
            CHECK(row.r1_error < 1e-14);  // R_1 = 1/2 = mean exactly
            CHECK(!row.rd_error.has_value());
            CHECK(!row.log_moment_emp.has_value());
        }
    }
    SUBCASE("point mass stays at distance zero") {
        auto mu = MeasureSpec::point_mass(parse_rational("3/2"));
        auto rows = run_conjecture(ConjectureSeed::discretize, mu, {3, 9, 27});
        for (const auto& row : rows) {
            CHECK(row.ks == 0.0);
            CHECK(row.r1_error < 1e-13);
        }
    }
    SUBCASE("discretized Marchenko-Pastur approaches its endpoints") {
        auto rows = run_conjecture(ConjectureSeed::discretize, MeasureSpec::marchenko_pastur(),
                                   {100, 500});
        CHECK(rows[1].r1_error <= 5e-3);
        CHECK(rows[1].ks < rows[0].ks + 1e-12);
        CHECK(rows[1].ks < 0.05);
    }
    SUBCASE("zero-free discrete seeds hit the harmonic endpoint") {
        auto mu = MeasureSpec::discrete({{Rational(1, 2), Rational(2)}, {Rational(1, 2), Rational(5)}});
        auto rows = run_conjecture(ConjectureSeed::discretize, mu, {4, 64});
        for (const auto& row : rows) {
            REQUIRE(row.rd_error.has_value());
            // even d reproduces the atom weights exactly, so both endpoints match
            CHECK(*row.rd_error < 1e-14);
            CHECK(row.r1_error < 1e-14);
            REQUIRE(row.log_moment_emp.has_value());
            CHECK(*row.log_moment_emp ==
                  doctest::Approx(0.5 * std::log(10.0)).epsilon(1e-12));
            CHECK(*row.log_moment_target ==
                  doctest::Approx(0.5 * std::log(10.0)).epsilon(1e-8));
        }
    }
    SUBCASE("measure required for discretize seeding") {
        CHECK_THROWS_AS(run_conjecture(ConjectureSeed::discretize, std::nullopt, {4}),
                        std::invalid_argument);
    }
}

TEST_CASE("degree-2 rate study") {
    auto rows = run_rate_d2(16);
    REQUIRE(rows.size() == 16);
    PrecisionScope scope(256);
    for (const auto& row : rows) {
        CHECK(row.constant_coeff_exact);
        CHECK(row.rel_dev1.convert_to<double>() < 1e-25);
        CHECK(row.rel_dev2.convert_to<double>() < 1e-25);
    }
    // closed form at n = 1: 1 +- sqrt(1/2)
    BigFloat expect = 1 + sqrt(BigFloat(0.5));
    CHECK(abs(rows[0].lambda1 - expect).convert_to<double>() < 1e-25);
    // n log errors approach +-log 2 from below
    const double log2 = std::log(2.0);
    CHECK(rows[15].n_log_error1.convert_to<double>() ==
          doctest::Approx(log2).epsilon(1e-4));
    CHECK(rows[15].n_log_error2.convert_to<double>() ==
          doctest::Approx(-log2).epsilon(1e-4));
    // constant coefficient at n = 7 is 1/128: re-derive through the library
    auto p7 = profile_to_coefficients(multiplicative_power_exact(laguerre_profile(2), 7));
    CHECK(p7.coeff_of(0) == Rational(1, 128));
}

TEST_CASE("phi quantile table") {
    auto rows = run_phi_table(MeasureSpec::marchenko_pastur(), 9);
    REQUIRE(rows.size() == 9);
    for (const auto& row : rows) CHECK(row.quantile == doctest::Approx(row.t).epsilon(1e-12));
    auto table = phi_table(rows);
    CHECK(table.header == std::vector<std::string>{"t", "quantile"});
}

TEST_CASE("phi log moment") {
    CHECK(phi_log_moment(MeasureSpec::marchenko_pastur()) == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK_THROWS_AS(phi_log_moment(MeasureSpec::bernoulli_half()), std::domain_error);
    // transport identity for a zero-free discrete measure
    auto mu = MeasureSpec::discrete({{Rational(1, 2), Rational(2)}, {Rational(1, 2), Rational(8)}});
    CHECK(phi_log_moment(mu) == doctest::Approx(0.5 * std::log(16.0)).epsilon(1e-9));
}
