#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "finfree/limit_oracle.hpp"
#include "oracles.hpp"

using namespace finfree;

namespace {

MeasureSpec three_atom() {
    return MeasureSpec::discrete({{Rational(1, 4), Rational(1, 2)},
                                  {Rational(1, 2), Rational(1)},
                                  {Rational(1, 4), Rational(3)}});
}

}  // namespace

TEST_CASE("psi transform") {
    SUBCASE("point mass at one") {
        CHECK(psi_transform(MeasureSpec::point_mass(1), -1.0) == doctest::Approx(-0.5).epsilon(1e-14));
    }
    SUBCASE("fair zero-one mixture") {
        CHECK(psi_transform(MeasureSpec::bernoulli_half(), -1.0) ==
              doctest::Approx(-0.25).epsilon(1e-14));
    }
    SUBCASE("vanishes toward zero") {
        for (const auto& mu : {MeasureSpec::bernoulli_half(), three_atom(), MeasureSpec::marchenko_pastur()})
            CHECK(std::abs(psi_transform(mu, -1e-9)) < 1e-8);
    }
    SUBCASE("range floor is zero_mass - 1") {
        const double v = psi_transform(MeasureSpec::bernoulli_half(), -1e9);
        CHECK(v > -0.5);
        CHECK(v == doctest::Approx(-0.5).epsilon(1e-8));
    }
    SUBCASE("rejects non-negative arguments and the zero point mass") {
        CHECK_THROWS_AS(psi_transform(three_atom(), 0.0), std::domain_error);
        CHECK_THROWS_AS(psi_transform(MeasureSpec::point_mass(0), -1.0), std::domain_error);
    }
    SUBCASE("quadrature path matches the analytic Marchenko-Pastur inverse") {
        // psi_MP^{-1}(w) = w / (1+w)^2, so check psi(w/(1+w)^2) = w.
        for (double w : {-0.05, -0.2, -0.5, -0.8, -0.95}) {
            double z = w / ((1.0 + w) * (1.0 + w));
            CHECK(psi_transform(MeasureSpec::marchenko_pastur(), z) ==
                  doctest::Approx(w).epsilon(1e-11));
        }
    }
    SUBCASE("quadrature matches an independent Simpson evaluation") {
        for (double z : {-0.3, -2.0, -40.0}) {
            auto integrand = [z](double t) { return oracles::mp_density(t) * t * z / (1.0 - t * z); };
            double simpson = oracles::simpson(integrand, 1e-12, 4.0 - 1e-12, 1e-13);
            CHECK(psi_transform(MeasureSpec::marchenko_pastur(), z) ==
                  doctest::Approx(simpson).epsilon(1e-8));
        }
    }
}

TEST_CASE("s transform") {
    SUBCASE("point mass gives the constant 1/c") {
        for (const char* c : {"1/2", "1", "3"}) {
            MeasureSpec mu = MeasureSpec::point_mass(parse_rational(c));
            const double expect = 1.0 / parse_rational(c).convert_to<double>();
            for (int j = 1; j <= 20; ++j) {
                double t = -static_cast<double>(j) / 21.0;
                CHECK(s_transform(mu, t) == doctest::Approx(expect).epsilon(1e-12));
            }
        }
    }
    SUBCASE("two-point closed form at t = -1/4 and on a grid") {
        MeasureSpec mu = MeasureSpec::bernoulli_half();
        CHECK(s_transform(mu, -0.25) == doctest::Approx(3.0).epsilon(1e-12));
        for (int j = 1; j <= 100; ++j) {
            double t = -0.5 + 0.5 * static_cast<double>(j) / 101.0;
            double closed = (2.0 + 2.0 * t) / (1.0 + 2.0 * t);
            CHECK(std::abs(s_transform(mu, t) - closed) < 1e-10);
        }
    }
    SUBCASE("Marchenko-Pastur numeric inversion matches 1/(1+t)") {
        MeasureSpec mu = MeasureSpec::marchenko_pastur();
        for (int j = 1; j <= 100; ++j) {
            double t = -static_cast<double>(j) / 101.0;
            double closed = 1.0 / (1.0 + t);
            CHECK(std::abs(s_transform(mu, t, SPath::numeric) - closed) < 1e-10);
            CHECK(s_transform(mu, t) == closed);  // wired-in form
        }
    }
    SUBCASE("domain is enforced") {
        CHECK_THROWS_AS(s_transform(MeasureSpec::bernoulli_half(), -0.75), std::domain_error);
        CHECK_THROWS_AS(s_transform(three_atom(), 0.0), std::domain_error);
    }
}

TEST_CASE("phi quantile") {
    SUBCASE("Marchenko-Pastur limit is uniform") {
        MeasureSpec mu = MeasureSpec::marchenko_pastur();
        for (int j = 1; j <= 100; ++j) {
            double t = 0.01 + 0.98 * static_cast<double>(j - 1) / 99.0;
            CHECK(std::abs(phi_quantile(mu, t, SPath::numeric) - t) < 1e-8);
        }
    }
    SUBCASE("two-point limit quantile (2t-1)/(2t)") {
        MeasureSpec mu = MeasureSpec::bernoulli_half();
        for (int j = 1; j <= 50; ++j) {
            double t = 0.5 + 0.5 * static_cast<double>(j) / 51.0;
            CHECK(phi_quantile(mu, t) ==
                  doctest::Approx((2.0 * t - 1.0) / (2.0 * t)).epsilon(1e-10));
        }
    }
    SUBCASE("point mass limit is itself") {
        MeasureSpec mu = MeasureSpec::point_mass(parse_rational("5/4"));
        for (double t : {0.1, 0.5, 0.9})
            CHECK(phi_quantile(mu, t) == doctest::Approx(1.25).epsilon(1e-12));
    }
    SUBCASE("strictly increasing on the domain") {
        for (const auto& mu : {MeasureSpec::bernoulli_half(), three_atom(), MeasureSpec::marchenko_pastur()}) {
            const double zm = mu.zero_mass().convert_to<double>();
            double prev = -1.0;
            for (int j = 1; j <= 60; ++j) {
                double t = zm + (1.0 - zm) * static_cast<double>(j) / 61.0;
                double q = phi_quantile(mu, t);
                if (!mu.is_point_mass()) CHECK(q > prev);
                prev = q;
            }
        }
    }
    SUBCASE("domain is enforced") {
        CHECK_THROWS_AS(phi_quantile(MeasureSpec::bernoulli_half(), 0.4), std::domain_error);
        CHECK_THROWS_AS(phi_quantile(three_atom(), 1.0), std::domain_error);
    }
}

TEST_CASE("support endpoints") {
    SUBCASE("point mass") {
        auto [lo, hi] = support_endpoints(MeasureSpec::point_mass(parse_rational("7/2")));
        CHECK(lo == doctest::Approx(3.5));
        CHECK(hi == doctest::Approx(3.5));
    }
    SUBCASE("Marchenko-Pastur") {
        auto [lo, hi] = support_endpoints(MeasureSpec::marchenko_pastur());
        CHECK(lo == 0.0);
        CHECK(hi == 1.0);
        // mean by independent quadrature of the density
        double mean = oracles::simpson([](double t) { return t * oracles::mp_density(t); }, 0.0,
                                       4.0, 1e-12);
        CHECK(mean == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("zero atom forces a zero lower endpoint") {
        auto [lo, hi] = support_endpoints(MeasureSpec::bernoulli_half());
        CHECK(lo == 0.0);
        CHECK(hi == doctest::Approx(0.5));
    }
    SUBCASE("zero-free discrete endpoints are moment ratios") {
        auto [lo, hi] = support_endpoints(three_atom());
        // mean = 1/8 + 1/2 + 3/4 = 11/8; harmonic = (1/4*2 + 1/2 + 1/4/3)^{-1}
        CHECK(hi == doctest::Approx(11.0 / 8.0).epsilon(1e-15));
        CHECK(lo == doctest::Approx(1.0 / (0.5 + 0.5 + 1.0 / 12.0)).epsilon(1e-15));
    }
    SUBCASE("quantile approaches the endpoints") {
        for (const auto& mu : {three_atom(), MeasureSpec::marchenko_pastur()}) {
            auto [lo, hi] = support_endpoints(mu);
            CHECK(std::abs(phi_quantile(mu, 1.0 - 1e-8) - hi) < 1e-6);
            CHECK(std::abs(phi_quantile(mu, 1e-8) - lo) < 1e-6);
        }
    }
}

TEST_CASE("log-moment transport") {
    // integral of log under the limit law equals the log moment of the source
    // for zero-free measures.
    auto check_measure = [](const MeasureSpec& mu) {
        double direct = 0.0;
        for (const auto& a : mu.atoms())
            direct += a.weight.convert_to<double>() *
                      std::log(a.location.convert_to<double>());
        const double via_quantile = oracles::simpson(
            [&mu](double t) { return std::log(phi_quantile(mu, t)); }, 1e-9, 1.0 - 1e-9, 1e-11);
        CHECK(std::abs(direct - via_quantile) < 1e-6);
    };
    check_measure(three_atom());
    check_measure(MeasureSpec::discrete({{Rational(1, 2), Rational(2)}, {Rational(1, 2), Rational(5)}}));
}

TEST_CASE("Marchenko-Pastur distribution functions") {
    SUBCASE("cdf endpoints and midpoint") {
        CHECK(mp_cdf(0.0) == 0.0);
        CHECK(mp_cdf(4.0) == 1.0);
        CHECK(mp_cdf(2.0) ==
              doctest::Approx(oracles::mp_cdf_by_quadrature(2.0, 1e-13)).epsilon(1e-9));
        CHECK(mp_cdf(0.5) ==
              doctest::Approx(oracles::mp_cdf_by_quadrature(0.5, 1e-13)).epsilon(1e-9));
    }
    SUBCASE("quantile inverts the cdf") {
        for (double t : {0.05, 0.25, 0.5, 0.75, 0.95})
            CHECK(mp_cdf(mp_quantile(t)) == doctest::Approx(t).epsilon(1e-11));
    }
}

TEST_CASE("phi target cdf") {
    SUBCASE("uniform limit of Marchenko-Pastur") {
        PhiTarget target(MeasureSpec::marchenko_pastur());
        CHECK(target.cdf(-0.5) == 0.0);
        CHECK(target.cdf(0.25) == doctest::Approx(0.25));
        CHECK(target.cdf(2.0) == 1.0);
    }
    SUBCASE("two-point limit cdf 1/(2(1-x)) with its zero atom") {
        PhiTarget target(MeasureSpec::bernoulli_half());
        CHECK(target.zero_mass() == doctest::Approx(0.5));
        CHECK(target.cdf(0.0) == doctest::Approx(0.5));
        CHECK(target.cdf(0.25) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
        CHECK(target.cdf(0.5) == 1.0);
    }
    SUBCASE("numeric cdf inverts the quantile for discrete measures") {
        PhiTarget target(three_atom());
        for (double t : {0.12, 0.37, 0.64, 0.88}) {
            double q = target.quantile(t);
            CHECK(target.cdf(q) == doctest::Approx(t).epsilon(1e-9));
        }
    }
    SUBCASE("point mass target is a step") {
        PhiTarget target(MeasureSpec::point_mass(2));
        CHECK(target.cdf(1.99) == 0.0);
        CHECK(target.cdf(2.0) == 1.0);
    }
}

TEST_CASE("measure validation") {
    CHECK_THROWS_AS(MeasureSpec::discrete({}), std::invalid_argument);
    CHECK_THROWS_AS(MeasureSpec::discrete({{Rational(1, 2), Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(MeasureSpec::discrete({{Rational(1), Rational(-1)}}), std::invalid_argument);
    CHECK_THROWS_AS(MeasureSpec::discrete({{Rational(0), Rational(1)}, {Rational(1), Rational(2)}}),
                    std::invalid_argument);
    // duplicate locations merge
    auto mu = MeasureSpec::discrete({{Rational(1, 2), Rational(1)}, {Rational(1, 2), Rational(1)}});
    CHECK(mu.atoms().size() == 1);
    CHECK(mu.is_point_mass());
}
