#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "qbt/errors.hpp"
#include "qbt/quadrature.hpp"
#include "qbt/specfun.hpp"
#include "qbt/verify.hpp"

using namespace qbt;
using specfun::complex;

TEST_CASE("digamma at 1 equals minus the Euler constant") {
    CHECK(specfun::digamma(1.0) == doctest::Approx(-euler_gamma).epsilon(1e-14));
    CHECK(specfun::digamma(complex(1.0, 0.0)).real() ==
          doctest::Approx(-euler_gamma).epsilon(1e-14));
}

TEST_CASE("digamma recurrence identity at a spot value") {
    const double z = 2.7;
    CHECK(specfun::digamma(z + 1.0) - specfun::digamma(z) == doctest::Approx(1.0 / z).epsilon(1e-13));
}

TEST_CASE("digamma matches the direct-series oracle at complex arguments") {
    const complex z(0.5, 3.2);
    const complex oracle = verify::digamma_series_oracle(z, 10000000);
    CHECK(std::abs(specfun::digamma(z) - oracle) < 1e-12 * std::abs(oracle));
}

TEST_CASE("digamma matches std::lgamma central differences") {
    for (double y : {1.7, 4.3, 12.0, 55.0}) {
        const double h = 1e-5 * std::max(1.0, y);
        const double fd = (std::lgamma(y + h) - std::lgamma(y - h)) / (2.0 * h);
        CHECK(specfun::digamma(y) == doctest::Approx(fd).epsilon(1e-8));
    }
}

TEST_CASE("digamma rejects pole arguments") {
    CHECK_THROWS_AS(specfun::digamma(0.0), PoleArgument);
    CHECK_THROWS_AS(specfun::digamma(complex(-3.0, 1e-14)), PoleArgument);
}

TEST_CASE("digamma_asymptotic") {
    SUBCASE("agrees with digamma for large argument") {
        CHECK(specfun::digamma_asymptotic(100.0, 3) ==
              doctest::Approx(specfun::digamma(100.0)).epsilon(1e-12));
        const double y = 10.0;
        CHECK(std::abs(specfun::digamma_asymptotic(y, 5) - specfun::digamma(y)) <
              1e-10 * std::abs(specfun::digamma(y)));
    }
    SUBCASE("n=1 truncation is ln y - 1/2y - 1/(12 y^2)") {
        const double y = 7.0;
        CHECK(specfun::digamma_asymptotic(y, 1) ==
              doctest::Approx(std::log(y) - 0.5 / y - 1.0 / (12.0 * y * y)).epsilon(1e-15));
    }
    SUBCASE("leading term dominates as y grows") {
        const double y = 1e8;
        CHECK(std::abs(specfun::digamma_asymptotic(y, 5) - std::log(y)) < 1e-8);
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(specfun::digamma_asymptotic(-1.0, 3), DomainError);
        CHECK_THROWS_AS(specfun::digamma_asymptotic(1.0, 11), DomainError);
    }
}

TEST_CASE("trigamma matches finite differences of digamma") {
    for (double y : {0.7, 3.3, 20.0}) {
        const double h = 1e-5;
        const double fd = (specfun::digamma(y + h) - specfun::digamma(y - h)) / (2.0 * h);
        CHECK(specfun::trigamma(complex(y, 0.0)).real() == doctest::Approx(fd).epsilon(1e-8));
    }
    const complex z(1.4, 2.2), h(1e-5, 0.0);
    const complex fd = (specfun::digamma(z + h) - specfun::digamma(z - h)) / (2.0 * h);
    CHECK(std::abs(specfun::trigamma(z) - fd) < 1e-8);
}

TEST_CASE("sine and cosine integrals") {
    SUBCASE("small-x behavior of Ci") {
        const double x = 1e-6;
        CHECK(std::abs(specfun::ci(x) - std::log(x) - euler_gamma) < 1e-12);
    }
    SUBCASE("si tends to zero at infinity") {
        CHECK(std::abs(specfun::si(1e4)) < 2e-4);
        CHECK(std::abs(specfun::si(50.0)) < 0.03);
    }
    SUBCASE("closed form reproduces the Laplace integral at x = 2") {
        const double closed = std::sin(2.0) * specfun::ci(2.0) - std::cos(2.0) * specfun::si(2.0);
        const double integral = specfun::aux_f_quadrature(complex(2.0, 0.0), 1e-13).real();
        CHECK(closed == doctest::Approx(integral).epsilon(1e-11));
    }
    SUBCASE("series/continued-fraction seam is continuous") {
        const double below = std::sin(5.999) * specfun::ci(5.999);
        const double above = std::sin(6.001) * specfun::ci(6.001);
        CHECK(std::abs(below - above) < 1e-3);
        // reference values: Ci(6) and Si(6) from the defining integrals
        QuadratureOptions opt;
        opt.rel_tol = 1e-13;
        const double si6 =
            integrate([](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0, 6.0, opt);
        CHECK(specfun::si(6.0) == doctest::Approx(si6 - pi / 2.0).epsilon(1e-11));
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(specfun::ci(0.0), DomainError);
        CHECK_THROWS_AS(specfun::si(-1.0), DomainError);
    }
}

TEST_CASE("aux Laplace integral") {
    SUBCASE("tends to pi/2 as a -> 0+") {
        CHECK(specfun::aux_f(complex(1e-7, 0.0)).real() == doctest::Approx(pi / 2.0).epsilon(1e-5));
    }
    SUBCASE("a = 1 against a brute-force quadrature") {
        const complex v = specfun::aux_f(complex(1.0, 0.0), 1e-13);
        QuadratureOptions opt;
        opt.rel_tol = 1e-13;
        const double brute =
            integrate([](double y) { return std::exp(-y) / (y * y + 1.0); }, 0.0, 60.0, opt);
        CHECK(v.real() == doctest::Approx(brute).epsilon(1e-12));
        CHECK(v.imag() == 0.0);
    }
    SUBCASE("leading Watson behavior 1/a at large a") {
        CHECK(specfun::aux_f(complex(1e4, 0.0)).real() * 1e4 == doctest::Approx(1.0).epsilon(1e-7));
    }
    SUBCASE("quadrature and asymptotic routes agree at the |a| = 40 seam") {
        for (const complex dir : {complex(1.0, 0.0), complex(0.7, 0.7), complex(0.99, 0.12)}) {
            const complex a = 40.5 * dir / std::abs(dir);
            const complex asym = specfun::aux_f(a);  // asymptotic branch
            const complex quad = specfun::aux_f_quadrature(a, 1e-13);
            CHECK(std::abs(asym - quad) < 1e-12 * std::abs(quad));
        }
    }
    SUBCASE("diverges for non-positive real part") {
        CHECK_THROWS_AS(specfun::aux_f(complex(-0.1, 1.0)), DomainError);
        CHECK_THROWS_AS(specfun::aux_f(complex(0.0, 1.0)), DomainError);
    }
}

TEST_CASE("matsubara coth partial sums") {
    SUBCASE("spot value against direct coth") {
        CHECK(std::abs(specfun::matsubara_coth(1.0, 2.0, 100000) - specfun::coth(1.0)) < 1e-4);
    }
    SUBCASE("monotone increasing in n_terms, bounded by coth") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> uni(0.1, 5.0);
        for (int i = 0; i < 50; ++i) {
            const double w = uni(rng), bh = uni(rng);
            const double direct = specfun::coth(bh * w / 2.0);
            double prev = 0.0;
            for (std::int64_t n : {10, 100, 1000}) {
                const double v = specfun::matsubara_coth(w, bh, n);
                CHECK(v >= prev);
                CHECK(v <= direct + 1e-14);
                prev = v;
            }
        }
    }
    SUBCASE("limits") {
        // low-temperature regime: with n_terms large enough to resolve
        // coth - 1, the partial sums sit just above 1
        const double v = specfun::matsubara_coth(1.0, 10.0, 2000000);
        CHECK(v > 1.0);
        CHECK(v == doctest::Approx(1.0).epsilon(2e-4));
        // classical limit: 2/(beta hbar omega) dominates
        CHECK(specfun::matsubara_coth(1.0, 1e-6, 10) ==
              doctest::Approx(2.0 / 1e-6).epsilon(1e-10));
    }
}
