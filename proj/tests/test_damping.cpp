#include <cmath>
#include <complex>
#include <random>
#include <variant>

#include <doctest.h>

#include "qbt/damping.hpp"
#include "qbt/errors.hpp"

using namespace qbt;
using namespace qbt::damping;
using complex = std::complex<double>;

static const PhysicalConstants consts{};

TEST_CASE("spectral densities") {
    const auto drude = DampingModel::drude(0.8, 2.0);
    const auto ohmic = DampingModel::ohmic(0.8);
    SUBCASE("J(0) = 0") {
        CHECK(spectral_density(drude, 0.0, consts) == 0.0);
        CHECK(spectral_density(ohmic, 0.0, consts) == 0.0);
    }
    SUBCASE("Drude behaves Ohmically well below the cutoff") {
        const double w = 1e-4;
        CHECK(spectral_density(drude, w, consts) ==
              doctest::Approx(consts.M * 0.8 * w).epsilon(1e-7));
    }
    SUBCASE("Drude at the cutoff is M gamma_o omega_d / 2") {
        CHECK(spectral_density(drude, 2.0, consts) == doctest::Approx(0.8).epsilon(1e-14));
    }
    SUBCASE("negative frequency is a domain error") {
        CHECK_THROWS_AS(spectral_density(drude, -1.0, consts), DomainError);
    }
}

TEST_CASE("frequency-domain damping function") {
    const auto drude = DampingModel::drude(0.8, 2.0);
    SUBCASE("zero-frequency value is gamma_o") {
        CHECK(gamma_tilde(drude, complex(0.0, 0.0)).real() == doctest::Approx(0.8));
        CHECK(std::abs(gamma_tilde(drude, complex(1e8, 0.0))) < 1e-7);
    }
    SUBCASE("Ohmic is constant") {
        const auto ohmic = DampingModel::ohmic(0.8);
        CHECK(gamma_tilde(ohmic, complex(3.0, -1.0)) == complex(0.8, 0.0));
    }
    SUBCASE("real part matches J/(M omega) on the real axis") {
        for (double w : {0.1, 0.7, 2.0, 9.0, 40.0}) {
            const double lhs = gamma_tilde(drude, complex(w, 0.0)).real();
            const double rhs = spectral_density(drude, w, consts) / (consts.M * w);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
    SUBCASE("pole at -i omega_d") {
        CHECK_THROWS_AS(gamma_tilde(drude, complex(0.0, -2.0)), PoleArgument);
    }
}

TEST_CASE("time-domain kernel") {
    const auto drude = DampingModel::drude(0.8, 2.0);
    SUBCASE("Drude kernel at t = 0 and its integral") {
        CHECK(std::get<double>(gamma_kernel(drude, 0.0)) == doctest::Approx(1.6));
        // integral of gamma_o omega_d e^{-omega_d t} over [0, X]
        double acc = 0.0;
        const int n = 20000;
        const double X = 20.0, h = X / n;
        for (int i = 0; i < n; ++i) {
            const double t0 = i * h, t1 = t0 + h;
            acc += 0.5 * h * (std::get<double>(gamma_kernel(drude, t0)) +
                              std::get<double>(gamma_kernel(drude, t1)));
        }
        CHECK(acc == doctest::Approx(0.8).epsilon(1e-6));
    }
    SUBCASE("Ohmic kernel is a delta tag, not a number") {
        const auto v = gamma_kernel(DampingModel::ohmic(0.8), 0.5);
        REQUIRE(std::holds_alternative<DeltaKernel>(v));
        CHECK(std::get<DeltaKernel>(v).weight == doctest::Approx(1.6));
    }
    SUBCASE("negative time is a domain error") {
        CHECK_THROWS_AS(gamma_kernel(drude, -0.1), DomainError);
    }
}

TEST_CASE("Drude parameter map") {
    SUBCASE("spot values from the defining relations") {
        const auto p = drude_params(1.0, 1.0, 1.5);
        CHECK(p.omega_d == doctest::Approx(2.5).epsilon(1e-15));
        CHECK(p.omega_0 * p.omega_0 == doctest::Approx(0.4).epsilon(1e-15));
        CHECK(p.gamma_o == doctest::Approx(0.84).epsilon(1e-15));
        CHECK(p.branch == Branch::Underdamped);

        const auto q = drude_params(1.0, 5.0, 4.0);
        CHECK(q.omega_d == doctest::Approx(9.0));
        CHECK(q.omega_0 * q.omega_0 == doctest::Approx(5.0 / 9.0).epsilon(1e-15));
        CHECK(q.gamma_o == doctest::Approx(4.0 * 46.0 / 81.0).epsilon(1e-15));
        CHECK(q.branch == Branch::Overdamped);
    }
    SUBCASE("uncoupled limit gamma -> 0") {
        const auto p = drude_params(1.3, 2.0, 1e-9);
        CHECK(p.omega_0 == doctest::Approx(1.3).epsilon(1e-9));
        CHECK(p.omega_d == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(p.gamma_o < 2e-9);
    }
    SUBCASE("branch identities") {
        const auto u = drude_params(1.0, 1.0, 1.5);
        CHECK(u.w1 * u.w1 + 0.75 * 0.75 == doctest::Approx(1.0).epsilon(1e-14));
        const auto o = drude_params(1.0, 1.0, 4.0);
        CHECK(4.0 - o.w1_bar * o.w1_bar == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(drude_params(1.0, 2.0, 2.0).branch == Branch::Critical);
    }
    SUBCASE("inverse recovers the physical triple on random inputs") {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (int i = 0; i < 10000; ++i) {
            const double w0 = std::pow(10.0, -1.0 + 2.0 * uni(rng));
            const double Om = std::pow(10.0, -1.0 + 2.0 * uni(rng));
            const double ga = std::pow(10.0, -1.0 + 2.0 * uni(rng));
            const auto p = drude_params(w0, Om, ga);
            const auto q = drude_params_from_physical(p.omega_0, p.omega_d, p.gamma_o);
            CHECK(q.omega_0 == doctest::Approx(p.omega_0).epsilon(1e-12));
            CHECK(q.omega_d == doctest::Approx(p.omega_d).epsilon(1e-12));
            CHECK(q.gamma_o == doctest::Approx(p.gamma_o).epsilon(1e-12));
            if (p.branch == Branch::Underdamped) {
                CHECK(q.w0 == doctest::Approx(w0).epsilon(1e-12));
                CHECK(q.Omega == doctest::Approx(Om).epsilon(1e-12));
                CHECK(q.gamma == doctest::Approx(ga).epsilon(1e-12));
            }
        }
    }
    SUBCASE("rejects non-positive inputs") {
        CHECK_THROWS_AS(drude_params(0.0, 1.0, 1.0), DomainError);
        CHECK_THROWS_AS(drude_params(1.0, -1.0, 1.0), DomainError);
        CHECK_THROWS_AS(drude_params_from_physical(1.0, 1.0, -0.5), DomainError);
    }
}
