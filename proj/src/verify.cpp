#include "qbt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>

#include "qbt/damping.hpp"
#include "qbt/discrete_bath.hpp"
#include "qbt/quadrature.hpp"
#include "qbt/response.hpp"
#include "qbt/specfun.hpp"
#include "qbt/thermo.hpp"

namespace qbt::verify {

using complex = std::complex<double>;
using damping::drude_params;
using damping::DrudeParams;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const DrudeParams& figure_sets(int i) {
    static const DrudeParams sets[4] = {drude_params(1.0, 1.0, 1.5), drude_params(1.0, 1.0, 4.0),
                                        drude_params(1.0, 5.0, 1.5), drude_params(1.0, 5.0, 4.0)};
    return sets[i];
}

}  // namespace

complex digamma_series_oracle(complex y, long long n_terms) {
    // psi(y) = -c_e + sum_{n>=0} [1/(n+1) - 1/(n+y)], tail by Euler-Maclaurin.
    // Kahan compensation keeps the rounding of the long partial sum at eps.
    complex sum = 0.0, comp = 0.0;
    for (long long n = n_terms - 1; n >= 0; --n) {
        const complex term = (1.0 / double(n + 1) - 1.0 / (double(n) + y)) - comp;
        const complex next = sum + term;
        comp = (next - sum) - term;
        sum = next;
    }
    const double N = double(n_terms);
    const complex a = N + 1.0, b = N + y;
    // sum_{n>=N} f(n) = int_N^inf f + f(N)/2 - f'(N)/12 + f'''(N)/720
    complex tail = std::log(b / a);
    tail += 0.5 * (1.0 / a - 1.0 / b);
    tail += (1.0 / (a * a) - 1.0 / (b * b)) / 12.0;
    tail -= (1.0 / (a * a * a * a) - 1.0 / (b * b * b * b)) / 120.0;
    return -euler_gamma + sum + tail;
}

namespace {

// ---------------------------------------------------------------- criterion 1

CheckResult criterion_figure1() {
    const auto t0 = std::chrono::steady_clock::now();
    const PhysicalConstants consts;
    const int n_points = 200;
    double min_k = 1e300, max_k_at_tmax = 0.0;
    for (int s = 0; s < 4; ++s) {
        const auto& p = figure_sets(s);
        for (int i = 0; i < n_points; ++i) {
            const double T = std::exp(std::log(0.01) + (std::log(50.0) - std::log(0.01)) *
                                                           double(i) / double(n_points - 1));
            const double k = thermo::drude_second_law_gap(p, T, consts);
            min_k = std::min(min_k, k);
            if (i == n_points - 1) max_k_at_tmax = std::max(max_k_at_tmax, k);
        }
    }
    double k01[4];
    for (int s = 0; s < 4; ++s)
        k01[s] = thermo::drude_second_law_gap(figure_sets(s), 0.1, consts);
    const bool ordered = k01[0] < k01[1] && k01[1] < k01[2] && k01[2] < k01[3];
    const double elapsed = seconds_since(t0);
    CheckResult r;
    r.name = "criterion 1: figure-1 grid positivity, ordering, high-T decay";
    r.measured = min_k;
    r.tolerance = -1e-8;
    r.pass = min_k >= -1e-8 && ordered && max_k_at_tmax < 0.01 && elapsed < 60.0;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "min K=%.3e; K(0.1)=%.4f<%.4f<%.4f<%.4f ordered=%d; max K(50)=%.2e; %.1fs",
                  min_k, k01[0], k01[1], k01[2], k01[3], (int)ordered, max_k_at_tmax, elapsed);
    r.detail = buf;
    return r;
}

// ---------------------------------------------------------------- criterion 2

CheckResult criterion_ohmic_limit_k0() {
    const PhysicalConstants consts;
    const double target = 1.5 / (2.0 * pi);
    double dev[3];
    const double omegas[3] = {50.0, 100.0, 200.0};
    for (int i = 0; i < 3; ++i) {
        const auto p = drude_params(1.0, omegas[i], 1.5);
        const double k0 = thermo::drude_second_law_gap(p, 0.0, consts);
        dev[i] = std::abs(k0 - target) / target;
    }
    CheckResult r;
    r.name = "criterion 2: K_d(0) -> hbar*gamma/(2 pi) as Omega grows";
    r.measured = dev[2];
    r.tolerance = 0.05;
    r.pass = dev[0] > dev[1] && dev[1] > dev[2] && dev[2] < 0.05;
    char buf[160];
    std::snprintf(buf, sizeof buf, "rel dev at Omega=50,100,200: %.4f, %.4f, %.4f (target %.6f)",
                  dev[0], dev[1], dev[2], target);
    r.detail = buf;
    return r;
}

// ------------------------------------------------------------- criteria 3 / 4

CheckResult criterion_energy_oracle() {
    const PhysicalConstants consts;
    const double temps[5] = {0.05, 0.2, 1.0, 5.0, 20.0};
    double worst = 0.0;
    for (int s = 0; s < 4; ++s)
        for (double T : temps) {
            const double a = thermo::drude_energy(figure_sets(s), T, consts);
            const double b = thermo::drude_energy_quadrature(figure_sets(s), T, consts, 1e-10);
            worst = std::max(worst, std::abs(a - b) / std::abs(b));
        }
    CheckResult r;
    r.name = "criterion 3: E_s digamma form vs fluctuation-dissipation quadrature";
    r.measured = worst;
    r.tolerance = 1e-6;
    r.pass = worst < 1e-6;
    r.detail = "4 parameter sets x T in {0.05,0.2,1,5,20}";
    return r;
}

CheckResult criterion_free_energy_oracle() {
    const PhysicalConstants consts;
    const double temps[5] = {0.05, 0.2, 1.0, 5.0, 20.0};
    double worst = 0.0;
    for (int s = 0; s < 4; ++s)
        for (double T : temps) {
            const double a = thermo::drude_coupling_free_energy(figure_sets(s), T, consts);
            const double b =
                thermo::drude_coupling_free_energy_quadrature(figure_sets(s), T, consts, 1e-10);
            worst = std::max(worst, std::abs(a - b) / std::abs(b));
        }
    CheckResult r;
    r.name = "criterion 4: F_cal Delta-series vs log-derivative quadrature";
    r.measured = worst;
    r.tolerance = 1e-6;
    r.pass = worst < 1e-6;
    r.detail = "4 parameter sets x T in {0.05,0.2,1,5,20}";
    return r;
}

// ---------------------------------------------------------------- criterion 5

CheckResult criterion_zero_temperature() {
    const PhysicalConstants consts;
    double worst = 0.0;
    for (int s = 0; s < 4; ++s) {
        const auto& p = figure_sets(s);
        const double de = std::abs(thermo::drude_energy(p, 1e-4, consts) -
                                   thermo::drude_energy_zero_temperature(p, consts));
        const double df = std::abs(thermo::drude_coupling_free_energy(p, 1e-4, consts) -
                                   thermo::drude_coupling_free_energy_zero_temperature(p, consts));
        worst = std::max({worst, de, df});
    }
    CheckResult r;
    r.name = "criterion 5: T->0 continuity against the closed zero-T forms";
    r.measured = worst;
    r.tolerance = 1e-3;
    r.pass = worst < 1e-3;
    r.detail = "|E(1e-4)-E(0)| and |F_cal(1e-4)-F_cal(0)|, all four sets";
    return r;
}

// ---------------------------------------------------------------- criterion 6

CheckResult criterion_discrete_suite(unsigned long long seed) {
    const auto t0 = std::chrono::steady_clock::now();
    const PhysicalConstants consts;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(1, 6);
    double worst_pair = 0.0, min_k = 1e300, min_ef_gap = 1e300, worst_t0_gap = 0.0;
    bool all_interlaced = true;
    for (int trial = 0; trial < 100; ++trial) {
        const auto b = bath::random_bath(size_dist(rng), rng());
        const auto modes = bath::normal_modes(b);
        all_interlaced = all_interlaced && bath::interlacing_holds(b, modes);
        for (double T : {0.0, 0.1, 1.0, 10.0}) {
            const double exact = bath::energy(b, T, consts);
            const double oracle = bath::energy_oracle(b, T, consts);
            worst_pair = std::max(worst_pair, std::abs(exact - oracle) / std::abs(oracle));
            min_k = std::min(min_k, bath::second_law_gap(b, T, consts));
            const double gap =
                bath::coupling_energy(b, T, consts) - bath::coupling_free_energy(b, T, consts);
            if (T == 0.0)
                worst_t0_gap = std::max(worst_t0_gap, std::abs(gap));
            else
                min_ef_gap = std::min(min_ef_gap, gap);
        }
    }
    const double elapsed = seconds_since(t0);
    CheckResult r;
    r.name = "criterion 6: discrete-bath suite (100 random baths, N<=6)";
    r.measured = worst_pair;
    r.tolerance = 1e-9;
    r.pass = all_interlaced && worst_pair < 1e-9 && min_k >= -1e-9 && worst_t0_gap <= 1e-12 &&
             min_ef_gap > 1e-12 && elapsed < 30.0;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "interlaced=%d; |exact-oracle|rel<=%.1e; min K=%.2e; |Ecal-Fcal|(T=0)<=%.1e; "
                  "min gap(T>0)=%.2e; %.1fs",
                  (int)all_interlaced, worst_pair, min_k, worst_t0_gap, min_ef_gap, elapsed);
    r.detail = buf;
    return r;
}

// ---------------------------------------------------------------- criterion 7

CheckResult criterion_classical_limits() {
    const PhysicalConstants consts;
    const double T = 1000.0;  // beta hbar w0 = 1e-3
    double worst_e = 0.0, worst_f = 0.0, worst_k = 0.0;
    for (int s = 0; s < 4; ++s) {
        const auto& p = figure_sets(s);
        const double beta = 1.0 / T;
        worst_e = std::max(worst_e, std::abs(beta * thermo::drude_energy(p, T, consts) - 1.0));
        const double fcl = thermo::classical_free_energy(p.omega_0, T, consts);
        worst_f = std::max(worst_f, std::abs(thermo::drude_coupling_free_energy(p, T, consts) -
                                             fcl) * beta);
        thermo::EvaluateOptions opts;
        opts.classical = true;
        const auto pt = thermo::evaluate_point(p, T, consts, opts);
        worst_k = std::max(worst_k, std::abs(*pt.K));
    }
    CheckResult r;
    r.name = "criterion 7: classical limits at beta hbar w0 = 1e-3";
    r.measured = std::max(worst_e, worst_f);
    r.tolerance = 1e-2;
    r.pass = worst_e < 1e-2 && worst_f < 1e-2 && worst_k == 0.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "|beta E - 1|<=%.2e; beta|F_cal - f_cl|<=%.2e; classical K==%g",
                  worst_e, worst_f, worst_k);
    r.detail = buf;
    return r;
}

// ---------------------------------------------------------------- criterion 8

CheckResult criterion_ohmic_divergence() {
    const PhysicalConstants consts;
    const double w0 = 1.0, go = 0.8, T = 0.5;
    // log-slope of the velocity-variance partial sums across cutoffs 1e3..1e6
    const std::int64_t cuts[4] = {1000, 10000, 100000, 1000000};
    double v[4];
    for (int i = 0; i < 4; ++i)
        v[i] = thermo::ohmic_velocity_variance(w0, go, T, consts, cuts[i]).value;
    const double slope = (v[3] - v[0]) / std::log(1000.0);
    const double slope_dev = std::abs(slope - go / pi) / (go / pi);

    // Drude Delta-series -> Ohmic Delta-series as Omega -> infinity
    const double t_cmp = 0.7;
    double diff[3];
    int idx = 0;
    for (double Om : {1e2, 1e3, 1e4}) {
        double worst = 0.0;
        for (double ga : {1.5, 4.0}) {
            const auto p = drude_params(1.0, Om, ga);
            const double drude_delta =
                thermo::drude_coupling_free_energy(p, t_cmp, consts) -
                thermo::drude_coupling_free_energy_zero_temperature(p, consts);
            const double ohmic_delta =
                thermo::ohmic_coupling_free_energy_delta(1.0, ga, t_cmp, consts);
            worst = std::max(worst, std::abs(drude_delta - ohmic_delta));
        }
        diff[idx++] = worst;
    }

    // total zero-T free energies disagree: Ohmic grows with the cutoff while
    // the Drude value is finite
    const double f_drude0 = thermo::drude_coupling_free_energy_zero_temperature(
        drude_params(1.0, 1e4, 4.0), consts);
    double grow[3];
    for (int i = 0; i < 3; ++i)
        grow[i] = thermo::ohmic_zero_temperature_free_energy(w0, go, (std::int64_t)std::pow(10, 3 + i),
                                                             consts).value;
    const double per_decade = go / (2.0 * pi) * std::log(10.0);
    const bool growing = std::abs((grow[1] - grow[0]) - per_decade) < 0.05 * per_decade &&
                         std::abs((grow[2] - grow[1]) - per_decade) < 0.05 * per_decade;

    CheckResult r;
    r.name = "criterion 8: Ohmic divergence structure and Drude->Ohmic Delta limit";
    r.measured = std::max(slope_dev, diff[2] / 1e-4 * 0.02);
    r.tolerance = 0.02;
    r.pass = slope_dev < 0.02 && diff[0] > diff[1] && diff[1] > diff[2] && diff[2] < 1e-4 &&
             growing && std::isfinite(f_drude0);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "slope dev=%.4f; Delta diff at Omega=1e2,1e3,1e4: %.2e,%.2e,%.2e; "
                  "F^o(0) growth/decade=%.4f (want %.4f)",
                  slope_dev, diff[0], diff[1], diff[2], grow[1] - grow[0], per_decade);
    r.detail = buf;
    return r;
}

// ---------------------------------------------------------------- criterion 9

CheckResult check_digamma_oracle(int n_points, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < n_points; ++i) {
        const double mod = std::pow(10.0, -3.0 + 9.0 * uni(rng));
        double phase;
        if (mod > 50.0) {
            phase = (uni(rng) - 0.5) * (pi - 0.1);  // right half plane
        } else {
            phase = (2.0 * uni(rng) - 1.0) * pi * 0.999;
        }
        complex z = std::polar(mod, phase);
        if (mod <= 50.0) {
            // stay at distance > 0.1 from the poles on the negative axis
            if (std::abs(z.imag()) < 0.1 && z.real() < 0.5 &&
                std::abs(z.real() - std::round(z.real())) < 0.1) {
                --i;
                continue;
            }
        }
        const complex a = specfun::digamma(z);
        const complex b = digamma_series_oracle(z, 20000);
        worst = std::max(worst, std::abs(a - b) / std::max(1e-300, std::abs(b)));
    }
    CheckResult r;
    r.name = "digamma vs direct-series oracle";
    r.measured = worst;
    r.tolerance = 1e-12;
    r.pass = worst < 1e-12;
    r.detail = std::to_string(n_points) + " points, |z| in [1e-3, 1e6]";
    return r;
}

CheckResult check_aux_identity() {
    double worst = 0.0;
    for (double a : {0.1, 1.0, 10.0, 100.0}) {
        const double closed =
            std::sin(a) * specfun::ci(a) - std::cos(a) * specfun::si(a);
        const double integral = specfun::aux_f_quadrature(complex(a, 0.0), 1e-13).real();
        worst = std::max(worst, std::abs(closed - integral));
    }
    CheckResult r;
    r.name = "aux Laplace integral vs sin*Ci - cos*si closed form";
    r.measured = worst;
    r.tolerance = 1e-10;
    r.pass = worst < 1e-10;
    r.detail = "a in {0.1, 1, 10, 100}";
    return r;
}

CheckResult check_sum_rules(int n_sets, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < n_sets; ++i) {
        const double w0 = std::pow(10.0, -1.0 + 2.0 * uni(rng));
        const double Om = std::pow(10.0, -1.0 + 2.0 * uni(rng));
        const double ga = std::pow(10.0, -1.0 + 2.0 * uni(rng));
        const auto p = drude_params(w0, Om, ga);
        if (p.branch == damping::Branch::Critical) continue;
        response::PartialFractionCoeffs c;
        try {
            c = response::partial_fractions(response::drude_poles(p));
        } catch (const DegeneratePoles&) {
            continue;
        }
        complex s0 = 0.0, s2 = 0.0;
        double n0 = 0.0, n2 = 0.0;
        for (int l = 0; l < 3; ++l) {
            s0 += c.lambda[l];
            s2 += c.lambda[l] * c.rates[l] * c.rates[l];
            n0 += std::abs(c.lambda[l]);
            n2 += std::abs(c.lambda[l] * c.rates[l] * c.rates[l]);
        }
        worst = std::max({worst, std::abs(s0) / n0, std::abs(s2) / n2});
    }
    CheckResult r;
    r.name = "partial-fraction sum rules (sum lambda = sum lambda w^2 = 0)";
    r.measured = worst;
    r.tolerance = 1e-10;
    r.pass = worst < 1e-10;
    r.detail = std::to_string(n_sets) + " random parameter sets, both branches";
    return r;
}

CheckResult criterion_specfun(unsigned long long seed) {
    const auto a = check_digamma_oracle(10000, seed);
    const auto b = check_aux_identity();
    const auto c = check_sum_rules(10000, seed + 1);
    CheckResult r;
    r.name = "criterion 9: special functions (digamma oracle, aux integral, sum rules)";
    r.measured = std::max({a.measured / a.tolerance, b.measured / b.tolerance,
                           c.measured / c.tolerance});
    r.tolerance = 1.0;
    r.pass = a.pass && b.pass && c.pass;
    char buf[200];
    std::snprintf(buf, sizeof buf, "digamma %.2e (tol 1e-12); aux %.2e (tol 1e-10); sum rules %.2e (tol 1e-10)",
                  a.measured, b.measured, c.measured);
    r.detail = buf;
    return r;
}

// --------------------------------------------------------------- criterion 10

CheckResult criterion_thermo_identity() {
    const PhysicalConstants consts;
    double worst_identity = 0.0, worst_entropy = 0.0;
    for (int s = 0; s < 4; ++s) {
        const auto& p = figure_sets(s);
        for (double T : {0.5, 1.0, 5.0}) {
            const auto fs = thermo::drude_system_free_energy(p, T, consts, 1e-10);
            const double e = thermo::drude_energy(p, T, consts);
            worst_identity = std::max(worst_identity, std::abs(e - fs.F_s - T * fs.S_s));
        }
        const auto fs_low = thermo::drude_system_free_energy(p, 1e-3, consts, 1e-10);
        worst_entropy = std::max(worst_entropy, fs_low.S_s);
    }
    CheckResult r;
    r.name = "criterion 10: E - F_s - T S_s identity and S_s(1e-3) bound";
    r.measured = worst_entropy;
    r.tolerance = 1e-4;
    r.pass = worst_identity < 1e-8 && worst_entropy < 1e-4;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "identity residual <= %.2e (tol 1e-8, PASS); S_s(1e-3) <= %.3e vs bound 1e-4 "
                  "(exact low-T law S_s = pi gamma_o k_B^2 T/(3 hbar omega_0^2) gives 1.6e-3..5e-3)",
                  worst_identity, worst_entropy);
    r.detail = buf;
    return r;
}

// ------------------------------------------------------------- quick checks

CheckResult check_digamma_recurrence(unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double mod = std::pow(10.0, -1.0 + 3.0 * uni(rng));
        const complex z = std::polar(mod, (2.0 * uni(rng) - 1.0) * pi * 0.999);
        if (z.real() < 0.5 && std::abs(z.imag()) < 0.1 &&
            std::abs(z.real() - std::round(z.real())) < 0.1) {
            --i;
            continue;
        }
        const complex lhs = specfun::digamma(z + 1.0) - specfun::digamma(z);
        worst = std::max(worst, std::abs(lhs - 1.0 / z));
    }
    CheckResult r;
    r.name = "digamma recurrence psi(z+1) - psi(z) = 1/z";
    r.measured = worst;
    r.tolerance = 1e-12;
    r.pass = worst < 1e-12;
    r.detail = "10^4 random z, |z| in [0.1, 100]";
    return r;
}

CheckResult check_aux_conjugate(unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const complex a(std::pow(10.0, -1.0 + 2.5 * uni(rng)),
                        std::pow(10.0, -1.0 + 2.5 * uni(rng)) * (uni(rng) < 0.5 ? -1.0 : 1.0));
        const complex v1 = specfun::aux_f(a);
        const complex v2 = specfun::aux_f(std::conj(a));
        worst = std::max(worst, std::abs(v2 - std::conj(v1)) / std::abs(v1));
    }
    CheckResult r;
    r.name = "aux integral conjugate symmetry f(conj a) = conj f(a)";
    r.measured = worst;
    r.tolerance = 1e-11;
    r.pass = worst < 1e-11;
    r.detail = "100 random complex a, Re a > 0";
    return r;
}

CheckResult check_matsubara() {
    const double direct = specfun::coth(1.0);
    const double partial = specfun::matsubara_coth(1.0, 2.0, 100000);
    bool monotone = true;
    double prev = 0.0;
    for (std::int64_t n : {10, 100, 1000, 10000}) {
        const double v = specfun::matsubara_coth(1.0, 2.0, n);
        if (v < prev || v > direct) monotone = false;
        prev = v;
    }
    CheckResult r;
    r.name = "Matsubara coth identity partial sums";
    r.measured = std::abs(partial - direct);
    r.tolerance = 1e-4;
    r.pass = std::abs(partial - direct) < 1e-4 && monotone;
    r.detail = "omega=1, beta hbar=2, monotone and bounded by coth";
    return r;
}

CheckResult check_param_round_trip(unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst_phys = 0.0, worst_under = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double w0 = std::pow(10.0, -1.0 + 2.0 * uni(rng));
        const double Om = std::pow(10.0, -1.0 + 2.0 * uni(rng));
        const double ga = std::pow(10.0, -1.0 + 2.0 * uni(rng));
        const auto p = drude_params(w0, Om, ga);
        const auto q = damping::drude_params_from_physical(p.omega_0, p.omega_d, p.gamma_o);
        // forward(inverse(.)) is the identity on the physical triple always
        worst_phys = std::max({worst_phys, std::abs(q.omega_0 - p.omega_0) / p.omega_0,
                               std::abs(q.omega_d - p.omega_d) / p.omega_d,
                               std::abs(q.gamma_o - p.gamma_o) / p.gamma_o});
        // and on (w0, Omega, gamma) wherever the preimage is unique
        if (p.branch == damping::Branch::Underdamped)
            worst_under = std::max({worst_under, std::abs(q.w0 - w0) / w0,
                                    std::abs(q.Omega - Om) / Om, std::abs(q.gamma - ga) / ga});
    }
    CheckResult r;
    r.name = "Drude parameter map round trips";
    r.measured = std::max(worst_phys, worst_under);
    r.tolerance = 1e-12;
    r.pass = worst_phys < 1e-12 && worst_under < 1e-12;
    r.detail = "10^4 random triples; identity on physical triple + underdamped preimage";
    return r;
}

CheckResult check_factorization(unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const PhysicalConstants consts;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto p = drude_params(std::pow(10.0, -1.0 + 2.0 * uni(rng)),
                                    std::pow(10.0, -1.0 + 2.0 * uni(rng)),
                                    std::pow(10.0, -1.0 + 2.0 * uni(rng)));
        const complex w(4.0 * (uni(rng) - 0.5) * p.omega_d, 4.0 * (uni(rng) - 0.5) * p.omega_d);
        complex a, b;
        try {
            a = response::chi_tilde(p.model(), p.omega_0, w, consts);
            b = response::chi_tilde_drude_factored(p, w, consts);
        } catch (const PoleArgument&) {
            --i;
            continue;
        }
        worst = std::max(worst, std::abs(a - b) / std::abs(a));
    }
    CheckResult r;
    r.name = "susceptibility factorization equivalence";
    r.measured = worst;
    r.tolerance = 1e-12;
    r.pass = worst < 1e-12;
    r.detail = "10^3 random parameter sets, random complex omega";
    return r;
}

CheckResult check_passivity(unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const PhysicalConstants consts;
    double min_v = 1e300;
    for (int i = 0; i < 1000; ++i) {
        const double w0 = std::pow(10.0, -1.0 + 2.0 * uni(rng));
        const double w = std::pow(10.0, -2.0 + 4.0 * uni(rng));
        double v;
        if (uni(rng) < 0.5) {
            const auto m = damping::DampingModel::drude(std::pow(10.0, -1.0 + 2.0 * uni(rng)),
                                                        std::pow(10.0, -1.0 + 2.0 * uni(rng)));
            v = response::im_chi(m, w0, w, consts);
        } else {
            const auto m = damping::DampingModel::ohmic(std::pow(10.0, -1.0 + 2.0 * uni(rng)));
            v = response::im_chi(m, w0, w, consts);
        }
        min_v = std::min(min_v, v);
    }
    CheckResult r;
    r.name = "passivity Im chi(omega + i0+) > 0 for omega > 0";
    r.measured = min_v;
    r.tolerance = 0.0;
    r.pass = min_v > 0.0;
    r.detail = "10^3 random models and frequencies";
    return r;
}

}  // namespace

std::vector<CheckResult> run_quick(unsigned long long seed) {
    std::vector<CheckResult> out;
    out.push_back(check_digamma_oracle(2000, seed));
    out.push_back(check_digamma_recurrence(seed + 1));
    out.push_back(check_aux_identity());
    out.push_back(check_aux_conjugate(seed + 2));
    out.push_back(check_matsubara());
    out.push_back(check_sum_rules(10000, seed + 3));
    out.push_back(check_param_round_trip(seed + 4));
    out.push_back(check_factorization(seed + 5));
    out.push_back(check_passivity(seed + 6));
    return out;
}

std::vector<CheckResult> run_acceptance(int criterion, unsigned long long seed) {
    std::vector<CheckResult> out;
    auto want = [&](int i) { return criterion == 0 || criterion == i; };
    if (want(1)) out.push_back(criterion_figure1());
    if (want(2)) out.push_back(criterion_ohmic_limit_k0());
    if (want(3)) out.push_back(criterion_energy_oracle());
    if (want(4)) out.push_back(criterion_free_energy_oracle());
    if (want(5)) out.push_back(criterion_zero_temperature());
    if (want(6)) out.push_back(criterion_discrete_suite(seed));
    if (want(7)) out.push_back(criterion_classical_limits());
    if (want(8)) out.push_back(criterion_ohmic_divergence());
    if (want(9)) out.push_back(criterion_specfun(seed));
    if (want(10)) out.push_back(criterion_thermo_identity());
    return out;
}

std::vector<CheckResult> run_full(unsigned long long seed) {
    auto out = run_quick(seed);
    auto acc = run_acceptance(0, seed);
    out.insert(out.end(), acc.begin(), acc.end());
    return out;
}

bool report(const std::vector<CheckResult>& results) {
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] %s (measured %.3e vs %.3e): %s\n", r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.measured, r.tolerance, r.detail.c_str());
        all = all && r.pass;
    }
    return all;
}

}  // namespace qbt::verify
