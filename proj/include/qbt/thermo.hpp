#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include "qbt/constants.hpp"
#include "qbt/damping.hpp"
#include "qbt/errors.hpp"

namespace qbt::thermo {

using complex = std::complex<double>;
using damping::Branch;
using damping::DampingModel;
using damping::DrudeParams;

// ---------------------------- free oscillator -------------------------------

// e(w,T) = (hbar w / 2) coth(beta hbar w / 2); hbar w / 2 at T = 0.
double free_oscillator_energy(double omega, double T, const PhysicalConstants& consts);

// f(w,T) = hbar w / 2 + (1/beta) ln(1 - e^{-beta hbar w}); hbar w / 2 at T = 0.
double free_oscillator_free_energy(double omega, double T, const PhysicalConstants& consts);

// s = (e - f)/T; zero at T = 0.
double free_oscillator_entropy(double omega, double T, const PhysicalConstants& consts);

// Classical counterparts e_cl = k_B T and f_cl = ln(beta hbar w)/beta.
double classical_energy(double T, const PhysicalConstants& consts);
double classical_free_energy(double omega, double T, const PhysicalConstants& consts);

// ------------------------------ Drude model ---------------------------------

// E_s(T) from the digamma resummation
//   E_s = 1/2 sum_l lambda_l (w0^2 - r_l^2) {1/(beta r_l) + (hbar/pi) psi(beta hbar r_l / 2pi)}.
// Valid on both branches (complex intermediates, real part taken after
// summation with an enforced imaginary-residue bound). Near-degenerate pole
// rates are handled by the confluent double-pole limit. Requires T > 0.
double drude_energy(const DrudeParams& p, double T, const PhysicalConstants& consts);

// E_s(0) = (hbar/2pi) {A + B} closed form. Underdamped case uses the same
// expressions continued through w1_bar -> i w1 (always real-valued here).
double drude_energy_zero_temperature(const DrudeParams& p, const PhysicalConstants& consts);

// Position and velocity variances <q^2>, <qdot^2> from the digamma forms.
struct DrudeVariances {
    double position;
    double velocity;
};
DrudeVariances drude_variances(const DrudeParams& p, double T, const PhysicalConstants& consts);

// Symmetrized position autocorrelation <q(0)q(t)+q(t)q(0)>/2 via the
// Matsubara sum; equals the <q^2> digamma form at t = 0.
double drude_position_correlation(const DrudeParams& p, double t, double T,
                                  const PhysicalConstants& consts,
                                  const SeriesControl& ctrl = {});

// F_cal(T) = F_cal(0) + (1/pi beta) sum_n (1/n) Delta_n with
// Delta_n = sum_mu tau_mu f(n beta hbar rate_mu) over (omega_d, Omega, z1, z2),
// f the auxiliary Laplace integral. Real rates go through the Ci/si closed
// form, complex rates through the integral representation. Requires T > 0
// (T = 0 handled by the closed form below).
double drude_coupling_free_energy(const DrudeParams& p, double T,
                                  const PhysicalConstants& consts,
                                  const SeriesControl& ctrl = {});

// F_cal(0) = (hbar/2pi){(Omega+gamma) ln((Omega+gamma)/Omega) + gamma ln(Omega/w0)
//            + w1_bar ln((gamma/2 - w1_bar)/(gamma/2 + w1_bar))},
// continued through both branches.
double drude_coupling_free_energy_zero_temperature(const DrudeParams& p,
                                                   const PhysicalConstants& consts);

// Fluctuation-dissipation quadrature routes; independent of the digamma /
// Delta-series resummations above.
double drude_energy_quadrature(const DrudeParams& p, double T, const PhysicalConstants& consts,
                               double quad_tol = 1e-10);
double drude_coupling_free_energy_quadrature(const DrudeParams& p, double T,
                                             const PhysicalConstants& consts,
                                             double quad_tol = 1e-10);
// E_cal(T) = (1/pi) int e(w,T) Im d/dw ln chi dw (coupling energy).
double drude_coupling_energy_quadrature(const DrudeParams& p, double T,
                                        const PhysicalConstants& consts,
                                        double quad_tol = 1e-10);

// System free energy and entropy from the temperature integral of E_s with
// the zero-entropy integration constant. F_s comes from the T-form, S_s from
// the beta-form; E_s - F_s - T S_s = 0 is then a two-route consistency check,
// and the result is independent of the internal reference beta0.
struct SystemFreeEnergy {
    double F_s;
    double S_s;
};
SystemFreeEnergy drude_system_free_energy(const DrudeParams& p, double T,
                                          const PhysicalConstants& consts,
                                          double quad_tol = 1e-10,
                                          std::optional<double> beta0 = std::nullopt);

// K_d(T) = F_cal - f(omega_0,T) - E_s + e(omega_0,T); K_d(0) closed form.
double drude_second_law_gap(const DrudeParams& p, double T, const PhysicalConstants& consts,
                            const SeriesControl& ctrl = {});

// hbar -> 0 counterparts. The pole-sum forms reduce analytically to
// e_cl(T) and f_cl(omega_0,T); both codings are kept so the reduction is
// testable.
double drude_energy_classical(const DrudeParams& p, double T, const PhysicalConstants& consts);
double drude_coupling_free_energy_classical(const DrudeParams& p, double T,
                                            const PhysicalConstants& consts);
double drude_position_correlation_classical(const DrudeParams& p, double t, double T,
                                            const PhysicalConstants& consts);

// ------------------------------ Ohmic model ---------------------------------

struct OhmicRoots {
    complex omega1;  // gamma_o/2 - wbar
    complex omega2;  // gamma_o/2 + wbar
    Branch branch;
};

// Roots of the Ohmic susceptibility denominator; omega1 omega2 = omega_0^2,
// omega1 + omega2 = gamma_o.
OhmicRoots ohmic_roots(double omega_0, double gamma_o);

// A partial sum of a quantity that diverges with its cutoff. log_slope is
// the analytic coefficient of the logarithmic growth.
struct RegularizedValue {
    double value = 0.0;
    bool divergent = false;
    std::int64_t cutoff_terms = 0;
    std::optional<double> log_slope;
};

// <q^2> for the Ohmic bath (convergent).
double ohmic_position_variance(double omega_0, double gamma_o, double T,
                               const PhysicalConstants& consts);
double ohmic_position_variance_quadrature(double omega_0, double gamma_o, double T,
                                          const PhysicalConstants& consts,
                                          double quad_tol = 1e-10);

// <qdot^2> partial sum to cutoff_terms harmonic terms; diverges like
// (hbar gamma_o / pi M) ln N.
RegularizedValue ohmic_velocity_variance(double omega_0, double gamma_o, double T,
                                         const PhysicalConstants& consts,
                                         std::int64_t cutoff_terms);

// E_s^(o)(T) partial sum; diverges like (hbar gamma_o / 2 pi) ln N.
RegularizedValue ohmic_energy(double omega_0, double gamma_o, double T,
                              const PhysicalConstants& consts, std::int64_t cutoff_terms);

// The finite temperature-dependent part Delta F_cal^(o)(T) of the Ohmic
// coupling free energy.
double ohmic_coupling_free_energy_delta(double omega_0, double gamma_o, double T,
                                        const PhysicalConstants& consts,
                                        const SeriesControl& ctrl = {});

// F_cal^(o)(0) up to the frequency cutoff (cutoff_mult * max(omega_0, gamma_o));
// diverges like (hbar gamma_o / 2 pi) ln omega_c.
RegularizedValue ohmic_zero_temperature_free_energy(double omega_0, double gamma_o,
                                                    std::int64_t cutoff_mult,
                                                    const PhysicalConstants& consts);

// ------------------------------ aggregation ---------------------------------

// All scalar thermodynamic quantities at one temperature. K is assembled as
// F_cal - f_free - E_s + e_free from the stored members.
struct ThermoPoint {
    double T = 0.0;
    double e_free = 0.0;
    double f_free = 0.0;
    std::optional<double> E_s;
    std::optional<double> F_cal;
    std::optional<double> E_cal;
    std::optional<double> F_s;
    std::optional<double> S_s;
    std::optional<double> K;
    // Ohmic-only members
    std::optional<double> q_var;
    std::optional<RegularizedValue> v_var;
    std::optional<RegularizedValue> E_s_regularized;
    std::optional<double> dF_cal;
};

struct EvaluateOptions {
    bool classical = false;
    bool want_coupling_energy = false;   // E_cal (quadrature route)
    bool want_system_free_energy = false;  // F_s and S_s
    bool want_variances = false;           // Ohmic q_var / v_var
    std::int64_t ohmic_cutoff_terms = 10000;
    double quad_tol = 1e-10;
    SeriesControl series = {};
};

ThermoPoint evaluate_point(const DrudeParams& p, double T, const PhysicalConstants& consts,
                           const EvaluateOptions& opts = {});
ThermoPoint evaluate_point(const DampingModel& model, double omega_0, double T,
                           const PhysicalConstants& consts, const EvaluateOptions& opts = {});

}  // namespace qbt::thermo
