#pragma once

#include <array>
#include <complex>

#include "qbt/constants.hpp"
#include "qbt/damping.hpp"
#include "qbt/errors.hpp"

namespace qbt::response {

using complex = std::complex<double>;
using damping::DampingModel;
using damping::DrudeParams;

// Decay rates of the three susceptibility poles on the negative-imaginary
// side: omega = -i Omega, -i z1, -i z2.
struct DrudePoles {
    double Omega;
    complex z1, z2;
    double omega_d;   // = Omega + z1 + z2, the numerator rate
    double omega_0;   // physical oscillator frequency
};

DrudePoles drude_poles(const DrudeParams& p);

// Partial-fraction data for Im chi_d: rates (Omega, z1, z2) with weights
// lambda and the four-rate list (omega_d, Omega, z1, z2) with signs
// tau = (+1, -1, -1, -1) used by the free-energy series.
struct PartialFractionCoeffs {
    std::array<complex, 3> lambda;
    std::array<complex, 3> rates;      // Omega, z1, z2
    double rate0;                      // omega_d
    std::array<int, 4> tau{1, -1, -1, -1};
};

// Throws DegeneratePoles when two rates are closer than 1e-10 relative.
PartialFractionCoeffs partial_fractions(const DrudePoles& poles);

// Dynamic susceptibility chi(omega) = (1/M) / (omega_0^2 - omega^2
// - i omega gamma_tilde(omega)). Throws PoleArgument near a pole.
complex chi_tilde(const DampingModel& model, double omega_0, complex omega,
                  const PhysicalConstants& consts);

// The factored rational form of the Drude susceptibility,
// -(1/M)(omega + i omega_d) / ((omega + i Omega)(omega + i z1)(omega + i z2)).
complex chi_tilde_drude_factored(const DrudeParams& p, complex omega,
                                 const PhysicalConstants& consts);

// Im chi(omega + i0+) for omega > 0 via the closed boundary-value forms
// (no finite regulator). Positive for omega > 0 (passivity).
double im_chi(const DampingModel& model, double omega_0, double omega,
              const PhysicalConstants& consts);

// Im d/domega ln chi(omega + i0+) for the free-energy and coupling-energy
// quadratures, from the pole factorization.
double im_dlog_chi(const DrudeParams& p, double omega);

}  // namespace qbt::response
