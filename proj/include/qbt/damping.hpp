#pragma once

#include <complex>
#include <variant>

#include "qbt/constants.hpp"
#include "qbt/errors.hpp"

namespace qbt::damping {

using complex = std::complex<double>;

enum class BathKind { Drude, Ohmic };

// Continuum bath description: Ohmic J0 = M g_o w, or Drude
// Jd = M g_o w wd^2 / (w^2 + wd^2) with cutoff frequency wd.
struct DampingModel {
    BathKind kind;
    double gamma_o;
    double omega_d;  // meaningful for Drude only

    static DampingModel drude(double gamma_o, double omega_d) {
        if (!(gamma_o > 0.0) || !(omega_d > 0.0))
            throw DomainError("DampingModel::drude: gamma_o and omega_d must be positive");
        return {BathKind::Drude, gamma_o, omega_d};
    }
    static DampingModel ohmic(double gamma_o) {
        if (!(gamma_o > 0.0)) throw DomainError("DampingModel::ohmic: gamma_o must be positive");
        return {BathKind::Ohmic, gamma_o, 0.0};
    }
};

enum class Branch { Overdamped, Underdamped, Critical };

// The (w0, Omega, gamma) parametrization of the Drude model together with
// the physical triple it maps to:
//   omega_0^2 = w0^2 Omega/(Omega+gamma),  omega_d = Omega+gamma,
//   gamma_o   = gamma (Omega (Omega+gamma) + w0^2) / (Omega+gamma)^2.
// w1 = sqrt(w0^2 - (gamma/2)^2) underdamped; w1_bar = sqrt((gamma/2)^2 - w0^2)
// overdamped; both zero on the critical branch.
struct DrudeParams {
    double w0, Omega, gamma;
    double omega_0, omega_d, gamma_o;
    double w1 = 0.0;
    double w1_bar = 0.0;
    Branch branch;

    // Susceptibility pole decay rates z1 = gamma/2 + i w1, z2 = conj(z1)
    // (underdamped); z1 = gamma/2 + w1_bar >= z2 = gamma/2 - w1_bar (overdamped).
    complex z1() const {
        return branch == Branch::Underdamped ? complex(gamma / 2.0, w1)
                                             : complex(gamma / 2.0 + w1_bar, 0.0);
    }
    complex z2() const {
        return branch == Branch::Underdamped ? complex(gamma / 2.0, -w1)
                                             : complex(gamma / 2.0 - w1_bar, 0.0);
    }

    DampingModel model() const { return DampingModel::drude(gamma_o, omega_d); }
};

// Forward map (w0, Omega, gamma) -> DrudeParams. All inputs must be positive.
DrudeParams drude_params(double w0, double Omega, double gamma);

// Inverse map from the physical triple. The forward map is 3:1 in the
// overdamped regime (Omega and the two pole rates are interchangeable roots
// of the same cubic); this picks the real root closest to omega_d, i.e. the
// gamma -> 0 continuation. The composition forward(inverse(.)) is always the
// identity on (omega_0, omega_d, gamma_o).
DrudeParams drude_params_from_physical(double omega_0, double omega_d, double gamma_o);

// Spectral density J(omega) >= 0 at omega >= 0.
double spectral_density(const DampingModel& model, double omega, const PhysicalConstants& consts);

// Frequency-domain damping function. Drude: gamma_o omega_d / (omega_d - i omega),
// pole at omega = -i omega_d. Ohmic: the constant gamma_o.
complex gamma_tilde(const DampingModel& model, complex omega);

// Symbolic tag for the Ohmic time kernel 2 gamma_o delta(t).
struct DeltaKernel {
    double weight;
};
using KernelValue = std::variant<double, DeltaKernel>;

// Time-domain damping kernel at t >= 0. Drude returns gamma_o omega_d
// e^{-omega_d t}; Ohmic returns the delta tag, never a number.
KernelValue gamma_kernel(const DampingModel& model, double t);

}  // namespace qbt::damping
