#include "qbt/damping.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qbt::damping {

namespace {

// Relative tolerance below which gamma/2 and w0 are treated as coincident.
constexpr double critical_tol = 1e-10;

}  // namespace

DrudeParams drude_params(double w0, double Omega, double gamma) {
    if (!(w0 > 0.0) || !(Omega > 0.0) || !(gamma > 0.0))
        throw DomainError("drude_params: w0, Omega and gamma must all be positive");
    DrudeParams p;
    p.w0 = w0;
    p.Omega = Omega;
    p.gamma = gamma;
    p.omega_d = Omega + gamma;
    p.omega_0 = w0 * std::sqrt(Omega / (Omega + gamma));
    p.gamma_o = gamma * (Omega * (Omega + gamma) + w0 * w0) / ((Omega + gamma) * (Omega + gamma));
    const double half = gamma / 2.0;
    if (std::abs(half - w0) <= critical_tol * w0) {
        p.branch = Branch::Critical;
        p.w1 = 0.0;
        p.w1_bar = 0.0;
    } else if (half > w0) {
        p.branch = Branch::Overdamped;
        p.w1_bar = std::sqrt(half * half - w0 * w0);
    } else {
        p.branch = Branch::Underdamped;
        p.w1 = std::sqrt(w0 * w0 - half * half);
    }
    return p;
}

namespace {

// Real roots of x^3 + a x^2 + b x + c = 0 (ascending).
std::vector<double> cubic_real_roots(double a, double b, double c) {
    const double q = (a * a - 3.0 * b) / 9.0;
    const double r = (2.0 * a * a * a - 9.0 * a * b + 27.0 * c) / 54.0;
    std::vector<double> roots;
    if (r * r < q * q * q) {
        const double th = std::acos(std::clamp(r / std::sqrt(q * q * q), -1.0, 1.0));
        for (int k = -1; k <= 1; ++k)
            roots.push_back(-2.0 * std::sqrt(q) * std::cos((th + 2.0 * pi * k) / 3.0) - a / 3.0);
        std::sort(roots.begin(), roots.end());
    } else {
        double A = -std::copysign(std::cbrt(std::abs(r) + std::sqrt(r * r - q * q * q)), r);
        double B = (A != 0.0) ? q / A : 0.0;
        roots.push_back(A + B - a / 3.0);
    }
    return roots;
}

}  // namespace

DrudeParams drude_params_from_physical(double omega_0, double omega_d, double gamma_o) {
    if (!(omega_0 > 0.0) || !(omega_d > 0.0) || !(gamma_o > 0.0))
        throw DomainError("drude_params_from_physical: inputs must be positive");
    // Omega solves Omega^3 - omega_d Omega^2 + (omega_0^2 + gamma_o omega_d) Omega
    //              - omega_0^2 omega_d = 0.
    auto roots = cubic_real_roots(-omega_d, omega_0 * omega_0 + gamma_o * omega_d,
                                  -omega_0 * omega_0 * omega_d);
    double best = -1.0;
    for (double r : roots) {
        if (!(r > 0.0) || !(r < omega_d)) continue;
        if (best < 0.0 || std::abs(r - omega_d) < std::abs(best - omega_d)) best = r;
    }
    if (best < 0.0)
        throw DomainError("drude_params_from_physical: no admissible Omega root found");
    const double Omega = best;
    const double gamma = omega_d - Omega;
    const double w0 = omega_0 * std::sqrt(omega_d / Omega);
    return drude_params(w0, Omega, gamma);
}

double spectral_density(const DampingModel& model, double omega,
                        const PhysicalConstants& consts) {
    if (omega < 0.0) throw DomainError("spectral_density: omega must be >= 0");
    switch (model.kind) {
        case BathKind::Ohmic:
            return consts.M * model.gamma_o * omega;
        case BathKind::Drude:
            return consts.M * model.gamma_o * omega * model.omega_d * model.omega_d /
                   (omega * omega + model.omega_d * model.omega_d);
    }
    throw DomainError("spectral_density: unknown model");
}

complex gamma_tilde(const DampingModel& model, complex omega) {
    if (model.kind == BathKind::Ohmic) return complex(model.gamma_o, 0.0);
    const complex den = model.omega_d - complex(0.0, 1.0) * omega;
    if (std::abs(den) < 1e-12 * model.omega_d)
        throw PoleArgument("gamma_tilde: omega at the Drude pole -i omega_d");
    return model.gamma_o * model.omega_d / den;
}

KernelValue gamma_kernel(const DampingModel& model, double t) {
    if (t < 0.0) throw DomainError("gamma_kernel: t must be >= 0");
    if (model.kind == BathKind::Ohmic) return DeltaKernel{2.0 * model.gamma_o};
    return model.gamma_o * model.omega_d * std::exp(-model.omega_d * t);
}

}  // namespace qbt::damping
