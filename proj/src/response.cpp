#include "qbt/response.hpp"

#include <cmath>

namespace qbt::response {

DrudePoles drude_poles(const DrudeParams& p) {
    DrudePoles poles;
    poles.Omega = p.Omega;
    poles.z1 = p.z1();
    poles.z2 = p.z2();
    poles.omega_d = p.omega_d;
    poles.omega_0 = p.omega_0;
    return poles;
}

PartialFractionCoeffs partial_fractions(const DrudePoles& poles) {
    const complex r[3] = {complex(poles.Omega, 0.0), poles.z1, poles.z2};
    double scale = 0.0;
    for (const auto& x : r) scale = std::max(scale, std::abs(x));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(r[i] - r[j]) < 1e-10 * scale)
                throw DegeneratePoles("partial_fractions: two pole rates coincide");
    PartialFractionCoeffs c;
    c.rates = {r[0], r[1], r[2]};
    c.rate0 = poles.omega_d;
    // lambda_l = (r_l - omega_d) / prod_{k != l} (r_l - r_k); equivalent to
    // the (z1+z2)/((Omega-z1)(z2-Omega)) etc. closed forms.
    for (int l = 0; l < 3; ++l) {
        complex num = r[l] - poles.omega_d;
        complex den = 1.0;
        for (int k = 0; k < 3; ++k)
            if (k != l) den *= r[l] - r[k];
        c.lambda[l] = num / den;
    }
    return c;
}

complex chi_tilde(const DampingModel& model, double omega_0, complex omega,
                  const PhysicalConstants& consts) {
    const complex gt = damping::gamma_tilde(model, omega);
    const complex den =
        omega_0 * omega_0 - omega * omega - complex(0.0, 1.0) * omega * gt;
    const double scale =
        omega_0 * omega_0 + std::norm(omega) + std::abs(omega) * std::abs(gt);
    if (std::abs(den) < 1e-14 * scale)
        throw PoleArgument("chi_tilde: omega at a susceptibility pole");
    return 1.0 / (consts.M * den);
}

complex chi_tilde_drude_factored(const DrudeParams& p, complex omega,
                                 const PhysicalConstants& consts) {
    const complex i(0.0, 1.0);
    const complex num = omega + i * (p.Omega + p.z1() + p.z2());
    const complex den = (omega + i * p.Omega) * (omega + i * p.z1()) * (omega + i * p.z2());
    if (std::abs(den) < 1e-14 * std::pow(std::abs(omega) + p.omega_d, 3))
        throw PoleArgument("chi_tilde_drude_factored: omega at a susceptibility pole");
    return -num / (consts.M * den);
}

double im_chi(const DampingModel& model, double omega_0, double omega,
              const PhysicalConstants& consts) {
    if (!(omega > 0.0)) throw DomainError("im_chi: omega must be positive");
    double re_g, im_g;
    if (model.kind == damping::BathKind::Ohmic) {
        re_g = model.gamma_o;
        im_g = 0.0;
    } else {
        const double wd2 = model.omega_d * model.omega_d;
        re_g = model.gamma_o * wd2 / (omega * omega + wd2);
        im_g = model.gamma_o * model.omega_d * omega / (omega * omega + wd2);
    }
    const double a = omega_0 * omega_0 - omega * omega + omega * im_g;
    const double b = omega * re_g;
    return b / (consts.M * (a * a + b * b));
}

double im_dlog_chi(const DrudeParams& p, double omega) {
    if (!(omega > 0.0)) throw DomainError("im_dlog_chi: omega must be positive");
    const complex i(0.0, 1.0);
    const complex w(omega, 0.0);
    complex s = 1.0 / (w + i * p.omega_d) - 1.0 / (w + i * p.Omega) -
                1.0 / (w + i * p.z1()) - 1.0 / (w + i * p.z2());
    return s.imag();
}

}  // namespace qbt::response
