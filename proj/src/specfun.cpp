#include "qbt/specfun.hpp"

#include <cmath>

#include "qbt/quadrature.hpp"

namespace qbt::specfun {

namespace {

void check_not_pole(complex z) {
    double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::abs(z.real() - nearest) < 1e-12 && std::abs(z.imag()) < 1e-12)
        throw PoleArgument("digamma: argument within 1e-12 of a non-positive integer pole");
}

}  // namespace

complex digamma(complex z) {
    check_not_pole(z);
    complex shift = 0.0;
    while (z.real() < 8.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    const complex iz = 1.0 / z;
    const complex iz2 = iz * iz;
    complex sum = std::log(z) - 0.5 * iz;
    complex p = iz2;
    for (int n = 0; n < 10; ++n) {
        sum -= bernoulli_2n[n] / (2.0 * (n + 1)) * p;
        p *= iz2;
    }
    return shift + sum;
}

double digamma(double x) {
    if (x <= 0.0 && std::abs(x - std::round(x)) < 1e-12)
        throw PoleArgument("digamma: argument within 1e-12 of a non-positive integer pole");
    double shift = 0.0;
    while (x < 8.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    const double ix = 1.0 / x;
    const double ix2 = ix * ix;
    double sum = std::log(x) - 0.5 * ix;
    double p = ix2;
    for (int n = 0; n < 10; ++n) {
        sum -= bernoulli_2n[n] / (2.0 * (n + 1)) * p;
        p *= ix2;
    }
    return shift + sum;
}

complex trigamma(complex z) {
    check_not_pole(z);
    complex shift = 0.0;
    while (z.real() < 8.0) {
        shift += 1.0 / (z * z);
        z += 1.0;
    }
    const complex iz = 1.0 / z;
    const complex iz2 = iz * iz;
    // psi'(z) ~ 1/z + 1/(2 z^2) + sum B_2n / z^{2n+1}
    complex sum = iz + 0.5 * iz2;
    complex p = iz * iz2;
    for (int n = 0; n < 10; ++n) {
        sum += bernoulli_2n[n] * p;
        p *= iz2;
    }
    return shift + sum;
}

double digamma_asymptotic(double y, int n_bernoulli) {
    if (!(y > 0.0)) throw DomainError("digamma_asymptotic: y must be positive");
    if (n_bernoulli < 0 || n_bernoulli > 10)
        throw DomainError("digamma_asymptotic: n_bernoulli must be in [0, 10]");
    double sum = std::log(y) - 0.5 / y;
    double iy2 = 1.0 / (y * y);
    double p = iy2;
    for (int n = 1; n <= n_bernoulli; ++n) {
        sum -= bernoulli_2n[n - 1] / (2.0 * n) * p;
        p *= iy2;
    }
    return sum;
}

namespace {

// E1(z) by modified Lentz continued fraction, |arg z| < pi, |z| not small.
complex exp_e1_cf(complex z) {
    const double tiny = 1e-290;
    complex b = z + 1.0;
    complex c = 1.0 / tiny;
    complex d = 1.0 / b;
    complex h = d;
    for (int i = 1; i <= 300; ++i) {
        double a = -double(i) * double(i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        complex delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-z) * h;  // = E1(z)
}

// Power-series Ci and Si for 0 < x <= 6.
void cisi_series(double x, double& ci_out, double& si_out) {
    const double x2 = x * x;
    // Ci: c_e + ln x + sum_{k>=1} (-1)^k x^{2k} / (2k (2k)!)
    double term = 1.0;
    double csum = 0.0;
    for (int k = 1; k <= 40; ++k) {
        term *= -x2 / ((2.0 * k - 1.0) * (2.0 * k));
        double add = term / (2.0 * k);
        csum += add;
        if (std::abs(add) < 1e-18 * std::max(1.0, std::abs(csum))) break;
    }
    ci_out = euler_gamma + std::log(x) + csum;
    // Si: sum_{k>=0} (-1)^k x^{2k+1} / ((2k+1)(2k+1)!)
    double t = x;
    double ssum = x;
    for (int k = 1; k <= 40; ++k) {
        t *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
        double add = t / (2.0 * k + 1.0);
        ssum += add;
        if (std::abs(add) < 1e-18 * std::abs(ssum)) break;
    }
    si_out = ssum;
}

void cisi(double x, double& ci_out, double& si_lower_out) {
    if (!(x > 0.0)) throw DomainError("ci/si: argument must be positive");
    if (x <= 6.0) {
        double s;
        cisi_series(x, ci_out, s);
        si_lower_out = s - pi / 2.0;
        return;
    }
    // E1(i x) = -Ci(x) + i si(x)
    complex e1 = exp_e1_cf(complex(0.0, x));
    ci_out = -e1.real();
    si_lower_out = e1.imag();
}

}  // namespace

double ci(double x) {
    double c, s;
    cisi(x, c, s);
    return c;
}

double si(double x) {
    double c, s;
    cisi(x, c, s);
    return s;
}

namespace {

complex aux_f_asymptotic(complex a) {
    const complex a2 = a * a;
    complex term = 1.0 / a;
    complex sum = term;
    for (int k = 0; k < 40; ++k) {
        complex next = -term * (2.0 * k + 1.0) * (2.0 * k + 2.0) / a2;
        if (std::abs(next) >= std::abs(term)) break;  // optimal truncation
        term = next;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

complex aux_f_quadrature(complex a, double quad_tol) {
    if (!(a.real() > 0.0))
        throw DomainError("aux_f: integral diverges unless Re(a) > 0");
    // Rotate the ray to y = e^{-i arg a} s so the exponent decays as e^{-|a| s}
    // with no oscillation; the swept sector contains neither pole of the
    // integrand. The rotated denominator pinches near s = 1 when a is almost
    // imaginary, so that neighborhood gets its own panel.
    const double r = std::abs(a);
    const double theta = std::arg(a);
    const complex ray = std::exp(complex(0.0, -theta));
    const complex phase2 = ray * ray;
    auto integrand = [&](double s) { return ray * std::exp(-r * s) / (1.0 + phase2 * s * s); };
    const double target = 0.05 * quad_tol * std::min(pi / 2.0, 1.5 / r);
    const double L = -std::log(std::max(target, 1e-300));
    double Y = (L + 1.0) / r;
    for (int i = 0; i < 2; ++i) Y = (L + std::log(std::max(Y, 1.0))) / r;
    Y = std::max(Y, 2.0);
    QuadratureOptions opt;
    opt.rel_tol = quad_tol;
    opt.max_intervals = 200000;
    complex v = integrate(integrand, 0.0, 0.5, opt);
    v += integrate(integrand, 0.5, std::min(1.5, Y), opt);
    if (Y > 1.5) v += integrate(integrand, 1.5, Y, opt);
    return v;
}

complex aux_f(complex a, double quad_tol) {
    if (!(a.real() > 0.0))
        throw DomainError("aux_f: integral diverges unless Re(a) > 0");
    if (std::abs(a) >= 40.0) return aux_f_asymptotic(a);
    return aux_f_quadrature(a, quad_tol);
}

double matsubara_coth(double omega, double beta_hbar, std::int64_t n_terms) {
    if (!(omega > 0.0) || !(beta_hbar > 0.0))
        throw DomainError("matsubara_coth: omega and beta*hbar must be positive");
    const double x = beta_hbar * omega;
    double sum = 0.0;
    // backward summation keeps the small terms from being absorbed
    for (std::int64_t n = n_terms; n >= 1; --n) {
        double nu = 2.0 * pi * double(n) / beta_hbar;
        sum += omega * omega / (nu * nu + omega * omega);
    }
    return 2.0 / x * (1.0 + 2.0 * sum);
}

double atanhc_from_u2(double u2) {
    if (u2 >= 1.0) throw DomainError("atanhc_from_u2: u^2 must be < 1");
    double au = std::sqrt(std::abs(u2));
    if (au < 1e-4) {
        // series 1 + u^2/3 + u^4/5 + ...
        return 1.0 + u2 / 3.0 + u2 * u2 / 5.0;
    }
    return u2 > 0.0 ? std::atanh(au) / au : std::atan(au) / au;
}

}  // namespace qbt::specfun
