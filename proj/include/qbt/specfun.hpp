#pragma once

#include <complex>
#include <cstdint>

#include "qbt/constants.hpp"
#include "qbt/errors.hpp"

namespace qbt::specfun {

using complex = std::complex<double>;

// Digamma psi(z) = d ln Gamma / dz for complex z away from the poles at the
// non-positive integers. Recurrence-shifts to Re(z) >= 8, then sums the
// Bernoulli asymptotic series. Relative accuracy <= 1e-12 for |z| in
// [1e-3, 1e6]. Throws PoleArgument within 1e-12 of a pole.
complex digamma(complex z);
double digamma(double x);

// Trigamma psi'(z); same shift-plus-asymptotic scheme. Internal helper for
// the confluent (double-pole) limit formulas.
complex trigamma(complex z);

// Truncated asymptotic series ln y - 1/(2y) - sum_{n=1}^{n_bernoulli}
// B_{2n} / (2n y^{2n}). Requires y > 0 and n_bernoulli <= 10.
double digamma_asymptotic(double y, int n_bernoulli);

// Cosine integral Ci(x) = c_e + ln x + int_0^x (cos t - 1)/t dt, x > 0.
double ci(double x);

// Lower sine integral si(x) = Si(x) - pi/2, x > 0.
double si(double x);

// Auxiliary Laplace integral f(a) = int_0^inf e^{-a y} / (y^2 + 1) dy for
// Re(a) > 0 (principal branch fixed by this representation). Evaluated by
// adaptive quadrature along the rotated ray y = e^{-i arg a} s, truncated
// where the tail bound |e^{-aY}|/Y falls below the tolerance floor; for
// |a| >= 40 by the optimally truncated Watson series sum (-1)^k (2k)!/a^{2k+1}.
complex aux_f(complex a, double quad_tol = 1e-13);

// Quadrature-only evaluation of aux_f (no large-|a| asymptotic escape).
// Used as the independent oracle against the series/closed-form routes.
complex aux_f_quadrature(complex a, double quad_tol = 1e-13);

// Partial sum of the Matsubara identity
//   coth(beta hbar omega / 2) = 2/(beta hbar omega) (1 + 2 sum_n w^2/(nu_n^2+w^2)),
// nu_n = 2 pi n / (beta hbar). Monotonically increasing in n_terms and
// bounded by the coth value; validation only.
double matsubara_coth(double omega, double beta_hbar, std::int64_t n_terms);

// coth(x) for x > 0, stable for both tiny and huge arguments.
inline double coth(double x) { return 1.0 + 2.0 / std::expm1(2.0 * x); }

// atanh(u)/u continued through u^2 <= 0, where it equals atan(v)/v with
// v = sqrt(-u^2). Takes u^2 so the overdamped (u^2 > 0) and underdamped
// (u^2 < 0) branches share one real-valued code path.
double atanhc_from_u2(double u2);

}  // namespace qbt::specfun
