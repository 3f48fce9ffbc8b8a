#pragma once

#include <cstdint>

#include "qbt/errors.hpp"

namespace qbt {

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Euler-Mascheroni constant, 20 digits.
inline constexpr double euler_gamma = 0.57721566490153286061;

// Bernoulli numbers B_2, B_4, ..., B_20.
inline constexpr double bernoulli_2n[10] = {
    1.0 / 6.0,       -1.0 / 30.0,      1.0 / 42.0,      -1.0 / 30.0,     5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,        -3617.0 / 510.0, 43867.0 / 798.0, -174611.0 / 330.0};

// Unit conventions threaded through every formula. Defaults reproduce the
// dimensionless convention hbar = k_B = M = 1.
struct PhysicalConstants {
    double hbar = 1.0;
    double k_B = 1.0;
    double M = 1.0;

    void validate() const {
        if (!(hbar > 0.0) || !(k_B > 0.0) || !(M > 0.0))
            throw DomainError("PhysicalConstants: hbar, k_B and M must all be positive");
    }

    double beta(double T) const { return 1.0 / (k_B * T); }
    double beta_hbar(double T) const { return hbar / (k_B * T); }
};

// Truncation policy for infinite series. A sum stops once the term is below
// rel_tol * |partial sum| for three consecutive terms and the analytic tail
// bound is below abs_tol; exceeding max_terms throws SeriesNotConverged.
struct SeriesControl {
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    std::int64_t max_terms = 1000000;

    void validate() const {
        if (!(rel_tol > 0.0)) throw DomainError("SeriesControl: rel_tol must be positive");
        if (max_terms < 1) throw DomainError("SeriesControl: max_terms must be >= 1");
    }
};

}  // namespace qbt
