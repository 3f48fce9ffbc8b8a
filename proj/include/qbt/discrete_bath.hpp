#pragma once

#include <cstdint>
#include <vector>

#include "qbt/constants.hpp"
#include "qbt/errors.hpp"

namespace qbt::bath {

struct Oscillator {
    double m;       // mass
    double omega;   // frequency
    double c;       // bilinear coupling (real)
};

// System oscillator plus N independent bath oscillators with the q^2
// counter-term included, so the total quadratic form is positive definite.
// Bath frequencies are kept sorted ascending.
struct DiscreteBath {
    double M = 1.0;
    double omega_0 = 1.0;
    std::vector<Oscillator> oscillators;

    void validate() const;
};

struct NormalModes {
    std::vector<double> omega_bar;      // N+1 frequencies, ascending
    std::vector<double> system_weight;  // squared system component of each mode
};

// Eigenfrequencies of the full system+bath quadratic form via a symmetric
// Jacobi eigensolver on the mass-weighted stiffness matrix. Throws
// NotPositiveDefinite if any eigenvalue fails to be positive.
NormalModes normal_modes(const DiscreteBath& bath);

// Interlacing  wbar_0 <= w_1 <= wbar_1 <= ... <= w_N <= wbar_N  (with slack
// for rounding); strict when every coupling is nonzero.
bool interlacing_holds(const DiscreteBath& bath, const NormalModes& modes,
                       double slack = 1e-12);

// <H_s> in the global Gibbs state from the closed-form residue expression
//   E_s = 1/2 sum_k e(wbar_k,T) {1 + (w0/wbar_k)^2} prod_j (wbar_k^2-w_j^2)
//                                               / prod_{k'!=k}(wbar_k^2-wbar_k'^2).
// Throws DegenerateModes when two normal modes are closer than 1e-9 relative.
double energy_exact(const DiscreteBath& bath, double T, const PhysicalConstants& consts);

// Independent oracle: same quantity assembled from per-mode variances in
// normal coordinates, <H_s> = <p^2>/2M + M w0^2 <q^2>/2. No degeneracy
// restriction.
double energy_oracle(const DiscreteBath& bath, double T, const PhysicalConstants& consts);

// energy_exact with automatic fallback to the oracle on DegenerateModes;
// used_fallback reports which route ran.
double energy(const DiscreteBath& bath, double T, const PhysicalConstants& consts,
              bool* used_fallback = nullptr);

// Coupling free energy F_s = sum_k f(wbar_k,T) - sum_j f(w_j,T); at T = 0
// equals hbar/2 (sum wbar - sum w).
double coupling_free_energy(const DiscreteBath& bath, double T, const PhysicalConstants& consts);

// Same quantity coded through the partition-function log-sum route.
double coupling_free_energy_logsum(const DiscreteBath& bath, double T,
                                   const PhysicalConstants& consts);

// Coupling energy  E_cal = sum_k e(wbar_k,T) - sum_j e(w_j,T)  >= F_cal.
double coupling_energy(const DiscreteBath& bath, double T, const PhysicalConstants& consts);

// Second-law gap K = F_cal - f(w0,T) - E_s + e(w0,T) >= 0.
double second_law_gap(const DiscreteBath& bath, double T, const PhysicalConstants& consts);

// Seeded random bath for property tests and the CLI: w_j log-uniform in
// [0.1 w0, 10 w0] (sorted), couplings scaled so the counter-term
// sum c^2/(2 m w^2) stays at most M w0^2 / 2.
DiscreteBath random_bath(int n_oscillators, std::uint64_t seed, double M = 1.0,
                         double omega_0 = 1.0);

// Symmetric eigensolve helper (cyclic Jacobi): returns eigenvalues ascending,
// with matching normalized eigenvectors in columns if requested.
void jacobi_eigen(std::vector<double>& a, int n, std::vector<double>& eigenvalues,
                  std::vector<double>* eigenvectors);

}  // namespace qbt::bath
