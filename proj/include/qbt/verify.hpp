#pragma once

#include <complex>
#include <string>
#include <vector>

namespace qbt::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;   // worst observed value
    double tolerance = 0.0;  // the bound it was held against
    std::string detail;      // one-line context (grid sizes, notes)
};

// Direct-series digamma oracle: psi(y) = -c_e + sum_n [1/(n+1) - 1/(n+y)]
// summed to n_terms with an Euler-Maclaurin tail estimate. Independent of
// the recurrence-plus-Bernoulli production path.
std::complex<double> digamma_series_oracle(std::complex<double> y, long long n_terms = 20000);

// Fast checks: special-function oracles, sum rules, parameter-map round
// trips, factorization equivalence, passivity. Target < 10 s.
std::vector<CheckResult> run_quick(unsigned long long seed = 42);

// Full acceptance criteria 1-10. Criterion indices 1..10; 0 runs all.
std::vector<CheckResult> run_acceptance(int criterion = 0, unsigned long long seed = 42);

// quick + acceptance.
std::vector<CheckResult> run_full(unsigned long long seed = 42);

// Prints one pass/fail line per check to stdout; returns false if any failed.
bool report(const std::vector<CheckResult>& results);

}  // namespace qbt::verify
