#include "qbt/discrete_bath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qbt/specfun.hpp"
#include "qbt/thermo.hpp"

namespace qbt::bath {

void DiscreteBath::validate() const {
    if (!(M > 0.0) || !(omega_0 > 0.0))
        throw DomainError("DiscreteBath: M and omega_0 must be positive");
    double prev = 0.0;
    for (const auto& o : oscillators) {
        if (!(o.m > 0.0) || !(o.omega > 0.0))
            throw DomainError("DiscreteBath: oscillator masses and frequencies must be positive");
        if (o.omega < prev)
            throw DomainError("DiscreteBath: bath frequencies must be sorted ascending");
        prev = o.omega;
    }
}

void jacobi_eigen(std::vector<double>& a, int n, std::vector<double>& eigenvalues,
                  std::vector<double>* eigenvectors) {
    auto A = [&](int i, int j) -> double& { return a[i * n + j]; };
    std::vector<double> v;
    if (eigenvectors) {
        v.assign(n * n, 0.0);
        for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;
    }
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += A(i, j) * A(i, j);
        if (off < 1e-300) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(A(p, q)) < 1e-300) continue;
                const double theta = (A(q, q) - A(p, p)) / (2.0 * A(p, q));
                const double t =
                    std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = A(k, p), akq = A(k, q);
                    A(k, p) = c * akp - s * akq;
                    A(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = A(p, k), aqk = A(q, k);
                    A(p, k) = c * apk - s * aqk;
                    A(q, k) = s * apk + c * aqk;
                }
                if (eigenvectors)
                    for (int k = 0; k < n; ++k) {
                        const double vkp = v[k * n + p], vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
            }
        }
    }
    eigenvalues.resize(n);
    for (int i = 0; i < n; ++i) eigenvalues[i] = A(i, i);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return eigenvalues[x] < eigenvalues[y]; });
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = eigenvalues[order[i]];
    eigenvalues = ev;
    if (eigenvectors) {
        eigenvectors->assign(n * n, 0.0);
        for (int col = 0; col < n; ++col)
            for (int row = 0; row < n; ++row)
                (*eigenvectors)[row * n + col] = v[row * n + order[col]];
    }
}

namespace {

// Mass-weighted stiffness matrix of the full quadratic form, counter-term
// included: V00 = w0^2 + (1/M) sum c^2/(m w^2), V0j = -c_j / sqrt(M m_j),
// Vjj = w_j^2.
std::vector<double> stiffness(const DiscreteBath& bath) {
    const int n = (int)bath.oscillators.size() + 1;
    std::vector<double> a(n * n, 0.0);
    double counter = 0.0;
    for (const auto& o : bath.oscillators) counter += o.c * o.c / (o.m * o.omega * o.omega);
    a[0] = bath.omega_0 * bath.omega_0 + counter / bath.M;
    for (int j = 1; j < n; ++j) {
        const auto& o = bath.oscillators[j - 1];
        a[j] = a[j * n] = -o.c / std::sqrt(bath.M * o.m);
        a[j * n + j] = o.omega * o.omega;
    }
    return a;
}

}  // namespace

NormalModes normal_modes(const DiscreteBath& bath) {
    bath.validate();
    const int n = (int)bath.oscillators.size() + 1;
    auto a = stiffness(bath);
    std::vector<double> eig;
    std::vector<double> vec;
    jacobi_eigen(a, n, eig, &vec);
    NormalModes modes;
    modes.omega_bar.resize(n);
    modes.system_weight.resize(n);
    for (int k = 0; k < n; ++k) {
        if (!(eig[k] > 0.0))
            throw NotPositiveDefinite("normal_modes: non-positive eigenvalue of the stiffness matrix");
        modes.omega_bar[k] = std::sqrt(eig[k]);
        modes.system_weight[k] = vec[0 * n + k] * vec[0 * n + k];
    }
    return modes;
}

bool interlacing_holds(const DiscreteBath& bath, const NormalModes& modes, double slack) {
    const int N = (int)bath.oscillators.size();
    for (int j = 0; j < N; ++j) {
        const double w = bath.oscillators[j].omega;
        if (!(modes.omega_bar[j] <= w + slack)) return false;
        if (!(w <= modes.omega_bar[j + 1] + slack)) return false;
    }
    return true;
}

double energy_exact(const DiscreteBath& bath, double T, const PhysicalConstants& consts) {
    const auto modes = normal_modes(bath);
    const int n = (int)modes.omega_bar.size();
    for (int k = 0; k + 1 < n; ++k)
        if (modes.omega_bar[k + 1] - modes.omega_bar[k] < 1e-9 * modes.omega_bar[k + 1])
            throw DegenerateModes("energy_exact: coincident normal modes, residue form undefined");
    const double w0 = bath.omega_0;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double wb2 = modes.omega_bar[k] * modes.omega_bar[k];
        double num = 1.0, den = 1.0;
        for (const auto& o : bath.oscillators) num *= wb2 - o.omega * o.omega;
        for (int kk = 0; kk < n; ++kk)
            if (kk != k) den *= wb2 - modes.omega_bar[kk] * modes.omega_bar[kk];
        sum += 0.5 * thermo::free_oscillator_energy(modes.omega_bar[k], T, consts) *
               (1.0 + w0 * w0 / wb2) * num / den;
    }
    return sum;
}

double energy_oracle(const DiscreteBath& bath, double T, const PhysicalConstants& consts) {
    const auto modes = normal_modes(bath);
    const double w0 = bath.omega_0;
    double sum = 0.0;
    for (std::size_t k = 0; k < modes.omega_bar.size(); ++k) {
        const double wb = modes.omega_bar[k];
        sum += 0.5 * modes.system_weight[k] *
               thermo::free_oscillator_energy(wb, T, consts) * (1.0 + w0 * w0 / (wb * wb));
    }
    return sum;
}

double energy(const DiscreteBath& bath, double T, const PhysicalConstants& consts,
              bool* used_fallback) {
    if (used_fallback) *used_fallback = false;
    try {
        return energy_exact(bath, T, consts);
    } catch (const DegenerateModes&) {
        if (used_fallback) *used_fallback = true;
        return energy_oracle(bath, T, consts);
    }
}

double coupling_free_energy(const DiscreteBath& bath, double T,
                            const PhysicalConstants& consts) {
    const auto modes = normal_modes(bath);
    double sum = 0.0;
    for (double wb : modes.omega_bar) sum += thermo::free_oscillator_free_energy(wb, T, consts);
    for (const auto& o : bath.oscillators)
        sum -= thermo::free_oscillator_free_energy(o.omega, T, consts);
    return sum;
}

double coupling_free_energy_logsum(const DiscreteBath& bath, double T,
                                   const PhysicalConstants& consts) {
    const auto modes = normal_modes(bath);
    if (T <= 0.0) {
        double s = 0.0;
        for (double wb : modes.omega_bar) s += wb;
        for (const auto& o : bath.oscillators) s -= o.omega;
        return 0.5 * consts.hbar * s;
    }
    const double beta = consts.beta(T);
    // ln z(w) for z(w) = sum_n e^{-beta hbar w (n + 1/2)}
    auto log_z = [&](double w) {
        const double x = beta * consts.hbar * w;
        return -0.5 * x - std::log1p(-std::exp(-x));
    };
    double s = 0.0;
    for (double wb : modes.omega_bar) s += log_z(wb);
    for (const auto& o : bath.oscillators) s -= log_z(o.omega);
    return -s / beta;
}

double coupling_energy(const DiscreteBath& bath, double T, const PhysicalConstants& consts) {
    const auto modes = normal_modes(bath);
    double sum = 0.0;
    for (double wb : modes.omega_bar) sum += thermo::free_oscillator_energy(wb, T, consts);
    for (const auto& o : bath.oscillators)
        sum -= thermo::free_oscillator_energy(o.omega, T, consts);
    return sum;
}

double second_law_gap(const DiscreteBath& bath, double T, const PhysicalConstants& consts) {
    const double fc = coupling_free_energy(bath, T, consts);
    const double es = energy(bath, T, consts);
    const double f0 = thermo::free_oscillator_free_energy(bath.omega_0, T, consts);
    const double e0 = thermo::free_oscillator_energy(bath.omega_0, T, consts);
    return fc - f0 - es + e0;
}

DiscreteBath random_bath(int n_oscillators, std::uint64_t seed, double M, double omega_0) {
    if (n_oscillators < 0) throw DomainError("random_bath: n_oscillators must be >= 0");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    DiscreteBath bath;
    bath.M = M;
    bath.omega_0 = omega_0;
    bath.oscillators.resize(n_oscillators);
    for (auto& o : bath.oscillators) {
        o.m = 0.5 + uni(rng);
        o.omega = 0.1 * omega_0 * std::pow(100.0, uni(rng));
        o.c = 2.0 * uni(rng) - 1.0;
    }
    std::sort(bath.oscillators.begin(), bath.oscillators.end(),
              [](const Oscillator& a, const Oscillator& b) { return a.omega < b.omega; });
    double counter = 0.0;
    for (const auto& o : bath.oscillators) counter += o.c * o.c / (2.0 * o.m * o.omega * o.omega);
    if (counter > 0.0) {
        const double scale = std::sqrt(0.5 * M * omega_0 * omega_0 / counter);
        for (auto& o : bath.oscillators) o.c *= scale;
    }
    return bath;
}

}  // namespace qbt::bath
