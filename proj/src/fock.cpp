#include "tricv/fock.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>

namespace tricv {

namespace {

using Ket = std::map<std::array<int, 3>, std::complex<double>>;

void require_converged(const FockAmplitudes& fa) {
    if (fa.norm_squared() < 1.0 - 1e-6)
        throw std::invalid_argument("FockAmplitudes: norm deficit too large, raise the cutoff");
}

Ket state_ket(const FockAmplitudes& fa) {
    Ket psi;
    for (int n = 0; n <= fa.cutoff; ++n)
        for (int m = 0; m <= fa.cutoff; ++m) {
            const double c = fa.at(n, m);
            if (c != 0.0) psi[{n + m, n, m}] = c;
        }
    return psi;
}

Ket apply_quadrature(const Ket& psi, int mode, bool momentum) {
    // q = (a + a^dag)/sqrt(2), p = -i (a - a^dag)/sqrt(2)
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::complex<double> lower =
        momentum ? std::complex<double>(0.0, -inv_sqrt2)
                 : std::complex<double>(inv_sqrt2, 0.0);
    const std::complex<double> raise = momentum ? -lower : lower;
    Ket out;
    for (const auto& [occ, amp] : psi) {
        if (occ[mode] > 0) {
            auto o = occ;
            --o[mode];
            out[o] += lower * std::sqrt(double(occ[mode])) * amp;
        }
        auto o = occ;
        ++o[mode];
        out[o] += raise * std::sqrt(double(occ[mode] + 1)) * amp;
    }
    return out;
}

std::complex<double> inner(const Ket& a, const Ket& b) {
    std::complex<double> s = 0.0;
    for (const auto& [occ, amp] : a) {
        auto it = b.find(occ);
        if (it != b.end()) s += std::conj(amp) * it->second;
    }
    return s;
}

} // namespace

double FockAmplitudes::norm_squared() const {
    double s = 0.0;
    for (double c : amps) s += c * c;
    return s;
}

FockAmplitudes build_amplitudes(const TripartiteParams& p, int cutoff) {
    if (cutoff < 0)
        throw std::invalid_argument("build_amplitudes: negative cutoff");
    if (p.n_b < 0.0 || p.n_c < 0.0)
        throw std::invalid_argument("build_amplitudes: negative photon number");
    FockAmplitudes fa;
    fa.cutoff = cutoff;
    fa.amps.assign((cutoff + 1) * (cutoff + 1), 0.0);
    const double na = p.n_a();
    const double log_norm = -0.5 * std::log1p(na);
    // Geometric factors in log space; factorial ratios via lgamma to keep
    // n+m up to ~2*cutoff representable.
    for (int n = 0; n <= cutoff; ++n) {
        if (n > 0 && p.n_b == 0.0) break;
        for (int m = 0; m <= cutoff; ++m) {
            if (m > 0 && p.n_c == 0.0) break;
            double log_c = log_norm;
            if (n > 0) log_c += 0.5 * n * (std::log(p.n_b) - std::log1p(na));
            if (m > 0) log_c += 0.5 * m * (std::log(p.n_c) - std::log1p(na));
            log_c += 0.5 * (std::lgamma(n + m + 1.0) - std::lgamma(n + 1.0)
                            - std::lgamma(m + 1.0));
            fa.amps[n * (cutoff + 1) + m] = std::exp(log_c);
        }
    }
    return fa;
}

int default_cutoff(const TripartiteParams& p) {
    const double na = p.n_a();
    if (na <= 0.0) return 0;
    const double ratio = na / (1.0 + na);
    const int m = static_cast<int>(std::ceil(std::log(1e-8) / std::log(ratio)));
    return std::clamp(m, 1, 4096);
}

std::array<double, 3> mean_photons(const FockAmplitudes& fa) {
    require_converged(fa);
    std::array<double, 3> out{};
    for (int n = 0; n <= fa.cutoff; ++n)
        for (int m = 0; m <= fa.cutoff; ++m) {
            const double w = fa.at(n, m) * fa.at(n, m);
            out[0] += (n + m) * w;
            out[1] += n * w;
            out[2] += m * w;
        }
    return out;
}

CovMat covariance_from_amplitudes(const FockAmplitudes& fa) {
    require_converged(fa);
    const Ket psi = state_ket(fa);
    std::array<Ket, 6> r_psi;
    for (int mode = 0; mode < 3; ++mode) {
        r_psi[2 * mode] = apply_quadrature(psi, mode, false);
        r_psi[2 * mode + 1] = apply_quadrature(psi, mode, true);
    }
    Eigen::MatrixXd m(6, 6);
    for (int h = 0; h < 6; ++h)
        for (int k = h; k < 6; ++k) {
            // <psi| R_h R_k |psi> = <R_h psi | R_k psi>; the symmetrized
            // moment is its real part. Mean values vanish for this family.
            const double v = inner(r_psi[h], r_psi[k]).real();
            m(h, k) = v;
            m(k, h) = v;
        }
    return CovMat(3, std::move(m));
}

std::vector<double> occupation_distribution(const FockAmplitudes& fa, Mode mode) {
    require_converged(fa);
    const int max_q = (mode == Mode::A) ? 2 * fa.cutoff : fa.cutoff;
    std::vector<double> p(max_q + 1, 0.0);
    for (int n = 0; n <= fa.cutoff; ++n)
        for (int m = 0; m <= fa.cutoff; ++m) {
            const double w = fa.at(n, m) * fa.at(n, m);
            switch (mode) {
                case Mode::A: p[n + m] += w; break;
                case Mode::B: p[n] += w; break;
                case Mode::C: p[m] += w; break;
            }
        }
    return p;
}

double reduced_entropy_single(const FockAmplitudes& fa, Mode mode) {
    double s = 0.0;
    for (double p : occupation_distribution(fa, mode))
        if (p > 0.0) s -= p * std::log(p);
    return s;
}

} // namespace tricv
