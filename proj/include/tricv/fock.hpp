#pragma once

#include <array>
#include <vector>

#include "tricv/covmat.hpp"
#include "tricv/state.hpp"

namespace tricv {

/// Truncated table of the pure-state amplitudes c_{n,m} attached to the
/// basis kets |n+m, n, m>. Brute-force verification layer: everything here
/// is recomputed from the amplitudes without Gaussian formulas.
struct FockAmplitudes {
    int cutoff = 0;            ///< max n and max m separately
    std::vector<double> amps;  ///< (cutoff+1)^2 entries, row-major in (n, m)

    double at(int n, int m) const { return amps[n * (cutoff + 1) + m]; }
    double norm_squared() const;
};

FockAmplitudes build_amplitudes(const TripartiteParams& p, int cutoff);

/// Smallest cutoff whose geometric tail bound (ratio N_A/(1+N_A)) keeps the
/// norm deficit below 1e-8. The total photon number q = n+m is thermally
/// distributed with mean N_A, so the deficit of a cutoff at n,m <= M is at
/// most the tail sum_{q>M} of that geometric law, i.e. (N_A/(1+N_A))^{M+1}.
int default_cutoff(const TripartiteParams& p);

/// (N_A, N_B, N_C) from the truncated table; requires norm deficit < 1e-6.
std::array<double, 3> mean_photons(const FockAmplitudes& fa);

/// 6x6 covariance matrix from ladder-operator matrix elements on the
/// truncated ket expansion.
CovMat covariance_from_amplitudes(const FockAmplitudes& fa);

/// Marginal occupation distribution of one mode.
std::vector<double> occupation_distribution(const FockAmplitudes& fa, Mode mode);

/// Von Neumann entropy of the (diagonal, thermal) single-mode reduction.
double reduced_entropy_single(const FockAmplitudes& fa, Mode mode);

} // namespace tricv
