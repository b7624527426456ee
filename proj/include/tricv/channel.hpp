#pragma once

#include "tricv/covmat.hpp"
#include "tricv/state.hpp"

namespace tricv {

/// Lossy thermal channel acting identically and independently on every mode,
/// in rescaled time tau = gamma * t.
struct ChannelParams {
    double n_th = 0.0;
    double tau = 0.0;
};

/// Sigma_tau = e^{-tau} Sigma_0 + (1 - e^{-tau}) (N_th + 1/2) Id, with the
/// identity sized to the input mode count.
CovMat evolve_cm(const CovMat& sigma0, const ChannelParams& ch);

struct SeparabilityTime {
    double tau = 0.0;
    /// True when no crossing was found up to the horizon (e.g. pure loss,
    /// N_th = 0, where entanglement only vanishes asymptotically).
    bool never_entangled_within_horizon = false;
};

/// First tau at which the evolved reduction of the given pair turns
/// separable. Separable-at-start pairs (BC, vacuum) return 0. The crossing
/// is bracketed by a forward scan and refined by bisection to 1e-10.
SeparabilityTime separability_time(const TripartiteParams& p, double n_th,
                                   OrderedPair pair, double horizon = 20.0);

} // namespace tricv
