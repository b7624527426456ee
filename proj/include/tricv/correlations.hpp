#pragma once

#include <array>
#include <optional>

#include "tricv/channel.hpp"
#include "tricv/covmat.hpp"
#include "tricv/state.hpp"

namespace tricv {

enum class MeasuredMode { First, Second };

/// Gaussian entanglement of formation of a two-mode CM, E = f(y) with y from
/// the local symplectic invariants. Separable states are clamped to E = 0.
double gaussian_eof(const CovMat& cm);

/// Argument y of the EoF entropy function; 1/2 for separable states.
double gaussian_eof_argument(const CovMat& cm);

/// Directed Gaussian discord for STS/MTS-form states (|c1| = |c2| in
/// standard form). The measured mode selects the direction.
double gaussian_discord(const CovMat& cm, MeasuredMode measured);

/// Entropies, directed discords, EoF values, balance residuals and PT
/// eigenvalues of one (possibly evolved) tripartite state. Single-mode and
/// unordered-pair arrays are indexed A/B/C resp. AB/AC/BC; ordered arrays by
/// OrderedPair.
struct CorrelationReport {
    std::array<double, 3> s_single{};
    std::array<double, 3> s_pair{};
    std::array<double, 3> eof{};
    std::array<double, 3> lambda_tilde{};
    std::array<double, 6> discord{};
    std::array<double, 6> delta{};
    std::array<double, 6> delta_kw{};

    double discord_of(OrderedPair p) const { return discord[static_cast<int>(p)]; }
    double delta_of(OrderedPair p) const { return delta[static_cast<int>(p)]; }
    double delta_kw_of(OrderedPair p) const { return delta_kw[static_cast<int>(p)]; }
};

/// Balance residual Delta_hk = [D_hk + S_j] - [S_h + E_kj], computed from
/// fresh reductions of the given three-mode CM.
double balance_delta(const CovMat& sigma3, OrderedPair hk);

/// Koashi-Winter residual Delta_hk = [D_hk + S_hk] - [S_h + E_kj].
double balance_delta_kw(const CovMat& sigma3, OrderedPair hk);

CorrelationReport full_report(const CovMat& sigma3);
CorrelationReport full_report(const TripartiteParams& p,
                              std::optional<ChannelParams> ch = std::nullopt);

} // namespace tricv
