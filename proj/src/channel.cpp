#include "tricv/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace tricv {

CovMat evolve_cm(const CovMat& sigma0, const ChannelParams& ch) {
    if (ch.tau < 0.0)
        throw std::invalid_argument("evolve_cm: negative tau");
    if (ch.n_th < 0.0)
        throw std::invalid_argument("evolve_cm: negative thermal photon number");
    const double decay = std::exp(-ch.tau);
    const int d = sigma0.dim();
    Eigen::MatrixXd m = decay * sigma0.entries()
        + (1.0 - decay) * (ch.n_th + 0.5) * Eigen::MatrixXd::Identity(d, d);
    return CovMat(sigma0.n_modes(), std::move(m));
}

namespace {

double lambda_tilde_at(const CovMat& sigma3, double n_th, OrderedPair pair,
                       double tau) {
    // Evolve the full three-mode CM, then reduce; for identical uncorrelated
    // channels this commutes with reduction.
    const CovMat evolved = evolve_cm(sigma3, {n_th, tau});
    const CovMat two = partial_trace(evolved, {pair_first(pair), pair_second(pair)});
    return symplectic_spectrum(two).lambda_tilde_minus;
}

} // namespace

SeparabilityTime separability_time(const TripartiteParams& p, double n_th,
                                   OrderedPair pair, double horizon) {
    if (n_th < 0.0)
        throw std::invalid_argument("separability_time: negative thermal photon number");
    const CovMat sigma3 = build_cm(p);
    auto gap = [&](double tau) {
        return lambda_tilde_at(sigma3, n_th, pair, tau) - 0.5;
    };
    if (gap(0.0) >= -1e-10) return {0.0, false};

    // Monotonicity is not assumed: scan forward for the first sign change,
    // then bisect inside the bracket.
    const double step = 0.01;
    double lo = 0.0;
    double hi = step;
    bool found = false;
    while (hi <= horizon + 0.5 * step) {
        if (gap(hi) >= 0.0) {
            found = true;
            break;
        }
        lo = hi;
        hi += step;
    }
    if (!found) return {horizon, true};

    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (gap(mid) >= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return {0.5 * (lo + hi), false};
}

} // namespace tricv
