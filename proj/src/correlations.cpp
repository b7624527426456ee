#include "tricv/correlations.hpp"

#include <cmath>
#include <stdexcept>

namespace tricv {

namespace {

double eof_argument(const TwoModeInvariants& inv) {
    const double rh = std::sqrt(inv.i_h);
    const double rk = std::sqrt(inv.i_k);
    const double c = std::abs(inv.i_hk);
    const double denom = (rh + rk) * (rh + rk) - 4.0 * c;
    if (denom <= 0.0)
        throw std::domain_error("gaussian_eof: invariants inconsistent with a physical CM");
    const double cross = std::max(c * inv.j_tilde_hk, 0.0);
    return ((rh + rk) * (rh * rk - c + 0.25) - 2.0 * std::sqrt(cross)) / denom;
}

} // namespace

double gaussian_eof_argument(const CovMat& cm) {
    if (!is_entangled(cm)) return 0.5;
    return eof_argument(two_mode_invariants(cm));
}

double gaussian_eof(const CovMat& cm) {
    if (!is_entangled(cm)) return 0.0;
    return entropy_fn(eof_argument(two_mode_invariants(cm)));
}

double gaussian_discord(const CovMat& cm, MeasuredMode measured) {
    TwoModeInvariants inv = two_mode_invariants(cm);
    if (measured == MeasuredMode::Second) std::swap(inv.i_h, inv.i_k);
    // lambda_{-,+} do not depend on mode order; the CM overload stays
    // accurate near pure states where the invariant formula loses digits.
    const SymplecticSpectrum sp = symplectic_spectrum(cm);
    const double rh = std::sqrt(inv.i_h);
    const double rk = std::sqrt(inv.i_k);
    const double conditional = rk - 2.0 * std::abs(inv.i_hk) / (1.0 + 2.0 * rh);
    return entropy_fn(rh) + entropy_fn(conditional)
         - entropy_fn(sp.lambda_minus) - entropy_fn(sp.lambda_plus);
}

CorrelationReport full_report(const CovMat& sigma3) {
    if (sigma3.n_modes() != 3)
        throw std::invalid_argument("full_report: expected a three-mode CM");
    CorrelationReport rep;

    for (Mode m : {Mode::A, Mode::B, Mode::C})
        rep.s_single[static_cast<int>(m)] =
            single_mode_entropy(partial_trace(sigma3, {m}));

    for (OrderedPair up : {OrderedPair::AB, OrderedPair::AC, OrderedPair::BC}) {
        const CovMat two =
            partial_trace(sigma3, {pair_first(up), pair_second(up)});
        const int u = unordered_index(up);
        rep.s_pair[u] = two_mode_entropy(two);
        rep.eof[u] = gaussian_eof(two);
        rep.lambda_tilde[u] = symplectic_spectrum(two).lambda_tilde_minus;
    }

    for (OrderedPair p : kAllPairs) {
        const CovMat two =
            partial_trace(sigma3, {pair_first(p), pair_second(p)});
        const int i = static_cast<int>(p);
        const Mode h = pair_first(p);
        const Mode k = pair_second(p);
        const Mode j = pair_remaining(p);
        rep.discord[i] = gaussian_discord(two, MeasuredMode::First);
        const double e_kj = rep.eof[unordered_index(k, j)];
        rep.delta[i] = rep.discord[i] + rep.s_single[static_cast<int>(j)]
                     - rep.s_single[static_cast<int>(h)] - e_kj;
        rep.delta_kw[i] = rep.discord[i] + rep.s_pair[unordered_index(h, k)]
                        - rep.s_single[static_cast<int>(h)] - e_kj;
    }
    return rep;
}

CorrelationReport full_report(const TripartiteParams& p,
                              std::optional<ChannelParams> ch) {
    CovMat sigma = build_cm(p);
    if (ch) sigma = evolve_cm(sigma, *ch);
    return full_report(sigma);
}

double balance_delta(const CovMat& sigma3, OrderedPair hk) {
    return full_report(sigma3).delta_of(hk);
}

double balance_delta_kw(const CovMat& sigma3, OrderedPair hk) {
    return full_report(sigma3).delta_kw_of(hk);
}

} // namespace tricv
