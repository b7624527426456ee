#pragma once

#include <string_view>

#include "tricv/covmat.hpp"

namespace tricv {

/// Coupling magnitudes of the two interlinked bilinear interactions and the
/// interaction time. Only |gamma1|, |gamma2| enter the photon numbers.
struct CouplingParams {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double t = 0.0;

    double omega() const; ///< sqrt(gamma2^2 - gamma1^2); requires gamma2 > gamma1
};

/// Mean photon numbers of the tripartite family. N_A is always derived as
/// N_B + N_C (constant of motion for vacuum initial conditions).
struct TripartiteParams {
    double n_b = 0.0;
    double n_c = 0.0;

    double n_a() const { return n_b + n_c; }
};

/// Ordered mode pairs; the first index is the measured mode in discord
/// conventions. The underlying value is stable and used as a report key.
enum class OrderedPair : int { AB = 0, BA = 1, AC = 2, CA = 3, BC = 4, CB = 5 };

inline constexpr OrderedPair kAllPairs[6] = {
    OrderedPair::AB, OrderedPair::BA, OrderedPair::AC,
    OrderedPair::CA, OrderedPair::BC, OrderedPair::CB,
};

Mode pair_first(OrderedPair p);
Mode pair_second(OrderedPair p);
Mode pair_remaining(OrderedPair p);
const char* pair_name(OrderedPair p);
OrderedPair pair_from_name(std::string_view name);

/// Index of the unordered pair {h,k}: AB -> 0, AC -> 1, BC -> 2.
int unordered_index(OrderedPair p);
int unordered_index(Mode h, Mode k);

TripartiteParams photon_numbers(const CouplingParams& cp);

/// Full 6x6 covariance matrix of the pure tripartite state, quadrature
/// ordering (q_A, p_A, q_B, p_B, q_C, p_C).
CovMat build_cm(const TripartiteParams& p);

/// Two-mode reduction, first pair index first. AB/AC reductions carry the
/// squeezed-thermal signature c1 = -c2, BC the mixed-thermal one c1 = c2.
CovMat reduce(const TripartiteParams& p, OrderedPair pair);

enum class ReductionKind { STS, MTS };

struct ReductionParams {
    ReductionKind kind;
    double squeeze_r = 0.0; ///< two-mode squeezing parameter (STS only)
    double mix_phi = 0.0;   ///< beam-splitter angle (MTS only)
    double thermal_n = 0.0;
};

ReductionParams reduction_params(const TripartiteParams& p, OrderedPair pair);

} // namespace tricv
