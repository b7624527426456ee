#include "tricv/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tricv {

namespace {

struct PairModes {
    Mode first, second, remaining;
    const char* name;
};

constexpr PairModes kPairTable[6] = {
    {Mode::A, Mode::B, Mode::C, "AB"},
    {Mode::B, Mode::A, Mode::C, "BA"},
    {Mode::A, Mode::C, Mode::B, "AC"},
    {Mode::C, Mode::A, Mode::B, "CA"},
    {Mode::B, Mode::C, Mode::A, "BC"},
    {Mode::C, Mode::B, Mode::A, "CB"},
};

const PairModes& table(OrderedPair p) { return kPairTable[static_cast<int>(p)]; }

void check_params(const TripartiteParams& p) {
    if (p.n_b < 0.0 || p.n_c < 0.0)
        throw std::invalid_argument("TripartiteParams: negative photon number");
}

} // namespace

Mode pair_first(OrderedPair p) { return table(p).first; }
Mode pair_second(OrderedPair p) { return table(p).second; }
Mode pair_remaining(OrderedPair p) { return table(p).remaining; }
const char* pair_name(OrderedPair p) { return table(p).name; }

OrderedPair pair_from_name(std::string_view name) {
    for (OrderedPair p : kAllPairs)
        if (name == table(p).name) return p;
    throw std::invalid_argument("unknown pair name: " + std::string(name));
}

int unordered_index(Mode h, Mode k) {
    const int s = static_cast<int>(h) + static_cast<int>(k);
    // A+B = 1 -> 0, A+C = 2 -> 1, B+C = 3 -> 2
    if (h == k || s < 1 || s > 3)
        throw std::invalid_argument("unordered_index: invalid mode pair");
    return s - 1;
}

int unordered_index(OrderedPair p) {
    return unordered_index(pair_first(p), pair_second(p));
}

double CouplingParams::omega() const {
    const double g1 = std::abs(gamma1);
    const double g2 = std::abs(gamma2);
    if (g2 <= g1)
        throw std::invalid_argument("CouplingParams: requires |gamma2| > |gamma1|");
    return std::sqrt(g2 * g2 - g1 * g1);
}

TripartiteParams photon_numbers(const CouplingParams& cp) {
    const double g1 = std::abs(cp.gamma1);
    const double g2 = std::abs(cp.gamma2);
    const double om = cp.omega();
    if (cp.t < 0.0)
        throw std::invalid_argument("photon_numbers: negative time");
    const double cs = std::cos(om * cp.t) - 1.0;
    const double sn = std::sin(om * cp.t);
    TripartiteParams p;
    p.n_b = g1 * g1 * g2 * g2 / (om * om * om * om) * cs * cs;
    p.n_c = g1 * g1 / (om * om) * sn * sn;
    return p;
}

CovMat build_cm(const TripartiteParams& p) {
    check_params(p);
    const double na = p.n_a();
    const Eigen::Matrix2d one = Eigen::Matrix2d::Identity();
    Eigen::Matrix2d pz = Eigen::Matrix2d::Identity();
    pz(1, 1) = -1.0;

    Eigen::MatrixXd m(6, 6);
    m.block<2, 2>(0, 0) = (na + 0.5) * one;
    m.block<2, 2>(2, 2) = (p.n_b + 0.5) * one;
    m.block<2, 2>(4, 4) = (p.n_c + 0.5) * one;
    m.block<2, 2>(0, 2) = std::sqrt(p.n_b * (na + 1.0)) * pz;
    m.block<2, 2>(0, 4) = std::sqrt(p.n_c * (na + 1.0)) * pz;
    m.block<2, 2>(2, 4) = std::sqrt(p.n_b * p.n_c) * one;
    m.block<2, 2>(2, 0) = m.block<2, 2>(0, 2).transpose();
    m.block<2, 2>(4, 0) = m.block<2, 2>(0, 4).transpose();
    m.block<2, 2>(4, 2) = m.block<2, 2>(2, 4).transpose();
    return CovMat(3, std::move(m));
}

CovMat reduce(const TripartiteParams& p, OrderedPair pair) {
    return partial_trace(build_cm(p), {pair_first(pair), pair_second(pair)});
}

ReductionParams reduction_params(const TripartiteParams& p, OrderedPair pair) {
    check_params(p);
    ReductionParams rp;
    switch (pair) {
        case OrderedPair::AB:
        case OrderedPair::BA:
            rp.kind = ReductionKind::STS;
            rp.squeeze_r = std::asinh(std::sqrt(p.n_b / (1.0 + p.n_c)));
            rp.thermal_n = p.n_c;
            return rp;
        case OrderedPair::AC:
        case OrderedPair::CA:
            rp.kind = ReductionKind::STS;
            rp.squeeze_r = std::asinh(std::sqrt(p.n_c / (1.0 + p.n_b)));
            rp.thermal_n = p.n_b;
            return rp;
        case OrderedPair::BC:
        case OrderedPair::CB:
            if (p.n_a() <= 0.0)
                throw std::invalid_argument(
                    "reduction_params: mixing angle undefined at N_A = 0");
            rp.kind = ReductionKind::MTS;
            rp.mix_phi = std::acos(std::sqrt(p.n_b / p.n_a()));
            rp.thermal_n = p.n_a();
            return rp;
    }
    throw std::invalid_argument("reduction_params: invalid pair");
}

} // namespace tricv
