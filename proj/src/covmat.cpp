#include "tricv/covmat.hpp"

#include <algorithm>
#include <limits>
#include <complex>
#include <cmath>
#include <stdexcept>

namespace tricv {

namespace {

constexpr double kSymTol = 1e-12;
constexpr double kPhysTol = 1e-9;

// Closed-form determinants at the fixed block sizes used throughout.
double det2(const Eigen::Matrix2d& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

template <typename Scalar>
Scalar det3(const Eigen::Matrix<Scalar, 3, 3>& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
         - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
         + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

template <typename Scalar>
Scalar det4(const Eigen::Matrix<Scalar, 4, 4>& m) {
    Scalar d = Scalar(0);
    double sign = 1.0;
    for (int c = 0; c < 4; ++c) {
        Eigen::Matrix<Scalar, 3, 3> minor;
        int mc = 0;
        for (int cc = 0; cc < 4; ++cc) {
            if (cc == c) continue;
            for (int r = 1; r < 4; ++r) minor(r - 1, mc) = m(r, cc);
            ++mc;
        }
        d += sign * m(0, c) * det3(minor);
        sign = -sign;
    }
    return d;
}

Eigen::MatrixXd symplectic_form(int n_modes) {
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (int j = 0; j < n_modes; ++j) {
        omega(2 * j, 2 * j + 1) = 1.0;
        omega(2 * j + 1, 2 * j) = -1.0;
    }
    return omega;
}

} // namespace

CovMat::CovMat(int n_modes, Eigen::MatrixXd entries)
    : n_modes_(n_modes), m_(std::move(entries)) {
    if (n_modes_ < 1 || n_modes_ > 3)
        throw std::invalid_argument("CovMat: mode count must be 1, 2 or 3");
    if (m_.rows() != 2 * n_modes_ || m_.cols() != 2 * n_modes_)
        throw std::invalid_argument("CovMat: entries must be 2n x 2n");
    for (int r = 0; r < m_.rows(); ++r) {
        for (int c = r + 1; c < m_.cols(); ++c) {
            if (std::abs(m_(r, c) - m_(c, r)) > kSymTol)
                throw std::invalid_argument("CovMat: matrix not symmetric");
        }
        if (m_(r, r) < 0.5 - kPhysTol)
            throw std::invalid_argument("CovMat: diagonal entry below vacuum variance");
    }
}

CovMat CovMat::vacuum(int n_modes) {
    return CovMat(n_modes, 0.5 * Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

Eigen::Matrix2d CovMat::block(int h, int k) const {
    return m_.block<2, 2>(2 * h, 2 * k);
}

std::vector<double> CovMat::symplectic_eigenvalues() const {
    // Symplectic eigenvalues are the moduli of the (purely imaginary)
    // eigenvalues of Omega * Sigma, each appearing twice.
    Eigen::EigenSolver<Eigen::MatrixXd> es(symplectic_form(n_modes_) * m_, false);
    std::vector<double> nu;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        nu.push_back(std::abs(es.eigenvalues()(i)));
    std::sort(nu.begin(), nu.end());
    std::vector<double> out;
    for (int j = 0; j < n_modes_; ++j) out.push_back(nu[2 * j]);
    return out;
}

double CovMat::min_symplectic_eigenvalue() const {
    return symplectic_eigenvalues().front();
}

bool CovMat::is_physical(double tol) const {
    return min_symplectic_eigenvalue() >= 0.5 - tol;
}

double entropy_fn(double x) {
    if (x < 0.5 - kPhysTol)
        throw std::domain_error("entropy_fn: symplectic eigenvalue below 1/2");
    if (x <= 0.5) return 0.0; // round-off from pure states clamps to the boundary
    const double xp = x + 0.5;
    const double xm = x - 0.5;
    return xp * std::log(xp) - xm * std::log(xm);
}

CovMat partial_trace(const CovMat& cm, const std::vector<Mode>& keep) {
    if (keep.empty())
        throw std::invalid_argument("partial_trace: empty mode set");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        const int idx = static_cast<int>(keep[i]);
        if (idx < 0 || idx >= cm.n_modes())
            throw std::invalid_argument("partial_trace: unknown mode label");
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (keep[j] == keep[i])
                throw std::invalid_argument("partial_trace: repeated mode label");
    }
    const int n = static_cast<int>(keep.size());
    Eigen::MatrixXd out(2 * n, 2 * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            out.block<2, 2>(2 * r, 2 * c) =
                cm.block(static_cast<int>(keep[r]), static_cast<int>(keep[c]));
    return CovMat(n, std::move(out));
}

TwoModeInvariants two_mode_invariants(const CovMat& cm) {
    if (cm.n_modes() != 2)
        throw std::invalid_argument("two_mode_invariants: expected a two-mode CM");
    TwoModeInvariants inv;
    inv.i_h = det2(cm.block(0, 0));
    inv.i_k = det2(cm.block(1, 1));
    inv.i_hk = det2(cm.block(0, 1));
    const Eigen::Matrix4d full = cm.entries();
    inv.j_hk = det4<double>(full);
    // det(sigma + i/2 Omega) = prod_j (nu_j^2 - 1/4); real and >= 0 for
    // physical states, 0 exactly when a symplectic eigenvalue sits on the
    // vacuum boundary.
    using Cd = std::complex<double>;
    Eigen::Matrix<Cd, 4, 4> shifted = full.cast<Cd>();
    const Cd half_i(0.0, 0.5);
    for (int j = 0; j < 2; ++j) {
        shifted(2 * j, 2 * j + 1) += half_i;
        shifted(2 * j + 1, 2 * j) -= half_i;
    }
    inv.j_tilde_hk = det4<Cd>(shifted).real();
    // For pure two-mode states the value is exactly zero but the cofactor
    // expansion leaves O(eps * ||sigma||^4) residue, which the sqrt in the
    // EoF formula would amplify to ~1e-7. Clamp below the round-off floor.
    const double floor = 1e-12 * std::pow(std::max({1.0, inv.i_h, inv.i_k}), 2);
    if (inv.j_tilde_hk < floor) inv.j_tilde_hk = 0.0;
    return inv;
}

SymplecticSpectrum symplectic_spectrum(const TwoModeInvariants& inv) {
    auto eigenvalue = [&](double s) {
        double disc = s * s - 4.0 * inv.j_hk;
        const double tol = 1e-12 * std::max(1.0, s * s);
        if (disc < -tol)
            throw std::domain_error("symplectic_spectrum: negative discriminant");
        disc = std::max(disc, 0.0);
        return std::make_pair(std::sqrt(std::max(0.5 * (s - std::sqrt(disc)), 0.0)),
                              std::sqrt(0.5 * (s + std::sqrt(disc))));
    };
    SymplecticSpectrum sp;
    const double s_plus = inv.i_h + inv.i_k + 2.0 * inv.i_hk;
    const double s_minus = inv.i_h + inv.i_k - 2.0 * inv.i_hk;
    auto [lm, lp] = eigenvalue(s_plus);
    sp.lambda_minus = lm;
    sp.lambda_plus = lp;
    sp.lambda_tilde_minus = eigenvalue(s_minus).first;
    return sp;
}

SymplecticSpectrum symplectic_spectrum(const CovMat& cm) {
    // The invariant formula cancels catastrophically when s^2 ~ 4J (e.g. a
    // heavily decayed two-mode squeezed state, where the entanglement gap is
    // ~1e-9 but the discriminant round-off alone shifts the eigenvalue by a
    // comparable amount). The eigensolver route is backward stable.
    if (cm.n_modes() != 2)
        throw std::invalid_argument("symplectic_spectrum: expected a two-mode CM");
    const std::vector<double> nu = cm.symplectic_eigenvalues();
    Eigen::MatrixXd pt = cm.entries();
    pt.row(3) *= -1.0;
    pt.col(3) *= -1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(symplectic_form(2) * pt, false);
    double tilde = std::numeric_limits<double>::infinity();
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        tilde = std::min(tilde, std::abs(es.eigenvalues()(i)));
    return {nu[0], nu[1], tilde};
}

double single_mode_entropy(const CovMat& cm) {
    if (cm.n_modes() != 1)
        throw std::invalid_argument("single_mode_entropy: expected a one-mode CM");
    return entropy_fn(std::sqrt(det2(cm.block(0, 0))));
}

double two_mode_entropy(const CovMat& cm) {
    const SymplecticSpectrum sp = symplectic_spectrum(cm);
    return entropy_fn(sp.lambda_plus) + entropy_fn(sp.lambda_minus);
}

bool is_entangled(const CovMat& cm) {
    return symplectic_spectrum(cm).lambda_tilde_minus < 0.5 - 1e-10;
}

} // namespace tricv
