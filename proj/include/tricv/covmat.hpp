#pragma once

#include <Eigen/Dense>
#include <vector>

namespace tricv {

/// Mode labels of the tripartite system. Reduced states keep the labels of
/// the modes they retain, re-indexed from zero.
enum class Mode : int { A = 0, B = 1, C = 2 };

constexpr const char* mode_name(Mode m) {
    switch (m) {
        case Mode::A: return "A";
        case Mode::B: return "B";
        default: return "C";
    }
}

/// The four local symplectic invariants of a two-mode covariance matrix in
/// standard block form, plus the shifted determinant det(sigma + i Omega/2)
/// entering the entanglement-of-formation formula.
struct TwoModeInvariants {
    double i_h;        ///< det of the first diagonal block
    double i_k;        ///< det of the second diagonal block
    double i_hk;       ///< det of the off-diagonal block (sign-carrying)
    double j_hk;       ///< det of the full 4x4 matrix
    double j_tilde_hk; ///< det(sigma + Omega/2)
};

struct SymplecticSpectrum {
    double lambda_minus;
    double lambda_plus;
    double lambda_tilde_minus; ///< minimum symplectic eigenvalue of the partial transpose
};

/// Covariance matrix of a zero-mean Gaussian state in quadrature ordering
/// (q_1, p_1, ..., q_n, p_n), vacuum variance 1/2.
class CovMat {
public:
    CovMat(int n_modes, Eigen::MatrixXd entries);

    static CovMat vacuum(int n_modes);

    int n_modes() const { return n_modes_; }
    int dim() const { return 2 * n_modes_; }
    const Eigen::MatrixXd& entries() const { return m_; }
    double operator()(int r, int c) const { return m_(r, c); }

    /// 2x2 block coupling modes h and k (h == k gives the diagonal block).
    Eigen::Matrix2d block(int h, int k) const;

    /// Smallest symplectic eigenvalue, from the spectrum of i*Omega*Sigma.
    double min_symplectic_eigenvalue() const;

    /// All n symplectic eigenvalues, ascending.
    std::vector<double> symplectic_eigenvalues() const;

    bool is_physical(double tol = 1e-9) const;

private:
    int n_modes_;
    Eigen::MatrixXd m_;
};

/// Von Neumann entropy of a thermal state with symplectic eigenvalue x,
/// f(x) = (x+1/2)ln(x+1/2) - (x-1/2)ln(x-1/2), in nats. f(1/2) = 0 by
/// continuity; throws std::domain_error for x < 1/2 - 1e-9.
double entropy_fn(double x);

/// Sub-matrix on the kept modes, in the order given.
CovMat partial_trace(const CovMat& cm, const std::vector<Mode>& keep);

TwoModeInvariants two_mode_invariants(const CovMat& cm);

SymplecticSpectrum symplectic_spectrum(const TwoModeInvariants& inv);
SymplecticSpectrum symplectic_spectrum(const CovMat& cm);

double single_mode_entropy(const CovMat& cm);
double two_mode_entropy(const CovMat& cm);

/// PPT test: entangled iff the minimum PT symplectic eigenvalue is below
/// 1/2 by more than 1e-10, so boundary states classify as separable.
bool is_entangled(const CovMat& cm);

} // namespace tricv
