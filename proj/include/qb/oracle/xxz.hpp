#pragma once

#include <string>
#include <vector>

#include "qb/numeric/mp.hpp"

namespace qb {

/// Dense square complex matrix, row major.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n) {}
    static DenseMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    DenseMatrix operator*(const DenseMatrix& o) const;
    DenseMatrix operator+(const DenseMatrix& o) const;
    DenseMatrix operator-(const DenseMatrix& o) const;
    DenseMatrix operator*(const Complex& c) const;
    std::vector<Complex> apply(const std::vector<Complex>& v) const;
    Real max_abs() const;

private:
    std::size_t n_ = 0;
    std::vector<Complex> a_;
};

/// Solve A x = b by Gaussian elimination with partial pivoting; false if singular.
bool dense_solve(DenseMatrix a, std::vector<Complex> b, std::vector<Complex>& x);

Real vector_norm(const std::vector<Complex>& v);

/// R(u) on C^2 (x) C^2, basis index 2 s_1 + s_2 with 0 = up, 1 = down:
/// a = hbar u - 1 on |up up>, |down down>; b = hbar^{1/2} (u - 1) on the
/// diagonal of the mixed sector; |up down> -> |down up> with (hbar - 1) u and
/// |down up> -> |up down> with hbar - 1.
DenseMatrix r_matrix(const Complex& u, const Complex& hbar_sqrt);
/// Short identifier of the convention above, for reports.
std::string r_matrix_convention_id();

/// Max entry of R12(u1/u2) R13(u1/u3) R23(u2/u3) - R23 R13 R12.
Real yang_baxter_residual(const Complex& u1, const Complex& u2, const Complex& u3, const Complex& hbar_sqrt);

/// Distance of R(u) P R(1/u) P from the nearest multiple of the identity, relative.
Real unitarity_residual(const Complex& u, const Complex& hbar_sqrt);

/// Where the Kahler parameter enters the auxiliary twist on an N-site chain:
/// diag(site_sign^N z, 1) when on_up, else diag(1, site_sign^N z).
struct TwistConvention {
    bool on_up = true;
    int site_sign = 1;
    std::string id() const;
    Complex factor(const Complex& z, int sites) const {
        return (site_sign < 0 && sites % 2 != 0) ? -z : z;
    }
    Complex up(const Complex& z, int sites) const { return on_up ? factor(z, sites) : Complex(1); }
    Complex down(const Complex& z, int sites) const { return on_up ? Complex(1) : factor(z, sites); }
};

/// Spin-1/2 chain on N sites with inhomogeneities a_l. Basis index: bit l set
/// when site l is down.
struct ChainState {
    int sites = 0;
    std::vector<Complex> a;
    Complex hbar_sqrt;
    std::size_t dim() const { return std::size_t(1) << sites; }
    static int magnons(std::size_t index);
};

/// Monodromy R_{aux,N}(u/a_N) ... R_{aux,1}(u/a_1) as its 2x2 auxiliary blocks
/// [[A, B], [C, D]]; B creates magnons.
struct Monodromy {
    DenseMatrix A, B, C, D;
};
Monodromy monodromy(const ChainState& s, const Complex& u);

DenseMatrix transfer_matrix(const ChainState& s, const Complex& u, const Complex& z, const TwistConvention& tw);

/// Largest entry outside the magnon-number blocks.
Real block_leakage(const DenseMatrix& m);

/// max entry of [tau(u1), tau(u2)] relative to |tau(u1)| |tau(u2)|.
Real commutator_residual(const ChainState& s, const Complex& u1, const Complex& u2, const Complex& z,
                         const TwistConvention& tw);

/// B(x_1) ... B(x_v) vac. Throws on coincident x.
std::vector<Complex> off_shell_vector(const ChainState& s, const std::vector<Complex>& x);

struct EigenReport {
    Real residual = 0;   // max over spectral points of |tau psi - lambda psi| / |psi|
    Real psi_norm = 0;
    bool degenerate = false;
};

/// Rayleigh-quotient eigen residual of the off-shell vector at the given roots,
/// over the spectral points u.
EigenReport eigen_check(const ChainState& s, const std::vector<Complex>& roots, const Complex& z,
                        const TwistConvention& tw, const std::vector<Complex>& u);

struct TwistCalibration {
    TwistConvention convention;
    Real mismatch = 0;       // |K_up A_vac - K_down D_vac| / |K_up A_vac| at the root, chosen convention
    Real runner_up = 0;      // same for the best rejected convention
    Complex root;            // the v=1, w=1 Bethe root used
};

/// Fix the twist so that the v=1, w=1 Bethe equation of the quiver side is the
/// algebraic Bethe ansatz pole-cancellation condition K_up A_vac(x) = K_down D_vac(x).
TwistCalibration calibrate_twist(unsigned seed = 1);

}  // namespace qb
