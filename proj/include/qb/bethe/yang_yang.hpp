#pragma once

#include <vector>

#include "qb/bethe/system.hpp"

namespace qb {

/// ln z_# = ln z - d ln(-hbar^{1/2}), principal branches.
Complex log_z_sharp(const Complex& z, int d, const NumericParams& p, const QuiverModel& q);

/// W(x, z) = sum_{chi in T^{1/2}} m_chi [Li2(hbar chi) - Li2(chi)] - sum_{i,k} ln x_{i,k} ln z_{#,i},
/// with x = exp(u). Weights of T^{1/2} without Chern roots only add a constant and are skipped.
Complex yang_yang(const BetheSystem& sys, const NumericParams& p, const std::vector<Complex>& u,
                  const std::vector<Complex>& z);

/// Central differences of W in the u_j with real step h.
std::vector<Complex> yang_yang_gradient(const BetheSystem& sys, const NumericParams& p,
                                        const std::vector<Complex>& u, const std::vector<Complex>& z,
                                        const Real& h);

/// Distance of c to the lattice 2 pi i Z (W is defined modulo such periods).
Real distance_to_periods(const Complex& c);

struct CriticalityReport {
    Real max_gradient;               // over all roots and components, modulo 2 pi i
    std::vector<Real> per_root;
};

/// Finite-difference gradient of W at each root tuple, at `digits` precision with step h.
CriticalityReport criticality_check(const BetheSystem& sys, const NumericParams& p,
                                    const std::vector<std::vector<Complex>>& roots, const std::vector<Complex>& z,
                                    unsigned digits = 30, const Real& h = Real("1e-5"));

/// max_k distance of (ln B_k - ln z_k) - dW/du_k to 2 pi i Z at an arbitrary point.
Real gradient_mismatch(const BetheSystem& sys, const NumericParams& p, const std::vector<Complex>& u,
                       const std::vector<Complex>& z, const Real& h);

}  // namespace qb
