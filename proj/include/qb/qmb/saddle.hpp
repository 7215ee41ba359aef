#pragma once

#include <vector>

#include "qb/qmb/qseries.hpp"

namespace qb {

struct SaddleRow {
    Real q;
    std::vector<Real> per_root;  // |D - L| modulo 2 pi i
    Real max = 0;
    Real slope = 0;              // max / |ln q|
};

/// D_{i,k}(q) = ln q x_{i,k} d/dx_{i,k} [ln Phi + ln e(x, z_#)] by central differences in ln x,
/// against L_{i,k} = ln z_i - ln B_{i,k}(x). One row per q.
std::vector<SaddleRow> saddle_residual(const BetheSystem& sys, const NumericParams& p, const std::vector<Complex>& u,
                                       const std::vector<Complex>& z, const std::vector<Real>& qs,
                                       unsigned digits = 30);

/// |D - L| decreases along the rows and consecutive slopes agree within `factor`.
bool saddle_converges(const std::vector<SaddleRow>& rows, const Real& factor = 2);

}  // namespace qb
