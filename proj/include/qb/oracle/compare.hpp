#pragma once

#include <string>
#include <vector>

#include "qb/bethe/system.hpp"
#include "qb/envelope/weight_function.hpp"
#include "qb/oracle/xxz.hpp"

namespace qb {

/// The chain matching an A1 quiver at numeric parameters: site l carries a_{w-l}.
ChainState chain_for(const QuiverModel& q, const NumericParams& p);

/// Basis index of the chain state whose down spins are the occupied columns of F.
std::size_t chain_index(const FixedComponent& f);

/// f_F at numeric roots: the sum of the kernel over coset representatives.
Complex evaluate_weight_function(const WeightFunction& wf, const NumericParams& p, const std::vector<Complex>& x);

struct GaugeReport {
    bool consistent = false;
    std::vector<std::string> labels;
    std::vector<Complex> gauge;                 // per F, relative to the first F, fitted at the first point
    std::vector<std::vector<Real>> residual;    // per F, per held-out point: |ratio / gauge - 1|
    Real max_residual = 0;
    Real outside_sector = 0;                    // largest off-shell component off the fixed-point basis
    std::string note;
};

/// Compare the off-shell vector B(x_1)...B(x_v) vac with the vector (f_F(x))_F:
/// at each x the two must agree up to one scalar, after a fixed diagonal gauge
/// fitted at the first point. `points` are root tuples; at least two.
GaugeReport compare_weight_functions(const QuiverModel& q, const NumericParams& p,
                                     const std::vector<std::vector<Complex>>& points, const Real& tol);

/// Generic root tuples for comparisons: |x| in [0.7, 1.4], random phase.
std::vector<std::vector<Complex>> random_root_points(std::size_t v, std::size_t count, unsigned seed);

struct BaxterReport {
    int exponent = 1;        // calibrated: (D_vac / A_vac)^exponent matches Pi'/Pi
    Real ratio_residual = 0; // relative mismatch, max over spectral tuples
    Real vac_residual = 0;   // |tau_0 vac - lambda vac| / |lambda|
    std::string convention;
};

/// lim_{z->0} tau(u; z) under the calibrated twist: the diagonal block that
/// survives (D when the twist sits on the up state, else A).
DenseMatrix transfer_limit(const ChainState& s, const Complex& u, const TwistConvention& tw);

/// Eigenvalue of prod_k tau_0(u_k) on the vacuum, normalized by the opposite
/// diagonal block, against baxter_eigenvalue(q) at x_k = u_k. The exponent is
/// calibrated at v = w = 1 unless given.
BaxterReport baxter_check(const QuiverModel& q, const NumericParams& p, const std::vector<std::vector<Complex>>& u,
                          const TwistConvention& tw, int exponent = 0);

}  // namespace qb
