#pragma once

#include <string>
#include <vector>

#include "qb/bethe/system.hpp"
#include "qb/fixedpoints/fixed.hpp"

namespace qb {

struct SolveOptions {
    unsigned digits = 0;          // 0: default_digits()
    unsigned guard_digits = 20;   // extra working precision; roots near x_k / x_l = 1 are ill-conditioned
    Real z_start = Real("1e-6");  // |z| where the seeds are first corrected
    int max_steps = 20000;
    bool reverse = true;          // track back to z_start and compare
};

struct RootTrack {
    std::string component;
    std::vector<Complex> start;  // log roots at z_start
    std::vector<Complex> u;      // log roots at the target
    Real residual = 0;           // max |B/z - 1| at the target
    Real round_trip = 0;         // max |u_back - start| after reversing
    int steps = 0;
    bool ok = false;
    std::string note;

    std::vector<Complex> roots() const;  // exp(u)
};

struct SolveReport {
    std::vector<RootTrack> tracks;
    std::vector<std::pair<std::size_t, std::size_t>> collisions;  // seeds reaching the same root
    std::size_t distinct = 0;
    Real max_residual = 0;
    Real max_round_trip = 0;
};

/// Newton corrector on N_k - z D_k in log coordinates; returns false on failure.
bool newton_polish(const BetheSystem& sys, const std::vector<CompiledEquation>& eqs, std::vector<Complex>& u,
                   const std::vector<Complex>& z, const Real& tol, int max_iter);

/// Continue one seed from z_start to the target along a straight segment in ln z.
RootTrack track(const BetheSystem& sys, const NumericParams& p, const std::vector<Complex>& seed,
                const std::vector<Complex>& z_target, const SolveOptions& opt);

/// One track per fixed component, seeded at its Chern-root characters.
SolveReport solve(const BetheSystem& sys, const NumericParams& p, const std::vector<FixedComponent>& seeds,
                  const std::vector<Complex>& z_target, const SolveOptions& opt = {});

/// Root tuples equal up to permutation within each vertex.
bool same_solution(const BetheSystem& sys, const std::vector<Complex>& a, const std::vector<Complex>& b,
                   const Real& tol);

}  // namespace qb
