#include "qb/bethe/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qb/numeric/parallel.hpp"

namespace qb {

std::vector<Complex> RootTrack::roots() const {
    std::vector<Complex> x;
    for (const auto& v : u) x.push_back(exp(v));
    return x;
}

namespace {

Real pow10(int e) { return boost::multiprecision::pow(Real(10), e); }

// Gaussian elimination with partial pivoting; false if singular
bool linear_solve(std::vector<std::vector<Complex>> a, std::vector<Complex> b, std::vector<Complex>& x) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        Real best = abs(a[c][c]);
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(a[r][c]) > best) {
                best = abs(a[r][c]);
                piv = r;
            }
        if (best == 0) return false;
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            Complex f = a[r][c] / a[c][c];
            if (f == Complex()) continue;
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    x.assign(n, Complex());
    for (std::size_t r = n; r-- > 0;) {
        Complex s = b[r];
        for (std::size_t k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
        x[r] = s / a[r][r];
    }
    return true;
}

Real max_abs(const std::vector<Complex>& v) {
    Real m = 0;
    for (const auto& c : v) m = std::max(m, abs(c));
    return m;
}

std::vector<Complex> z_at(const std::vector<Complex>& from, const std::vector<Complex>& to, const Real& s) {
    std::vector<Complex> z;
    for (std::size_t i = 0; i < from.size(); ++i) z.push_back(exp(from[i] + (to[i] - from[i]) * Complex(s)));
    return z;
}

struct Linearization {
    std::vector<Complex> g;                  // N - z D
    std::vector<std::vector<Complex>> jac;   // d/du
    std::vector<Complex> d;                  // D values
};

Linearization linearize(const BetheSystem& sys, const std::vector<CompiledEquation>& eqs,
                        const std::vector<Complex>& u, const std::vector<Complex>& z) {
    Linearization l;
    for (std::size_t k = 0; k < eqs.size(); ++k) {
        auto v = eqs[k].evaluate(u);
        const Complex& zk = z[sys.vertex_of[k]];
        l.g.push_back(v.n - zk * v.d);
        std::vector<Complex> row(u.size());
        for (std::size_t j = 0; j < u.size(); ++j) row[j] = v.grad_n[j] - zk * v.grad_d[j];
        l.jac.push_back(std::move(row));
        l.d.push_back(v.d);
    }
    return l;
}

// corrector at fixed z; converged when the Newton step drops below tol
bool correct(const BetheSystem& sys, const std::vector<CompiledEquation>& eqs, std::vector<Complex>& u,
             const std::vector<Complex>& z, const Real& tol, int max_iter, const Real& max_move) {
    std::vector<Complex> u0 = u;
    for (int it = 0; it < max_iter; ++it) {
        auto l = linearize(sys, eqs, u, z);
        std::vector<Complex> rhs, du;
        for (const auto& g : l.g) rhs.push_back(-g);
        if (!linear_solve(l.jac, rhs, du)) return false;
        for (std::size_t j = 0; j < u.size(); ++j) u[j] += du[j];
        Real move = 0;
        for (std::size_t j = 0; j < u.size(); ++j) move = std::max(move, abs(u[j] - u0[j]));
        if (move > max_move) return false;
        if (max_abs(du) <= tol) return true;
    }
    return false;
}

bool continue_path(const BetheSystem& sys, const std::vector<CompiledEquation>& eqs, std::vector<Complex>& u,
                   const std::vector<Complex>& lz_from, const std::vector<Complex>& lz_to, const SolveOptions& opt,
                   unsigned digits, int& steps, std::string& note) {
    Real s = 0, ds = Real(1) / 50;
    const Real max_ds = Real(1) / 20, min_ds = pow10(-14);
    const Real tol = pow10(-static_cast<int>(digits / 2));
    while (s < 1) {
        if (steps++ > opt.max_steps) {
            note = "step budget exhausted at s=" + to_string(s, 6);
            return false;
        }
        Real s1 = std::min(Real(1), s + ds);
        Real h = s1 - s;
        auto z = z_at(lz_from, lz_to, s);
        auto l = linearize(sys, eqs, u, z);
        // dG/ds = -D z (ln z_to - ln z_from)
        std::vector<Complex> rhs, du;
        for (std::size_t k = 0; k < eqs.size(); ++k) {
            std::size_t i = sys.vertex_of[k];
            rhs.push_back(l.d[k] * z[i] * (lz_to[i] - lz_from[i]));
        }
        if (!linear_solve(l.jac, rhs, du)) {
            note = "singular Jacobian at s=" + to_string(s, 6);
            return false;
        }
        std::vector<Complex> trial = u;
        for (std::size_t j = 0; j < u.size(); ++j) trial[j] += du[j] * Complex(h);
        Real scale = max_abs(du) * h;
        if (correct(sys, eqs, trial, z_at(lz_from, lz_to, s1), tol, 8, scale / 4 + Real(1) / 100)) {
            u = trial;
            s = s1;
            ds = std::min(max_ds, ds * Real(3) / 2);
        } else {
            ds /= 2;
            if (ds < min_ds) {
                note = "step size underflow at s=" + to_string(s, 6);
                return false;
            }
        }
    }
    return true;
}

std::vector<CompiledEquation> compile_all(const BetheSystem& sys, const NumericParams& p) {
    std::vector<CompiledEquation> eqs;
    for (const auto& b : sys.lhs) eqs.emplace_back(b, sys.roots, p);
    return eqs;
}

}  // namespace

bool newton_polish(const BetheSystem& sys, const std::vector<CompiledEquation>& eqs, std::vector<Complex>& u,
                   const std::vector<Complex>& z, const Real& tol, int max_iter) {
    if (!correct(sys, eqs, u, z, tol, max_iter, Real(10))) return false;
    // a few more steps while the update keeps shrinking, to reach working precision
    Real last = tol;
    for (int it = 0; it < 6; ++it) {
        auto l = linearize(sys, eqs, u, z);
        std::vector<Complex> rhs, du;
        for (const auto& g : l.g) rhs.push_back(-g);
        if (!linear_solve(l.jac, rhs, du)) break;
        Real m = max_abs(du);
        if (m >= last) break;
        for (std::size_t j = 0; j < u.size(); ++j) u[j] += du[j];
        last = m;
    }
    return true;
}

namespace {

// the seed is a common zero of N and D for some equation at special fixed points;
// start Newton from nearby points and keep the first genuine solution
bool seed_solution(const BetheSystem& sys, const std::vector<CompiledEquation>& eqs, std::vector<Complex>& u,
                   const std::vector<Complex>& z, const Real& tol, std::string& note) {
    std::vector<Complex> trial = u;
    auto genuine = [&](const std::vector<Complex>& v) {
        for (std::size_t k = 0; k < eqs.size(); ++k) {
            auto val = eqs[k].evaluate(v);
            if (abs(val.d) < tol * 1000 * (1 + abs(val.n))) return false;
            if (abs(val.n / (z[sys.vertex_of[k]] * val.d) - Complex(1)) > Real("1e-10")) return false;
        }
        return true;
    };
    if (newton_polish(sys, eqs, trial, z, tol, 60) && genuine(trial)) {
        u = trial;
        return true;
    }
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> d(-1000, 1000);
    for (int scale = 4; scale >= 1; --scale)
        for (int attempt = 0; attempt < 6; ++attempt) {
            trial = u;
            for (auto& c : trial)
                c += Complex(to_real(mpq_class(d(rng), 1000)), to_real(mpq_class(d(rng), 1000))) * Complex(pow10(-scale));
            if (newton_polish(sys, eqs, trial, z, tol, 80) && genuine(trial)) {
                u = trial;
                note = "seed perturbed by 1e-" + std::to_string(scale);
                return true;
            }
        }
    return false;
}

}  // namespace

RootTrack track(const BetheSystem& sys, const NumericParams& p, const std::vector<Complex>& seed,
                const std::vector<Complex>& z_target, const SolveOptions& opt) {
    unsigned digits = (opt.digits ? opt.digits : default_digits()) + opt.guard_digits;
    PrecisionScope scope(digits);
    auto eqs = compile_all(sys, p);
    RootTrack t;
    std::vector<Complex> lz_to, lz_from;
    for (const auto& z : z_target) {
        lz_to.push_back(log(z));
        lz_from.push_back(Complex(boost::multiprecision::log(opt.z_start), arg(z)));
    }
    const Real fine = pow10(-static_cast<int>(digits) + 8);
    std::vector<Complex> u = seed;
    if (!seed_solution(sys, eqs, u, z_at(lz_from, lz_to, 0), fine, t.note)) {
        t.note = "Newton failed at the seed";
        return t;
    }
    t.start = u;
    if (!continue_path(sys, eqs, u, lz_from, lz_to, opt, digits, t.steps, t.note)) return t;
    if (!newton_polish(sys, eqs, u, z_target, fine, 30)) {
        t.note = "final polish did not converge";
        return t;
    }
    t.u = u;
    t.residual = bethe_residual(sys, p, u, z_target);
    t.ok = true;
    if (opt.reverse) {
        std::vector<Complex> back = u;
        int steps = 0;
        std::string note;
        if (!continue_path(sys, eqs, back, lz_to, lz_from, opt, digits, steps, note) ||
            !newton_polish(sys, eqs, back, z_at(lz_from, lz_to, 0), fine, 30)) {
            t.round_trip = 1;
            t.note = "reverse path failed: " + note;
        } else {
            for (std::size_t j = 0; j < back.size(); ++j)
                t.round_trip = std::max(t.round_trip, abs(exp(back[j]) - exp(t.start[j])));
        }
    }
    return t;
}

bool same_solution(const BetheSystem& sys, const std::vector<Complex>& a, const std::vector<Complex>& b,
                   const Real& tol) {
    std::vector<bool> used(b.size(), false);
    for (std::size_t j = 0; j < a.size(); ++j) {
        bool found = false;
        for (std::size_t k = 0; k < b.size() && !found; ++k)
            if (!used[k] && sys.vertex_of[k] == sys.vertex_of[j] &&
                abs(exp(a[j]) - exp(b[k])) <= tol * (1 + abs(exp(a[j])))) {
                used[k] = true;
                found = true;
            }
        if (!found) return false;
    }
    return true;
}

SolveReport solve(const BetheSystem& sys, const NumericParams& p, const std::vector<FixedComponent>& seeds,
                  const std::vector<Complex>& z_target, const SolveOptions& opt) {
    unsigned digits = opt.digits ? opt.digits : default_digits();
    PrecisionScope scope(digits + opt.guard_digits);  // process-wide in this Boost version: set before spawning workers
    SolveOptions o = opt;
    o.digits = digits;
    SolveReport rep;
    rep.tracks.resize(seeds.size());
    parallel_for(seeds.size(), [&](std::size_t i) {
        auto seed = seed_logs(sys, seeds[i].root_values(), p);
        rep.tracks[i] = track(sys, p, seed, z_target, o);
        rep.tracks[i].component = seeds[i].label();
    });
    const Real tol = pow10(-static_cast<int>(digits) / 3);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < rep.tracks.size(); ++i) {
        const auto& t = rep.tracks[i];
        if (!t.ok) continue;
        rep.max_residual = std::max(rep.max_residual, t.residual);
        rep.max_round_trip = std::max(rep.max_round_trip, t.round_trip);
        bool dup = false;
        for (std::size_t r : reps)
            if (same_solution(sys, t.u, rep.tracks[r].u, tol)) {
                rep.collisions.emplace_back(r, i);
                dup = true;
                break;
            }
        if (!dup) reps.push_back(i);
    }
    rep.distinct = reps.size();
    return rep;
}

}  // namespace qb
