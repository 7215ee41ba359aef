#include "qb/symkit/polytope.hpp"

#include <stdexcept>

namespace qb {

std::set<RationalVector> support(const LaurentPoly& p, const std::vector<VarId>& vars) {
    std::set<RationalVector> out;
    for (const auto& [m, c] : p.terms()) {
        RationalVector v;
        v.reserve(vars.size());
        for (VarId id : vars) v.emplace_back(m.twice(id), 2);
        for (auto& x : v) x.canonicalize();
        out.insert(std::move(v));
    }
    return out;
}

namespace {

struct LpResult {
    bool feasible = false;
    RationalVector x;
    mpq_class value;
};

// Dense tableau simplex with Bland's rule: maximize c.x s.t. A x = b, x >= 0.
LpResult simplex(std::vector<RationalVector> A, RationalVector b, const RationalVector& c) {
    const std::size_t rows = A.size();
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < rows; ++i)
        if (b[i] < 0) {
            for (auto& a : A[i]) a = -a;
            b[i] = -b[i];
        }
    // columns: n originals, rows artificials, rhs
    const std::size_t cols = n + rows;
    std::vector<RationalVector> T(rows, RationalVector(cols + 1));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        T[i][cols] = b[i];
        basis[i] = n + i;
    }

    auto pivot = [&](std::size_t r, std::size_t col) {
        mpq_class inv = 1 / T[r][col];
        for (auto& v : T[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || T[i][col] == 0) continue;
            mpq_class f = T[i][col];
            for (std::size_t j = 0; j <= cols; ++j)
                if (T[r][j] != 0) T[i][j] -= f * T[r][j];
        }
        basis[r] = col;
    };

    // objective row is recomputed from scratch: reduced cost_j = obj_j - sum_i obj_basis(i) * T[i][j]
    auto run = [&](const RationalVector& obj, std::size_t allowed) {
        for (;;) {
            std::size_t enter = cols;
            for (std::size_t j = 0; j < allowed && enter == cols; ++j) {
                mpq_class rc = obj[j];
                for (std::size_t i = 0; i < rows; ++i) rc -= obj[basis[i]] * T[i][j];
                if (rc > 0) enter = j;
            }
            if (enter == cols) return true;
            std::size_t leave = rows;
            mpq_class best;
            for (std::size_t i = 0; i < rows; ++i) {
                if (T[i][enter] <= 0) continue;
                mpq_class ratio = T[i][cols] / T[i][enter];
                if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows) return false;  // unbounded
            pivot(leave, enter);
        }
    };

    RationalVector phase1(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) phase1[n + i] = -1;
    run(phase1, cols);
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] >= n && T[i][cols] != 0) return {};
    // drive remaining (zero-level) artificials out of the basis where possible
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] < n) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (T[i][j] != 0) {
                pivot(i, j);
                break;
            }
    }
    RationalVector obj(cols, 0);
    for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
    // artificial columns are excluded from entering in phase 2
    if (!run(obj, n)) throw std::runtime_error("unbounded linear program");
    LpResult res;
    res.feasible = true;
    res.x.assign(n, 0);
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] < n) res.x[basis[i]] = T[i][cols];
    for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
    return res;
}

}  // namespace

std::optional<RationalVector> feasible_point(const std::vector<RationalVector>& A, const RationalVector& b) {
    std::size_t n = A.empty() ? 0 : A[0].size();
    auto r = simplex(A, b, RationalVector(n, 0));
    if (!r.feasible) return std::nullopt;
    return r.x;
}

std::optional<RationalVector> Zonotope::contains(const RationalVector& p) const {
    const std::size_t d = dimension(), m = generators.size();
    if (p.size() != d) throw std::invalid_argument("dimension mismatch in zonotope membership");
    // variables: lambda (m), slack s (m); rows: G lambda = p - c, lambda + s = 1
    std::vector<RationalVector> A(d + m, RationalVector(2 * m, 0));
    RationalVector b(d + m);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < m; ++j) A[i][j] = generators[j][i];
        b[i] = p[i] - center[i];
    }
    for (std::size_t j = 0; j < m; ++j) {
        A[d + j][j] = 1;
        A[d + j][m + j] = 1;
        b[d + j] = 1;
    }
    auto x = feasible_point(A, b);
    if (!x) return std::nullopt;
    x->resize(m);
    return x;
}

bool Zonotope::contains_strictly(const RationalVector& p) const {
    // relint(Z) = image of the open cube: maximize t with t <= lambda_j <= 1 - t
    const std::size_t d = dimension(), m = generators.size();
    if (m == 0) return p == center;
    // variables: mu_j = lambda_j - t >= 0, s_j >= 0, t >= 0 with mu_j + 2t + s_j = 1
    std::vector<RationalVector> A(d + m, RationalVector(2 * m + 1, 0));
    RationalVector b(d + m);
    for (std::size_t i = 0; i < d; ++i) {
        mpq_class gsum = 0;
        for (std::size_t j = 0; j < m; ++j) {
            A[i][j] = generators[j][i];
            gsum += generators[j][i];
        }
        A[i][2 * m] = gsum;
        b[i] = p[i] - center[i];
    }
    for (std::size_t j = 0; j < m; ++j) {
        A[d + j][j] = 1;
        A[d + j][m + j] = 1;
        A[d + j][2 * m] = 2;
        b[d + j] = 1;
    }
    RationalVector obj(2 * m + 1, 0);
    obj[2 * m] = 1;
    auto r = simplex(A, b, obj);
    return r.feasible && r.value > 0;
}

}  // namespace qb
