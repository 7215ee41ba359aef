#include <algorithm>

#include "doctest.h"
#include "qb/bethe/solver.hpp"
#include "qb/oracle/compare.hpp"

using namespace qb;

namespace {

Complex P(const char* r, const char* t) { return polar(Real(r), Real(t)); }

Complex hs() { return P("1.1", "0.4"); }

ChainState chain(int n) {
    ChainState s;
    s.sites = n;
    s.hbar_sqrt = hs();
    const char* mods[] = {"0.7", "1.3", "0.9", "1.6", "1.1"};
    for (int l = 0; l < n; ++l) s.a.push_back(P(mods[l], std::to_string(0.9 * l + 0.2).c_str()));
    return s;
}

// ratio-free proportionality: max |u_i v_j - u_j v_i| relative
Real nonparallel(const std::vector<Complex>& u, const std::vector<Complex>& v) {
    Real worst = 0, scale = vector_norm(u) * vector_norm(v);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) worst = std::max(worst, abs(u[i] * v[j] - u[j] * v[i]));
    return worst / scale;
}

std::vector<Complex> spectral() { return {P("0.9", "0.2"), P("1.4", "-0.5"), P("0.6", "2.2")}; }

}  // namespace

TEST_CASE("R-matrix") {
    PrecisionScope ps(50);
    CHECK(yang_baxter_residual(P("0.8", "0.3"), P("1.3", "-1.1"), P("0.6", "2.1"), hs()) < Real("1e-20"));
    CHECK(yang_baxter_residual(P("1.7", "0.1"), P("0.5", "0.9"), P("1.2", "-2.4"), hs()) < Real("1e-20"));
    CHECK(yang_baxter_residual(P("0.9", "3.0"), P("1.1", "1.0"), P("2.0", "0.5"), P("0.7", "-1.2")) < Real("1e-20"));
    CHECK(unitarity_residual(P("0.8", "0.3"), hs()) < Real("1e-40"));

    // hbar = 1: proportional to the identity
    DenseMatrix r1 = r_matrix(P("0.7", "1.0"), Complex(1));
    CHECK((r1 - DenseMatrix::identity(4) * r1(0, 0)).max_abs() < Real("1e-45"));

    // |up up> is an eigenvector
    DenseMatrix r = r_matrix(P("0.7", "1.0"), hs());
    for (std::size_t i = 1; i < 4; ++i) CHECK(r(i, 0) == Complex());
}

TEST_CASE("transfer matrix") {
    PrecisionScope ps(50);
    ChainState s = chain(3);
    TwistConvention tw{true, -1};
    Complex z = P("0.3", "0.7");
    CHECK(commutator_residual(s, P("0.9", "0.2"), P("1.4", "-0.5"), z, tw) < Real("1e-18"));
    auto t = transfer_matrix(s, P("0.9", "0.2"), z, tw);
    CHECK(block_leakage(t) == 0);
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(t(i, 0) == Complex());
}

TEST_CASE("off-shell vectors") {
    PrecisionScope ps(50);
    ChainState s = chain(3);
    auto vac = off_shell_vector(s, {});
    CHECK(vac[0] == Complex(1));
    CHECK(vector_norm(vac) == 1);

    // one site: B(x) vac = (hbar - 1) |down>
    ChainState one = chain(1);
    auto flip = off_shell_vector(one, {P("0.8", "0.1")});
    CHECK(flip[0] == Complex());
    Complex h = hs() * hs();
    CHECK(abs(flip[1] - (h - Complex(1))) < Real("1e-45"));

    // v = N: all down
    auto top = off_shell_vector(s, {P("0.8", "0.1"), P("1.2", "2.0"), P("0.5", "-1.0")});
    for (std::size_t i = 0; i + 1 < top.size(); ++i) CHECK(top[i] == Complex());
    CHECK(abs(top.back()) > Real("1e-5"));

    // B(x) B(y) = B(y) B(x) up to a scalar
    auto a = off_shell_vector(s, {P("0.8", "0.1"), P("1.2", "2.0")});
    auto b = off_shell_vector(s, {P("1.2", "2.0"), P("0.8", "0.1")});
    CHECK(nonparallel(a, b) < Real("1e-40"));

    CHECK_THROWS_AS(off_shell_vector(s, {P("0.8", "0.1"), P("0.8", "0.1")}), std::invalid_argument);
}

TEST_CASE("twist calibration") {
    PrecisionScope ps(50);
    auto cal = calibrate_twist();
    CHECK(cal.convention.on_up);
    CHECK(cal.convention.site_sign == -1);
    CHECK(cal.mismatch < Real("1e-40"));
    CHECK(cal.runner_up > Real("1e-3"));
    CHECK(cal.convention.id() == "diag((-1)^N z,1)");
}

TEST_CASE("Bethe vectors are transfer-matrix eigenvectors") {
    PrecisionScope ps(50);
    TwistConvention tw = calibrate_twist().convention;
    for (auto [n, v] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}}) {
        auto q = QuiverModel::a1(v, n);
        auto sys = bethe_equations(tangent_class(q));
        auto p = NumericParams::generic(q, 21);
        std::vector<Complex> z{P("0.3", "0.7")};
        auto rep = solve(sys, p, enumerate_fixed(q), z);
        ChainState s = chain_for(q, p);
        for (const auto& t : rep.tracks) {
            REQUIRE(t.ok);
            auto e = eigen_check(s, t.roots(), z[0], tw, spectral());
            CHECK_FALSE(e.degenerate);
            CHECK(e.residual < Real("1e-10"));
        }
        auto random = eigen_check(s, random_root_points(v, 1, 3)[0], z[0], tw, spectral());
        CHECK(random.residual > Real("1e-2"));
    }
}

TEST_CASE("eigen residual follows solver precision") {
    auto q = QuiverModel::a1(1, 3);
    auto sys = bethe_equations(tangent_class(q));
    TwistConvention tw{true, -1};
    Real res[2];
    int i = 0;
    for (unsigned digits : {30u, 50u}) {
        PrecisionScope ps(digits);
        auto p = NumericParams::generic(q, 21);
        std::vector<Complex> z{P("0.3", "0.7")};
        SolveOptions opt;
        opt.digits = digits;
        opt.guard_digits = 0;
        auto rep = solve(sys, p, enumerate_fixed(q), z, opt);
        Real worst = 0;
        for (const auto& t : rep.tracks) worst = std::max(worst, eigen_check(chain_for(q, p), t.roots(), z[0], tw, spectral()).residual);
        res[i++] = worst;
    }
    CHECK(res[1] * Real("1e10") < res[0]);
}

TEST_CASE("weight functions against the off-shell vector") {
    PrecisionScope ps(50);
    for (auto [v, w] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}) {
        auto q = QuiverModel::a1(v, w);
        auto p = NumericParams::generic(q, 3);
        auto g = compare_weight_functions(q, p, random_root_points(v, 4, 9), Real("1e-8"));
        CHECK(g.consistent);
        CHECK(g.max_residual < Real("1e-30"));
        CHECK(g.outside_sector == 0);
    }
    // v = 0: both sides are the vacuum
    auto q0 = QuiverModel::a1(0, 2);
    auto g0 = compare_weight_functions(q0, NumericParams::generic(q0, 3), random_root_points(0, 3, 9), Real("1e-8"));
    CHECK(g0.consistent);
    CHECK(g0.labels.size() == 1);
}

TEST_CASE("Baxter eigenvalue") {
    PrecisionScope ps(50);
    TwistConvention tw = calibrate_twist().convention;
    for (auto [v, w] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 3}}) {
        auto q = QuiverModel::a1(v, w);
        auto b = baxter_check(q, NumericParams::generic(q, 3), random_root_points(v, 3, 4), tw);
        CHECK(b.exponent == 1);
        CHECK(b.ratio_residual < Real("1e-10"));
        CHECK(b.vac_residual < Real("1e-40"));
    }
}
