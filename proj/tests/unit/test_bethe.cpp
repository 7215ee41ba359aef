#include <algorithm>
#include <random>

#include "doctest.h"
#include "qb/bethe/dilog.hpp"
#include "qb/bethe/solver.hpp"
#include "qb/bethe/yang_yang.hpp"

using namespace qb;

namespace {

TorusWeight W(const char* s) { return TorusWeight::parse(s); }
FactoredRational B(const TorusWeight& a, const TorusWeight& b) { return FactoredRational::binomial(a, b); }

Real close(const Complex& a, const Complex& b) { return abs(a - b); }

std::vector<Complex> z_vec(const QuiverModel& q, const char* mod) {
    std::vector<Complex> z;
    for (int i = 0; i < q.vertices; ++i) z.push_back(polar(Real(mod), Real("0.7") + i));
    return z;
}

std::vector<Complex> random_u(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-900, 900);
    std::vector<Complex> u;
    for (std::size_t k = 0; k < n; ++k)
        u.push_back(Complex(to_real(mpq_class(d(rng), 1000)), to_real(mpq_class(d(rng), 1000))));
    return u;
}

}  // namespace

TEST_CASE("tangent class examples") {
    auto tc = tangent_class(QuiverModel::hilbert(1));
    KClass expect = KClass(W("x0_1")) + KClass(W("h^-1*x0_1^-1")) + KClass(W("t1")) + KClass(W("h^-1*t1^-1")) -
                    KClass(TorusWeight{}) - KClass(W("h^-1"));
    CHECK(tc.tx == expect);
    CHECK(tc.polarization_consistent());

    auto a1 = tangent_class(QuiverModel::a1(1, 2));
    KClass e2 = KClass(W("x0_1*a0_1^-1")) + KClass(W("h^-1*a0_1*x0_1^-1")) + KClass(W("x0_1*a0_2^-1")) +
                KClass(W("h^-1*a0_2*x0_1^-1")) - KClass(TorusWeight{}) - KClass(W("h^-1"));
    CHECK(a1.tx == e2);

    for (auto q : {QuiverModel::hilbert(3), QuiverModel::a1(2, 4), QuiverModel::cyclic(2, {2, 1}, {1, 0})})
        CHECK(tangent_class(q).polarization_consistent());
}

TEST_CASE("empty system") {
    auto tc = tangent_class(QuiverModel::a1(0, 2));
    CHECK(tc.tx.is_zero());
    CHECK(bethe_equations(tc).size() == 0);
}

TEST_CASE("Bethe equations, closed forms") {
    auto sys = bethe_equations(tangent_class(QuiverModel::hilbert(1)));
    REQUIRE(sys.size() == 1);
    // h^{1/2} (x - 1) / (1 - h x)
    FactoredRational hilb = FactoredRational(W("h^1/2")) * B(W("x0_1"), TorusWeight{}) / B(TorusWeight{}, W("h*x0_1"));
    CHECK(sys.lhs[0].equals(hilb));
    CHECK(sys.shift == std::vector<int>{1});

    auto a1 = bethe_equations(tangent_class(QuiverModel::a1(1, 2)));
    FactoredRational prod(mpq_class(1));
    for (const char* a : {"a0_1", "a0_2"})
        prod *= FactoredRational(W("h^1/2")) * B(W("x0_1"), W(a)) / B(W(a), W("h*x0_1"));
    CHECK(a1.lhs[0].equals(prod));
    CHECK(a1.shift == std::vector<int>{2});
}

TEST_CASE("within-vertex permutation symmetry, symbolic") {
    auto sys = bethe_equations(tangent_class(QuiverModel::hilbert(3)));
    VarId x1 = sys.roots[0], x2 = sys.roots[1];
    CHECK(sys.lhs[0].permute({{x1, x2}, {x2, x1}}).equals(sys.lhs[1]));
    CHECK(sys.lhs[2].permute({{x1, x2}, {x2, x1}}).equals(sys.lhs[2]));
}

TEST_CASE("dilogarithm") {
    PrecisionScope ps(60);
    Real tol("1e-50");
    Real l2 = log(Real(2));
    CHECK(close(dilog(Complex(-1)), Complex(-pi() * pi() / 12)) < tol);
    CHECK(close(dilog(Complex(Real(1) / 2)), Complex(pi() * pi() / 12 - l2 * l2 / 2)) < tol);
    CHECK(close(dilog(Complex(1)), Complex(pi() * pi() / 6)) < tol);
    CHECK(dilog(Complex(0)) == Complex(0));

    Complex z(Real("0.3"), Real("0.2")), s, zn(1);
    for (int n = 1; n < 200; ++n) {
        zn = zn * z;
        s += zn / Complex(Real(n) * n);
    }
    CHECK(close(dilog(z), s) < tol);

    // inversion: Li2(z) + Li2(1/z) = -pi^2/6 - ln^2(-z)/2
    Complex w(Real(-3), Real("0.5"));
    Complex lw = log(-w);
    CHECK(close(dilog(w) + dilog(Complex(1) / w), Complex(-pi() * pi() / 6) - lw * lw / Complex(2)) < tol);

    // derivative -ln(1-z)/z
    Complex y(Real("0.8"), Real("-0.6"));
    Real h("1e-15");
    Complex fd = (dilog(y + Complex(h)) - dilog(y - Complex(h))) / Complex(2 * h);
    CHECK(close(fd, -log(Complex(1) - y) / y) < Real("1e-25"));

    CHECK_THROWS_AS(dilog(Complex(2)), std::domain_error);
}

TEST_CASE("Yang-Yang function") {
    PrecisionScope ps(30);
    auto q = QuiverModel::hilbert(1);
    auto sys = bethe_equations(tangent_class(q));
    auto p = NumericParams::generic(q, 3);
    std::vector<Complex> u{Complex(Real("0.2"), Real("0.3"))};

    // hbar = 1: dilogarithm terms cancel, only the ln-ln term remains
    NumericParams p1 = p;
    p1.set("h", Complex(1));
    Complex z(Real("0.4"), Real("0.1"));
    Complex w = yang_yang(sys, p1, u, {z});
    CHECK(close(w, -u[0] * log_z_sharp(z, 1, p1, q)) < Real("1e-25"));

    // zero shift at z = 1: the ln z term vanishes
    auto a0 = QuiverModel::a1(1, 1);
    auto pa = NumericParams::generic(a0, 4);
    Complex lz = log_z_sharp(Complex(1), 0, pa, a0);
    CHECK(abs(lz) == 0);

    // exp(x dW/dx) equals B / z at a random point
    auto g = yang_yang_gradient(sys, p, u, {z}, Real("1e-5"));
    CompiledEquation eq(sys.lhs[0], sys.roots, p);
    Complex ratio = eq.ratio(u) / z;
    CHECK(close(exp(g[0]), ratio) < Real("1e-8") * abs(ratio));

    std::mt19937_64 rng(11);
    for (auto qq : {QuiverModel::hilbert(2), QuiverModel::a1(2, 3), QuiverModel::cyclic(2, {1, 1}, {1, 0})}) {
        auto sy = bethe_equations(tangent_class(qq));
        auto pp = NumericParams::generic(qq, 5);
        for (int k = 0; k < 5; ++k)
            CHECK(gradient_mismatch(sy, pp, random_u(sy.size(), rng), z_vec(qq, "0.3"), Real("1e-5")) < Real("1e-6"));
    }
}

TEST_CASE("solver, Hilb v=1 closed form") {
    PrecisionScope ps(50);
    auto q = QuiverModel::hilbert(1);
    auto sys = bethe_equations(tangent_class(q));
    auto p = NumericParams::generic(q, 7);
    auto z = z_vec(q, "1e-3");
    auto rep = solve(sys, p, enumerate_fixed(q), z);
    REQUIRE(rep.tracks.size() == 1);
    REQUIRE(rep.tracks[0].ok);
    Complex s = p.sqrt_value.at(Variables::parameter("h"));
    Complex x = (z[0] + s) / (s + z[0] * s * s);
    CHECK(close(rep.tracks[0].roots()[0], x) < Real("1e-45"));
    CHECK(rep.max_residual < Real("1e-40"));
}

TEST_CASE("solver, A1 v=1 w=2 quadratic") {
    PrecisionScope ps(50);
    auto q = QuiverModel::a1(1, 2);
    auto sys = bethe_equations(tangent_class(q));
    auto p = NumericParams::generic(q, 8);
    auto z = z_vec(q, "0.2");
    auto rep = solve(sys, p, enumerate_fixed(q), z);
    REQUIRE(rep.distinct == 2);
    Complex h = p.value(Variables::parameter("h")), a1 = p.value(Variables::parameter("a0_1")),
            a2 = p.value(Variables::parameter("a0_2"));
    // h (x - a1)(x - a2) = z (h x - a1)(h x - a2)
    Complex A = h - z[0] * h * h, Bc = (z[0] * h - h) * (a1 + a2), C = (h - z[0]) * a1 * a2;
    Complex disc = sqrt(Bc * Bc - Complex(4) * A * C);
    std::vector<Complex> expect{(-Bc + disc) / (Complex(2) * A), (-Bc - disc) / (Complex(2) * A)};
    for (const auto& t : rep.tracks) {
        Complex x = t.roots()[0];
        Real best = std::min(close(x, expect[0]), close(x, expect[1]));
        CHECK(best < Real("1e-40"));
    }
    CHECK(close(rep.tracks[0].roots()[0], rep.tracks[1].roots()[0]) > Real("1e-3"));
}

TEST_CASE("solver counts and round trip") {
    PrecisionScope ps(50);
    struct Case {
        QuiverModel q;
        std::size_t count;
    };
    for (const auto& c : {Case{QuiverModel::hilbert(3), 3}, Case{QuiverModel::a1(2, 4), 6},
                          Case{QuiverModel::cyclic(2, {1, 1}, {1, 0}), 2}}) {
        auto sys = bethe_equations(tangent_class(c.q));
        auto p = NumericParams::generic(c.q, 7);
        auto fs = enumerate_fixed(c.q);
        auto rep = solve(sys, p, fs, z_vec(c.q, "1e-3"));
        CHECK(fs.size() == c.count);
        CHECK(rep.distinct == c.count);
        CHECK(rep.collisions.empty());
        CHECK(rep.max_residual < Real("1e-40"));
        CHECK(rep.max_round_trip < Real("1e-35"));
    }
}

TEST_CASE("permuted solution is a solution") {
    PrecisionScope ps(50);
    auto q = QuiverModel::hilbert(3);
    auto sys = bethe_equations(tangent_class(q));
    auto p = NumericParams::generic(q, 9);
    auto z = z_vec(q, "1e-2");
    auto rep = solve(sys, p, enumerate_fixed(q), z);
    for (const auto& t : rep.tracks) {
        REQUIRE(t.ok);
        std::vector<Complex> u = t.u;
        std::rotate(u.begin(), u.begin() + 1, u.end());
        CHECK(bethe_residual(sys, p, u, z) < Real("1e-35"));
        CHECK(same_solution(sys, u, t.u, Real("1e-30")));
    }
}

TEST_CASE("criticality") {
    PrecisionScope ps(50);
    std::mt19937_64 rng(5);
    for (auto q : {QuiverModel::hilbert(1), QuiverModel::hilbert(2), QuiverModel::a1(1, 2)}) {
        auto sys = bethe_equations(tangent_class(q));
        auto p = NumericParams::generic(q, 7);
        auto z = z_vec(q, "0.5");
        auto rep = solve(sys, p, enumerate_fixed(q), z);
        std::vector<std::vector<Complex>> roots;
        for (const auto& t : rep.tracks) roots.push_back(t.u);
        CHECK(criticality_check(sys, p, roots, z).max_gradient < Real("1e-6"));
        CHECK(criticality_check(sys, p, {random_u(sys.size(), rng)}, z).max_gradient > Real("1e-2"));
    }
}
