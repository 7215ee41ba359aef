#include "qb/oracle/xxz.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "qb/bethe/system.hpp"

namespace qb {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex(1);
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
    DenseMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Complex& x = (*this)(i, k);
            if (x == Complex()) continue;
            for (std::size_t j = 0; j < n_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
    DenseMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
    DenseMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

DenseMatrix DenseMatrix::operator*(const Complex& c) const {
    DenseMatrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

std::vector<Complex> DenseMatrix::apply(const std::vector<Complex>& v) const {
    std::vector<Complex> r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

Real DenseMatrix::max_abs() const {
    Real m = 0;
    for (const auto& x : a_) m = std::max(m, abs(x));
    return m;
}

bool dense_solve(DenseMatrix a, std::vector<Complex> b, std::vector<Complex>& x) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(a(r, c)) > abs(a(piv, c))) piv = r;
        if (a(piv, c) == Complex()) return false;
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a(c, k), a(piv, k));
            std::swap(b[c], b[piv]);
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            Complex f = a(r, c) / a(c, c);
            if (f == Complex()) continue;
            for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
            b[r] -= f * b[c];
        }
    }
    x.assign(n, Complex());
    for (std::size_t r = n; r-- > 0;) {
        Complex s = b[r];
        for (std::size_t k = r + 1; k < n; ++k) s -= a(r, k) * x[k];
        x[r] = s / a(r, r);
    }
    return true;
}

Real vector_norm(const std::vector<Complex>& v) {
    Real s = 0;
    for (const auto& c : v) s += norm(c);
    return sqrt(s);
}

std::string r_matrix_convention_id() {
    return "R(u)=[[hu-1,0,0,0],[0,h^(1/2)(u-1),h-1,0],[0,(h-1)u,h^(1/2)(u-1),0],[0,0,0,hu-1]];u=x/a;B=T[up][down]";
}

DenseMatrix r_matrix(const Complex& u, const Complex& hbar_sqrt) {
    Complex h = hbar_sqrt * hbar_sqrt;
    DenseMatrix r(4);
    r(0, 0) = r(3, 3) = h * u - Complex(1);
    r(1, 1) = r(2, 2) = hbar_sqrt * (u - Complex(1));
    r(2, 1) = (h - Complex(1)) * u;  // |up down> -> |down up>
    r(1, 2) = h - Complex(1);
    return r;
}

namespace {

// R acting on factors (i, j) of (C^2)^{x3}, first index of R on factor i
DenseMatrix embed3(const DenseMatrix& r, int i, int j) {
    DenseMatrix m(8);
    for (std::size_t in = 0; in < 8; ++in)
        for (std::size_t out = 0; out < 8; ++out) {
            auto bit = [](std::size_t s, int f) { return (s >> (2 - f)) & 1; };
            int k = 3 - i - j;
            if (bit(in, k) != bit(out, k)) continue;
            m(out, in) = r(2 * bit(out, i) + bit(out, j), 2 * bit(in, i) + bit(in, j));
        }
    return m;
}

DenseMatrix swap_factors(const DenseMatrix& r) {
    DenseMatrix p(4);
    for (std::size_t s = 0; s < 4; ++s) p((s % 2) * 2 + s / 2, s) = Complex(1);
    return p * r * p;
}

// site-local 2x2 operator r^{alpha beta} acting on bit l
void add_local(DenseMatrix& out, const DenseMatrix& t, const Complex op[2][2], int l, std::size_t dim) {
    // out += (op on site l) * t
    for (std::size_t row = 0; row < dim; ++row) {
        int s = (row >> l) & 1;
        for (int s2 = 0; s2 < 2; ++s2) {
            const Complex& c = op[s][s2];
            if (c == Complex()) continue;
            std::size_t src = (row & ~(std::size_t(1) << l)) | (std::size_t(s2) << l);
            for (std::size_t col = 0; col < dim; ++col) out(row, col) += c * t(src, col);
        }
    }
}

}  // namespace

Real yang_baxter_residual(const Complex& u1, const Complex& u2, const Complex& u3, const Complex& hbar_sqrt) {
    auto r12 = embed3(r_matrix(u1 / u2, hbar_sqrt), 0, 1);
    auto r13 = embed3(r_matrix(u1 / u3, hbar_sqrt), 0, 2);
    auto r23 = embed3(r_matrix(u2 / u3, hbar_sqrt), 1, 2);
    return (r12 * r13 * r23 - r23 * r13 * r12).max_abs();
}

Real unitarity_residual(const Complex& u, const Complex& hbar_sqrt) {
    DenseMatrix m = r_matrix(u, hbar_sqrt) * swap_factors(r_matrix(Complex(1) / u, hbar_sqrt));
    Complex c = m(0, 0);
    return (m - DenseMatrix::identity(4) * c).max_abs() / abs(c);
}

std::string TwistConvention::id() const {
    std::string zs = site_sign > 0 ? "z" : "(-1)^N z";
    return on_up ? "diag(" + zs + ",1)" : "diag(1," + zs + ")";
}

int ChainState::magnons(std::size_t index) { return std::popcount(index); }

Monodromy monodromy(const ChainState& s, const Complex& u) {
    const std::size_t dim = s.dim();
    // blocks T[alpha][beta], aux in beta -> out alpha
    DenseMatrix t[2][2] = {{DenseMatrix::identity(dim), DenseMatrix(dim)}, {DenseMatrix(dim), DenseMatrix::identity(dim)}};
    for (int l = 0; l < s.sites; ++l) {
        DenseMatrix r = r_matrix(u / s.a[l], s.hbar_sqrt);
        DenseMatrix nt[2][2] = {{DenseMatrix(dim), DenseMatrix(dim)}, {DenseMatrix(dim), DenseMatrix(dim)}};
        for (int al = 0; al < 2; ++al)
            for (int be = 0; be < 2; ++be) {
                // site operator <al, s| R |be, s2>
                Complex op[2][2];
                for (int x = 0; x < 2; ++x)
                    for (int y = 0; y < 2; ++y) op[x][y] = r(2 * al + x, 2 * be + y);
                for (int ga = 0; ga < 2; ++ga) add_local(nt[al][ga], t[be][ga], op, l, dim);
            }
        for (int al = 0; al < 2; ++al)
            for (int ga = 0; ga < 2; ++ga) t[al][ga] = std::move(nt[al][ga]);
    }
    return {t[0][0], t[0][1], t[1][0], t[1][1]};
}

DenseMatrix transfer_matrix(const ChainState& s, const Complex& u, const Complex& z, const TwistConvention& tw) {
    Monodromy m = monodromy(s, u);
    return m.A * tw.up(z, s.sites) + m.D * tw.down(z, s.sites);
}

Real block_leakage(const DenseMatrix& m) {
    Real worst = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (ChainState::magnons(i) != ChainState::magnons(j)) worst = std::max(worst, abs(m(i, j)));
    return worst;
}

Real commutator_residual(const ChainState& s, const Complex& u1, const Complex& u2, const Complex& z,
                         const TwistConvention& tw) {
    DenseMatrix t1 = transfer_matrix(s, u1, z, tw), t2 = transfer_matrix(s, u2, z, tw);
    return (t1 * t2 - t2 * t1).max_abs() / (t1.max_abs() * t2.max_abs());
}

std::vector<Complex> off_shell_vector(const ChainState& s, const std::vector<Complex>& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (abs(x[i] - x[j]) <= Real("1e-30") * (abs(x[i]) + abs(x[j])))
                throw std::invalid_argument("off_shell_vector: coincident roots");
    std::vector<Complex> psi(s.dim());
    psi[0] = Complex(1);
    for (std::size_t k = x.size(); k-- > 0;) psi = monodromy(s, x[k]).B.apply(psi);
    return psi;
}

EigenReport eigen_check(const ChainState& s, const std::vector<Complex>& roots, const Complex& z,
                        const TwistConvention& tw, const std::vector<Complex>& u) {
    EigenReport rep;
    auto psi = off_shell_vector(s, roots);
    rep.psi_norm = vector_norm(psi);
    if (rep.psi_norm < Real("1e-30")) {
        rep.degenerate = true;
        return rep;
    }
    for (const auto& uu : u) {
        auto tpsi = transfer_matrix(s, uu, z, tw).apply(psi);
        Complex num, den;
        for (std::size_t i = 0; i < psi.size(); ++i) {
            num += conj(psi[i]) * tpsi[i];
            den += conj(psi[i]) * psi[i];
        }
        Complex lambda = num / den;
        std::vector<Complex> r(psi.size());
        for (std::size_t i = 0; i < psi.size(); ++i) r[i] = tpsi[i] - lambda * psi[i];
        rep.residual = std::max(rep.residual, vector_norm(r) / rep.psi_norm);
    }
    return rep;
}

TwistCalibration calibrate_twist(unsigned seed) {
    QuiverModel q = QuiverModel::a1(1, 1);
    BetheSystem sys = bethe_equations(tangent_class(q));
    NumericParams p = NumericParams::generic(q, seed);
    ChainState s;
    s.sites = 1;
    s.hbar_sqrt = p.sqrt_value.at(Variables::parameter("h"));
    s.a = {p.value(Variables::parameter("a0_1"))};
    // any generic x is the root for z = B(x)
    TwistCalibration cal;
    cal.root = polar(Real("0.83"), Real("0.61"));
    CompiledEquation eq(sys.lhs[0], sys.roots, p);
    Complex z = eq.ratio({log(cal.root)});
    Monodromy m = monodromy(s, cal.root);
    Complex a_vac = m.A(0, 0), d_vac = m.D(0, 0);
    std::vector<std::pair<Real, TwistConvention>> scored;
    for (bool up : {true, false})
        for (int sign : {1, -1}) {
            TwistConvention tw{up, sign};
            Complex lhs = tw.up(z, 1) * a_vac, rhs = tw.down(z, 1) * d_vac;
            scored.emplace_back(abs(lhs - rhs) / abs(lhs), tw);
        }
    std::sort(scored.begin(), scored.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    cal.convention = scored[0].second;
    cal.mismatch = scored[0].first;
    cal.runner_up = scored[1].first;
    return cal;
}

}  // namespace qb
