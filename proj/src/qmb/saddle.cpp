#include "qb/qmb/saddle.hpp"

#include <algorithm>

#include "qb/bethe/yang_yang.hpp"

namespace qb {

std::vector<SaddleRow> saddle_residual(const BetheSystem& sys, const NumericParams& p, const std::vector<Complex>& u,
                                       const std::vector<Complex>& z, const std::vector<Real>& qs, unsigned digits) {
    PrecisionScope ps(digits);
    const Real h("1e-8");
    std::vector<Complex> lz;
    for (int i = 0; i < sys.quiver.vertices; ++i) lz.push_back(log_z_sharp(z.at(i), sys.shift[i], p, sys.quiver));

    std::vector<SaddleRow> rows;
    for (const Real& qr : qs) {
        QSeriesContext ctx(Complex(qr), digits);
        const Complex lq = log(ctx.q);
        SaddleRow row;
        row.q = qr;
        for (std::size_t k = 0; k < sys.size(); ++k) {
            auto up = u, dn = u;
            up[k] += Complex(h);
            dn[k] -= Complex(h);
            // the ratio is close to 1, so its principal log is branch-safe
            Complex d_phi = log(big_phi(sys, p, up, ctx) / big_phi(sys, p, dn, ctx));
            // ln e is linear in u
            Complex d = lq * d_phi / Complex(2 * h) + lz[sys.vertex_of[k]];
            CompiledEquation eq(sys.lhs[k], sys.roots, p);
            Complex l = log(z.at(sys.vertex_of[k])) - log(eq.ratio(u));
            row.per_root.push_back(distance_to_periods(d - l));
        }
        for (const auto& r : row.per_root) row.max = std::max(row.max, r);
        row.slope = row.max / abs(lq);
        rows.push_back(std::move(row));
    }
    return rows;
}

bool saddle_converges(const std::vector<SaddleRow>& rows, const Real& factor) {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!(rows[i].max < rows[i - 1].max)) return false;
        Real a = rows[i].slope, b = rows[i - 1].slope;
        if (a > b * factor || b > a * factor) return false;
    }
    return true;
}

}  // namespace qb
