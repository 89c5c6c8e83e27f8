#include "curvforge/oracle.hpp"

#include <cmath>

namespace curvforge {

Christoffel christoffel(const MetricField& g, const Vec4& x) {
    Mat4 gx = g.eval(x);
    Eigen::FullPivLU<Mat4> lu(gx);
    if (!lu.isInvertible())
        throw degenerate_metric_error("christoffel: singular metric at point");
    Mat4 gi = lu.inverse();

    std::array<Mat4, 4> dg;
    for (int a = 0; a < 4; ++a) dg[a] = g.d(x, a);

    Christoffel G;
    for (int k = 0; k < 4; ++k) G[k].setZero();
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                double v = 0.0;
                for (int l = 0; l < 4; ++l)
                    v += gi(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
                v *= 0.5;
                G[k](i, j) = v;
                G[k](j, i) = v;
            }
    return G;
}

namespace {

double scalar_at_step(const MetricField& g, const Vec4& x, double h) {
    Mat4 gx = g.eval(x);
    Mat4 gi = gx.inverse();
    Christoffel G0 = christoffel(g, x);

    // dG[a][k](i,j) = d_a Gamma^k_ij
    std::array<Christoffel, 4> dG;
    for (int a = 0; a < 4; ++a) {
        Vec4 e = Vec4::Zero();
        e[a] = h;
        Christoffel Gp = christoffel(g, x + e);
        Christoffel Gm = christoffel(g, x - e);
        for (int k = 0; k < 4; ++k) dG[a][k] = (Gp[k] - Gm[k]) / (2.0 * h);
    }

    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double term = 0.0;
            for (int k = 0; k < 4; ++k) term += dG[k][k](i, j) - dG[j][k](i, k);
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                    term += G0[k](k, l) * G0[l](i, j) - G0[k](j, l) * G0[l](i, k);
            s += gi(i, j) * term;
        }
    return s;
}

}  // namespace

OracleValue scalar_numeric(const MetricField& g, const Vec4& x, const OracleOptions& opts) {
    if (!g.domain.contains(x))
        throw out_of_domain_error("scalar_numeric: point outside chart");
    double s1 = scalar_at_step(g, x, opts.h);
    if (!opts.richardson) return {s1, 0.0};
    double s2 = scalar_at_step(g, x, 0.5 * opts.h);
    return {(4.0 * s2 - s1) / 3.0, std::abs(s2 - s1)};
}

double scalar_numeric_value(const MetricField& g, const Vec4& x, const OracleOptions& opts) {
    return scalar_numeric(g, x, opts).value;
}

double conformal_scalar_reference(double lap_phi, const Vec4& grad_phi, double phi) {
    return std::exp(-2.0 * phi) * (-6.0 * lap_phi - 6.0 * grad_phi.squaredNorm());
}

}  // namespace curvforge
