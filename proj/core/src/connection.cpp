#include "curvforge/connection.hpp"

#include <cmath>

namespace curvforge {

double ConnectionCoeffs::antisymmetry_residual() const {
    double w = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) w = std::max(w, std::abs(a[i][j][k] + a[j][i][k]));
    return w;
}

double ConnectionCoeffs::a1_symmetry_residual() const {
    double w = 0.0;
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) w = std::max(w, std::abs(a[0][j][k] - a[0][k][j]));
    return w;
}

double ConnectionCoeffs::max_abs() const {
    double w = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) w = std::max(w, std::abs(a[i][j][k]));
    return w;
}

double ConnectionCoeffs::max_abs_deriv() const {
    double w = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) w = std::max(w, std::abs(aD[i][j][k][l]));
    return w;
}

ConnectionCoeffs euclidean_connection(double r) {
    ConnectionCoeffs c;
    const double ir = 1.0 / r;
    auto set = [&](int i, int j, int k, double v) {
        c.a[i - 1][j - 1][k - 1] = v;
        c.a[j - 1][i - 1][k - 1] = -v;
        // value ~ 1/r depends on r only: frame derivative along e_1 = d/dr
        c.aD[i - 1][j - 1][k - 1][0] = -v * ir;
        c.aD[j - 1][i - 1][k - 1][0] = v * ir;
    };
    set(1, 2, 2, ir);
    set(1, 3, 3, ir);
    set(1, 4, 4, ir);
    set(2, 3, 4, -ir);
    set(3, 4, 2, -ir);
    set(4, 2, 3, -ir);
    return c;
}

namespace {

// <A, B> on 2-forms written as antisymmetric coefficient matrices:
// -1/2 tr(A g^{-1} B g^{-1}).
double pair_two_forms(const Mat4& A, const Mat4& B, const Mat4& Gi) {
    return -0.5 * (A * Gi * B * Gi).trace();
}

void coeffs_from_jet(const CoframeJet& jet, const Mat4& Gi, double a[4][4][4]) {
    Mat4 dom[4];  // d w_i as antisymmetric matrices
    for (int i = 0; i < 4; ++i)
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q) dom[i](p, q) = jet.dW[p](i, q) - jet.dW[q](i, p);
    Mat4 wedge[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            wedge[i][j] = jet.W.row(i).transpose() * jet.W.row(j) -
                          jet.W.row(j).transpose() * jet.W.row(i);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                a[i][j][k] = 0.5 * (pair_two_forms(dom[k], wedge[i][j], Gi) -
                                    pair_two_forms(dom[i], wedge[j][k], Gi) -
                                    pair_two_forms(dom[j], wedge[k][i], Gi));
}

}  // namespace

ConnectionCoeffs connection_coeffs(const CoframeField& cf, const Vec4& x,
                                   const ConnectionOptions& opts) {
    ConnectionCoeffs out;
    CoframeJet jet = cf.jet(x);
    Mat4 Gi = cf.metric().eval(x).inverse();
    coeffs_from_jet(jet, Gi, out.a);
    if (!opts.want_derivs) return out;

    // dual frame vectors: W E_l = e_l
    Mat4 E = jet.W.inverse();

    auto a_at = [&](const Vec4& y, double buf[4][4][4]) {
        CoframeJet j2 = cf.jet(y);
        Mat4 Gi2 = cf.metric().eval(y).inverse();
        coeffs_from_jet(j2, Gi2, buf);
    };

    for (int l = 0; l < 4; ++l) {
        if (!(opts.deriv_dirs & (1 << l))) continue;
        Vec4 dir = E.col(l);
        auto diff_at = [&](double h, double buf[4][4][4]) {
            double ap[4][4][4], am[4][4][4];
            a_at(x + h * dir, ap);
            a_at(x - h * dir, am);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    for (int k = 0; k < 4; ++k) buf[i][j][k] = (ap[i][j][k] - am[i][j][k]) / (2.0 * h);
        };
        double d1[4][4][4];
        diff_at(opts.frame_step, d1);
        if (opts.richardson) {
            double d2[4][4][4];
            diff_at(0.5 * opts.frame_step, d2);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    for (int k = 0; k < 4; ++k)
                        out.aD[i][j][k][l] = (4.0 * d2[i][j][k] - d1[i][j][k]) / 3.0;
        } else {
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    for (int k = 0; k < 4; ++k) out.aD[i][j][k][l] = d1[i][j][k];
        }
    }
    return out;
}

}  // namespace curvforge
