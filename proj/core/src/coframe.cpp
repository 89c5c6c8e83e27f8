#include "curvforge/coframe.hpp"

#include <cmath>

namespace curvforge {

Mat4 reference_coframe(const Vec4& w) {
    double r = w.norm();
    if (r == 0.0) throw singular_point_error("reference_coframe: at the base point");
    Mat4 W;
    W.row(0) = w / r;
    W.row(1) = Vec4(-w[1], w[0], -w[3], w[2]) / r;   // i * w
    W.row(2) = Vec4(-w[2], w[3], w[0], -w[1]) / r;   // j * w
    W.row(3) = Vec4(-w[3], -w[2], w[1], w[0]) / r;   // k * w
    return W;
}

DistField frozen_dist_field(const Mat4& Gp, const Vec4& p, const ChartDomain& dom) {
    DistField f;
    f.eval = [Gp, p, dom](const Vec4& x) -> DistanceAndGradient {
        Vec4 w = dom.difference(x, p);
        Vec4 gw = Gp * w;
        double r = std::sqrt(w.dot(gw));
        if (r == 0.0) return {0.0, Vec4::Zero()};
        return {r, gw / r};
    };
    f.jet = [Gp, p, dom](const Vec4& x) -> DistJet {
        Vec4 w = dom.difference(x, p);
        Vec4 gw = Gp * w;
        double r = std::sqrt(w.dot(gw));
        DistJet j;
        j.r = r;
        if (r == 0.0) return j;
        j.dr = gw / r;
        j.hess = Gp / r - (gw * gw.transpose()) / (r * r * r);
        return j;
    };
    return f;
}

namespace {

struct VarState {
    Vec4 x, y;
    Mat4 X, Yv;  // d x(t)/d v, d y(t)/d v
};

// Gamma and its coordinate partials at a point.
void gamma_and_partials(const MetricField& g, const Vec4& x, Christoffel& G,
                        std::array<Christoffel, 4>& dG) {
    Mat4 gx = g.eval(x);
    Mat4 gi = gx.inverse();
    std::array<Mat4, 4> d1;
    for (int a = 0; a < 4; ++a) d1[a] = g.d(x, a);
    std::array<std::array<Mat4, 4>, 4> d2;
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) {
            d2[a][b] = g.d2(x, a, b);
            d2[b][a] = d2[a][b];
        }
    std::array<Mat4, 4> dgi;
    for (int a = 0; a < 4; ++a) dgi[a] = -gi * d1[a] * gi;

    for (int k = 0; k < 4; ++k) G[k].setZero();
    for (int a = 0; a < 4; ++a)
        for (int k = 0; k < 4; ++k) dG[a][k].setZero();
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                double v = 0.0;
                for (int l = 0; l < 4; ++l)
                    v += gi(k, l) * (d1[i](j, l) + d1[j](i, l) - d1[l](i, j));
                v *= 0.5;
                G[k](i, j) = G[k](j, i) = v;
                for (int a = 0; a < 4; ++a) {
                    double dv = 0.0;
                    for (int l = 0; l < 4; ++l) {
                        dv += dgi[a](k, l) * (d1[i](j, l) + d1[j](i, l) - d1[l](i, j));
                        dv += gi(k, l) * (d2[i][a](j, l) + d2[j][a](i, l) - d2[l][a](i, j));
                    }
                    dv *= 0.5;
                    dG[a][k](i, j) = dG[a][k](j, i) = dv;
                }
            }
}

VarState var_rhs(const MetricField& g, const VarState& s) {
    Christoffel G;
    std::array<Christoffel, 4> dG;
    gamma_and_partials(g, s.x, G, dG);
    VarState out;
    out.x = s.y;
    for (int k = 0; k < 4; ++k) out.y[k] = -s.y.dot(G[k] * s.y);
    out.X = s.Yv;
    for (int k = 0; k < 4; ++k)
        for (int m = 0; m < 4; ++m) {
            double v = 0.0;
            for (int a = 0; a < 4; ++a) v -= s.X(a, m) * s.y.dot(dG[a][k] * s.y);
            v -= 2.0 * s.y.dot(G[k] * s.Yv.col(m));
            out.Yv(k, m) = v;
        }
    return out;
}

DistJet variational_dist_jet(const MetricField& g, const Vec4& p, const Vec4& x,
                             const GeodesyOptions& opts) {
    ShootingResult sr = log_map(g, p, x, opts);
    int steps = std::max(opts.min_steps,
                         static_cast<int>(std::ceil(sr.v.norm() / opts.step_length)));
    double h = 1.0 / steps;
    VarState s{p, sr.v, Mat4::Zero(), Mat4::Identity()};
    for (int i = 0; i < steps; ++i) {
        VarState k1 = var_rhs(g, s);
        VarState s2{s.x + 0.5 * h * k1.x, s.y + 0.5 * h * k1.y, s.X + 0.5 * h * k1.X,
                    s.Yv + 0.5 * h * k1.Yv};
        VarState k2 = var_rhs(g, s2);
        VarState s3{s.x + 0.5 * h * k2.x, s.y + 0.5 * h * k2.y, s.X + 0.5 * h * k2.X,
                    s.Yv + 0.5 * h * k2.Yv};
        VarState k3 = var_rhs(g, s3);
        VarState s4{s.x + h * k3.x, s.y + h * k3.y, s.X + h * k3.X, s.Yv + h * k3.Yv};
        VarState k4 = var_rhs(g, s4);
        s.x += (h / 6.0) * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
        s.y += (h / 6.0) * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
        s.X += (h / 6.0) * (k1.X + 2.0 * k2.X + 2.0 * k3.X + k4.X);
        s.Yv += (h / 6.0) * (k1.Yv + 2.0 * k2.Yv + 2.0 * k3.Yv + k4.Yv);
    }

    Mat4 gx = g.eval(s.x);
    Vec4 gy = gx * s.y;
    double speed = std::sqrt(s.y.dot(gy));
    DistJet out;
    out.r = speed;  // unit-time geodesic: distance equals the speed
    out.dr = gy / speed;

    // dy(1)/dx = Yv X^{-1}; the hessian of r follows by differentiating
    // g(x) y / speed with d speed/dx = dr.
    Eigen::FullPivLU<Mat4> lu(s.X);
    if (!lu.isInvertible())
        throw shooting_failure("variational_dist_jet: singular d exp (conjugate point?)");
    Mat4 dy_dx = s.Yv * lu.inverse();
    for (int a = 0; a < 4; ++a)
        out.hess.col(a) = g.d(s.x, a) * s.y / speed + gx * dy_dx.col(a) / speed -
                          out.dr * (out.dr[a] / speed);
    return out;
}

}  // namespace

DistField shooting_dist_field(const std::shared_ptr<const MetricField>& g, const Vec4& p,
                              const GeodesyOptions& opts) {
    DistField f;
    f.eval = [g, p, opts](const Vec4& x) { return dist_with_gradient(*g, p, x, opts); };
    f.jet = [g, p, opts](const Vec4& x) { return variational_dist_jet(*g, p, x, opts); };
    return f;
}

CoframeField::CoframeField(std::shared_ptr<const MetricField> g, SymplecticForm w, Vec4 p,
                           DistField dist, double min_denominator)
    : g_(std::move(g)), w_(w), p_(p), dist_(std::move(dist)), min_den_(min_denominator) {}

DistanceAndGradient CoframeField::dist(const Vec4& x) const { return dist_.eval(x); }

CoframeBasis CoframeField::basis(const Vec4& x) const {
    Mat4 G = g_->eval(x);
    Mat4 Gi = G.inverse();
    Mat4 J = canonical_J(G, w_);
    DistanceAndGradient d = dist_.eval(x);

    Vec4 w1 = d.dr;
    w1 /= std::sqrt(w1.dot(Gi * w1));
    Vec4 w2 = G * (J * (Gi * w1));

    Vec4 ref3 = reference_coframe(g_->domain.difference(x, p_)).row(2);
    Vec4 u = ref3 - (ref3.dot(Gi * w1)) * w1 - (ref3.dot(Gi * w2)) * w2;
    double n = std::sqrt(u.dot(Gi * u));
    if (n < min_den_)
        throw frame_degeneracy_error("build_coframe: Gram-Schmidt denominator " +
                                     std::to_string(n));
    Vec4 w3 = u / n;
    Vec4 w4 = G * (J * (Gi * w3));

    CoframeBasis b;
    b.W.row(0) = w1;
    b.W.row(1) = w2;
    b.W.row(2) = w3;
    b.W.row(3) = w4;
    return b;
}

namespace {

// 4-vector of Jet4 entries with the handful of operations the coframe
// algebra needs.
struct JVec {
    std::array<Jet4, 4> e;
    Jet4& operator[](int i) { return e[i]; }
    const Jet4& operator[](int i) const { return e[i]; }
};

JVec jvec(const Vec4& v, const Mat4& jac) {
    // jac(a, b) = d_a v_b
    JVec out;
    for (int b = 0; b < 4; ++b) out[b] = Jet4(v[b], jac.col(b));
    return out;
}

JVec operator*(const Jet4& c, const JVec& v) {
    JVec out;
    for (int b = 0; b < 4; ++b) out[b] = c * v[b];
    return out;
}

JVec operator-(const JVec& a, const JVec& b) {
    JVec out;
    for (int i = 0; i < 4; ++i) out[i] = a[i] - b[i];
    return out;
}

struct JMat {
    std::array<std::array<Jet4, 4>, 4> m;
    Jet4& operator()(int i, int j) { return m[i][j]; }
    const Jet4& operator()(int i, int j) const { return m[i][j]; }
};

JMat jmat(const Mat4& v, const std::array<Mat4, 4>& d) {
    JMat out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Vec4 grad;
            for (int a = 0; a < 4; ++a) grad[a] = d[a](i, j);
            out(i, j) = Jet4(v(i, j), grad);
        }
    return out;
}

JVec mul(const JMat& M, const JVec& v) {
    JVec out;
    for (int i = 0; i < 4; ++i) {
        Jet4 acc(0.0);
        for (int j = 0; j < 4; ++j) acc = acc + M(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Jet4 dot(const JVec& a, const JVec& b) {
    Jet4 acc(0.0);
    for (int i = 0; i < 4; ++i) acc = acc + a[i] * b[i];
    return acc;
}

}  // namespace

CoframeJet CoframeField::jet(const Vec4& x) const {
    Mat4 G = g_->eval(x);
    std::array<Mat4, 4> dGv;
    for (int a = 0; a < 4; ++a) dGv[a] = g_->d(x, a);
    Mat4 Gi = G.inverse();
    std::array<Mat4, 4> dGi;
    for (int a = 0; a < 4; ++a) dGi[a] = -Gi * dGv[a] * Gi;
    Mat4 Jv = -Gi * w_.matrix;
    std::array<Mat4, 4> dJ;
    for (int a = 0; a < 4; ++a) dJ[a] = -dGi[a] * w_.matrix;

    JMat jG = jmat(G, dGv);
    JMat jGi = jmat(Gi, dGi);
    JMat jJ = jmat(Jv, dJ);

    DistJet dj = dist_.jet(x);
    JVec w1 = jvec(dj.dr, dj.hess);
    Jet4 n1 = jet_sqrt(dot(w1, mul(jGi, w1)));
    w1 = (Jet4(1.0) / n1) * w1;
    JVec w2 = mul(jG, mul(jJ, mul(jGi, w1)));

    // reference row built in jets from the wrapped offset (identity jacobian)
    Vec4 off = g_->domain.difference(x, p_);
    JVec xw;
    for (int b = 0; b < 4; ++b) {
        Vec4 grad = Vec4::Zero();
        grad[b] = 1.0;
        xw[b] = Jet4(off[b], grad);
    }
    Jet4 rr = jet_sqrt(dot(xw, xw));
    Jet4 inv_r = Jet4(1.0) / rr;
    JVec ref3;
    ref3[0] = -1.0 * xw[2] * inv_r;
    ref3[1] = xw[3] * inv_r;
    ref3[2] = xw[0] * inv_r;
    ref3[3] = -1.0 * xw[1] * inv_r;

    JVec u = ref3 - dot(ref3, mul(jGi, w1)) * w1 - dot(ref3, mul(jGi, w2)) * w2;
    Jet4 n = jet_sqrt(dot(u, mul(jGi, u)));
    if (n.v < min_den_)
        throw frame_degeneracy_error("coframe jet: Gram-Schmidt denominator " +
                                     std::to_string(n.v));
    JVec w3 = (Jet4(1.0) / n) * u;
    JVec w4 = mul(jG, mul(jJ, mul(jGi, w3)));

    CoframeJet out;
    const JVec* rows[4] = {&w1, &w2, &w3, &w4};
    for (int i = 0; i < 4; ++i)
        for (int b = 0; b < 4; ++b) {
            out.W(i, b) = (*rows[i])[b].v;
            for (int a = 0; a < 4; ++a) out.dW[a](i, b) = (*rows[i])[b].d[a];
        }
    return out;
}

}  // namespace curvforge
