#include "curvforge/metric.hpp"

#include <cmath>
#include <vector>

namespace curvforge {

SymplecticForm::SymplecticForm() {
    matrix.setZero();
    matrix(0, 1) = 1.0;
    matrix(1, 0) = -1.0;
    matrix(2, 3) = 1.0;
    matrix(3, 2) = -1.0;
}

Mat4 MetricField::d(const Vec4& x, int axis) const {
    if (deriv) return deriv(x, axis);
    return fd_partial(x, axis, fd_step);
}

Mat4 MetricField::d2(const Vec4& x, int a, int b) const {
    if (deriv2) return deriv2(x, a, b);
    Vec4 e = Vec4::Zero();
    e[b] = fd_step;
    return (d(x + e, a) - d(x - e, a)) / (2.0 * fd_step);
}

Mat4 MetricField::fd_partial(const Vec4& x, int axis, double h) const {
    Vec4 e = Vec4::Zero();
    e[axis] = h;
    return (eval(x + e) - eval(x - e)) / (2.0 * h);
}

double MetricField::deriv_consistency(const Vec4& x, int axis, double h) const {
    Mat4 ref = d(x, axis);
    double r1 = (fd_partial(x, axis, h) - ref).cwiseAbs().maxCoeff();
    double r2 = (fd_partial(x, axis, 0.5 * h) - ref).cwiseAbs().maxCoeff();
    if (r2 < 1e-15) return 4.0;  // both converged to the analytic value
    return r1 / r2;
}

MetricField euclidean_metric(const ChartDomain& dom) {
    return constant_metric(Mat4::Identity(), dom, "euclidean");
}

MetricField constant_metric(const Mat4& g, const ChartDomain& dom, const std::string& id) {
    MetricField f;
    Mat4 gc = symmetrize(g);
    f.eval = [gc](const Vec4&) { return gc; };
    f.deriv = [](const Vec4&, int) { return Mat4::Zero().eval(); };
    f.domain = dom;
    f.id = id;
    return f;
}

MetricField scaled_metric(const MetricField& g, double factor) {
    MetricField f = g;
    auto base_eval = g.eval;
    f.eval = [base_eval, factor](const Vec4& x) { return (factor * base_eval(x)).eval(); };
    if (g.deriv) {
        auto base_deriv = g.deriv;
        f.deriv = [base_deriv, factor](const Vec4& x, int a) {
            return (factor * base_deriv(x, a)).eval();
        };
    } else {
        f.deriv = nullptr;
    }
    f.id = g.id + "/scaled";
    return f;
}

MetricField conformal_metric(const std::function<double(const Vec4&)>& phi,
                             const std::function<Vec4(const Vec4&)>& grad_phi,
                             const ChartDomain& dom) {
    MetricField f;
    f.eval = [phi](const Vec4& x) {
        return (std::exp(2.0 * phi(x)) * Mat4::Identity()).eval();
    };
    f.deriv = [phi, grad_phi](const Vec4& x, int a) {
        double e = std::exp(2.0 * phi(x));
        return (2.0 * grad_phi(x)[a] * e * Mat4::Identity()).eval();
    };
    f.domain = dom;
    f.id = "conformal";
    return f;
}

CkNorms ck_norms(const MetricField& g1, const MetricField& g2,
                 const std::vector<Vec4>& samples, double h) {
    CkNorms n;
    for (const Vec4& x : samples) {
        Mat4 d0 = g1.eval(x) - g2.eval(x);
        n.c0 = std::max(n.c0, d0.cwiseAbs().maxCoeff());
        for (int a = 0; a < 4; ++a) {
            Vec4 e = Vec4::Zero();
            e[a] = h;
            Mat4 dp = g1.eval(x + e) - g2.eval(x + e);
            Mat4 dm = g1.eval(x - e) - g2.eval(x - e);
            n.c1 = std::max(n.c1, ((dp - dm) / (2.0 * h)).cwiseAbs().maxCoeff());
            n.c2 = std::max(n.c2, ((dp - 2.0 * d0 + dm) / (h * h)).cwiseAbs().maxCoeff());
        }
    }
    return n;
}

}  // namespace curvforge
