#include "curvforge/compat.hpp"

namespace curvforge {

Mat4 canonical_J(const Mat4& g, const SymplecticForm& w) {
    Eigen::FullPivLU<Mat4> lu(g);
    if (!lu.isInvertible())
        throw degenerate_metric_error("canonical_J: singular metric");
    return (-lu.solve(w.matrix)).eval();
}

Mat4 canonical_J(const MetricField& g, const SymplecticForm& w, const Vec4& x) {
    return canonical_J(g.eval(x), w);
}

double compat_residual(const Mat4& g, const SymplecticForm& w) {
    Mat4 J = canonical_J(g, w);
    double rj = (J * J + Mat4::Identity()).cwiseAbs().maxCoeff();
    double rg = (J.transpose() * g * J - g).cwiseAbs().maxCoeff();
    return std::max(rj, rg);
}

double compat_residual(const MetricField& g, const SymplecticForm& w, const Vec4& x) {
    return compat_residual(g.eval(x), w);
}

std::pair<Mat4, Mat4> split_invariant(const Mat4& h, const Mat4& J) {
    if ((J * J + Mat4::Identity()).cwiseAbs().maxCoeff() > 1e-8)
        throw invalid_structure_error("split_invariant: J^2 != -I");
    Mat4 hJ = J.transpose() * h * J;  // h(Jx, Jy)
    Mat4 hp = 0.5 * (h + hJ);
    Mat4 hm = 0.5 * (h - hJ);
    return {hp, hm};
}

Mat4 metric_exp_point(const Mat4& g, const Mat4& h) {
    Mat4 s = spd_sqrt(g);
    Mat4 si = spd_inv_sqrt(g);
    return (s * sym_exp(si * symmetrize(h) * si) * s).eval();
}

Mat4 metric_log_point(const Mat4& g, const Mat4& gt) {
    if ((gt - g).cwiseAbs().maxCoeff() == 0.0) return Mat4::Zero();
    Mat4 s = spd_sqrt(g);
    Mat4 si = spd_inv_sqrt(g);
    return (s * spd_log(si * symmetrize(gt) * si) * s).eval();
}

MetricField metric_exp(const MetricField& g, const std::function<Mat4(const Vec4&)>& h) {
    MetricField f;
    auto ge = g.eval;
    f.eval = [ge, h](const Vec4& x) { return metric_exp_point(ge(x), h(x)); };
    f.domain = g.domain;
    f.id = g.id + "*e^h";
    f.fd_step = g.fd_step;
    return f;
}

Vec4 j_covector(const Mat4& g, const Mat4& J, const Vec4& a) {
    return g * (J * g.inverse() * a);
}

}  // namespace curvforge
