#include "curvforge/torus.hpp"

namespace curvforge {

TorusManifold TorusManifold::flat(double period) {
    TorusManifold t;
    t.period = period;
    auto dom = ChartDomain::torus(period);
    t.metric = std::make_shared<const MetricField>(euclidean_metric(dom));
    return t;
}

TorusManifold TorusManifold::perturbed(double period, std::function<Mat4(const Vec4&)> h0) {
    TorusManifold t;
    t.period = period;
    t.h0 = std::move(h0);
    auto dom = ChartDomain::torus(period);
    auto h = t.h0;
    MetricField f;
    f.domain = dom;
    f.id = "torus-perturbed";
    f.eval = [h](const Vec4& x) { return metric_exp_point(Mat4::Identity(), h(x)); };
    t.metric = std::make_shared<const MetricField>(std::move(f));
    return t;
}

FreezeMetric freeze_metric(const TorusManifold& torus, const Vec4& p) {
    FreezeMetric fm;
    fm.p = torus.metric->domain.canonical(p);
    fm.gp = torus.metric->eval(fm.p);
    fm.field = constant_metric(fm.gp, torus.metric->domain, "frozen");
    return fm;
}

Mat4 darboux_frame(const Mat4& gp, const SymplecticForm& w) {
    Mat4 J = canonical_J(gp, w);
    auto unit = [&](const Vec4& v) { return (v / std::sqrt(v.dot(gp * v))).eval(); };
    Vec4 e1 = unit(Vec4(1, 0, 0, 0));
    Vec4 e2 = J * e1;
    // Gram-Schmidt a third direction against span(e1, e2) in gp
    Vec4 seed(0, 0, 1, 0);
    Vec4 u = seed - seed.dot(gp * e1) * e1 - seed.dot(gp * e2) * e2;
    if (u.norm() < 1e-8) {
        seed = Vec4(0, 0, 0, 1);
        u = seed - seed.dot(gp * e1) * e1 - seed.dot(gp * e2) * e2;
    }
    Vec4 e3 = unit(u);
    Vec4 e4 = J * e3;
    Mat4 E;
    E.col(0) = e1;
    E.col(1) = e2;
    E.col(2) = e3;
    E.col(3) = e4;
    return E;
}

}  // namespace curvforge
