#include "curvforge/deform.hpp"

#include "curvforge/parallel.hpp"

#include <cmath>
#include <random>

namespace curvforge {

namespace {
constexpr double kNoopY = 1e-40;  // below this the correction is lost in rounding anyway
}

MetricField deform(const std::shared_ptr<const CoframeField>& cf, const DeformParams& params) {
    params.validate();
    CutoffPair cut{params};
    MetricField base = cf->metric_ptr() ? MetricField(*cf->metric_ptr()) : MetricField{};

    MetricField f;
    f.domain = base.domain;
    f.id = base.id + "/deformed";
    f.fd_step = base.fd_step;
    f.eval = [cf, cut](const Vec4& x) -> Mat4 {
        const MetricField& g = cf->metric();
        DistanceAndGradient d = cf->dist(x);
        if (!cut.supported(d.r)) return g.eval(x);
        double Y = cut.Y(d.r);
        if (Y <= kNoopY) return g.eval(x);
        CoframeBasis b = cf->basis(x);
        Vec4 w1 = b.W.row(0), w2 = b.W.row(1);
        double A = 1.0 / (1.0 + Y) - 1.0;
        Mat4 out = g.eval(x);
        out += A * (w1 * w1.transpose()) + Y * (w2 * w2.transpose());
        return out;
    };
    f.deriv = [cf, cut](const Vec4& x, int a) -> Mat4 {
        const MetricField& g = cf->metric();
        DistanceAndGradient d = cf->dist(x);
        if (!cut.supported(d.r)) return g.d(x, a);
        double Y = cut.Y(d.r);
        if (Y <= kNoopY) return g.d(x, a);
        double Yp = cut.dY(d.r);
        CoframeJet j = cf->jet(x);
        Vec4 w1 = j.W.row(0), w2 = j.W.row(1);
        Vec4 dw1 = j.dW[a].row(0), dw2 = j.dW[a].row(1);
        double A = 1.0 / (1.0 + Y) - 1.0;
        double Ap = -1.0 / ((1.0 + Y) * (1.0 + Y));  // dA/dY
        double dYa = Yp * d.dr[a];
        Mat4 out = g.d(x, a);
        out += (Ap * dYa) * (w1 * w1.transpose()) +
               A * (dw1 * w1.transpose() + w1 * dw1.transpose());
        out += dYa * (w2 * w2.transpose()) + Y * (dw2 * w2.transpose() + w2 * dw2.transpose());
        return out;
    };
    return f;
}

double deform_scalar_diff(const CoframeField& cf, const DeformParams& params, const Vec4& x,
                          const ConnectionOptions& copts) {
    CutoffPair cut{params};
    DistanceAndGradient d = cf.dist(x);
    double Y = cut.Y(d.r);
    if (Y == 0.0) return 0.0;
    ConnectionCoeffs c = connection_coeffs(cf, x, copts);
    return scalar_diff(c, Y, cut.dY(d.r), cut.d2Y(d.r));
}

double deform_scalar_formula(const CoframeField& cf, const DeformParams& params, const Vec4& x,
                             const ConnectionOptions& copts) {
    CutoffPair cut{params};
    DistanceAndGradient d = cf.dist(x);
    ConnectionCoeffs c = connection_coeffs(cf, x, copts);
    return scalar_formula(c, cut.Y(d.r), cut.dY(d.r), cut.d2Y(d.r));
}

namespace {

// deterministic direction sampler on S^3
Vec4 random_direction(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vec4 v;
    do {
        for (int i = 0; i < 4; ++i) v[i] = n(rng);
    } while (v.norm() < 1e-8);
    return v / v.norm();
}

}  // namespace

DiffusionReport diffusion_check(const CoframeField& cf, const DeformParams& params,
                                const DiffusionCheckOptions& opts) {
    params.validate();
    DiffusionReport rep;
    rep.inner_equality.clause = "i: identical on B_{c-b-eps}";
    rep.nonincrease.clause = "ii: s-difference <= 0 outside B_{c-b}";
    rep.decrease.clause = "iii: s-difference <= -s e^{-d/a} on B_{c-a} \\ B_{c-b}";

    auto cfp = std::make_shared<CoframeField>(cf);
    MetricField def = deform(cfp, params);
    const MetricField& g = cf.metric();
    const Vec4 p = cf.base_point();

    std::mt19937_64 rng(opts.seed);
    const double inner_r = params.c - params.b - params.eps;

    // (i) bit-exact equality strictly inside the dead zone
    {
        std::uniform_real_distribution<double> ur(1e-6, inner_r * 0.999);
        double worst = 0.0;
        for (int i = 0; i < opts.inner_samples; ++i) {
            Vec4 x = p + ur(rng) * random_direction(rng);
            Mat4 diff = def.eval(x) - g.eval(x);
            worst = std::max(worst, diff.cwiseAbs().maxCoeff());
        }
        rep.inner_equality.samples = opts.inner_samples;
        rep.inner_equality.margin = worst;
        rep.inner_equality.pass = (worst == 0.0);
    }

    // (ii) and (iii) through the closed difference formula; samples are
    // placed by euclidean radius, which tracks r_g for near-euclidean bases
    double outer = opts.outer_radius > 0.0 ? opts.outer_radius : params.c + 2.0;
    const double bound3 = -params.s * std::exp(-params.d / params.a);
    std::vector<Vec4> pts(opts.annulus_samples);
    {
        std::uniform_real_distribution<double> ur(params.c - params.b, outer);
        for (auto& x : pts) x = p + ur(rng) * random_direction(rng);
    }
    std::vector<double> sdif(pts.size()), rg(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
        rg[i] = cf.dist(pts[i]).r;
        sdif[i] = deform_scalar_diff(cf, params, pts[i], opts.copts);
    });
    rep.nonincrease.margin = -1e300;
    rep.decrease.margin = -1e300;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (rg[i] <= params.c - params.b) continue;
        ++rep.nonincrease.samples;
        double m2 = sdif[i] - opts.slack;
        if (m2 > rep.nonincrease.margin) {
            rep.nonincrease.margin = m2;
            rep.nonincrease.worst_point = pts[i];
        }
        if (rg[i] < params.c - params.a) {
            ++rep.decrease.samples;
            double m3 = sdif[i] - (bound3 + opts.slack);
            if (m3 > rep.decrease.margin) {
                rep.decrease.margin = m3;
                rep.decrease.worst_point = pts[i];
            }
        }
    }
    rep.nonincrease.pass = rep.nonincrease.margin <= 0.0;
    rep.decrease.pass = rep.decrease.margin <= 0.0;
    return rep;
}

CalibrationResult calibrate_diffusion(const CoframeField& cf, DeformParams params,
                                      const DiffusionCheckOptions& opts, int max_dyadic) {
    CalibrationResult res;
    for (int k = 0; k <= max_dyadic; ++k) {
        params.d = std::ldexp(1.0, k);
        ++res.candidates_tried;
        DiffusionReport rep = diffusion_check(cf, params, opts);
        if (rep.pass()) {
            res.d0 = params.d;
            res.found = true;
            res.report_at_d0 = rep;
            return res;
        }
    }
    return res;
}

}  // namespace curvforge
