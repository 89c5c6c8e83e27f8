#include "curvforge/surgery.hpp"

#include "curvforge/parallel.hpp"

#include <cmath>
#include <random>

namespace curvforge {

void PipelineConfig::validate() const {
    deform.validate();
    if (period < 2.0 * deform.c)
        throw std::invalid_argument(
            "pipeline: torus period must exceed twice the deformation radius (wrap gate)");
    if (verdict_grid_n < 4) throw std::invalid_argument("pipeline: verdict grid too coarse");
}

namespace {

// eta == 0 for r < 1.7, == 1 for r >= 1.8, smooth in between (reversed step)
double eta_cut(double r) { return 1.0 - HCut::step((r - 1.7) / 0.1); }

}  // namespace

MetricField embed_islands(const TorusManifold& torus, const CoveringNet& net,
                          const GMinusResult& gm) {
    const ChartDomain dom = torus.metric->domain;
    auto base = torus.metric;
    const SymplecticForm w = torus.omega;

    // per-center Darboux frames of the frozen metrics
    struct Site {
        Vec4 p;
        Mat4 M;   // x-offset -> island coordinates, M = E^{-1}
        Mat4 Mt;  // M^T
    };
    auto sites = std::make_shared<std::vector<Site>>();
    for (const Vec4& p : net.centers) {
        Mat4 gp = base->eval(p);
        Mat4 E = darboux_frame(gp, w);
        Site s;
        s.p = p;
        s.M = E.inverse();
        s.Mt = s.M.transpose();
        sites->push_back(s);
    }

    auto gminus = std::make_shared<MetricField>(gm.field);

    MetricField f;
    f.domain = dom;
    f.id = "gA";
    f.eval = [dom, base, sites, gminus](const Vec4& x) -> Mat4 {
        // separation > 5 makes at most one 2-ball active
        for (const auto& s : *sites) {
            Vec4 off = dom.difference(x, s.p);
            if (off.norm() >= 2.0) continue;
            Vec4 z = s.M * off;
            Mat4 pulled = s.Mt * gminus->eval(z) * s.M;
            double r = off.norm();  // flat base: r_{m^2 g} is the wrapped norm
            double e = eta_cut(r);
            if (e <= 0.0) return pulled;
            Mat4 gb = base->eval(x);
            if ((pulled - gb).cwiseAbs().maxCoeff() == 0.0) return gb;
            Mat4 h = metric_log_point(pulled, gb);
            return metric_exp_point(pulled, (e * h).eval());
        }
        return base->eval(x);
    };
    return f;
}

IterationResult iterate_deform(const TorusManifold& torus, const CoveringNet& net,
                               const MetricField& gA, const DeformParams& params) {
    params.validate();
    IterationResult out;
    out.kappa = net.num_colors;
    auto classes = net.classes();
    const ChartDomain dom = torus.metric->domain;
    const SymplecticForm w = torus.omega;
    CutoffPair cut{params};

    auto current = std::make_shared<const MetricField>(gA);
    for (int cls = 0; cls < net.num_colors; ++cls) {
        const std::vector<int>& members = classes[cls];
        // disjointness gate: pairwise wrapped distance > 2 c
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                double dij = dom.distance_flat(net.centers[members[i]], net.centers[members[j]]);
                if (dij <= 2.0 * params.c)
                    throw surgery_error("iterate_deform: deformation balls overlap in class " +
                                        std::to_string(cls));
            }

        // coframes per member, against the frozen base metric's distance
        auto coframes = std::make_shared<std::vector<CoframeField>>();
        for (int idx : members) {
            Vec4 p = net.centers[idx];
            Mat4 gp = torus.metric->eval(p);
            coframes->emplace_back(current, w, p, frozen_dist_field(gp, p, dom));
        }
        auto centers = std::make_shared<std::vector<Vec4>>();
        for (int idx : members) centers->push_back(net.centers[idx]);

        auto prev = current;
        MetricField next;
        next.domain = dom;
        next.id = "g(" + std::to_string(cls + 1) + ")";
        next.eval = [prev, coframes, centers, dom, cut](const Vec4& x) -> Mat4 {
            for (std::size_t k = 0; k < centers->size(); ++k) {
                DistanceAndGradient d = (*coframes)[k].dist(x);
                if (!cut.supported(d.r)) continue;
                double Y = cut.Y(d.r);
                if (Y <= 1e-40) continue;
                CoframeBasis b = (*coframes)[k].basis(x);
                Vec4 w1 = b.W.row(0), w2 = b.W.row(1);
                Mat4 out = prev->eval(x);
                out += (1.0 / (1.0 + Y) - 1.0) * (w1 * w1.transpose()) +
                       Y * (w2 * w2.transpose());
                return out;  // same-class supports are disjoint
            }
            return prev->eval(x);
        };
        next.deriv = [prev, coframes, centers, dom, cut](const Vec4& x, int a) -> Mat4 {
            for (std::size_t k = 0; k < centers->size(); ++k) {
                DistanceAndGradient d = (*coframes)[k].dist(x);
                if (!cut.supported(d.r)) continue;
                double Y = cut.Y(d.r);
                if (Y <= 1e-40) continue;
                double Yp = cut.dY(d.r);
                CoframeJet j = (*coframes)[k].jet(x);
                Vec4 w1 = j.W.row(0), w2 = j.W.row(1);
                Vec4 dw1 = j.dW[a].row(0), dw2 = j.dW[a].row(1);
                double A = 1.0 / (1.0 + Y) - 1.0;
                double Ap = -1.0 / ((1.0 + Y) * (1.0 + Y));
                double dYa = Yp * d.dr[a];
                Mat4 out = prev->d(x, a);
                out += (Ap * dYa) * (w1 * w1.transpose()) +
                       A * (dw1 * w1.transpose() + w1 * dw1.transpose());
                out += dYa * (w2 * w2.transpose()) +
                       Y * (dw2 * w2.transpose() + w2 * dw2.transpose());
                return out;
            }
            return prev->d(x, a);
        };

        IterationStep step;
        step.color_class = cls;
        step.centers = static_cast<int>(members.size());
        step.d = params.d;
        step.s = params.s;
        out.steps.push_back(step);
        current = std::make_shared<const MetricField>(std::move(next));
    }
    out.final_metric = current;
    return out;
}

VerdictReport final_verdict(const TorusManifold& torus, const CoveringNet& net,
                            const MetricField& g_final, const PipelineConfig& cfg) {
    VerdictReport rep;
    const double P = torus.period;
    std::vector<Vec4> pts;
    const int n = cfg.verdict_grid_n;
    for (int i0 = 0; i0 < n; ++i0)
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int i3 = 0; i3 < n; ++i3)
                    pts.emplace_back(P * (i0 + 0.5) / n, P * (i1 + 0.5) / n, P * (i2 + 0.5) / n,
                                     P * (i3 + 0.5) / n);
    // extra samples concentrated on island cores and deformation annuli
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    for (int k = 0; k < cfg.verdict_extra_samples; ++k) {
        const Vec4& c = net.centers[k % net.centers.size()];
        Vec4 v;
        for (int i = 0; i < 4; ++i) v[i] = nd(rng);
        v.normalize();
        double r = (k % 2 == 0) ? 1.6 * ur(rng) : 0.5 + 8.4 * ur(rng);
        pts.push_back(torus.metric->domain.canonical(c + r * v));
    }

    std::vector<double> svals(pts.size()), conv(pts.size()), compat(pts.size());
    const SymplecticForm w = torus.omega;
    parallel_for(pts.size(), [&](std::size_t i) {
        OracleValue ov = scalar_numeric(g_final, pts[i]);
        svals[i] = ov.value;
        conv[i] = ov.convergence;
        Mat4 rescaled = g_final.eval(pts[i]);  // the m^-2 rescale is the identity in
                                               // rescaled coordinates; compat against omega
        compat[i] = compat_residual(rescaled, w);
    });
    rep.samples = pts.size();
    rep.max_s = -1e300;
    rep.min_s = 1e300;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (svals[i] > rep.max_s) {
            rep.max_s = svals[i];
            rep.argmax = pts[i];
        }
        rep.min_s = std::min(rep.min_s, svals[i]);
        rep.worst_compat = std::max(rep.worst_compat, compat[i]);
        rep.worst_convergence = std::max(rep.worst_convergence, conv[i]);
    }
    rep.margin_c1 = -rep.max_s;
    rep.pass = rep.max_s < 0.0;
    return rep;
}

PipelineResult run_pipeline(const PipelineConfig& cfg) {
    cfg.validate();
    PipelineResult out;
    TorusManifold torus = TorusManifold::flat(cfg.period);
    NetOptions nopts = cfg.net;
    out.net = build_net(torus, nopts);

    auto profile = make_profile(cfg.profile);
    auto bp = std::make_shared<const BiaxialProfile>(build_FH(profile, profile));
    out.gminus = build_gminus(bp, cfg.island);

    MetricField gA = embed_islands(torus, out.net, out.gminus);

    // island core depth, measured at the embedded copies
    {
        std::vector<Vec4> core;
        std::mt19937_64 rng(cfg.seed + 2);
        std::normal_distribution<double> nd(0.0, 1.0);
        std::uniform_real_distribution<double> ur(0.05, 0.85);
        for (int k = 0; k < 400; ++k) {
            const Vec4& c = out.net.centers[k % out.net.centers.size()];
            Vec4 v;
            for (int i = 0; i < 4; ++i) v[i] = nd(rng);
            v.normalize();
            core.push_back(torus.metric->domain.canonical(c + ur(rng) * v));
        }
        std::vector<double> sv(core.size());
        parallel_for(core.size(), [&](std::size_t i) {
            sv[i] = scalar_numeric(gA, core[i]).value;
        });
        out.island_depth = *std::min_element(sv.begin(), sv.end());
    }

    DeformParams par = cfg.deform;
    if (cfg.calibrate) {
        // calibrate against the first center's coframe on g_A
        auto gAp = std::make_shared<const MetricField>(gA);
        Vec4 p = out.net.centers.front();
        Mat4 gp = torus.metric->eval(p);
        CoframeField cal(gAp, torus.omega, p, frozen_dist_field(gp, p, torus.metric->domain));
        DiffusionCheckOptions dopts;
        dopts.slack = cfg.clause_slack;
        dopts.annulus_samples = 1500;
        dopts.outer_radius = cfg.deform.c;
        CalibrationResult cr = calibrate_diffusion(cal, par, dopts, cfg.max_dyadic);
        out.pipeline_d0_found = cr.found;
        if (cr.found) {
            par.d = cr.d0;
            out.pipeline_d0 = cr.d0;
        } else {
            par.d = std::ldexp(1.0, cfg.max_dyadic);
            out.pipeline_d0 = par.d;
        }
    } else {
        out.pipeline_d0 = par.d;
        out.pipeline_d0_found = true;
    }

    out.iteration = iterate_deform(torus, out.net, gA, par);
    out.verdict = final_verdict(torus, out.net, *out.iteration.final_metric, cfg);
    return out;
}

}  // namespace curvforge
