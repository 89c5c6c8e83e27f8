// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here, not configurable.
#include "curvforge/deform.hpp"
#include "curvforge/geodesy.hpp"
#include "curvforge/island.hpp"
#include "curvforge/manifest.hpp"
#include "curvforge/oracle.hpp"
#include "curvforge/parallel.hpp"
#include "curvforge/surgery.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

using namespace curvforge;

namespace {

struct Criterion {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int num, const std::string& name, const Criterion& c) {
    std::printf("[%s] C%-2d %-28s %s\n", c.pass ? "PASS" : "FAIL", num, name.c_str(),
                c.detail.c_str());
    std::fflush(stdout);
    if (!c.pass) ++failures;
}

std::string fmt(double v) { return format_number(v); }

// shared fixtures
const BumpProfile& profile() {
    static BumpProfile p = make_profile();
    return p;
}

std::shared_ptr<const BiaxialProfile> biaxial() {
    static auto bp = std::make_shared<const BiaxialProfile>(build_FH(profile(), profile()));
    return bp;
}

std::shared_ptr<const MetricField> island_field() {
    static auto g = std::make_shared<const MetricField>(island_metric(biaxial()));
    return g;
}

GeodesyOptions island_geodesy() {
    GeodesyOptions o;
    o.step_length = 0.0125;
    return o;
}

Vec4 island_base_point() {
    double r1 = biaxial()->r_criticals()[0];
    return Vec4(r1 / 50.0, 0.0, r1 / 50.0, 0.0);
}

DeformParams section5_params() {
    double r1 = biaxial()->r_criticals()[0];
    DeformParams par;
    par.c = 1.0;
    par.a = 0.01;
    par.b = 1.0 - r1 / 200.0;
    par.eps = r1 / 600.0;
    par.s = 1.0;
    return par;
}

GMinusResult& gminus() {
    static GMinusResult gm = [] {
        GMinusOptions opts;
        opts.negativity_samples_per_axis = 6;
        return build_gminus(biaxial(), opts);
    }();
    return gm;
}

Criterion c1_oracle_agreement() {
    auto t0 = std::chrono::steady_clock::now();
    auto bp = biaxial();
    MetricField g = *island_field();
    const int n = 20;
    std::vector<double> worst_rel(n * n, 0.0), worst_abs(n * n, 0.0);
    parallel_for(static_cast<std::size_t>(n) * n, [&](std::size_t idx) {
        int i = static_cast<int>(idx) / n, j = static_cast<int>(idx) % n;
        double r = (i + 0.5) / n, rho = (j + 0.5) / n;
        Vec4 x(r * std::cos(0.37), r * std::sin(0.37), rho * std::cos(1.41),
               rho * std::sin(1.41));
        double sc = closed_scalar(*bp, r, rho);
        double sn = scalar_numeric_value(g, x);
        double ad = std::abs(sn - sc);
        if (std::abs(sc) >= 1e-4)
            worst_rel[idx] = ad / std::abs(sc);
        else
            worst_abs[idx] = ad;
    });
    double wr = 0.0, wa = 0.0;
    for (double v : worst_rel) wr = std::max(wr, v);
    for (double v : worst_abs) wa = std::max(wa, v);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Criterion c;
    c.pass = wr < 1e-4 && wa < 1e-8 && secs < 60.0;
    c.detail = "rel " + fmt(wr) + ", abs " + fmt(wa) + ", " + fmt(secs) + " s";
    return c;
}

Criterion c2_sign_pattern() {
    SignPatternReport rep = sign_pattern_check(*biaxial(), 100);
    Criterion c;
    c.pass = rep.zero_loci_ok && rep.lattice_ok && rep.negative_ok;
    c.detail = "worst zero-locus |s| " + fmt(rep.worst_zero) + ", worst interior s " +
               fmt(rep.worst_negative);
    return c;
}

Criterion c3_pde_residual() {
    auto bp = biaxial();
    double worst = 0.0;
    for (int i = 1; i <= 50; ++i)
        for (int j = 1; j <= 50; ++j)
            worst = std::max(worst, std::abs(bp->pde_residual(i / 51.0, j / 51.0)));
    Criterion c;
    c.pass = worst < 1e-8;
    c.detail = "max residual " + fmt(worst);
    return c;
}

Criterion c4_profile_invariants() {
    const BumpProfile& p = profile();
    bool a_ok = p.p(-0.1) == 0.0 && p.p(0.0) == 0.0 && p.p(1.0) == 0.0 && p.p(1.2) == 0.0;
    double amax = 0.0;
    for (int i = 1; i < 100000; ++i) amax = std::max(amax, std::abs(p.alpha(i / 100000.0)));
    bool b_ok = amax <= 0.2 + 1e-12;
    bool c_ok = std::abs(p.zero_mean_residual()) < 1e-10;
    bool d_ok = true;
    for (int i = 1; i < 1000 && d_ok; ++i) {
        double P = p.P_exact(i * 1e-3);
        d_ok = P > 0.0 && P < 1.0;
    }
    int ncrit = p.count_alpha_criticals();
    Criterion c;
    c.pass = a_ok && b_ok && c_ok && d_ok && ncrit == 3;
    std::ostringstream os;
    os << "a)" << (a_ok ? "ok" : "BAD") << " b)max|a|=" << fmt(amax) << " c)res="
       << fmt(p.zero_mean_residual()) << " d)" << (d_ok ? "ok" : "BAD") << " criticals=" << ncrit;
    c.detail = os.str();
    return c;
}

Criterion c5_coefficient_table() {
    ChartDomain dom = ChartDomain::ball(Vec4::Zero(), 1e4);
    auto g0 = std::make_shared<const MetricField>(euclidean_metric(dom));
    CoframeField flat_cf(g0, SymplecticForm::standard(), Vec4::Zero(),
                         frozen_dist_field(Mat4::Identity(), Vec4::Zero(), dom));
    std::mt19937_64 rng(41);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<double> table_err(100);
    parallel_for(table_err.size(), [&](std::size_t i) {
        std::mt19937_64 r(100 + i);
        std::normal_distribution<double> n2(0.0, 1.0);
        Vec4 v(n2(r), n2(r), n2(r), n2(r));
        v.normalize();
        Vec4 x = (0.4 + 3.0 * i / 100.0) * v;
        ConnectionCoeffs c = connection_coeffs(flat_cf, x);
        ConnectionCoeffs ref = euclidean_connection(x.norm());
        double w = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int k = 0; k < 4; ++k)
                    w = std::max(w, std::abs(c.a[a][b][k] - ref.a[a][b][k]));
        table_err[i] = w;
    });
    double werr = 0.0;
    for (double v : table_err) werr = std::max(werr, v);

    // Lemma 3.3 bounds on the island at 1000 samples
    auto g = island_field();
    Vec4 p = island_base_point();
    CoframeField cf(g, SymplecticForm::standard(), p, shooting_dist_field(g, p, island_geodesy()));
    std::vector<char> ok(1000, 1);
    std::vector<double> ratio(1000, 0.0);
    parallel_for(ok.size(), [&](std::size_t i) {
        std::mt19937_64 r(500 + i);
        std::normal_distribution<double> n2(0.0, 1.0);
        Vec4 v(n2(r), n2(r), n2(r), n2(r));
        v.normalize();
        std::uniform_real_distribution<double> rad(0.1, 3.5);
        Vec4 x = p + rad(r) * v;
        ConnectionCoeffs c = connection_coeffs(cf, x);
        double rg = cf.dist(x).r;
        ratio[i] = std::max(c.max_abs() * rg / 2.0, c.max_abs_deriv() * rg * rg / 2.0);
        ok[i] = ratio[i] < 1.0;
    });
    bool bounds_ok = true;
    double wratio = 0.0;
    for (std::size_t i = 0; i < ok.size(); ++i) {
        bounds_ok = bounds_ok && ok[i];
        wratio = std::max(wratio, ratio[i]);
    }
    Criterion c;
    c.pass = werr < 1e-6 && bounds_ok;
    c.detail = "table err " + fmt(werr) + ", bound ratio " + fmt(wratio);
    return c;
}

ConnectionCoeffs random_coeffs_for_identities(std::mt19937_64& r) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    ConnectionCoeffs c;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = 0; k < 4; ++k) c.a[i][j][k] = u(r);
    for (int j = 1; j < 4; ++j) {
        c.a[0][j][0] = 0.0;
        for (int k = j; k < 4; ++k) {
            double v = u(r);
            c.a[0][j][k] = v;
            if (k != j) c.a[0][k][j] = v;
        }
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                if (i > j) c.a[i][j][k] = -c.a[j][i][k];
    for (int i = 0; i < 4; ++i) c.a[i][i][0] = c.a[i][i][1] = c.a[i][i][2] = c.a[i][i][3] = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) {
                    c.aD[i][j][k][l] = u(r);
                    c.aD[j][i][k][l] = -c.aD[i][j][k][l];
                }
    for (int j = 1; j < 4; ++j)
        for (int l = 0; l < 4; ++l) {
            c.aD[0][j][0][l] = c.aD[j][0][0][l] = 0.0;
            for (int k = j; k < 4; ++k) {
                double v = 0.5 * (c.aD[0][j][k][l] + c.aD[0][k][j][l]);
                c.aD[0][j][k][l] = c.aD[0][k][j][l] = v;
                c.aD[j][0][k][l] = c.aD[k][0][j][l] = -v;
            }
        }
    return c;
}

Criterion c6_algebraic_identities() {
    std::mt19937_64 r(20240615);
    std::uniform_real_distribution<double> yu(0.0, 1.0), wu(-2.0, 2.0), au(0.6, 1.6),
        du(-1.0, 1.0);
    double worst_diff = 0.0, worst_app = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        ConnectionCoeffs c = random_coeffs_for_identities(r);
        double Y = yu(r), Yp = wu(r), Ypp = wu(r);
        worst_diff = std::max(worst_diff,
                              std::abs(scalar_diff(c, Y, Yp, Ypp) -
                                       (scalar_formula(c, Y, Yp, Ypp) -
                                        scalar_formula(c, 0.0, 0.0, 0.0))));
        double al = au(r), alp = du(r), alpp = du(r);
        double Ya = 1.0 / (al * al) - 1.0;
        double Ypa = -2.0 * alp / (al * al * al);
        double Yppa = -2.0 * alpp / (al * al * al) + 6.0 * alp * alp / (al * al * al * al);
        double ref = scalar_formula(c, Ya, Ypa, Yppa);
        TildeCurvature tc = tilde_curvature(tilde_coeffs(c, al, alp, alpp));
        worst_app = std::max(worst_app, std::abs(tc.scalar - ref));
        worst_app = std::max(worst_app, std::abs(tc.scalar_display - ref));
    }
    Criterion c;
    c.pass = worst_diff < 1e-9 && worst_app < 1e-9;
    c.detail = "difference identity " + fmt(worst_diff) + ", appendix assembly " + fmt(worst_app);
    return c;
}

Criterion c7_diffusion_clauses() {
    auto g = island_field();
    Vec4 p = island_base_point();
    CoframeField cf(g, SymplecticForm::standard(), p, shooting_dist_field(g, p, island_geodesy()));
    DeformParams par = section5_params();

    DiffusionCheckOptions scan_opts;
    scan_opts.annulus_samples = 600;
    scan_opts.inner_samples = 100;
    scan_opts.outer_radius = 1.6;
    CalibrationResult cal = calibrate_diffusion(cf, par, scan_opts, 10);
    Criterion c;
    if (!cal.found) {
        c.pass = false;
        c.detail = "no decay rate found in the dyadic scan";
        return c;
    }
    par.d = cal.d0;
    DiffusionCheckOptions full;
    full.annulus_samples = 10000;
    full.inner_samples = 500;
    full.outer_radius = 1.6;
    DiffusionReport rep = diffusion_check(cf, par, full);
    c.pass = rep.pass();
    c.detail = "d0 " + fmt(cal.d0) + ", clause margins (i) " + fmt(rep.inner_equality.margin) +
               " (ii) " + fmt(rep.nonincrease.margin) + " (iii) " + fmt(rep.decrease.margin);
    return c;
}

Criterion c8_gminus() {
    GMinusResult& gm = gminus();
    auto bp = biaxial();
    const DeformParams par = gm.params;

    // negativity on the 20^4 lattice of {|x| < 0.9} through the closed form
    // plus a certified bound on the diffusion correction
    const int n = 20;
    const double step = 1.8 / n;
    std::vector<Vec4> pts;
    for (int i0 = 0; i0 < n; ++i0)
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int i3 = 0; i3 < n; ++i3) {
                    Vec4 x(-0.9 + (i0 + 0.5) * step, -0.9 + (i1 + 0.5) * step,
                           -0.9 + (i2 + 0.5) * step, -0.9 + (i3 + 0.5) * step);
                    if (x.norm() < 0.9) pts.push_back(x);
                }

    auto gptr = std::make_shared<const MetricField>(gm.base_island);
    auto cf = std::make_shared<CoframeField>(gptr, SymplecticForm::standard(), gm.base_point,
                                             shooting_dist_field(gptr, gm.base_point,
                                                                 island_geodesy()));
    FCut fc{par.d, par.s};
    double h1s = HCut::step_d1_sup() / par.eps;
    double h2s = HCut::step_d2_sup() / (par.eps * par.eps);
    auto envelope = [&](double rg) {
        double t = par.c - rg;
        if (t <= 0.0) return 0.0;
        double Yb = fc.value(t);
        double Ypb = h1s * Yb + fc.d1(t);
        double Yppb = h2s * Yb + 2.0 * h1s * fc.d1(t) + fc.d2(t);
        return Yppb + Ypb * 14.0 / rg + Yb * 160.0 / (rg * rg);
    };

    std::vector<int> verdicts(pts.size(), 0);  // 0 bad, 1 envelope, 2 exact formula
    parallel_for(pts.size(), [&](std::size_t i) {
        const Vec4& x = pts[i];
        double r = std::hypot(x[0], x[1]);
        double rho = std::hypot(x[2], x[3]);
        double sc = closed_scalar(*bp, r, rho);
        // distance bracket around the euclidean value (C0 deviation is tiny)
        double de = (x - gm.base_point).norm();
        double env = std::max(envelope(de * 0.999), envelope(de * 1.001));
        if (sc + env < 0.0) {
            verdicts[i] = 1;
            return;
        }
        double sd = deform_scalar_diff(*cf, par, x);
        verdicts[i] = (sc + sd < 0.0) ? 2 : 0;
    });
    std::size_t bad = 0, exact = 0;
    for (int v : verdicts) {
        if (v == 0) ++bad;
        if (v == 2) ++exact;
    }

    // bit-equality to the euclidean metric beyond 1.5 and compatibility inside
    std::mt19937_64 rng(61);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::uniform_real_distribution<double> ur(1.55, 3.0);
    double far_err = 0.0;
    std::vector<Vec4> far;
    for (int i = 0; i < 2000; ++i) {
        Vec4 v(nd(rng), nd(rng), nd(rng), nd(rng));
        v.normalize();
        far.push_back(ur(rng) * v);
    }
    std::vector<double> far_errs(far.size());
    parallel_for(far.size(), [&](std::size_t i) {
        far_errs[i] = (gm.field.eval(far[i]) - Mat4::Identity()).cwiseAbs().maxCoeff();
    });
    for (double e : far_errs) far_err = std::max(far_err, e);

    std::vector<double> compat(1000);
    parallel_for(compat.size(), [&](std::size_t i) {
        std::mt19937_64 r(900 + i);
        std::uniform_real_distribution<double> u(-1.4, 1.4);
        Vec4 x(u(r), u(r), u(r), u(r));
        compat[i] = compat_residual(gm.field.eval(x), SymplecticForm::standard());
    });
    double wc = 0.0;
    for (double v : compat) wc = std::max(wc, v);

    Criterion c;
    c.pass = bad == 0 && far_err == 0.0 && wc < 1e-9;
    std::ostringstream os;
    os << pts.size() << " core samples, " << bad << " nonneg (exact-route " << exact
       << "), far-field err " << fmt(far_err) << ", compat " << fmt(wc) << ", d0 " << fmt(gm.d0)
       << ", s0 " << fmt(gm.s0);
    c.detail = os.str();
    return c;
}

Criterion c9_net() {
    TorusManifold torus = TorusManifold::flat(18.0);
    NetOptions opts;
    opts.covering_grid_n = 50;
    CoveringNet net = build_net(torus, opts);
    const ChartDomain dom = torus.metric->domain;
    bool color_ok = true;
    auto classes = net.classes();
    for (const auto& cls : classes)
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (dom.distance_flat(net.centers[cls[i]], net.centers[cls[j]]) <= 20.0)
                    color_ok = false;
    double slack = 18.0 / opts.covering_grid_n;
    Criterion c;
    c.pass = net.min_pairwise > 5.0 && net.covering_radius_grid <= 5.0 + slack && color_ok;
    std::ostringstream os;
    os << net.centers.size() << " centers, kappa " << net.num_colors << ", separation "
       << fmt(net.min_pairwise) << ", covering " << fmt(net.covering_radius_grid);
    c.detail = os.str();
    return c;
}

Criterion c10_pipeline() {
    auto t0 = std::chrono::steady_clock::now();
    PipelineConfig cfg;
    cfg.period = 18.0;
    cfg.net.covering_grid_n = 24;
    cfg.island.negativity_samples_per_axis = 6;
    cfg.verdict_grid_n = 10;
    cfg.verdict_extra_samples = 4000;
    PipelineResult res = run_pipeline(cfg);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Criterion c;
    bool time_ok = secs < 1800.0;
    c.pass = res.verdict.pass && res.verdict.margin_c1 > 0.0 && time_ok &&
             res.verdict.worst_compat < 1e-9;
    std::ostringstream os;
    os << res.net.centers.size() << " islands, kappa " << res.iteration.kappa << ", d0 "
       << fmt(res.pipeline_d0) << ", max s " << fmt(res.verdict.max_s) << ", margin "
       << fmt(res.verdict.margin_c1) << ", compat " << fmt(res.verdict.worst_compat) << ", "
       << fmt(secs) << " s";
    c.detail = os.str();
    return c;
}

Criterion c11_geodesy() {
    ChartDomain dom = ChartDomain::ball(Vec4::Zero(), 1e4);
    MetricField g0 = euclidean_metric(dom);
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> u(-2.0, 2.0);

    double flat_err = 0.0;
    for (int i = 0; i < 100; ++i) {
        Vec4 p(u(rng), u(rng), u(rng), u(rng)), v(u(rng), u(rng), u(rng), u(rng));
        flat_err = std::max(flat_err, (exp_map(g0, p, v) - (p + v)).norm());
        flat_err = std::max(flat_err, (log_map(g0, p, p + v).v - v).norm());
    }

    // round trips on a gently curved metric
    auto phi = [](const Vec4& x) { return 5e-3 * std::sin(0.2 * x[0]) * std::cos(0.15 * x[1]); };
    auto grad = [](const Vec4& x) {
        return Vec4(1e-3 * std::cos(0.2 * x[0]) * std::cos(0.15 * x[1]),
                    -7.5e-4 * std::sin(0.2 * x[0]) * std::sin(0.15 * x[1]), 0.0, 0.0);
    };
    MetricField g = conformal_metric(phi, grad, dom);
    double rt_err = 0.0;
    for (int i = 0; i < 100; ++i) {
        Vec4 p(u(rng), u(rng), u(rng), u(rng));
        Vec4 v(u(rng), u(rng), u(rng), u(rng));
        if (v.norm() > 5.0) v *= 5.0 / v.norm();
        rt_err = std::max(rt_err, (log_map(g, p, exp_map(g, p, v)).v - v).norm());
    }

    // two-sided distance bounds at 1000 pairs per epsilon
    bool bounds_ok = true;
    for (double eps : {1e-2, 1e-3}) {
        auto phe = [eps](const Vec4& x) {
            return 0.45 * eps * std::sin(0.2 * x[0]) * std::cos(0.15 * x[1] + 0.1 * x[3]);
        };
        auto gre = [eps](const Vec4& x) {
            double c = std::cos(0.2 * x[0]), s = std::sin(0.2 * x[0]);
            double cc = std::cos(0.15 * x[1] + 0.1 * x[3]), ss = std::sin(0.15 * x[1] + 0.1 * x[3]);
            return Vec4(0.45 * eps * 0.2 * c * cc, -0.45 * eps * 0.15 * s * ss, 0.0,
                        -0.45 * eps * 0.1 * s * ss);
        };
        MetricField ge = conformal_metric(phe, gre, dom);
        std::vector<char> ok(1000, 1);
        parallel_for(ok.size(), [&](std::size_t i) {
            std::mt19937_64 r(3000 + i);
            std::uniform_real_distribution<double> uu(-3.0, 3.0);
            Vec4 a(uu(r), uu(r), uu(r), uu(r)), b(uu(r), uu(r), uu(r), uu(r));
            if ((a - b).norm() < 1e-2) {
                ok[i] = 1;
                return;
            }
            double d0 = (a - b).norm();
            double dg = dist(ge, a, b);
            ok[i] = dg >= std::sqrt(1.0 - eps) * d0 * (1 - 1e-9) &&
                    dg <= std::sqrt(1.0 + eps) * d0 * (1 + 1e-9);
        });
        for (char o : ok) bounds_ok = bounds_ok && o;
    }

    // linear-in-lambda scaling of the exp-map deviation over three decades
    Vec4 p(0.3, -0.2, 0.1, 0.4);
    std::vector<Vec4> dirs;
    for (int i = 0; i < 12; ++i) {
        Vec4 v(u(rng), u(rng), u(rng), u(rng));
        dirs.push_back(v.normalized());
    }
    double sups[3];
    int si = 0;
    for (double lam : {1e-2, 1e-3, 1e-4}) {
        auto ph = [lam](const Vec4& x) {
            return lam * std::sin(0.2 * x[0]) * std::cos(0.15 * x[1]);
        };
        auto gr = [lam](const Vec4& x) {
            return Vec4(lam * 0.2 * std::cos(0.2 * x[0]) * std::cos(0.15 * x[1]),
                        -lam * 0.15 * std::sin(0.2 * x[0]) * std::sin(0.15 * x[1]), 0.0, 0.0);
        };
        MetricField gl = conformal_metric(ph, gr, dom);
        double sup = 0.0;
        for (const Vec4& d : dirs)
            for (double len : {1.0, 2.0, 4.0})
                sup = std::max(sup, (exp_map(gl, p, (len * d).eval()) - (p + len * d)).norm());
        sups[si++] = sup;
    }
    bool scaling_ok = true;
    for (int i = 0; i + 1 < 3; ++i) {
        double slope = sups[i] / sups[i + 1];
        if (slope < 5.0 || slope > 20.0) scaling_ok = false;
    }

    Criterion c;
    c.pass = flat_err < 1e-13 && rt_err < 1e-9 && bounds_ok && scaling_ok;
    c.detail = "flat " + fmt(flat_err) + ", roundtrip " + fmt(rt_err) + ", bounds " +
               std::string(bounds_ok ? "ok" : "BAD") + ", scaling " +
               fmt(sups[0] / sups[1]) + "/" + fmt(sups[1] / sups[2]);
    return c;
}

Criterion c12_determinism() {
    auto run_once = [] {
        RunManifest m("determinism-probe");
        RunConfig cfg = RunConfig::from_string("seed = 9\ngrid = 8\n");
        m.echo_config(cfg);
        TorusManifold torus = TorusManifold::flat(18.0);
        NetOptions nopts;
        nopts.covering_grid_n = 10;
        nopts.seed = cfg.get_unsigned("seed", 0);
        CoveringNet net = build_net(torus, nopts);
        m.set("centers", static_cast<int>(net.centers.size()));
        m.set("kappa", net.num_colors);
        m.set("min_pairwise", net.min_pairwise);
        m.set("covering", net.covering_radius_grid);
        const BumpProfile& p = profile();
        m.set("r1", p.criticals()[0]);
        m.set("r2", p.criticals()[1]);
        m.set("r3", p.criticals()[2]);
        std::ostringstream csv;
        for (int i = 1; i < 100; ++i) {
            double y = i / 100.0;
            csv << format_number(y) << ',' << format_number(p.alpha(y)) << '\n';
        }
        return m.to_string() + csv.str();
    };
    std::string a = run_once();
    std::string b = run_once();
    Criterion c;
    c.pass = (a == b);
    c.detail = c.pass ? "byte-identical manifests and csv" : "outputs differ";
    return c;
}

}  // namespace

int main() {
    std::printf("curvforge acceptance suite\n");
    report(1, "oracle-agreement-island", c1_oracle_agreement());
    report(2, "sign-pattern", c2_sign_pattern());
    report(3, "pde-residual", c3_pde_residual());
    report(4, "profile-invariants", c4_profile_invariants());
    report(5, "coefficient-table", c5_coefficient_table());
    report(6, "algebraic-identities", c6_algebraic_identities());
    report(7, "diffusion-clauses", c7_diffusion_clauses());
    report(8, "modified-island", c8_gminus());
    report(9, "covering-net", c9_net());
    report(10, "pipeline-negativity", c10_pipeline());
    report(11, "geodesy", c11_geodesy());
    report(12, "determinism", c12_determinism());
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
