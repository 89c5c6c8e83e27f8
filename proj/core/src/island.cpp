#include "curvforge/island.hpp"

#include "curvforge/deform.hpp"
#include "curvforge/geodesy.hpp"
#include "curvforge/parallel.hpp"
#include "curvforge/scalar_formula.hpp"

#include <cmath>
#include <random>

namespace curvforge {

BiaxialProfile::BiaxialProfile(BumpProfile p, BumpProfile k)
    : p_(std::move(p)), k_(std::move(k)) {}

BiaxialProfile build_FH(const BumpProfile& p, const BumpProfile& k) {
    return BiaxialProfile(p, k);
}

// F = 1 + beta(rho) P(r), H = 1 - alpha(r) K(rho); alpha = p'/y^3 for the
// first profile, beta = k'/y^3 for the second, P and K their weighted
// integrals.
double BiaxialProfile::F(double r, double rho) const { return 1.0 + k_.alpha(rho) * p_.P(r); }
double BiaxialProfile::H(double r, double rho) const { return 1.0 - p_.alpha(r) * k_.P(rho); }

double BiaxialProfile::F_r(double r, double rho) const { return k_.alpha(rho) * p_.p_over_y3(r); }
double BiaxialProfile::F_rr(double r, double rho) const {
    if (r <= 0.0) return 0.0;
    return k_.alpha(rho) * (p_.alpha(r) - 3.0 * p_.p_over_y3(r) / r);
}
double BiaxialProfile::F_rho(double r, double rho) const { return k_.dalpha(rho) * p_.P(r); }
double BiaxialProfile::F_rhorho(double r, double rho) const { return k_.d2alpha(rho) * p_.P(r); }

double BiaxialProfile::H_r(double r, double rho) const { return -p_.dalpha(r) * k_.P(rho); }
double BiaxialProfile::H_rr(double r, double rho) const { return -p_.d2alpha(r) * k_.P(rho); }
double BiaxialProfile::H_rho(double r, double rho) const { return -p_.alpha(r) * k_.p_over_y3(rho); }
double BiaxialProfile::H_rhorho(double r, double rho) const {
    if (rho <= 0.0) return 0.0;
    return -p_.alpha(r) * (k_.alpha(rho) - 3.0 * k_.p_over_y3(rho) / rho);
}

double BiaxialProfile::pde_residual(double r, double rho) const {
    double lhs = 0.0;
    if (r > 0.0) lhs += F_rr(r, rho) + 3.0 / r * F_r(r, rho);
    if (rho > 0.0) lhs += H_rhorho(r, rho) + 3.0 / rho * H_rho(r, rho);
    return lhs;
}

namespace {

// One R^2 block of the metric in correction form
//   I + (1/F - 1) u u^T + (F - 1) v v^T,  u = (c, s), v = (-s, c),
// assembled in D2 so values, first and second partials come out together.
void block_from(const D2& Fv, const D2& c, const D2& s, D2 out[2][2]) {
    D2 A = Fv.reciprocal() - 1.0;
    D2 B = Fv - 1.0;
    out[0][0] = 1.0 + A * c * c + B * s * s;
    out[1][1] = 1.0 + A * s * s + B * c * c;
    out[0][1] = c * s * (A - B);
    out[1][0] = out[0][1];
}

struct IslandEval {
    Mat4 g;
    std::array<Mat4, 4> dg;
    std::array<std::array<Mat4, 4>, 4> d2g;
};

constexpr double kAxisGuard = 1e-11;

IslandEval island_eval_full(const BiaxialProfile& bp, const Vec4& x) {
    IslandEval out;
    out.g.setIdentity();
    for (auto& m : out.dg) m.setZero();
    for (auto& row : out.d2g)
        for (auto& m : row) m.setZero();

    double rr = std::hypot(x[0], x[1]);
    double qq = std::hypot(x[2], x[3]);

    // Within a whisker of an axis every correction vanishes to all orders.
    if (rr > kAxisGuard) {
        D2 x1 = D2::variable(x[0], 0), x2 = D2::variable(x[1], 1);
        D2 r = d2_sqrt(x1 * x1 + x2 * x2);
        D2 c = x1 / r, s = x2 / r;
        double Fv = bp.F(rr, qq);
        // rho enters F only through beta(rho); rho as D2 in axes 2, 3
        D2 rho;
        if (qq > kAxisGuard) {
            D2 x3 = D2::variable(x[2], 2), x4 = D2::variable(x[3], 3);
            rho = d2_sqrt(x3 * x3 + x4 * x4);
        } else {
            rho = D2(qq);
        }
        double F_rrho = bp.profile_k().dalpha(qq) * bp.profile_p().p_over_y3(rr);
        D2 Fd = d2_compose2(Fv, bp.F_r(rr, qq), bp.F_rho(rr, qq), bp.F_rr(rr, qq),
                            F_rrho, bp.F_rhorho(rr, qq), r, rho);
        D2 blk[2][2];
        block_from(Fd, c, s, blk);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                out.g(i, j) = blk[i][j].v;
                for (int a = 0; a < 4; ++a) out.dg[a](i, j) = blk[i][j].g[a];
                for (int a = 0; a < 4; ++a)
                    for (int b = 0; b < 4; ++b) out.d2g[a][b](i, j) = blk[i][j].h(a, b);
            }
    }
    if (qq > kAxisGuard) {
        D2 x3 = D2::variable(x[2], 2), x4 = D2::variable(x[3], 3);
        D2 rho = d2_sqrt(x3 * x3 + x4 * x4);
        D2 c = x3 / rho, s = x4 / rho;
        double Hv = bp.H(rr, qq);
        D2 r;
        if (rr > kAxisGuard) {
            D2 x1 = D2::variable(x[0], 0), x2 = D2::variable(x[1], 1);
            r = d2_sqrt(x1 * x1 + x2 * x2);
        } else {
            r = D2(rr);
        }
        double H_rrho = -bp.profile_p().dalpha(rr) * bp.profile_k().p_over_y3(qq);
        D2 Hd = d2_compose2(Hv, bp.H_r(rr, qq), bp.H_rho(rr, qq), bp.H_rr(rr, qq),
                            H_rrho, bp.H_rhorho(rr, qq), r, rho);
        D2 blk[2][2];
        block_from(Hd, c, s, blk);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                out.g(2 + i, 2 + j) = blk[i][j].v;
                for (int a = 0; a < 4; ++a) out.dg[a](2 + i, 2 + j) = blk[i][j].g[a];
                for (int a = 0; a < 4; ++a)
                    for (int b = 0; b < 4; ++b) out.d2g[a][b](2 + i, 2 + j) = blk[i][j].h(a, b);
            }
    }
    return out;
}

}  // namespace

MetricField island_metric(const std::shared_ptr<const BiaxialProfile>& bp) {
    MetricField f;
    f.domain = ChartDomain::ball(Vec4::Zero(), 1e4);
    f.id = "island";
    f.eval = [bp](const Vec4& x) { return island_eval_full(*bp, x).g; };
    f.deriv = [bp](const Vec4& x, int a) { return island_eval_full(*bp, x).dg[a]; };
    f.deriv2 = [bp](const Vec4& x, int a, int b) { return island_eval_full(*bp, x).d2g[a][b]; };
    return f;
}

double closed_scalar(const BiaxialProfile& bp, double r, double rho) {
    double F = bp.F(r, rho), H = bp.H(r, rho);
    double bpP = bp.profile_k().dalpha(rho) * bp.profile_p().P(r);    // F_rho
    double apK = bp.profile_p().dalpha(r) * bp.profile_k().P(rho);    // -H_r
    return -(H / (2.0 * F * F)) * bpP * bpP - (F / (2.0 * H * H)) * apK * apK;
}

std::array<double, 6> closed_curv_components(const BiaxialProfile& bp, double r, double rho) {
    if (r <= 0.0 || rho <= 0.0)
        throw axis_error("closed_curv_components: polar frame undefined on an axis");
    double F = bp.F(r, rho), H = bp.H(r, rho);
    double f = 1.0 / std::sqrt(F), h = 1.0 / std::sqrt(H);
    auto dpow = [](double Fv, double d1) { return -0.5 * std::pow(Fv, -1.5) * d1; };
    auto d2pow = [](double Fv, double d1, double d2v) {
        return 0.75 * std::pow(Fv, -2.5) * d1 * d1 - 0.5 * std::pow(Fv, -1.5) * d2v;
    };
    double fr = dpow(F, bp.F_r(r, rho));
    double frr = d2pow(F, bp.F_r(r, rho), bp.F_rr(r, rho));
    double frho = dpow(F, bp.F_rho(r, rho));
    double frhorho = d2pow(F, bp.F_rho(r, rho), bp.F_rhorho(r, rho));
    double hr = dpow(H, bp.H_r(r, rho));
    double hrr = d2pow(H, bp.H_r(r, rho), bp.H_rr(r, rho));
    double hrho = dpow(H, bp.H_rho(r, rho));
    double hrhorho = d2pow(H, bp.H_rho(r, rho), bp.H_rhorho(r, rho));

    double f2 = f * f, f3 = f2 * f, f4 = f3 * f, h2 = h * h, h3 = h2 * h, h4 = h3 * h;
    // frame components, standard orientation: s = 2 * sum of these six
    double R1212 = -(-3.0 * fr / (r * f3) + 3.0 * fr * fr / f4 - frr / f3 - frho * frho / (f2 * h2));
    double R1313 = -(frhorho / (f * h2) - frho * hrho / (f * h3) + hrr / (f2 * h) - fr * hr / (f3 * h));
    double R1414 = -(-hrr / (h * f2) + (hr * fr * h + 2.0 * f * hr * hr) / (f3 * h2) +
                     frho / (rho * f * h2) - frho * hrho / (f * h3));
    double R2424 = -(-hr / (r * f2 * h) + hr * fr / (f3 * h) - frho / (rho * f * h2) +
                     frho * hrho / (f * h3));
    double R3434 = -(-3.0 * hrho / (rho * h3) - hrhorho / h3 + 3.0 * hrho * hrho / h4 -
                     hr * hr / (f2 * h2));
    double R2323 = -(-frhorho / (f * h2) + frho * (2.0 * frho * h + f * hrho) / (f2 * h3) +
                     hr / (r * f2 * h) - fr * hr / (f3 * h));
    return {R1212, R1313, R1414, R2424, R3434, R2323};
}

SignPatternReport sign_pattern_check(const BiaxialProfile& bp, int grid_n) {
    SignPatternReport rep;
    auto r_crit = bp.r_criticals();
    auto rho_crit = bp.rho_criticals();
    const double span = 1.2;
    const double band = 1e-3;
    double Sp = bp.profile_p().support();
    double Sk = bp.profile_k().support();

    auto note_zero = [&](double s, double r, double rho) {
        ++rep.checked;
        if (std::abs(s) > rep.worst_zero) rep.worst_zero = std::abs(s);
        if (std::abs(s) >= 1e-10) {
            rep.zero_loci_ok = false;
            rep.worst_point = Vec4(r, 0, rho, 0);
        }
    };

    // axes and the outside of the unit bidisk
    for (int i = 0; i <= grid_n; ++i) {
        double t = span * i / grid_n;
        note_zero(closed_scalar(bp, 0.0, t), 0.0, t);
        note_zero(closed_scalar(bp, t, 0.0), t, 0.0);
        note_zero(closed_scalar(bp, Sp + 1e-9 + t, 0.3), Sp + 1e-9 + t, 0.3);
        note_zero(closed_scalar(bp, 0.3, Sk + 1e-9 + t), 0.3, Sk + 1e-9 + t);
    }
    // the nine lattice points
    for (double ri : r_crit)
        for (double rj : rho_crit) {
            double s = closed_scalar(bp, ri, rj);
            ++rep.checked;
            if (std::abs(s) > rep.worst_zero) rep.worst_zero = std::abs(s);
            if (std::abs(s) >= 1e-10) rep.lattice_ok = false;
        }
    // strict negativity elsewhere
    rep.worst_negative = -1.0;
    for (int i = 1; i < grid_n; ++i)
        for (int j = 1; j < grid_n; ++j) {
            double r = span * i / grid_n;
            double rho = span * j / grid_n;
            if (r >= Sp - band || rho >= Sk - band) continue;
            if (r <= band || rho <= band) continue;
            bool near_lattice = false;
            for (double ri : r_crit)
                for (double rj : rho_crit)
                    if (std::abs(r - ri) < band && std::abs(rho - rj) < band) near_lattice = true;
            if (near_lattice) continue;
            double s = closed_scalar(bp, r, rho);
            ++rep.checked;
            if (s > rep.worst_negative) {
                rep.worst_negative = s;
                if (s >= 0.0) {
                    rep.negative_ok = false;
                    rep.worst_point = Vec4(r, 0, rho, 0);
                }
            }
        }
    return rep;
}

namespace {

// Conservative bound on |s(deformed) - s(base)| at a point with base distance
// r from the deformation center, using the Lemma-3.3-style coefficient
// envelopes |a| < 2/r, |a_,l| < 2/r^2.
double sdif_envelope(const DeformParams& par, double r) {
    double t = par.c - r;
    if (t <= 0.0 || r <= par.c - par.b - par.eps) return 0.0;
    FCut f{par.d, par.s};
    double h1 = HCut::step_d1_sup() / par.eps;
    double h2 = HCut::step_d2_sup() / (par.eps * par.eps);
    double Yb = f.value(t);
    double Ypb = h1 * f.value(t) + f.d1(t);
    double Yppb = h2 * f.value(t) + 2.0 * h1 * f.d1(t) + f.d2(t);
    const double c1 = 14.0, nu = 160.0;
    return Yppb + Ypb * c1 / r + Yb * nu / (r * r);
}

}  // namespace

GMinusResult build_gminus(const std::shared_ptr<const BiaxialProfile>& bp,
                          const GMinusOptions& opts) {
    const double r1 = bp->r_criticals()[0];
    GMinusResult res;
    res.base_point = Vec4(r1 / 50.0, 0.0, r1 / 50.0, 0.0);
    res.base_island = island_metric(bp);

    DeformParams par;
    par.c = 1.0;
    par.a = 0.01;
    par.b = 1.0 - r1 / 200.0;
    par.eps = r1 / 600.0;
    par.s = 1.0;

    auto gptr = std::make_shared<const MetricField>(res.base_island);
    GeodesyOptions gopts;
    gopts.step_length = 0.0125;
    auto cf = std::make_shared<CoframeField>(gptr, SymplecticForm::standard(), res.base_point,
                                             shooting_dist_field(gptr, res.base_point, gopts));

    // Negativity witnesses: a coarse interior lattice of {|x| < 0.9} plus a
    // shell of points near the base point, where the scan is tightest.
    std::vector<Vec4> witnesses;
    {
        int n = opts.negativity_samples_per_axis;
        for (int i0 = 0; i0 < n; ++i0)
            for (int i1 = 0; i1 < n; ++i1)
                for (int i2 = 0; i2 < n; ++i2)
                    for (int i3 = 0; i3 < n; ++i3) {
                        Vec4 x(-0.9 + (i0 + 0.5) * 1.8 / n, -0.9 + (i1 + 0.5) * 1.8 / n,
                               -0.9 + (i2 + 0.5) * 1.8 / n, -0.9 + (i3 + 0.5) * 1.8 / n);
                        if (x.norm() < 0.9) witnesses.push_back(x);
                    }
        std::mt19937_64 rng(opts.seed);
        std::normal_distribution<double> nd(0.0, 1.0);
        for (int k = 0; k < 160; ++k) {
            Vec4 v;
            for (int i = 0; i < 4; ++i) v[i] = nd(rng);
            v.normalize();
            double rad = 0.04 + 0.2 * (k % 20) / 20.0;
            Vec4 x = res.base_point + rad * v;
            if (x.norm() < 0.9) witnesses.push_back(x);
        }
    }

    DiffusionCheckOptions dopts;
    dopts.slack = opts.clause_slack;
    dopts.annulus_samples = 600;
    dopts.outer_radius = 1.6;

    auto negativity_holds = [&](const DeformParams& cand) {
        std::vector<char> ok(witnesses.size(), 0);
        parallel_for(witnesses.size(), [&](std::size_t i) {
            const Vec4& x = witnesses[i];
            double r = std::hypot(x[0], x[1]);
            double rho = std::hypot(x[2], x[3]);
            double sc = closed_scalar(*bp, r, rho);
            double rg = cf->dist(x).r;
            double env = sdif_envelope(cand, rg);
            if (sc + env < 0.0) {
                ok[i] = 1;
                return;
            }
            double sd = deform_scalar_diff(*cf, cand, x, dopts.copts);
            ok[i] = (sc + sd < 0.0) ? 1 : 0;
        });
        for (char c : ok)
            if (!c) return false;
        return true;
    };

    bool found = false;
    for (int k = 0; k <= opts.max_dyadic && !found; ++k) {
        par.d = std::ldexp(1.0, k);
        ++res.scanned_candidates;
        DiffusionReport rep = diffusion_check(*cf, par, dopts);
        if (!rep.pass()) continue;
        if (!negativity_holds(par)) continue;
        found = true;
    }
    if (!found)
        throw std::runtime_error("build_gminus: no decay rate in the dyadic scan satisfies "
                                 "the diffusion clauses and strict negativity");

    // amplitude by bisection from above: keep the largest working s in [0,1]
    double s_ok = 1.0;
    {
        DeformParams cand = par;
        cand.s = 1.0;
        DiffusionReport rep = diffusion_check(*cf, cand, dopts);
        if (!(rep.pass() && negativity_holds(cand))) {
            double lo = 0.0, hi = 1.0;
            for (int it = 0; it < 12; ++it) {
                cand.s = 0.5 * (lo + hi);
                DiffusionReport r2 = diffusion_check(*cf, cand, dopts);
                if (r2.pass() && negativity_holds(cand)) lo = cand.s;
                else hi = cand.s;
            }
            s_ok = lo;
        }
    }
    par.s = s_ok;

    res.params = par;
    res.d0 = par.d;
    res.s0 = par.s;
    res.field = deform(cf, par);
    res.field.id = "gminus";

    std::vector<Vec4> norm_samples;
    std::mt19937_64 rng(opts.seed + 1);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 300; ++i)
        norm_samples.emplace_back(u(rng), u(rng), u(rng), u(rng));
    res.deviation_from_flat =
        ck_norms(res.field, euclidean_metric(res.field.domain), norm_samples);
    return res;
}

}  // namespace curvforge
