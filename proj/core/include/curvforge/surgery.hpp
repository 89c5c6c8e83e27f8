#pragma once

#include "curvforge/deform.hpp"
#include "curvforge/island.hpp"
#include "curvforge/net.hpp"
#include "curvforge/oracle.hpp"

#include <memory>
#include <vector>

namespace curvforge {

struct surgery_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PipelineConfig {
    double period = 18.0;
    DeformParams deform{1.0, 8.5, 0.1, 9.0, 1.0, 1.0};  // a, b, eps, c, d, s
    NetOptions net;
    GMinusOptions island;
    ProfileParams profile;
    int verdict_grid_n = 12;
    int verdict_extra_samples = 4000;
    double clause_slack = 1e-8;
    int max_dyadic = 12;
    unsigned seed = 20240601;
    bool calibrate = true;   // scan d; otherwise use deform.d as given

    void validate() const;
};

// The island patchwork g_A: an exact copy of g^- inside the 1.7-ball of each
// center (through the Darboux frame of the frozen metric), the base metric
// outside the 2-balls, and the interpolation (psi* g^-) e^{eta h} between.
MetricField embed_islands(const TorusManifold& torus, const CoveringNet& net,
                          const GMinusResult& gm);

struct IterationStep {
    int color_class = 0;
    int centers = 0;
    double d = 0.0, s = 0.0;
};

struct IterationResult {
    std::shared_ptr<const MetricField> final_metric;
    std::vector<IterationStep> steps;
    int kappa = 0;
};

// g(0) = g_A, then one diffusion per color class applied simultaneously at
// every center of the class (their 9-balls are disjoint by the coloring).
IterationResult iterate_deform(const TorusManifold& torus, const CoveringNet& net,
                               const MetricField& gA, const DeformParams& params);

struct VerdictReport {
    double max_s = 0.0, min_s = 0.0;
    Vec4 argmax = Vec4::Zero();
    double margin_c1 = 0.0;      // -max_s
    bool pass = false;           // max_s < 0
    double worst_compat = 0.0;   // of the rescaled metric against omega
    double worst_convergence = 0.0;
    std::size_t samples = 0;
};

VerdictReport final_verdict(const TorusManifold& torus, const CoveringNet& net,
                            const MetricField& g_final, const PipelineConfig& cfg);

struct PipelineResult {
    CoveringNet net;
    GMinusResult gminus;
    IterationResult iteration;
    VerdictReport verdict;
    double pipeline_d0 = 0.0;
    bool pipeline_d0_found = false;
    double island_depth = 0.0;   // min sampled s of g_A over island cores
};

PipelineResult run_pipeline(const PipelineConfig& cfg);

}  // namespace curvforge
