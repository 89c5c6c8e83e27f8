#include "curvforge/net.hpp"

#include "curvforge/parallel.hpp"

#include <algorithm>
#include <random>

namespace curvforge {

std::vector<std::vector<int>> CoveringNet::classes() const {
    std::vector<std::vector<int>> out(num_colors);
    for (std::size_t i = 0; i < centers.size(); ++i) out[color[i]].push_back(static_cast<int>(i));
    return out;
}

CoveringNet build_net(const TorusManifold& torus, const NetOptions& opts) {
    const ChartDomain dom = torus.metric->domain;
    const double P = torus.period;
    if (P < 2.0 * opts.separation + 1.0)
        throw net_invalid_error("build_net: torus period too small for the separation gate");

    CoveringNet net;
    net.separation = opts.separation;

    // candidate pool: a deterministic jittered lattice, dense enough that
    // maximality over the pool implies covering radius <= separation
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> jit(0.0, 1.0);
    const int n = std::max(8, static_cast<int>(std::ceil(P / 1.0)));
    std::vector<Vec4> pool;
    pool.reserve(static_cast<std::size_t>(n) * n * n * n);
    for (int i0 = 0; i0 < n; ++i0)
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int i3 = 0; i3 < n; ++i3) {
                    Vec4 x(P * (i0 + 0.5 * jit(rng)) / n, P * (i1 + 0.5 * jit(rng)) / n,
                           P * (i2 + 0.5 * jit(rng)) / n, P * (i3 + 0.5 * jit(rng)) / n);
                    pool.push_back(dom.canonical(x));
                }

    auto d = [&](const Vec4& a, const Vec4& b) { return dom.distance_flat(a, b); };

    // greedy farthest-point insertion until no pool point is farther than the
    // separation from the net
    std::vector<double> dist_to_net(pool.size(), 1e300);
    net.centers.push_back(pool.front());
    for (;;) {
        for (std::size_t i = 0; i < pool.size(); ++i)
            dist_to_net[i] = std::min(dist_to_net[i], d(pool[i], net.centers.back()));
        std::size_t far = 0;
        for (std::size_t i = 1; i < pool.size(); ++i)
            if (dist_to_net[i] > dist_to_net[far]) far = i;
        if (dist_to_net[far] <= opts.separation) break;
        net.centers.push_back(pool[far]);
    }

    net.min_pairwise = 1e300;
    for (std::size_t i = 0; i < net.centers.size(); ++i)
        for (std::size_t j = i + 1; j < net.centers.size(); ++j)
            net.min_pairwise = std::min(net.min_pairwise, d(net.centers[i], net.centers[j]));
    if (!(net.min_pairwise > opts.separation))
        throw net_invalid_error("build_net: separation violated, min pairwise " +
                                std::to_string(net.min_pairwise));

    // greedy coloring of the conflict graph (same color only beyond the
    // conflict radius, which keeps same-color 10-balls disjoint)
    const std::size_t m = net.centers.size();
    net.color.assign(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<char> used(m, 0);
        for (std::size_t j = 0; j < i; ++j)
            if (d(net.centers[i], net.centers[j]) <= opts.conflict_radius)
                if (net.color[j] >= 0) used[net.color[j]] = 1;
        int c = 0;
        while (used[c]) ++c;
        net.color[i] = c;
        net.num_colors = std::max(net.num_colors, c + 1);
    }

    if (opts.verify_covering) {
        const int gn = opts.covering_grid_n;
        const std::size_t total = static_cast<std::size_t>(gn) * gn * gn * gn;
        std::vector<double> worst(total);
        parallel_for(total, [&](std::size_t idx) {
            std::size_t rem = idx;
            Vec4 x;
            for (int a = 0; a < 4; ++a) {
                x[a] = P * ((rem % gn) + 0.5) / gn;
                rem /= gn;
            }
            double best = 1e300;
            for (const Vec4& c : net.centers) best = std::min(best, d(x, c));
            worst[idx] = best;
        });
        net.covering_radius_grid = *std::max_element(worst.begin(), worst.end());
        // grid slack: half the grid cell diagonal
        double slack = P / gn;
        if (net.covering_radius_grid > opts.separation + slack)
            throw net_invalid_error("build_net: covering radius " +
                                    std::to_string(net.covering_radius_grid) +
                                    " exceeds the separation plus grid slack");
    }
    return net;
}

}  // namespace curvforge
