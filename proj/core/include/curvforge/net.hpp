#pragma once

#include "curvforge/torus.hpp"

#include <vector>

namespace curvforge {

struct net_invalid_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 5-separated maximal net on the torus with a coloring splitting the centers
// into classes whose 10-balls are pairwise disjoint.
struct CoveringNet {
    std::vector<Vec4> centers;
    std::vector<int> color;                  // per center, 0-based
    int num_colors = 0;
    double separation = 5.0;
    double min_pairwise = 0.0;               // verified
    double covering_radius_grid = 0.0;       // verified on a grid

    std::vector<std::vector<int>> classes() const;
};

struct NetOptions {
    double separation = 5.0;
    double conflict_radius = 20.0;  // same-color centers stay this far apart
    int covering_grid_n = 24;       // per-axis verification grid
    unsigned seed = 12345;
    bool verify_covering = true;
};

// Greedy farthest-point insertion until maximality, then greedy coloring on
// the conflict graph. Distances are the frozen wrapped distances, which for
// the flat torus are exact.
CoveringNet build_net(const TorusManifold& torus, const NetOptions& opts = {});

}  // namespace curvforge
