#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "mappa/mind_map.hpp"

namespace mappa {

struct LayoutOptions {
    std::set<int> pinned;      ///< node ids softly held at their incoming positions
    std::uint64_t seed = 0;    ///< drives initial placement angles
    int max_iters = 2000;
    double epsilon = 0.5;      ///< stop once the largest per-iteration move is below this
};

struct LayoutStats {
    int iterations = 0;
    bool converged = false;
    /// (iteration, stress) sampled every 100 iterations, plus the final state.
    std::vector<std::pair<int, double>> stress_checkpoints;
    double final_stress = 0.0;
    int collision_sweeps = 0;
};

/// Positions every node of `graph` in place.
///
/// Unpositioned nodes start one unit away from their parent at a seeded
/// angle; unpositioned roots are placed clear of the existing drawing. The
/// objective
///
///     S = sum over edges (|x_i - x_j| - target)^2
///       + pin_weight * sum over pinned (|x_i - x_i_prev|^2)
///
/// is minimized by gradient descent with a step-halving line search, so S
/// never increases between iterations. A final pass pushes apart any pair of
/// nodes closer than 2 * collision_radius.
///
/// Throws PreconditionError unless every node is reachable from a depth-0 node.
LayoutStats layout(MindMapGraph& graph, const LayoutOptions& options = {});

/// Stress of the current positions (every node must be positioned).
double stress(const MindMapGraph& graph, const std::set<int>& pinned = {},
              const std::vector<Vec2>& pinned_prev = {});

/// Throws PreconditionError unless every node is reachable from a depth-0 node.
void require_rooted(const MindMapGraph& graph);

}  // namespace mappa
