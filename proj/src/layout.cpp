#include "mappa/layout.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include "mappa/error.hpp"
#include "mappa/hashing.hpp"

namespace mappa {

namespace {

struct Spring {
    std::size_t a;
    std::size_t b;
    double length;
};

struct Problem {
    std::vector<Spring> springs;
    std::vector<std::size_t> pinned;   // node indices
    std::vector<Vec2> anchors;         // incoming positions of pinned nodes
    double pin_weight = 0.0;

    double stress(const std::vector<Vec2>& x) const {
        double s = 0.0;
        for (const auto& sp : springs) {
            const double d = std::hypot(x[sp.a].x - x[sp.b].x, x[sp.a].y - x[sp.b].y);
            s += (d - sp.length) * (d - sp.length);
        }
        double pin = 0.0;
        for (std::size_t k = 0; k < pinned.size(); ++k) {
            const auto& p = x[pinned[k]];
            pin += (p.x - anchors[k].x) * (p.x - anchors[k].x) + (p.y - anchors[k].y) * (p.y - anchors[k].y);
        }
        return s + pin_weight * pin;
    }

    void gradient(const std::vector<Vec2>& x, std::vector<Vec2>& g) const {
        std::fill(g.begin(), g.end(), Vec2{});
        for (const auto& sp : springs) {
            double dx = x[sp.a].x - x[sp.b].x;
            double dy = x[sp.a].y - x[sp.b].y;
            double d = std::hypot(dx, dy);
            if (d < 1e-12) {
                // Coincident endpoints: any direction is a descent direction.
                const double angle = static_cast<double>(sp.a * 7919 + sp.b);
                dx = std::cos(angle);
                dy = std::sin(angle);
                d = 1.0;
            }
            const double f = 2.0 * (d - sp.length) / d;
            g[sp.a].x += f * dx;
            g[sp.a].y += f * dy;
            g[sp.b].x -= f * dx;
            g[sp.b].y -= f * dy;
        }
        for (std::size_t k = 0; k < pinned.size(); ++k) {
            auto& gi = g[pinned[k]];
            gi.x += 2.0 * pin_weight * (x[pinned[k]].x - anchors[k].x);
            gi.y += 2.0 * pin_weight * (x[pinned[k]].y - anchors[k].y);
        }
    }
};

Vec2 unit_at(std::uint64_t seed, std::uint64_t salt) {
    const double angle = 2.0 * std::numbers::pi * unit_interval(derive_seed(seed, salt));
    return {std::cos(angle), std::sin(angle)};
}

void place_unpositioned(MindMapGraph& graph, std::uint64_t seed) {
    const auto parents = graph.parent_indices();
    const auto& nodes = graph.nodes();

    // Neighbor lists for nodes that only hang off cross edges.
    std::vector<std::vector<std::size_t>> adj(nodes.size());
    for (const auto& e : graph.edges()) {
        const auto a = graph.index_of(e.from);
        const auto b = graph.index_of(e.to);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    // Unpositioned children of each node, in id order.
    std::vector<std::vector<std::size_t>> fresh_children(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes[i].position && parents[i] >= 0) fresh_children[static_cast<std::size_t>(parents[i])].push_back(i);
    }

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].position) continue;
        const auto id = static_cast<std::uint64_t>(nodes[i].id);

        if (parents[i] >= 0 && nodes[static_cast<std::size_t>(parents[i])].position) {
            // Siblings fan out so the descent starts from an unfolded tree:
            // evenly around a root, or across a half-plane facing away from
            // the grandparent. The seed turns the fan and jitters each spoke.
            const auto pi = static_cast<std::size_t>(parents[i]);
            const auto& siblings = fresh_children[pi];
            const auto k = static_cast<double>(std::find(siblings.begin(), siblings.end(), i) - siblings.begin());
            const auto m = static_cast<double>(siblings.size());
            const Vec2 at = *nodes[pi].position;
            const double jitter = (unit_interval(derive_seed(seed, id)) - 0.5) * std::numbers::pi / (2.0 * (m + 1.0));
            double angle;
            const int gp = parents[pi];
            if (gp >= 0 && nodes[static_cast<std::size_t>(gp)].position &&
                !(*nodes[static_cast<std::size_t>(gp)].position == at)) {
                const Vec2 from = *nodes[static_cast<std::size_t>(gp)].position;
                angle = std::atan2(at.y - from.y, at.x - from.x) + std::numbers::pi * ((k + 1.0) / (m + 1.0) - 0.5);
            } else {
                const double base = 2.0 * std::numbers::pi * unit_interval(derive_seed(seed, static_cast<std::uint64_t>(nodes[pi].id) ^ 0x5a5a5a5aULL));
                angle = base + 2.0 * std::numbers::pi * k / m;
            }
            angle += jitter;
            graph.set_position(nodes[i].id, {at.x + std::cos(angle), at.y + std::sin(angle)});
            continue;
        }

        std::optional<Vec2> anchor;
        if (nodes[i].depth > 0) {
            for (auto j : adj[i]) {
                if (nodes[j].position) {
                    anchor = nodes[j].position;
                    break;
                }
            }
        }
        if (anchor) {
            const auto u = unit_at(seed, id);
            graph.set_position(nodes[i].id, {anchor->x + u.x, anchor->y + u.y});
            continue;
        }

        // A fresh root: outside the current drawing, at a seeded bearing.
        Vec2 centre;
        std::size_t placed = 0;
        for (const auto& n : nodes) {
            if (!n.position) continue;
            centre.x += n.position->x;
            centre.y += n.position->y;
            ++placed;
        }
        if (placed == 0) {
            graph.set_position(nodes[i].id, {0.0, 0.0});
            continue;
        }
        centre.x /= static_cast<double>(placed);
        centre.y /= static_cast<double>(placed);
        double radius = 0.0;
        for (const auto& n : nodes) {
            if (n.position) radius = std::max(radius, std::hypot(n.position->x - centre.x, n.position->y - centre.y));
        }
        const auto u = unit_at(seed, id);
        const double r = radius + graph.params().l_max;
        graph.set_position(nodes[i].id, {centre.x + r * u.x, centre.y + r * u.y});
    }
}

constexpr double kOverlapWeight = 0.5;

/// Stress plus a quadratic penalty on node pairs closer than `reach`.
double relaxed_objective(const Problem& p, const std::vector<Vec2>& x, double reach) {
    double f = p.stress(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const double d = std::hypot(x[j].x - x[i].x, x[j].y - x[i].y);
            if (d < reach) f += kOverlapWeight * (reach - d) * (reach - d);
        }
    }
    return f;
}

/// Separates overlapping nodes while the edge springs stay active, so
/// crowded subtrees swing apart instead of being shoved off their lengths.
void relax_overlaps(const Problem& p, std::vector<Vec2>& x, double radius, std::uint64_t seed, int max_iters,
                    double epsilon) {
    if (radius <= 0.0 || x.size() < 2) return;
    // Aim past the hard threshold; the final push then has little left to do.
    const double reach = 2.0 * radius * 1.25;
    std::vector<Vec2> g(x.size()), trial(x.size());
    double f = relaxed_objective(p, x, reach);
    double step = 0.25;
    for (int iter = 0; iter < max_iters; ++iter) {
        p.gradient(x, g);
        bool overlapping = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (std::size_t j = i + 1; j < x.size(); ++j) {
                double dx = x[j].x - x[i].x;
                double dy = x[j].y - x[i].y;
                double d = std::hypot(dx, dy);
                if (d >= reach) continue;
                overlapping = true;
                if (d < 1e-9) {
                    const auto u = unit_at(seed, i * x.size() + j);
                    dx = u.x;
                    dy = u.y;
                } else {
                    dx /= d;
                    dy /= d;
                }
                const double k = 2.0 * kOverlapWeight * (reach - d);
                g[i].x += k * dx;
                g[i].y += k * dy;
                g[j].x -= k * dx;
                g[j].y -= k * dy;
            }
        }
        if (!overlapping) return;
        double gmax = 0.0, gsq = 0.0;
        for (const auto& gi : g) {
            gmax = std::max(gmax, std::hypot(gi.x, gi.y));
            gsq += gi.x * gi.x + gi.y * gi.y;
        }
        if (gmax == 0.0) return;
        step = std::min(2.0 * step, 1.0);
        bool accepted = false;
        double trial_f = f;
        for (int halvings = 0; halvings < 60; ++halvings, step *= 0.5) {
            for (std::size_t i = 0; i < x.size(); ++i) trial[i] = {x[i].x - step * g[i].x, x[i].y - step * g[i].y};
            trial_f = relaxed_objective(p, trial, reach);
            if (trial_f <= f - 1e-4 * step * gsq) {
                accepted = true;
                break;
            }
        }
        if (!accepted) return;
        x.swap(trial);
        f = trial_f;
        if (step * gmax < epsilon * 0.1) return;
    }
}

int resolve_collisions(std::vector<Vec2>& x, double radius, std::uint64_t seed) {
    if (radius <= 0.0 || x.size() < 2) return 0;
    const double min_dist = 2.0 * radius;
    constexpr int kMaxSweeps = 10'000;
    int sweeps = 0;
    for (; sweeps < kMaxSweeps; ++sweeps) {
        bool moved = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (std::size_t j = i + 1; j < x.size(); ++j) {
                double dx = x[j].x - x[i].x;
                double dy = x[j].y - x[i].y;
                double d = std::hypot(dx, dy);
                if (d >= min_dist) continue;
                if (d < 1e-9) {
                    const auto u = unit_at(seed, i * x.size() + j);
                    dx = u.x;
                    dy = u.y;
                    d = 0.0;
                } else {
                    dx /= d;
                    dy /= d;
                }
                // Land slightly beyond the threshold so rounding cannot leave
                // the pair a hair short of it.
                const double push = 0.5 * (min_dist - d) + 1e-6 * radius;
                x[i].x -= push * dx;
                x[i].y -= push * dy;
                x[j].x += push * dx;
                x[j].y += push * dy;
                moved = true;
            }
        }
        if (!moved) break;
    }
    return sweeps;
}

}  // namespace

void require_rooted(const MindMapGraph& graph) {
    const auto& nodes = graph.nodes();
    if (nodes.empty()) return;
    std::vector<std::vector<std::size_t>> adj(nodes.size());
    for (const auto& e : graph.edges()) {
        const auto a = graph.index_of(e.from);
        const auto b = graph.index_of(e.to);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(nodes.size(), false);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].depth == 0) {
            seen[i] = true;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        const auto i = queue.front();
        queue.pop_front();
        for (auto j : adj[i]) {
            if (!seen[j]) {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!seen[i]) {
            throw PreconditionError("node " + std::to_string(nodes[i].id) + " is not reachable from any root");
        }
    }
}

double stress(const MindMapGraph& graph, const std::set<int>& pinned, const std::vector<Vec2>& pinned_prev) {
    Problem p;
    p.pin_weight = graph.params().pin_weight;
    for (const auto& e : graph.edges()) p.springs.push_back({graph.index_of(e.from), graph.index_of(e.to), e.target_length});
    std::size_t k = 0;
    for (int id : pinned) {
        p.pinned.push_back(graph.index_of(id));
        p.anchors.push_back(k < pinned_prev.size() ? pinned_prev[k] : *graph.node(id).position);
        ++k;
    }
    std::vector<Vec2> x;
    for (const auto& n : graph.nodes()) {
        if (!n.position) throw StateError("node " + std::to_string(n.id) + " has no position");
        x.push_back(*n.position);
    }
    return p.stress(x);
}

LayoutStats layout(MindMapGraph& graph, const LayoutOptions& options) {
    graph.params().validate();
    require_rooted(graph);
    LayoutStats stats;
    if (graph.empty()) {
        stats.converged = true;
        return stats;
    }

    place_unpositioned(graph, options.seed);

    Problem p;
    p.pin_weight = graph.params().pin_weight;
    for (const auto& e : graph.edges()) {
        p.springs.push_back({graph.index_of(e.from), graph.index_of(e.to), e.target_length});
    }
    for (int id : options.pinned) {
        const auto* n = graph.find(id);
        if (!n) continue;
        p.pinned.push_back(graph.index_of(id));
        p.anchors.push_back(*n->position);
    }

    std::vector<Vec2> x;
    x.reserve(graph.size());
    for (const auto& n : graph.nodes()) x.push_back(*n.position);

    std::vector<Vec2> g(x.size()), trial(x.size());
    double s = p.stress(x);
    double step = 0.25;
    int iter = 0;
    for (; iter < options.max_iters; ++iter) {
        if (iter % 100 == 0) stats.stress_checkpoints.emplace_back(iter, s);

        p.gradient(x, g);
        double gmax = 0.0, gsq = 0.0;
        for (const auto& gi : g) {
            gmax = std::max(gmax, std::hypot(gi.x, gi.y));
            gsq += gi.x * gi.x + gi.y * gi.y;
        }
        if (gmax == 0.0) {
            stats.converged = true;
            break;
        }

        step = std::min(2.0 * step, 1.0);
        double trial_s = 0.0;
        bool accepted = false;
        for (int halvings = 0; halvings < 60; ++halvings, step *= 0.5) {
            for (std::size_t i = 0; i < x.size(); ++i) trial[i] = {x[i].x - step * g[i].x, x[i].y - step * g[i].y};
            trial_s = p.stress(trial);
            // Sufficient decrease; plain S' <= S lets a step bounce between
            // two mirror-image states of equal stress.
            if (trial_s <= s - 1e-4 * step * gsq) {
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            stats.converged = true;
            break;
        }
        x.swap(trial);
        s = trial_s;
        if (step * gmax < options.epsilon) {
            ++iter;
            stats.converged = true;
            break;
        }
    }
    stats.iterations = iter;
    stats.stress_checkpoints.emplace_back(iter, s);
    stats.final_stress = s;

    relax_overlaps(p, x, graph.params().collision_radius, options.seed, options.max_iters, options.epsilon);
    stats.collision_sweeps = resolve_collisions(x, graph.params().collision_radius, options.seed);

    for (std::size_t i = 0; i < x.size(); ++i) graph.set_position(graph.nodes()[i].id, x[i]);
    return stats;
}

}  // namespace mappa
