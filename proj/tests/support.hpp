// Shared test helpers: random body generation, independent oracles, and
// covering construction. Everything here is deliberately independent of the
// solver paths it is used to check (grid search instead of LPs for tree
// lengths, direct subset DP instead of partition enumeration for B).
#ifndef MINK_TESTS_SUPPORT_HPP
#define MINK_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <vector>

#include "mink/covering.hpp"
#include "mink/geometry.hpp"
#include "mink/lp.hpp"
#include "mink/steiner.hpp"

namespace mink::testing {

/// Random centred polygon with `pairs` facet pairs; facet directions are
/// spread with guaranteed angular gaps so vertices stay well conditioned.
inline SymmetricPolytope random_polygon(std::mt19937_64& rng, int minPairs, int maxPairs) {
    std::uniform_int_distribution<int> pairDist(minPairs, maxPairs);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int m = pairDist(rng);
    SymmetricPolytope K;
    K.dim = 2;
    for (int i = 0; i < m; ++i) {
        double theta = M_PI * (i + 0.2 + 0.6 * unit(rng)) / m;
        double scale = 0.7 + 0.6 * unit(rng);
        Vector a(2);
        a << scale * std::cos(theta), scale * std::sin(theta);
        K.normals.push_back(a);
        K.normals.push_back(-a);
    }
    validate_polytope(K);
    return K;
}

/// Smallest homothet lambda*K + t containing the given points (an LP in
/// (t, lambda)).
inline Homothet minimal_enclosing_homothet(const SymmetricPolytope& K,
                                           const std::vector<Vector>& points) {
    const int d = K.dim;
    LinearProgram lp;
    lp.objective = Eigen::VectorXd::Zero(d + 1);
    lp.objective(d) = 1.0;
    for (const auto& x : points) {
        for (const auto& a : K.normals) {
            // a.(x - t) <= lambda
            Eigen::VectorXd row(d + 1);
            row.head(d) = -a;
            row(d) = -1.0;
            lp.constraints.push_back({row, -a.dot(x), Relation::LessEq});
        }
    }
    LpOutcome out = solve_lp(lp);
    if (out.status != LpStatus::Optimal)
        throw std::runtime_error("minimal enclosing homothet LP failed");
    Homothet h;
    h.lambda = out.value;
    h.t = out.witness.head(d);
    return h;
}

/// Builds a covering of the polygon K out of inflated minimal homothets of
/// origin-fan triangles over subdivided boundary edges. Every homothet keeps
/// ratio <= 0.92 and a containment margin, so the certificate verifies.
inline CoveringCertificate build_verified_covering(const SymmetricPolytope& K) {
    VertexList vl = enumerate_vertices(K);
    std::vector<Vector> ring;
    for (const auto& v : vl.vertices) ring.push_back(v.point);
    std::sort(ring.begin(), ring.end(), [](const Vector& a, const Vector& b) {
        return std::atan2(a(1), a(0)) < std::atan2(b(1), b(0));
    });

    CoveringCertificate cert;
    const size_t n = ring.size();
    for (size_t i = 0; i < n; ++i) {
        const Vector& a = ring[i];
        const Vector& b = ring[(i + 1) % n];
        // Subdivide the edge until each fan triangle fits a ratio-0.8 homothet.
        std::vector<std::pair<Vector, Vector>> stack{{a, b}};
        while (!stack.empty()) {
            auto [p, q] = stack.back();
            stack.pop_back();
            Homothet h = minimal_enclosing_homothet(K, {Vector::Zero(2), p, q});
            if (h.lambda > 0.8) {
                Vector mid = 0.5 * (p + q);
                mid /= gauge_eval(mid, K);  // project back to the boundary
                stack.push_back({p, mid});
                stack.push_back({mid, q});
                continue;
            }
            h.lambda = std::min(0.92, h.lambda + 0.1);
            cert.homothets.push_back(std::move(h));
        }
    }
    return cert;
}

/// B(K) by direct enumeration of vertex covers (blocks may overlap),
/// independent of the partition-enumeration path.
inline double bezdek_cover_oracle(const SymmetricPolytope& K) {
    VertexList vl = enumerate_vertices(K);
    const int v = static_cast<int>(vl.vertices.size());
    Gauge g = Gauge::polyhedral(K);

    auto blockCost = [&](unsigned mask) {
        std::vector<LinearConstraint> cons;
        for (int i = 0; i < v; ++i)
            if (mask & (1u << i))
                for (int f : vl.vertices[i].activeFacets)
                    cons.push_back({K.normals[f], 1.0, Relation::GreaterEq});
        LpOutcome out = min_gauge_subject_to(g, cons);
        return out.status == LpStatus::Optimal ? out.value
                                               : std::numeric_limits<double>::infinity();
    };
    std::vector<double> cost(1u << v);
    for (unsigned m = 1; m < (1u << v); ++m) cost[m] = blockCost(m);

    std::vector<double> best(1u << v, -1.0);
    const unsigned full = (1u << v) - 1;
    std::function<double(unsigned)> rec = [&](unsigned covered) -> double {
        if (covered == full) return 0.0;
        if (best[covered] >= 0.0) return best[covered];
        int i = 0;
        while (covered & (1u << i)) ++i;
        double r = std::numeric_limits<double>::infinity();
        for (unsigned block = 1; block <= full; ++block) {
            if (!(block & (1u << i))) continue;
            if (!std::isfinite(cost[block])) continue;
            r = std::min(r, cost[block] + rec(covered | block));
        }
        return best[covered] = r;
    };
    return rec(0);
}

/// Independent Steiner-length oracle for d=2 and n in {3,4}: coarse grid
/// search over Steiner positions in [-2,2]^2 followed by step-halving local
/// refinement, per full topology.
inline double grid_smt_oracle(const std::vector<Vector>& terminals, const Gauge& g) {
    const int n = static_cast<int>(terminals.size());
    if (g.dim() != 2 || (n != 3 && n != 4))
        throw std::invalid_argument("grid oracle supports d=2, n in {3,4}");

    auto treeLen = [&](const SteinerTopology& top, const std::vector<Vector>& coords) {
        double total = 0.0;
        for (const auto& [u, vtx] : top.edges)
            total += gauge_eval(coords[u] - coords[vtx], g);
        return total;
    };

    auto refine = [&](const SteinerTopology& top, std::vector<Vector> coords,
                      double h0) {
        const int k = top.steiners;
        double best = treeLen(top, coords);
        for (double h = h0; h >= 1e-6; h *= 0.5) {
            bool improved = true;
            while (improved) {
                improved = false;
                // All {-h,0,h} combinations over every Steiner coordinate.
                int moves = 1;
                for (int i = 0; i < 2 * k; ++i) moves *= 3;
                for (int code = 0; code < moves; ++code) {
                    std::vector<Vector> trial = coords;
                    int c = code;
                    for (int s = 0; s < k; ++s)
                        for (int axis = 0; axis < 2; ++axis) {
                            trial[n + s](axis) += h * (c % 3 - 1);
                            c /= 3;
                        }
                    double len = treeLen(top, trial);
                    if (len < best - 1e-13) {
                        best = len;
                        coords = std::move(trial);
                        improved = true;
                    }
                }
            }
        }
        return best;
    };

    double overall = std::numeric_limits<double>::infinity();
    for (const auto& top : enumerate_full_topologies(n)) {
        std::vector<Vector> coords = terminals;
        coords.resize(n + top.steiners, Vector::Zero(2));
        double bestCoarse = std::numeric_limits<double>::infinity();
        std::vector<Vector> bestCoords = coords;
        if (top.steiners == 1) {
            for (double x = -2.0; x <= 2.0 + 1e-12; x += 0.005) {
                for (double y = -2.0; y <= 2.0 + 1e-12; y += 0.005) {
                    coords[n] << x, y;
                    double len = treeLen(top, coords);
                    if (len < bestCoarse) { bestCoarse = len; bestCoords = coords; }
                }
            }
            overall = std::min(overall, refine(top, bestCoords, 0.005));
        } else {
            for (double x1 = -2.0; x1 <= 2.0 + 1e-12; x1 += 0.1)
                for (double y1 = -2.0; y1 <= 2.0 + 1e-12; y1 += 0.1)
                    for (double x2 = -2.0; x2 <= 2.0 + 1e-12; x2 += 0.1)
                        for (double y2 = -2.0; y2 <= 2.0 + 1e-12; y2 += 0.1) {
                            coords[n] << x1, y1;
                            coords[n + 1] << x2, y2;
                            double len = treeLen(top, coords);
                            if (len < bestCoarse) { bestCoarse = len; bestCoords = coords; }
                        }
            overall = std::min(overall, refine(top, bestCoords, 0.1));
        }
    }
    return overall;
}

/// Samples a point that illuminates the given boundary vertex.
inline Vector random_illuminating_point(std::mt19937_64& rng, const SymmetricPolytope& K,
                                        const Vector& u) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Vector w(K.dim);
        for (int c = 0; c < K.dim; ++c) w(c) = 2.0 * unit(rng) - 1.0;
        Vector p = (1.05 + 1.95 * unit(rng)) * (u + 0.6 * unit(rng) * w);
        bool ok = true;
        for (int f : active_facets(u, K))
            if (K.normals[f].dot(p) <= 1.0 + 1e-6) { ok = false; break; }
        if (ok) return p;
    }
    throw std::runtime_error("failed to sample an illuminating point");
}

}  // namespace mink::testing

#endif
