#include "mink/steiner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>

#include "mink/illumination.hpp"
#include "mink/lp.hpp"

namespace mink {

namespace {

constexpr double kLengthTie = 1e-9;
constexpr double kSmtTol = 1e-6;

std::vector<std::vector<int>> adjacency(const SteinerTopology& top) {
    std::vector<std::vector<int>> adj(top.terminals + top.steiners);
    for (const auto& [u, v] : top.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

double tree_length(const SteinerTopology& top, const std::vector<Vector>& coords,
                   const Gauge& g, std::vector<double>* lengths = nullptr) {
    double total = 0.0;
    if (lengths) lengths->clear();
    for (const auto& [u, v] : top.edges) {
        double len = gauge_eval(coords[u] - coords[v], g);
        total += len;
        if (lengths) lengths->push_back(len);
    }
    return total;
}

// Degenerate optimal faces are common under polyhedral gauges: the LP vertex
// the simplex returns may scatter Steiner points along geodesics. Greedily
// snapping Steiner points onto neighbours whenever the total length is
// preserved realizes collapsed high-degree clusters deterministically.
void snap_steiner_points(const SteinerTopology& top, std::vector<Vector>& coords,
                         const Gauge& g) {
    auto adj = adjacency(top);
    auto zeroEdges = [&] {
        int z = 0;
        for (const auto& [u, v] : top.edges)
            if ((coords[u] - coords[v]).lpNorm<Eigen::Infinity>() <= 1e-9) ++z;
        return z;
    };
    double best = tree_length(top, coords, g);
    int bestZeros = zeroEdges();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = top.terminals; s < top.terminals + top.steiners; ++s) {
            for (int nb : adj[s]) {
                if ((coords[s] - coords[nb]).lpNorm<Eigen::Infinity>() <= 1e-12) continue;
                Vector saved = coords[s];
                coords[s] = coords[nb];
                double len = tree_length(top, coords, g);
                int zeros = zeroEdges();
                // Accept a snap only on strict progress in (length, collapses)
                // so the cleanup terminates.
                if (len < best - kLengthTie ||
                    (len <= best + kLengthTie && zeros > bestZeros)) {
                    best = std::min(best, len);
                    bestZeros = zeros;
                    changed = true;
                } else {
                    coords[s] = saved;
                }
            }
        }
    }
}

EmbeddedTree minimize_polyhedral(const SteinerTopology& top,
                                 const std::vector<Vector>& terminals, const Gauge& g) {
    const int d = g.dim();
    const int k = top.steiners;
    const int ne = static_cast<int>(top.edges.size());
    // Variables: k*d Steiner coordinates, then one length variable per edge.
    const int nvars = k * d + ne;

    LinearProgram lp;
    lp.objective = Eigen::VectorXd::Zero(nvars);
    for (int e = 0; e < ne; ++e) lp.objective(k * d + e) = 1.0;

    auto varIndex = [&](int vertex, int coord) { return (vertex - top.terminals) * d + coord; };

    for (int e = 0; e < ne; ++e) {
        auto [u, v] = top.edges[e];
        for (const auto& a : g.body().normals) {
            // a . (x_u - x_v) <= t_e
            Eigen::VectorXd row = Eigen::VectorXd::Zero(nvars);
            double b = 0.0;
            if (u >= top.terminals)
                for (int c = 0; c < d; ++c) row(varIndex(u, c)) += a(c);
            else
                b -= a.dot(terminals[u]);
            if (v >= top.terminals)
                for (int c = 0; c < d; ++c) row(varIndex(v, c)) -= a(c);
            else
                b += a.dot(terminals[v]);
            row(k * d + e) = -1.0;
            lp.constraints.push_back({row, b, Relation::LessEq});
        }
    }

    LpOutcome out = solve_lp(lp);
    if (out.status != LpStatus::Optimal)
        throw std::runtime_error("fixed-topology LP did not solve to optimality");

    EmbeddedTree tree;
    tree.topology = top;
    tree.coords = terminals;
    tree.coords.resize(top.terminals + k);
    for (int s = 0; s < k; ++s)
        tree.coords[top.terminals + s] = out.witness.segment(s * d, d);
    snap_steiner_points(top, tree.coords, g);
    tree.totalLength = tree_length(top, tree.coords, g, &tree.edgeLengths);
    return tree;
}

EmbeddedTree minimize_euclidean(const SteinerTopology& top,
                                const std::vector<Vector>& terminals, const Gauge& g) {
    const int d = g.dim();
    const int n = top.terminals;
    const int k = top.steiners;
    auto adj = adjacency(top);

    std::vector<Vector> coords = terminals;
    coords.resize(n + k);
    Vector mean = Vector::Zero(d);
    for (const auto& t : terminals) mean += t;
    mean /= static_cast<double>(n);
    for (int s = 0; s < k; ++s) coords[n + s] = mean + Vector::Constant(d, 1e-6 * (s + 1));

    auto smoothedLength = [&](double delta) {
        double total = 0.0;
        for (const auto& [u, v] : top.edges)
            total += std::sqrt((coords[u] - coords[v]).squaredNorm() + delta * delta);
        return total;
    };

    for (double delta = 1e-3; delta >= 1e-10 * 0.999; delta *= 0.1) {
        double prev = smoothedLength(delta);
        for (int pass = 0; pass < 20000; ++pass) {
            // Weiszfeld step per Steiner point with the smoothed norm.
            for (int s = n; s < n + k; ++s) {
                Vector num = Vector::Zero(d);
                double den = 0.0;
                for (int nb : adj[s]) {
                    double w = 1.0 / std::sqrt((coords[s] - coords[nb]).squaredNorm() +
                                               delta * delta);
                    num += w * coords[nb];
                    den += w;
                }
                coords[s] = num / den;
            }
            double cur = smoothedLength(delta);
            if (prev - cur < 1e-12 * std::max(1.0, prev)) { prev = cur; break; }
            prev = cur;
        }
    }

    EmbeddedTree tree;
    tree.topology = top;
    tree.coords = std::move(coords);
    tree.totalLength = tree_length(top, tree.coords, g, &tree.edgeLengths);
    return tree;
}

SteinerTopology single_edge_topology() {
    SteinerTopology t;
    t.terminals = 2;
    t.steiners = 0;
    t.edges = {{0, 1}};
    return t;
}

}  // namespace

std::vector<SteinerTopology> enumerate_full_topologies(int n) {
    if (n < 3 || n > 9)
        throw std::invalid_argument("enumerate_full_topologies requires 3 <= n <= 9");
    // Seed: terminals 0,1,2 joined to Steiner vertex n. Terminal m is then
    // inserted into every edge in turn, splitting it with Steiner n+m-2.
    SteinerTopology seed;
    seed.terminals = n;
    seed.steiners = 1;
    seed.edges = {{0, n}, {1, n}, {2, n}};

    std::vector<SteinerTopology> current{seed};
    for (int m = 3; m < n; ++m) {
        std::vector<SteinerTopology> next;
        next.reserve(current.size() * (2 * m - 3));
        int newSteiner = n + m - 2;
        for (const auto& top : current) {
            for (size_t e = 0; e < top.edges.size(); ++e) {
                SteinerTopology t = top;
                auto [u, v] = t.edges[e];
                t.edges[e] = {u, newSteiner};
                t.edges.push_back({v, newSteiner});
                t.edges.push_back({m, newSteiner});
                t.steiners += 1;
                next.push_back(std::move(t));
            }
        }
        current = std::move(next);
    }
    return current;
}

EmbeddedTree minimize_fixed_topology(const SteinerTopology& top,
                                     const std::vector<Vector>& terminals, const Gauge& g) {
    if (static_cast<int>(terminals.size()) != top.terminals)
        throw std::invalid_argument("terminal count does not match topology");
    for (const auto& t : terminals)
        if (static_cast<int>(t.size()) != g.dim())
            throw std::invalid_argument("terminal dimension does not match gauge");
    if (g.kind() == Gauge::Kind::Polyhedral) return minimize_polyhedral(top, terminals, g);
    return minimize_euclidean(top, terminals, g);
}

DegreeReport degree_report(const EmbeddedTree& tree, double tol) {
    const int nv = tree.topology.terminals + tree.topology.steiners;
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (size_t e = 0; e < tree.topology.edges.size(); ++e) {
        if (tree.edgeLengths[e] <= tol) {
            auto [u, v] = tree.topology.edges[e];
            parent[find(u)] = find(v);
        }
    }

    std::vector<int> degree(nv, 0);
    for (size_t e = 0; e < tree.topology.edges.size(); ++e) {
        auto [u, v] = tree.topology.edges[e];
        if (tree.edgeLengths[e] > tol && find(u) != find(v)) {
            ++degree[find(u)];
            ++degree[find(v)];
        }
    }

    DegreeReport report;
    report.collapseTol = tol;
    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < nv; ++i) classes[find(i)].push_back(i);
    for (auto& [root, members] : classes) {
        bool hasTerminal = false;
        for (int m : members)
            if (m < tree.topology.terminals) hasTerminal = true;
        report.maxVertexDegree = std::max(report.maxVertexDegree, degree[root]);
        if (!hasTerminal)
            report.maxSteinerDegree = std::max(report.maxSteinerDegree, degree[root]);
        report.collapsedClasses.push_back(members);
    }
    return report;
}

std::pair<EmbeddedTree, DegreeReport> solve_smt(const std::vector<Vector>& terminals,
                                                const Gauge& g) {
    const int n = static_cast<int>(terminals.size());
    if (n < 2 || n > 9) throw std::invalid_argument("solve_smt requires 2 <= n <= 9");
    if (n == 2) {
        EmbeddedTree tree;
        tree.topology = single_edge_topology();
        tree.coords = terminals;
        tree.totalLength = tree_length(tree.topology, tree.coords, g, &tree.edgeLengths);
        return {tree, degree_report(tree)};
    }
    std::optional<EmbeddedTree> best;
    for (const auto& top : enumerate_full_topologies(n)) {
        EmbeddedTree tree = minimize_fixed_topology(top, terminals, g);
        if (!best || tree.totalLength < best->totalLength - kLengthTie)
            best = std::move(tree);
    }
    return {*best, degree_report(*best)};
}

StarTestResult star_smt_test(const Gauge& g, const std::vector<Vector>& U) {
    if (U.size() > 8) throw std::invalid_argument("star_smt_test requires |U| <= 8");
    for (const auto& u : U)
        if (std::abs(gauge_eval(u, g) - 1.0) > kGeomTol)
            throw InvariantViolation("star direction is not a unit vector in the gauge");

    std::vector<Vector> terminals{Vector::Zero(g.dim())};
    terminals.insert(terminals.end(), U.begin(), U.end());
    auto [tree, report] = solve_smt(terminals, g);

    StarTestResult res;
    res.starLength = static_cast<double>(U.size());
    res.smtLength = tree.totalLength;
    res.isSMT = res.starLength <= res.smtLength + kSmtTol;
    return res;
}

StarTestResult star_smt_test(const SymmetricPolytope& K, const std::vector<Vector>& U) {
    return star_smt_test(Gauge::polyhedral(K), U);
}

Thm2Move thm2_local_move(const SymmetricPolytope& K, const std::vector<Vector>& U,
                         const Vector& p, double eps) {
    if (!(eps > 0.0)) throw InvariantViolation("eps must be positive");
    Gauge g = Gauge::polyhedral(K);
    for (const auto& u : U)
        if (std::abs(gauge_eval(u, g) - 1.0) > kGeomTol)
            throw InvariantViolation("star direction is not a unit vector in the gauge");

    Thm2Move move;
    move.lenStar = static_cast<double>(U.size());
    double sumMoved = 0.0;
    for (size_t i = 0; i < U.size(); ++i) {
        if (illuminates_point(p, U[i], K)) {
            move.illuminatedIdx.push_back(static_cast<int>(i));
            sumMoved += gauge_eval(U[i] - eps * p, g);
        }
    }
    double untouched = static_cast<double>(U.size() - move.illuminatedIdx.size());
    move.lenModified = untouched + gauge_eval(eps * p, g) + sumMoved;
    return move;
}

DegreeBoundReport degree_bound_check(const Gauge& g, int trials, std::uint64_t seed) {
    DegreeBoundReport report;
    report.trials = trials;
    if (g.kind() == Gauge::Kind::Euclidean) {
        report.skipped = true;  // B(K) is defined for polytopal unit balls only
        report.ok = true;
        return report;
    }
    const SymmetricPolytope& K = g.body();
    IlluminationReport illum = bezdek_parameter(K);
    report.B = illum.B_value;
    report.bound = static_cast<int>(std::floor(illum.B_value + 1e-6));

    auto record = [&](const std::vector<Vector>& terminals) {
        auto [tree, deg] = solve_smt(terminals, g);
        if (deg.maxVertexDegree > report.maxDegreeObserved) {
            report.maxDegreeObserved = deg.maxVertexDegree;
            if (deg.maxVertexDegree > report.bound) report.offendingInstance = terminals;
        }
    };

    // Canonical star instance: the origin plus the unit-ball vertices.
    VertexList vl = enumerate_vertices(K);
    if (vl.vertices.size() <= 8) {
        std::vector<Vector> star{Vector::Zero(K.dim)};
        for (const auto& v : vl.vertices) star.push_back(v.point);
        record(star);
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> sizeDist(2, 6);
    std::uniform_real_distribution<double> coordDist(-1.0, 1.0);
    for (int t = 0; t < trials; ++t) {
        int n = sizeDist(rng);
        std::vector<Vector> terminals;
        for (int i = 0; i < n; ++i) {
            Vector x(K.dim);
            for (int c = 0; c < K.dim; ++c) x(c) = coordDist(rng);
            terminals.push_back(std::move(x));
        }
        record(terminals);
    }
    report.ok = report.maxDegreeObserved <= report.bound;
    return report;
}

double mst_length(const std::vector<Vector>& points, const Gauge& g) {
    const int n = static_cast<int>(points.size());
    if (n < 2) return 0.0;
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<bool> used(n, false);
    dist[0] = 0.0;
    double total = 0.0;
    for (int it = 0; it < n; ++it) {
        int best = -1;
        for (int i = 0; i < n; ++i)
            if (!used[i] && (best < 0 || dist[i] < dist[best])) best = i;
        used[best] = true;
        total += dist[best];
        for (int i = 0; i < n; ++i)
            if (!used[i]) dist[i] = std::min(dist[i], gauge_eval(points[i] - points[best], g));
    }
    return total;
}

}  // namespace mink
