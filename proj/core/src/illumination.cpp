#include "mink/illumination.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <unordered_map>

#include "mink/lp.hpp"

namespace mink {

namespace {

constexpr double kStrictTol = 1e-9;
constexpr double kStrictifyFactor = 1.0 + 1e-7;

std::vector<long> bell_numbers(int n) {
    // Bell triangle.
    std::vector<long> bell{1};
    std::vector<long> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<long> next{row.back()};
        for (long x : row) next.push_back(next.back() + x);
        row = std::move(next);
        bell.push_back(row.front());
    }
    return bell;
}

uint32_t facet_mask(const std::vector<int>& facets) {
    uint32_t m = 0;
    for (int f : facets) m |= (1u << f);
    return m;
}

struct BlockSolver {
    const SymmetricPolytope& K;
    Gauge gauge;
    std::unordered_map<uint32_t, LpOutcome> cache;

    explicit BlockSolver(const SymmetricPolytope& body)
        : K(body), gauge(Gauge::polyhedral(body)) {}

    // min ||p||_K subject to a_f . p >= 1 for every facet f in the mask.
    const LpOutcome& solve(uint32_t mask) {
        auto it = cache.find(mask);
        if (it != cache.end()) return it->second;
        std::vector<LinearConstraint> cons;
        for (size_t f = 0; f < K.normals.size(); ++f)
            if (mask & (1u << f))
                cons.push_back({K.normals[f], 1.0, Relation::GreaterEq});
        return cache.emplace(mask, min_gauge_subject_to(gauge, cons)).first->second;
    }

    bool feasible(uint32_t mask) { return solve(mask).status == LpStatus::Optimal; }
};

}  // namespace

bool illuminates_point(const Vector& p, const Vector& q, const SymmetricPolytope& K) {
    for (int f : active_facets(q, K))
        if (K.normals[f].dot(p) <= 1.0 + kStrictTol) return false;
    return true;
}

bool illuminates_body(const std::vector<Vector>& P, const SymmetricPolytope& K) {
    VertexList vl = enumerate_vertices(K);
    for (const auto& v : vl.vertices) {
        bool lit = false;
        for (const auto& p : P) {
            bool ok = true;
            for (int f : v.activeFacets)
                if (K.normals[f].dot(p) <= 1.0 + kStrictTol) { ok = false; break; }
            if (ok) { lit = true; break; }
        }
        if (!lit) return false;
    }
    return true;
}

int illumination_number(const SymmetricPolytope& K) {
    VertexList vl = enumerate_vertices(K);
    const int v = static_cast<int>(vl.vertices.size());
    if (v > 12) throw InvariantViolation("illumination_number: vertex count exceeds 12");
    std::vector<uint32_t> vmask(v);
    for (int i = 0; i < v; ++i) vmask[i] = facet_mask(vl.vertices[i].activeFacets);

    BlockSolver solver(K);

    // Assign vertices to at most k groups; a group is viable while the union
    // of its active-facet systems stays LP-feasible. Canonical ordering: a new
    // group may only be opened as the next unused index.
    std::vector<uint32_t> groups;
    std::function<bool(int, int)> assign = [&](int i, int k) {
        if (i == v) return true;
        int used = static_cast<int>(groups.size());
        for (int g = 0; g < used; ++g) {
            uint32_t merged = groups[g] | vmask[i];
            if (!solver.feasible(merged)) continue;
            uint32_t saved = groups[g];
            groups[g] = merged;
            if (assign(i + 1, k)) return true;
            groups[g] = saved;
        }
        if (used < k && solver.feasible(vmask[i])) {
            groups.push_back(vmask[i]);
            if (assign(i + 1, k)) return true;
            groups.pop_back();
        }
        return false;
    };

    for (int k = 1; k <= v; ++k) {
        groups.clear();
        if (assign(0, k)) return k;
    }
    throw InvariantViolation("illumination_number: no feasible cover (unexpected)");
}

IlluminationReport bezdek_parameter(const SymmetricPolytope& K, long partitionCap) {
    VertexList vl = enumerate_vertices(K);
    const int v = static_cast<int>(vl.vertices.size());
    if (static_cast<size_t>(K.normals.size()) > 32)
        throw InvariantViolation("bezdek_parameter: too many facets");
    auto bell = bell_numbers(std::min(v, 20));
    if (v >= static_cast<int>(bell.size()) || bell[v] > partitionCap)
        throw InvariantViolation("bezdek_parameter: partition cap exceeded (Bell(" +
                                 std::to_string(v) + ") > " + std::to_string(partitionCap) + ")");

    std::vector<uint32_t> vmask(v);
    for (int i = 0; i < v; ++i) vmask[i] = facet_mask(vl.vertices[i].activeFacets);

    BlockSolver solver(K);

    double bestCost = std::numeric_limits<double>::infinity();
    std::vector<int> bestAssign;
    long examined = 0;

    // Restricted-growth enumeration of set partitions; infeasible blocks and
    // partial sums beyond the incumbent kill the branch. The first optimum
    // found is the lexicographically smallest encoding among ties.
    std::vector<int> assign(v, -1);
    std::vector<uint32_t> blocks;
    std::function<void(int, double)> rec = [&](int i, double partial) {
        if (partial >= bestCost - 1e-12) { ++examined; return; }
        if (i == v) {
            ++examined;
            bestCost = partial;
            bestAssign = assign;
            return;
        }
        int used = static_cast<int>(blocks.size());
        for (int b = 0; b <= used && b < v; ++b) {
            uint32_t merged = (b < used ? blocks[b] : 0u) | vmask[i];
            const LpOutcome& withV = solver.solve(merged);
            if (withV.status != LpStatus::Optimal) { ++examined; continue; }
            double delta;
            if (b < used) {
                delta = withV.value - solver.solve(blocks[b]).value;
            } else {
                delta = withV.value;
            }
            assign[i] = b;
            uint32_t saved = b < used ? blocks[b] : 0u;
            if (b < used) blocks[b] = merged; else blocks.push_back(merged);
            rec(i + 1, partial + delta);
            if (b < used) blocks[b] = saved; else blocks.pop_back();
            assign[i] = -1;
        }
    };
    rec(0, 0.0);

    if (!std::isfinite(bestCost))
        throw std::runtime_error("bezdek_parameter: all partitions infeasible (internal error)");

    // Rebuild the winning blocks and strictify the witness lights.
    int nblocks = *std::max_element(bestAssign.begin(), bestAssign.end()) + 1;
    std::vector<uint32_t> winMask(nblocks, 0u);
    for (int i = 0; i < v; ++i) winMask[bestAssign[i]] |= vmask[i];

    IlluminationReport report;
    report.body = K;
    report.B_value = bestCost;
    report.partitionsExamined = examined;
    Gauge g = Gauge::polyhedral(K);
    for (int b = 0; b < nblocks; ++b) {
        Vector p = solver.solve(winMask[b]).witness * kStrictifyFactor;
        report.B_witness.lights.push_back(p);
        report.B_witness.cost += gauge_eval(p, g);
    }
    for (int i = 0; i < v; ++i) report.B_witness.perVertexAssignment[i] = bestAssign[i];
    report.L_value = illumination_number(K);
    return report;
}

LightConfiguration convert_covering_to_lights(const CoveringCertificate& cert,
                                              const SymmetricPolytope& K, double eps) {
    validate_certificate(cert, K.dim);
    double minGap = 1.0;
    for (const auto& h : cert.homothets) minGap = std::min(minGap, 1.0 - h.lambda);
    if (!(eps > 0.0 && eps < minGap))
        throw InvariantViolation("eps must satisfy 0 < eps < min_i(1 - lambda_i)");

    Gauge g = Gauge::polyhedral(K);
    LightConfiguration cfg;
    for (const auto& h : cert.homothets) {
        Vector p = h.t / (1.0 - h.lambda - eps);
        cfg.cost += gauge_eval(p, g);
        cfg.lights.push_back(std::move(p));
    }
    // Record which light (if any) illuminates each vertex; the converter does
    // not validate coverage.
    VertexList vl = enumerate_vertices(K);
    for (size_t i = 0; i < vl.vertices.size(); ++i) {
        for (size_t j = 0; j < cfg.lights.size(); ++j) {
            bool ok = true;
            for (int f : vl.vertices[i].activeFacets)
                if (K.normals[f].dot(cfg.lights[j]) <= 1.0 + kStrictTol) { ok = false; break; }
            if (ok) { cfg.perVertexAssignment[static_cast<int>(i)] = static_cast<int>(j); break; }
        }
    }
    return cfg;
}

double lemma1_margin(const Vector& u, const Vector& p, const SymmetricPolytope& K,
                     double eps) {
    if (!(eps > 0.0)) throw InvariantViolation("eps must be positive");
    double g = gauge_eval(u, K);
    if (std::abs(g - 1.0) > kGeomTol)
        throw InvariantViolation("u is not on the boundary within tolerance");
    return (1.0 - eps) - gauge_eval(u - eps * p, K);
}

}  // namespace mink
