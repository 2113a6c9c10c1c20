#include "mink/covering.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace mink {

namespace {

constexpr size_t kWitnessCap = 200;

// Affine rank of a point set, with a loose threshold: the polytopes here are
// well conditioned and faces are decided combinatorially first.
int affine_rank(const std::vector<const Vector*>& pts) {
    if (pts.size() <= 1) return 0;
    Eigen::MatrixXd M(pts.size() - 1, pts[0]->size());
    for (size_t i = 1; i < pts.size(); ++i)
        M.row(i - 1) = (*pts[i] - *pts[0]).transpose();
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
    qr.setThreshold(1e-7);
    return static_cast<int>(qr.rank());
}

Vector centroid(const std::vector<const Vector*>& pts) {
    Vector c = Vector::Zero(pts[0]->size());
    for (const auto* p : pts) c += *p;
    return c / static_cast<double>(pts.size());
}

// Triangulates a k-dimensional face (given by its vertices and, for each,
// its active facet set) by coning the face centroid over its (k-1)-subfaces.
void triangulate_face(const std::vector<const Vector*>& pts,
                      const std::vector<const std::vector<int>*>& active, int k,
                      std::vector<Simplex>& out, Simplex& cone) {
    if (static_cast<int>(pts.size()) == k + 1) {
        Simplex s = cone;
        for (const auto* p : pts) s.push_back(*p);
        out.push_back(std::move(s));
        return;
    }
    // Subfaces: for each facet active at a proper nonempty subset, the
    // vertices sharing it form a candidate (k-1)-face.
    std::set<int> candidates;
    for (const auto* a : active) candidates.insert(a->begin(), a->end());
    std::set<std::vector<size_t>> seen;
    Vector c = centroid(pts);
    cone.push_back(c);
    for (int f : candidates) {
        std::vector<size_t> sel;
        for (size_t i = 0; i < pts.size(); ++i)
            if (std::find(active[i]->begin(), active[i]->end(), f) != active[i]->end())
                sel.push_back(i);
        if (sel.empty() || sel.size() == pts.size()) continue;
        if (!seen.insert(sel).second) continue;
        std::vector<const Vector*> subPts;
        std::vector<const std::vector<int>*> subActive;
        for (size_t i : sel) {
            subPts.push_back(pts[i]);
            subActive.push_back(active[i]);
        }
        if (affine_rank(subPts) != k - 1) continue;
        triangulate_face(subPts, subActive, k - 1, out, cone);
    }
    cone.pop_back();
}

bool simplex_in_homothet(const Simplex& s, const Homothet& h, const SymmetricPolytope& K) {
    for (const auto& x : s)
        if (gauge_eval(x - h.t, K) > h.lambda + kGeomTol) return false;
    return true;
}

bool simplex_certified(const Simplex& s, const CoveringCertificate& cert,
                       const SymmetricPolytope& K) {
    for (const auto& h : cert.homothets)
        if (simplex_in_homothet(s, h, K)) return true;
    return false;
}

void verify_rec(const Simplex& s, const CoveringCertificate& cert,
                const SymmetricPolytope& K, int depth, CoverResult& result) {
    if (result.witnesses.size() >= kWitnessCap) return;
    if (simplex_certified(s, cert, K)) return;
    if (depth == 0) {
        result.verdict = CoverVerdict::Undetermined;
        result.witnesses.push_back(s);
        return;
    }
    // Split the longest edge at its midpoint. Length is measured in the body
    // gauge so that splits separate the homothets' territories first.
    size_t bi = 0, bj = 1;
    double best = -1.0;
    for (size_t i = 0; i < s.size(); ++i) {
        for (size_t j = i + 1; j < s.size(); ++j) {
            double len = gauge_eval(s[i] - s[j], K);
            if (len > best) { best = len; bi = i; bj = j; }
        }
    }
    Vector mid = 0.5 * (s[bi] + s[bj]);
    Simplex left = s, right = s;
    left[bj] = mid;
    right[bi] = mid;
    verify_rec(left, cert, K, depth - 1, result);
    verify_rec(right, cert, K, depth - 1, result);
}

}  // namespace

void validate_certificate(const CoveringCertificate& cert, int dim) {
    for (const auto& h : cert.homothets) {
        if (!(h.lambda > 0.0 && h.lambda < 1.0))
            throw InvariantViolation("homothety ratio must lie strictly in (0,1)");
        if (static_cast<int>(h.t.size()) != dim || !h.t.allFinite())
            throw InvariantViolation("homothet translate has wrong dimension or non-finite entries");
    }
}

double covering_cost(const CoveringCertificate& cert) {
    double c = 0.0;
    for (const auto& h : cert.homothets) c += 1.0 / (1.0 - h.lambda);
    return c;
}

std::vector<Simplex> triangulate_body(const SymmetricPolytope& K) {
    VertexList vl = enumerate_vertices(K);
    std::vector<Simplex> out;
    Vector origin = Vector::Zero(K.dim);
    for (size_t f = 0; f < K.normals.size(); ++f) {
        std::vector<const Vector*> pts;
        std::vector<const std::vector<int>*> active;
        for (const auto& v : vl.vertices) {
            if (std::find(v.activeFacets.begin(), v.activeFacets.end(),
                          static_cast<int>(f)) != v.activeFacets.end()) {
                pts.push_back(&v.point);
                active.push_back(&v.activeFacets);
            }
        }
        if (pts.empty()) continue;  // redundant facet
        Simplex cone{origin};
        triangulate_face(pts, active, K.dim - 1, out, cone);
    }
    return out;
}

CoverResult verify_covering(const SymmetricPolytope& K, const CoveringCertificate& cert,
                            int maxDepth) {
    if (maxDepth < 1) throw std::invalid_argument("maxDepth must be >= 1");
    validate_polytope(K);
    validate_certificate(cert, K.dim);
    CoverResult result;
    result.verdict = CoverVerdict::Covered;
    for (const auto& s : triangulate_body(K))
        verify_rec(s, cert, K, maxDepth, result);
    return result;
}

CoveringCertificate cube_halfcover(int d) {
    if (d < 2 || d > 4) throw InvariantViolation("cube_halfcover requires 2 <= d <= 4");
    SymmetricPolytope cube = standard_body("cube", d);
    CoveringCertificate cert;
    for (int mask = 0; mask < (1 << d); ++mask) {
        Homothet h;
        h.lambda = 0.5;
        h.t = Vector(d);
        for (int j = 0; j < d; ++j) h.t(j) = (mask >> j) & 1 ? -0.5 : 0.5;
        cert.homothets.push_back(std::move(h));
    }
    CoverResult res = verify_covering(cube, cert);
    cert.verdict = res.verdict;
    return cert;
}

}  // namespace mink
