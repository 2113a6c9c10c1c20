#include "mink/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mink/lp.hpp"

namespace mink {

void validate_polytope(const SymmetricPolytope& K) {
    if (K.dim < 2 || K.dim > 4)
        throw InvariantViolation("dimension must satisfy 2 <= d <= 4");
    if (K.normals.empty())
        throw InvariantViolation("polytope must have at least one facet normal");
    for (const auto& a : K.normals) {
        if (static_cast<int>(a.size()) != K.dim)
            throw InvariantViolation("normal dimension does not match dim");
        if (!a.allFinite())
            throw InvariantViolation("normal has non-finite entries");
    }
    // Centredness: every normal has a negation partner.
    for (const auto& a : K.normals) {
        bool found = false;
        for (const auto& b : K.normals) {
            if ((a + b).lpNorm<Eigen::Infinity>() <= kGeomTol) { found = true; break; }
        }
        if (!found)
            throw InvariantViolation("normals not closed under negation (K != -K)");
    }
    // Boundedness: max +-e_j . x over {a_i . x <= 1} must be bounded.
    for (int j = 0; j < K.dim; ++j) {
        for (double sign : {1.0, -1.0}) {
            LinearProgram lp;
            lp.objective = Eigen::VectorXd::Zero(K.dim);
            lp.objective(j) = -sign;  // maximize sign * e_j . x
            for (const auto& a : K.normals)
                lp.constraints.push_back({a, 1.0, Relation::LessEq});
            if (solve_lp(lp).status != LpStatus::Optimal)
                throw InvariantViolation("normals do not positively span (unbounded polytope)");
        }
    }
    for (size_t i = 0; i < K.normals.size(); ++i)
        for (size_t j = i + 1; j < K.normals.size(); ++j)
            if ((K.normals[i] - K.normals[j]).lpNorm<Eigen::Infinity>() <= kGeomTol)
                throw InvariantViolation("duplicate facet normals");
}

Gauge Gauge::polyhedral(SymmetricPolytope K) {
    validate_polytope(K);
    Gauge g;
    g.kind_ = Kind::Polyhedral;
    g.dim_ = K.dim;
    g.body_ = std::move(K);
    return g;
}

Gauge Gauge::euclidean(int dim) {
    if (dim < 2 || dim > 4)
        throw InvariantViolation("dimension must satisfy 2 <= d <= 4");
    Gauge g;
    g.kind_ = Kind::Euclidean;
    g.dim_ = dim;
    return g;
}

const SymmetricPolytope& Gauge::body() const {
    if (kind_ != Kind::Polyhedral)
        throw std::logic_error("euclidean gauge has no polytope body");
    return body_;
}

double gauge_eval(const Vector& x, const Gauge& g) {
    if (static_cast<int>(x.size()) != g.dim())
        throw std::invalid_argument("gauge_eval: dimension mismatch");
    if (g.kind() == Gauge::Kind::Euclidean) return x.norm();
    double m = 0.0;
    for (const auto& a : g.body().normals) m = std::max(m, a.dot(x));
    return m;
}

double gauge_eval(const Vector& x, const SymmetricPolytope& K) {
    if (static_cast<int>(x.size()) != K.dim)
        throw std::invalid_argument("gauge_eval: dimension mismatch");
    double m = 0.0;
    for (const auto& a : K.normals) m = std::max(m, a.dot(x));
    return m;
}

SymmetricPolytope standard_body(const std::string& name, int d) {
    if (d < 2 || d > 4) throw InvariantViolation("dimension must satisfy 2 <= d <= 4");
    SymmetricPolytope K;
    K.dim = d;
    if (name == "cube") {
        for (int j = 0; j < d; ++j) {
            for (double sign : {1.0, -1.0}) {
                Vector a = Vector::Zero(d);
                a(j) = sign;
                K.normals.push_back(a);
            }
        }
    } else if (name == "crosspolytope" || name == "cross") {
        for (int mask = 0; mask < (1 << d); ++mask) {
            Vector a(d);
            for (int j = 0; j < d; ++j) a(j) = (mask >> j) & 1 ? -1.0 : 1.0;
            K.normals.push_back(a);
        }
    } else if (name == "hexagon") {
        if (d != 2) throw InvariantViolation("hexagon requires d = 2");
        for (int k = 0; k < 6; ++k) {
            double th = k * M_PI / 3.0;
            Vector a(2);
            a << std::cos(th), std::sin(th);
            K.normals.push_back(a);
        }
    } else {
        throw InvariantViolation("unknown body name: " + name);
    }
    return K;
}

namespace {

void subsets_rec(int start, int need, int total, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& fn) {
    if (need == 0) { fn(cur); return; }
    for (int i = start; i <= total - need; ++i) {
        cur.push_back(i);
        subsets_rec(i + 1, need - 1, total, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

VertexList enumerate_vertices(const SymmetricPolytope& K) {
    validate_polytope(K);
    const int d = K.dim;
    const int m = static_cast<int>(K.normals.size());
    std::vector<Vector> found;

    std::vector<int> cur;
    subsets_rec(0, d, m, cur, [&](const std::vector<int>& idx) {
        Eigen::MatrixXd A(d, d);
        for (int r = 0; r < d; ++r) A.row(r) = K.normals[idx[r]].transpose();
        Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
        lu.setThreshold(1e-9);
        if (lu.rank() < d) return;
        Vector v = lu.solve(Vector::Ones(d));
        for (const auto& a : K.normals)
            if (a.dot(v) > 1.0 + kGeomTol) return;
        for (const auto& w : found)
            if ((w - v).lpNorm<Eigen::Infinity>() <= kGeomTol) return;
        found.push_back(v);
    });
    if (found.empty())
        throw InvariantViolation("degenerate polytope: no vertices found");

    std::sort(found.begin(), found.end(), [](const Vector& a, const Vector& b) {
        for (int i = 0; i < a.size(); ++i) {
            if (a(i) < b(i) - kGeomTol) return true;
            if (a(i) > b(i) + kGeomTol) return false;
        }
        return false;
    });

    VertexList out;
    for (const auto& v : found) {
        VertexInfo info;
        info.point = v;
        for (int i = 0; i < m; ++i)
            if (std::abs(K.normals[i].dot(v) - 1.0) <= kGeomTol)
                info.activeFacets.push_back(i);
        out.vertices.push_back(std::move(info));
    }
    return out;
}

std::vector<int> active_facets(const Vector& q, const SymmetricPolytope& K, double tol) {
    double g = gauge_eval(q, K);
    if (g < 1.0 - tol || g > 1.0 + tol)
        throw InvariantViolation("point is not on the boundary within tolerance");
    std::vector<int> out;
    for (size_t i = 0; i < K.normals.size(); ++i)
        if (std::abs(K.normals[i].dot(q) - 1.0) <= tol)
            out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace mink
