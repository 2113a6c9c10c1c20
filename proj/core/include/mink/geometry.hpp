#ifndef MINK_GEOMETRY_HPP
#define MINK_GEOMETRY_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace mink {

using Vector = Eigen::VectorXd;

/// Geometric feasibility/equality tolerance used throughout.
inline constexpr double kGeomTol = 1e-9;

/// Centred convex polytope in facet form {x : a_i . x <= 1}.
/// The set of normals is closed under negation, so the polytope doubles as
/// the unit ball of a norm.
struct SymmetricPolytope {
    int dim = 0;
    std::vector<Vector> normals;
};

/// Thrown when a polytope (or other input) violates a structural invariant.
/// The message names the first violated invariant.
class InvariantViolation : public std::runtime_error {
public:
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Validates all SymmetricPolytope invariants, throwing InvariantViolation
/// naming the first violated one: centredness, boundedness (normals
/// positively span), no duplicate normals within 1e-9.
void validate_polytope(const SymmetricPolytope& K);

/// Norm evaluator: either the gauge of a symmetric polytope
/// (max of linear functionals) or the Euclidean norm.
class Gauge {
public:
    enum class Kind { Polyhedral, Euclidean };

    static Gauge polyhedral(SymmetricPolytope K);
    static Gauge euclidean(int dim);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    const SymmetricPolytope& body() const;

private:
    Gauge() = default;
    Kind kind_ = Kind::Euclidean;
    int dim_ = 0;
    SymmetricPolytope body_;
};

/// ||x||_K. Polyhedral: max_i a_i.x clamped below at 0; Euclidean: 2-norm.
double gauge_eval(const Vector& x, const Gauge& g);

/// Convenience overload for a polytope gauge.
double gauge_eval(const Vector& x, const SymmetricPolytope& K);

/// Named unit balls: "cube" (2d facets), "crosspolytope" (2^d facets),
/// "hexagon" (d=2 only, unit inradius, 6 facets at 60-degree steps).
SymmetricPolytope standard_body(const std::string& name, int d);

struct VertexInfo {
    Vector point;
    std::vector<int> activeFacets;  // indices i with |a_i.v - 1| <= 1e-9
};

struct VertexList {
    std::vector<VertexInfo> vertices;
};

/// Enumerates all vertices by intersecting d-subsets of facet hyperplanes,
/// keeping feasible solutions, deduplicating at 1e-9, and recomputing active
/// sets against all facets. Deterministic (lexicographic) output order.
VertexList enumerate_vertices(const SymmetricPolytope& K);

/// Facet indices i with |a_i.q - 1| <= tol. Requires q on the boundary
/// (gauge within [1-tol, 1+tol]); throws InvariantViolation otherwise.
std::vector<int> active_facets(const Vector& q, const SymmetricPolytope& K,
                               double tol = kGeomTol);

}  // namespace mink

#endif
