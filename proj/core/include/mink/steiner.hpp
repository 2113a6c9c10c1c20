#ifndef MINK_STEINER_HPP
#define MINK_STEINER_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mink/geometry.hpp"

namespace mink {

/// Tree over n terminals (labels 0..n-1) and k Steiner vertices
/// (labels n..n+k-1). Full topologies have every Steiner vertex of degree 3
/// and every terminal of degree 1; arbitrary topologies arise by collapsing
/// zero-length edges.
struct SteinerTopology {
    int terminals = 0;
    int steiners = 0;
    std::vector<std::pair<int, int>> edges;
};

/// All (2n-5)!! full topologies on n terminals, generated by sequential edge
/// insertion in a fixed deterministic order. Requires 3 <= n <= 9.
std::vector<SteinerTopology> enumerate_full_topologies(int n);

struct EmbeddedTree {
    SteinerTopology topology;
    std::vector<Vector> coords;  // terminals first, then Steiner vertices
    std::vector<double> edgeLengths;
    double totalLength = 0.0;
};

struct DegreeReport {
    double collapseTol = 1e-6;
    int maxVertexDegree = 0;
    int maxSteinerDegree = 0;  // over collapsed classes containing no terminal
    std::vector<std::vector<int>> collapsedClasses;
};

/// Shortest embedding of a fixed topology. Polyhedral gauges are solved
/// exactly as an LP (one length variable per edge bounded below by every
/// facet functional of the difference); Euclidean gauges by coordinate
/// descent with the smoothed norm sqrt(|.|^2 + delta^2), delta annealed
/// 1e-3 -> 1e-10, stopping when the relative improvement is below 1e-12.
EmbeddedTree minimize_fixed_topology(const SteinerTopology& top,
                                     const std::vector<Vector>& terminals,
                                     const Gauge& g);

/// Degree statistics after merging vertices joined by edges of length <= tol.
DegreeReport degree_report(const EmbeddedTree& tree, double tol = 1e-6);

/// Exact K-SMT (polyhedral) / approximate Euclidean SMT over all full
/// topologies; ties broken by the first topology in enumeration order.
/// Requires 2 <= n <= 9.
std::pair<EmbeddedTree, DegreeReport> solve_smt(const std::vector<Vector>& terminals,
                                                const Gauge& g);

struct StarTestResult {
    bool isSMT = false;
    double starLength = 0.0;
    double smtLength = 0.0;
};

/// Tests whether the star joining the origin to the unit vectors U is an
/// SMT of {o} united with U under the gauge. A true result certifies
/// v(K) >= |U|. Requires gauge 1 +- 1e-9 directions and |U| <= 8.
StarTestResult star_smt_test(const Gauge& g, const std::vector<Vector>& U);
StarTestResult star_smt_test(const SymmetricPolytope& K, const std::vector<Vector>& U);

struct Thm2Move {
    double lenStar = 0.0;      // |U|
    double lenModified = 0.0;  // (|U|-|Uj|) + ||eps p|| + sum ||u - eps p||
    std::vector<int> illuminatedIdx;
};

/// The star-vs-modified-tree comparison: replaces the edges from the origin
/// to the vertices illuminated by p with edges from the Steiner point eps*p,
/// joined back to the origin. If the star is an SMT, lenModified >= lenStar,
/// which rearranges to |Uj| < ||p||_K.
Thm2Move thm2_local_move(const SymmetricPolytope& K, const std::vector<Vector>& U,
                         const Vector& p, double eps);

struct DegreeBoundReport {
    bool skipped = false;  // Euclidean gauges have no B(K); check is skipped
    double B = 0.0;
    int bound = 0;  // floor(B + 1e-6)
    int maxDegreeObserved = 0;
    int trials = 0;
    bool ok = false;
    std::vector<Vector> offendingInstance;  // empty unless the bound failed
};

/// Runs solve_smt on `trials` random terminal sets (n in [2,6], coordinates
/// uniform in [-1,1]^d, fixed seed) plus the canonical star instance
/// ({o} + vertices of K) and checks max vertex degree <= floor(B(K)+1e-6).
DegreeBoundReport degree_bound_check(const Gauge& g, int trials, std::uint64_t seed);

/// Minimum spanning tree length over gauge distances (Prim).
double mst_length(const std::vector<Vector>& points, const Gauge& g);

}  // namespace mink

#endif
