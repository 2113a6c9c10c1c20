#ifndef MINK_ILLUMINATION_HPP
#define MINK_ILLUMINATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mink/covering.hpp"
#include "mink/geometry.hpp"

namespace mink {

/// A finite set of light sources together with its total gauge cost.
struct LightConfiguration {
    std::vector<Vector> lights;
    double cost = 0.0;                       // sum of ||p_j||_K, recomputed
    std::map<int, int> perVertexAssignment;  // vertex index -> light index
};

struct IlluminationReport {
    SymmetricPolytope body;
    int L_value = 0;
    double B_value = 0.0;  // closed-relaxation minimum (equals the infimum)
    LightConfiguration B_witness;
    long partitionsExamined = 0;
};

/// Default cap on the number of vertex-set partitions examined by
/// bezdek_parameter; Bell(8) = 4140.
inline constexpr long kDefaultPartitionCap = 4140;

/// True iff p illuminates the boundary point q of K, i.e. a_i.p > 1 + 1e-9
/// for every facet i active at q. Moving from q in direction q - p enters
/// the interior exactly when p lies strictly beyond every active hyperplane.
bool illuminates_point(const Vector& p, const Vector& q, const SymmetricPolytope& K);

/// True iff every vertex of K is illuminated by some point of P.
///
/// Vertex reduction: any boundary point q lies in the relative interior of a
/// face F, and its active facet set equals that of F, which is contained in
/// the active set of every vertex of F. A light strictly beyond the active
/// hyperplanes of a vertex of F is strictly beyond those of q, so
/// illuminating all vertices illuminates the whole boundary.
bool illuminates_body(const std::vector<Vector>& P, const SymmetricPolytope& K);

/// Smallest number of lights that illuminate K: minimum number of groups in
/// a cover of the vertex set whose combined active-facet systems
/// {a_i.p >= 1} are each LP-feasible. Search by increasing k with canonical
/// pruning. Requires vertex count <= 12.
int illumination_number(const SymmetricPolytope& K);

/// Bezdek's parameter B(K): exact minimum of sum ||p_j||_K over illuminating
/// sets, computed by enumerating set partitions of the vertex set and solving
/// a min-gauge LP per block over the union of the block's active facets.
/// The closed constraints a_i.p >= 1 give the same value as the strict
/// infimum (scale any optimum by 1+delta); witnesses are strictified by the
/// factor 1+1e-7. Throws if the Bell number of the vertex count exceeds
/// partitionCap.
IlluminationReport bezdek_parameter(const SymmetricPolytope& K,
                                    long partitionCap = kDefaultPartitionCap);

/// Proposition-style converter: lights p_i = (1 - lambda_i - eps)^{-1} t_i
/// from a covering certificate. Requires 0 < eps < min_i(1 - lambda_i).
/// Does not validate coverage; a verified covering yields an illuminating set.
LightConfiguration convert_covering_to_lights(const CoveringCertificate& cert,
                                              const SymmetricPolytope& K,
                                              double eps = 1e-6);

/// (1 - eps) - ||u - eps*p||_K for a boundary point u; positive for all
/// sufficiently small eps whenever p illuminates u.
double lemma1_margin(const Vector& u, const Vector& p, const SymmetricPolytope& K,
                     double eps);

}  // namespace mink

#endif
