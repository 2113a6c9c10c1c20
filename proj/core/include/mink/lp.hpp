#ifndef MINK_LP_HPP
#define MINK_LP_HPP

#include <Eigen/Dense>
#include <vector>

#include "mink/geometry.hpp"

namespace mink {

enum class Relation { LessEq, GreaterEq, Equal };

struct LinearConstraint {
    Eigen::VectorXd a;
    double b = 0.0;
    Relation rel = Relation::LessEq;
};

/// Minimize objective . x subject to the constraints. All variables are free.
struct LinearProgram {
    Eigen::VectorXd objective;
    std::vector<LinearConstraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    double value = 0.0;
    Eigen::VectorXd witness;
};

/// Thrown when a pivot falls below 1e-11 or the iteration cap is hit.
class LpNumericalFailure : public std::runtime_error {
public:
    explicit LpNumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Dense two-phase tableau simplex with Bland's anti-cycling rule.
/// Deterministic for a fixed input ordering; free variables are split.
LpOutcome solve_lp(const LinearProgram& lp);

/// Minimizes ||p||_K subject to the given linear constraints on p
/// (polyhedral gauges only). Encoded as: min t s.t. a_i.p <= t over all
/// facet normals a_i, plus the caller's constraints. The witness holds p;
/// the value is ||p||_K at the optimum.
LpOutcome min_gauge_subject_to(const Gauge& g,
                               const std::vector<LinearConstraint>& constraints);

}  // namespace mink

#endif
