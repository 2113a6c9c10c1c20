#include "mink/lp.hpp"

#include <cmath>
#include <limits>

namespace mink {

namespace {

constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-11;
constexpr double kPhase1Tol = 1e-8;
constexpr long kMaxIterations = 200000;

struct Tableau {
    Eigen::MatrixXd A;       // m x ncols
    Eigen::VectorXd rhs;     // m, kept nonnegative
    Eigen::VectorXd costRow; // reduced costs, ncols
    double objShift = 0.0;   // c_B . rhs accumulated
    std::vector<int> basis;  // basic column per row
    int firstArtificial = 0; // columns >= this are phase-1 artificials

    int rows() const { return static_cast<int>(A.rows()); }
    int cols() const { return static_cast<int>(A.cols()); }

    void pivot(int r, int c) {
        double piv = A(r, c);
        if (std::abs(piv) < kPivotTol)
            throw LpNumericalFailure("simplex pivot below 1e-11");
        A.row(r) /= piv;
        rhs(r) /= piv;
        for (int i = 0; i < rows(); ++i) {
            if (i == r) continue;
            double f = A(i, c);
            if (f != 0.0) {
                A.row(i) -= f * A.row(r);
                rhs(i) -= f * rhs(r);
                if (rhs(i) < 0 && rhs(i) > -1e-12) rhs(i) = 0;
            }
        }
        double f = costRow(c);
        if (f != 0.0) {
            costRow -= f * A.row(r).transpose();
            objShift += f * rhs(r);
        }
        basis[r] = c;
    }

    // Bland's rule: entering = smallest index with negative reduced cost;
    // leaving = min ratio, ties by smallest basic variable index.
    // Returns Optimal or Unbounded.
    LpStatus iterate(bool allowArtificialEntering) {
        for (long iter = 0; iter < kMaxIterations; ++iter) {
            int enter = -1;
            int limit = allowArtificialEntering ? cols() : firstArtificial;
            for (int j = 0; j < limit; ++j) {
                if (costRow(j) < -kReducedCostTol) { enter = j; break; }
            }
            if (enter < 0) return LpStatus::Optimal;

            int leave = -1;
            double bestRatio = std::numeric_limits<double>::infinity();
            for (int i = 0; i < rows(); ++i) {
                double aij = A(i, enter);
                if (aij > kPivotTol) {
                    double ratio = rhs(i) / aij;
                    if (ratio < bestRatio - 1e-12 ||
                        (ratio < bestRatio + 1e-12 &&
                         (leave < 0 || basis[i] < basis[leave]))) {
                        bestRatio = ratio;
                        leave = i;
                    }
                }
            }
            if (leave < 0) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
        throw LpNumericalFailure("simplex iteration cap exceeded");
    }
};

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp) {
    const int n = static_cast<int>(lp.objective.size());
    const int m = static_cast<int>(lp.constraints.size());
    for (const auto& c : lp.constraints) {
        if (static_cast<int>(c.a.size()) != n)
            throw std::invalid_argument("constraint dimension mismatch");
        if (!c.a.allFinite() || !std::isfinite(c.b))
            throw std::invalid_argument("non-finite LP coefficient");
    }
    if (!lp.objective.allFinite())
        throw std::invalid_argument("non-finite LP objective");

    // Normalize rows to b >= 0; a >= row with b == 0 flips to a <= row.
    struct Row { Eigen::VectorXd a; double b; Relation rel; };
    std::vector<Row> rows;
    rows.reserve(m);
    for (const auto& c : lp.constraints) {
        Row r{c.a, c.b, c.rel};
        if (r.b < 0) {
            r.a = -r.a;
            r.b = -r.b;
            if (r.rel == Relation::LessEq) r.rel = Relation::GreaterEq;
            else if (r.rel == Relation::GreaterEq) r.rel = Relation::LessEq;
        }
        if (r.rel == Relation::GreaterEq && r.b == 0.0) {
            r.a = -r.a;
            r.rel = Relation::LessEq;
        }
        rows.push_back(std::move(r));
    }

    // Columns: n positive parts, n negative parts, one slack/surplus per
    // inequality, artificials for rows without a ready identity column.
    int nSlack = 0, nArt = 0;
    for (const auto& r : rows) {
        if (r.rel != Relation::Equal) ++nSlack;
        if (r.rel != Relation::LessEq) ++nArt;
    }
    const int split = 2 * n;
    const int ncols = split + nSlack + nArt;

    Tableau T;
    T.A = Eigen::MatrixXd::Zero(m, ncols);
    T.rhs = Eigen::VectorXd::Zero(m);
    T.basis.assign(m, -1);
    T.firstArtificial = split + nSlack;

    int slackCol = split, artCol = T.firstArtificial;
    for (int i = 0; i < m; ++i) {
        const Row& r = rows[i];
        T.A.row(i).head(n) = r.a.transpose();
        T.A.row(i).segment(n, n) = -r.a.transpose();
        T.rhs(i) = r.b;
        if (r.rel == Relation::LessEq) {
            T.A(i, slackCol) = 1.0;
            T.basis[i] = slackCol++;
        } else if (r.rel == Relation::GreaterEq) {
            T.A(i, slackCol) = -1.0;
            ++slackCol;
            T.A(i, artCol) = 1.0;
            T.basis[i] = artCol++;
        } else {
            T.A(i, artCol) = 1.0;
            T.basis[i] = artCol++;
        }
    }

    // Phase 1: minimize the sum of artificials.
    if (nArt > 0) {
        T.costRow = Eigen::VectorXd::Zero(ncols);
        T.costRow.tail(nArt).setOnes();
        T.objShift = 0.0;
        for (int i = 0; i < m; ++i) {
            if (T.basis[i] >= T.firstArtificial) {
                T.costRow -= T.A.row(i).transpose();
                T.objShift += T.rhs(i);
            }
        }
        LpStatus st = T.iterate(true);
        (void)st;  // phase 1 is bounded below by 0
        if (T.objShift > kPhase1Tol) return {LpStatus::Infeasible, 0.0, {}};
        // Drive remaining artificials out of the basis.
        for (int i = 0; i < m; ++i) {
            if (T.basis[i] < T.firstArtificial) continue;
            int col = -1;
            for (int j = 0; j < T.firstArtificial; ++j) {
                if (std::abs(T.A(i, j)) > 1e-7) { col = j; break; }
            }
            if (col >= 0) {
                T.pivot(i, col);
            } else {
                // Redundant row; neutralize it so it can never pivot again.
                T.A.row(i).setZero();
                T.A(i, T.basis[i]) = 1.0;
                T.rhs(i) = 0.0;
            }
        }
    }

    // Phase 2: real objective over split variables.
    T.costRow = Eigen::VectorXd::Zero(ncols);
    T.costRow.head(n) = lp.objective;
    T.costRow.segment(n, n) = -lp.objective;
    T.objShift = 0.0;
    for (int i = 0; i < m; ++i) {
        int b = T.basis[i];
        double cb = 0.0;
        if (b < n) cb = lp.objective(b);
        else if (b < split) cb = -lp.objective(b - n);
        if (cb != 0.0) {
            T.costRow -= cb * T.A.row(i).transpose();
            T.objShift += cb * T.rhs(i);
        }
    }
    LpStatus st = T.iterate(false);
    if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, 0.0, {}};

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < m; ++i) {
        int b = T.basis[i];
        if (b < n) x(b) += T.rhs(i);
        else if (b < split) x(b - n) -= T.rhs(i);
    }
    return {LpStatus::Optimal, lp.objective.dot(x), x};
}

LpOutcome min_gauge_subject_to(const Gauge& g,
                               const std::vector<LinearConstraint>& constraints) {
    if (g.kind() != Gauge::Kind::Polyhedral)
        throw std::invalid_argument("min_gauge_subject_to requires a polyhedral gauge");
    const int d = g.dim();
    LinearProgram lp;
    lp.objective = Eigen::VectorXd::Zero(d + 1);
    lp.objective(d) = 1.0;  // minimize t = ||p||_K
    for (const auto& a : g.body().normals) {
        Eigen::VectorXd row(d + 1);
        row.head(d) = a;
        row(d) = -1.0;
        lp.constraints.push_back({row, 0.0, Relation::LessEq});
    }
    for (const auto& c : constraints) {
        if (static_cast<int>(c.a.size()) != d)
            throw std::invalid_argument("constraint dimension mismatch");
        Eigen::VectorXd row = Eigen::VectorXd::Zero(d + 1);
        row.head(d) = c.a;
        lp.constraints.push_back({row, c.b, c.rel});
    }
    LpOutcome out = solve_lp(lp);
    if (out.status == LpStatus::Optimal) out.witness = out.witness.head(d).eval();
    return out;
}

}  // namespace mink
