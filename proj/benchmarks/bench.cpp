#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mink/illumination.hpp"
#include "mink/lp.hpp"
#include "mink/steiner.hpp"

using namespace mink;

namespace {

Vector vec2(double x, double y) {
    Vector v(2);
    v << x, y;
    return v;
}

void BM_solve_lp_random(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    LinearProgram lp;
    lp.objective = Eigen::VectorXd::Zero(n);
    for (int j = 0; j < n; ++j) lp.objective(j) = std::abs(coef(rng));
    for (int i = 0; i < 4 * n; ++i) {
        Eigen::VectorXd row(n);
        for (int j = 0; j < n; ++j) row(j) = coef(rng);
        lp.constraints.push_back({row, -std::abs(coef(rng)), Relation::GreaterEq});
    }
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
        e(j) = 1;
        lp.constraints.push_back({e, 0, Relation::GreaterEq});
    }
    for (auto _ : state) benchmark::DoNotOptimize(solve_lp(lp));
}
BENCHMARK(BM_solve_lp_random)->Arg(5)->Arg(10)->Arg(20);

void BM_bezdek_hexagon(benchmark::State& state) {
    auto hex = standard_body("hexagon", 2);
    for (auto _ : state) benchmark::DoNotOptimize(bezdek_parameter(hex));
}
BENCHMARK(BM_bezdek_hexagon);

void BM_bezdek_cube3(benchmark::State& state) {
    auto cube = standard_body("cube", 3);
    for (auto _ : state) benchmark::DoNotOptimize(bezdek_parameter(cube));
}
BENCHMARK(BM_bezdek_cube3);

void BM_smt_polyhedral(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto g = Gauge::polyhedral(standard_body("hexagon", 2));
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<Vector> T;
    for (int i = 0; i < n; ++i) T.push_back(vec2(unit(rng), unit(rng)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_smt(T, g));
}
BENCHMARK(BM_smt_polyhedral)->Arg(4)->Arg(5);

void BM_smt_euclidean(benchmark::State& state) {
    auto g = Gauge::euclidean(2);
    std::vector<Vector> T{vec2(0, 0), vec2(1, 0), vec2(1, 1), vec2(0, 1)};
    for (auto _ : state) benchmark::DoNotOptimize(solve_smt(T, g));
}
BENCHMARK(BM_smt_euclidean);

}  // namespace

BENCHMARK_MAIN();
