// Serial reference kernels against their OpenMP counterparts on the Example-1 fine mesh.

#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>
#include <random>

#include "sots/fem.hpp"
#include "sots/kernels.hpp"
#include "sots/macro_solver.hpp"
#include "sots/reconstruction.hpp"
#include "sots/unit_cell.hpp"

namespace {

using namespace sots;

UnitCellSpec cell(const std::string& id, int n, double r) {
  UnitCellSpec c;
  c.cell_id = id;
  c.divisions = n;
  c.k_matrix = 100.0;
  c.k_inclusion = 0.1;
  c.inclusion.shape = InclusionShape::circle;
  c.inclusion.size = r;
  return c;
}

struct Fixture {
  std::vector<SubdomainSpec> subdomains{{{0, 0, 1, 1}, "Q1", 1.0 / 6.0},
                                        {{1, 0, 2, 1}, "Q2", 0.25},
                                        {{1, 1, 2, 2}, "Q1", 1.0 / 6.0},
                                        {{0, 1, 1, 2}, "Q2", 0.25}};
  std::vector<UnitCellSpec> cells{cell("Q1", 20, 0.25), cell("Q2", 30, 0.3)};
  std::shared_ptr<const Mesh2D> fine;
  ConductivityField k;
  NodeIncidence incidence;
  CsrMatrix matrix;
  std::vector<double> x, y;
  std::unique_ptr<MultiscaleSolution> solution;

  Fixture() {
    const Rect domain{0, 0, 2, 2};
    fine = std::make_shared<const Mesh2D>(generate_fine_mesh(domain, subdomains, cells));
    k = ConductivityField::from_phases(*fine, 1.0, 0.001);
    incidence = node_incidence(*fine);
    matrix = p1_pattern(*fine, incidence);
    kernels::serial::assemble_stiffness(*fine, k.tensors, matrix);
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    x.resize(fine->num_nodes());
    y.resize(fine->num_nodes());
    for (auto& v : x) v = u(gen);

    auto macro = std::make_shared<const Mesh2D>(generate_macro_mesh(domain, subdomains, 60));
    std::vector<double> t(macro->num_nodes());
    for (int i = 0; i < macro->num_nodes(); ++i) {
      const auto& p = macro->nodes[i];
      t[i] = 373.15 + 40.0 * std::sin(M_PI * p.x / 2) * std::sin(M_PI * p.y / 2);
    }
    ScalarField t0(macro, t);
    std::vector<CellSolutionSet> solved{solve_cell(cells[0]), solve_cell(cells[1])};
    solution = std::make_unique<MultiscaleSolution>(subdomains, t0, derivatives_of_T0(t0), solved);
  }
};

Fixture& fixture() {
  static Fixture f;
  return f;
}

void BM_spmv_serial(benchmark::State& state) {
  auto& f = fixture();
  for (auto _ : state) {
    kernels::serial::spmv(f.matrix, f.x, f.y);
    benchmark::DoNotOptimize(f.y.data());
  }
}

void BM_spmv_omp(benchmark::State& state) {
  auto& f = fixture();
  for (auto _ : state) {
    kernels::spmv(f.matrix, f.x, f.y);
    benchmark::DoNotOptimize(f.y.data());
  }
}

void BM_dot_serial(benchmark::State& state) {
  auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::dot(f.x, f.x));
}

void BM_dot_omp(benchmark::State& state) {
  auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::dot(f.x, f.x));
}

void BM_assembly_serial(benchmark::State& state) {
  auto& f = fixture();
  CsrMatrix a = p1_pattern(*f.fine, f.incidence);
  for (auto _ : state) {
    kernels::serial::assemble_stiffness(*f.fine, f.k.tensors, a);
    benchmark::DoNotOptimize(a.vals.data());
  }
}

void BM_assembly_omp(benchmark::State& state) {
  auto& f = fixture();
  CsrMatrix a = p1_pattern(*f.fine, f.incidence);
  for (auto _ : state) {
    kernels::assemble_stiffness(*f.fine, f.k.tensors, f.incidence, a);
    benchmark::DoNotOptimize(a.vals.data());
  }
}

void BM_sampling_serial(benchmark::State& state) {
  auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(serial::sample_all_orders(*f.solution, f.fine));
}

void BM_sampling_omp(benchmark::State& state) {
  auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(sample_all_orders(*f.solution, f.fine));
}

}  // namespace

BENCHMARK(BM_spmv_serial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_spmv_omp)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_dot_serial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_dot_omp)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_assembly_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_assembly_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sampling_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sampling_omp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
