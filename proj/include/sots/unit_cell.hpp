#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sots/fem.hpp"
#include "sots/mesh.hpp"

namespace sots {

/// Correctors and homogenized tensor of one unit cell.
///
/// `first[a]` is the first-order corrector for direction a; `second[2 * a1 + a2]`
/// the second-order corrector for the index pair (a1, a2). All vanish on the
/// cell boundary.
struct CellSolutionSet {
  std::string cell_id;
  std::shared_ptr<const Mesh2D> mesh;
  std::vector<ScalarField> first;
  std::vector<ScalarField> second;
  Tensor2 k_hat;
  int total_iterations = 0;

  const ScalarField& second_order(int a1, int a2) const { return second[2 * a1 + a2]; }
};

/// Cell stiffness with every boundary node fixed to zero. One matrix, many right-hand sides.
struct CellOperator {
  std::shared_ptr<const Mesh2D> mesh;
  ConductivityField k;
  SparseSystem system;

  CellOperator(std::shared_ptr<const Mesh2D> cell_mesh, ConductivityField conductivity);
};

std::vector<ScalarField> solve_first_order_cells(const CellOperator& op,
                                                 const SolverOptions& options = {},
                                                 int* iterations = nullptr);

/// k_hat_ij = sum over elements of area * (k_ij + k_ia dM_j/dy_a); the cell has unit area.
Tensor2 compute_homogenized_tensor(const Mesh2D& mesh, const ConductivityField& k,
                                   std::span<const ScalarField> first);

std::vector<ScalarField> solve_second_order_cells(const CellOperator& op,
                                                  std::span<const ScalarField> first,
                                                  const Tensor2& k_hat,
                                                  const SolverOptions& options = {},
                                                  int* iterations = nullptr);

/// Meshes the cell at its own divisions and runs all three stages.
CellSolutionSet solve_cell(const UnitCellSpec& spec, const SolverOptions& options = {});
CellSolutionSet solve_cell(const UnitCellSpec& spec, std::shared_ptr<const Mesh2D> mesh,
                           const SolverOptions& options = {});

/// Non-fatal checks on a homogenized tensor; never used to reject a result.
struct TensorDiagnostics {
  double inclusion_fraction = 0.0;
  double asymmetry = 0.0;             // |k12 - k21| / k11
  bool diagonal_within_phases = false;  // min(k) < k_aa < max(k)
  bool within_voigt_reuss = false;    // harmonic mean <= k_aa <= arithmetic mean
};

TensorDiagnostics diagnose(const CellSolutionSet& cell, const UnitCellSpec& spec);

}  // namespace sots
