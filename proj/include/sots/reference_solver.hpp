#pragma once

#include <memory>
#include <vector>

#include "sots/fem.hpp"

namespace sots {

/// Fully resolved heterogeneous problem on the replicated-cell mesh.
struct ReferenceProblem {
  std::shared_ptr<const Mesh2D> fine;
  std::vector<UnitCellSpec> cells;
  std::vector<SubdomainSpec> subdomains;
  ScalarFunction source;
  ScalarFunction dirichlet;
  ScalarFunction neumann;
  /// Multiplies every phase conductivity before assembly (unit conversion).
  double conductivity_scale = 1.0;
};

/// Phase conductivity of each fine element, taken from its subdomain's cell.
ConductivityField fine_conductivity(const ReferenceProblem& problem);

ScalarField solve_reference(const ReferenceProblem& problem, const SolverOptions& options = {},
                            SolveStats* stats = nullptr);

}  // namespace sots
