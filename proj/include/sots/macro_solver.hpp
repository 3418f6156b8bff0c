#pragma once

#include <array>
#include <memory>
#include <vector>

#include "sots/fem.hpp"

namespace sots {

/// Homogenized problem on the macro mesh: one constant tensor per subdomain tag.
struct HomogenizedModel {
  std::shared_ptr<const Mesh2D> mesh;
  std::vector<Tensor2> tensors;
  ScalarFunction source;
  ScalarFunction dirichlet;
  ScalarFunction neumann;

  /// Throws ConfigError when a tag has no tensor or a tensor is not SPD.
  void validate() const;
  ConductivityField conductivity() const;
};

ScalarField solve_homogenized(const HomogenizedModel& model, const SolverOptions& options = {},
                              SolveStats* stats = nullptr);

/// Sum of the reactions K T - f over the Dirichlet nodes.
double total_reaction(const HomogenizedModel& model, const ScalarField& t0);

/// Recovered first and second derivatives of T0, one set per subdomain tag.
/// Hessian components are stored row-major {H11, H12, H21, H22} with H12 == H21.
struct MacroDerivatives {
  std::vector<GradientField> gradient;
  std::vector<std::array<std::vector<double>, 4>> hessian;
};

MacroDerivatives derivatives_of_T0(const ScalarField& t0);

}  // namespace sots
