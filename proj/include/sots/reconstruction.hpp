#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sots/fem.hpp"
#include "sots/locator.hpp"
#include "sots/macro_solver.hpp"
#include "sots/unit_cell.hpp"

namespace sots {

/// Everything needed to evaluate the zeroth, first and second order two-scale
/// approximations at arbitrary points of the domain.
class MultiscaleSolution {
 public:
  MultiscaleSolution(std::vector<SubdomainSpec> subdomains, ScalarField t0,
                     MacroDerivatives derivatives, std::vector<CellSolutionSet> cells);

  const std::vector<SubdomainSpec>& subdomains() const { return subdomains_; }
  const ScalarField& t0() const { return t0_; }
  const MacroDerivatives& derivatives() const { return derivatives_; }
  const CellSolutionSet& cell(const std::string& id) const;

  /// Values of orders 0, 1 and 2 at `x`.
  std::array<double, 3> evaluate_all(const Point2& x) const;

 private:
  struct CellEntry {
    CellSolutionSet solution;
    PointLocator locator;
  };

  std::vector<SubdomainSpec> subdomains_;
  ScalarField t0_;
  MacroDerivatives derivatives_;
  PointLocator macro_locator_;
  std::vector<CellEntry> cells_;
  std::vector<int> cell_of_subdomain_;
};

/// Cell coordinates of `x` relative to the lower-left corner of `sd`. Exact
/// multiples of epsilon map to 0, except on the far edge of the region where
/// they map to 1.
Point2 map_to_cell_coords(const Point2& x, const SubdomainSpec& sd);

double evaluate(const MultiscaleSolution& solution, const Point2& x, int order);

ScalarField sample_onto_mesh(const MultiscaleSolution& solution,
                             std::shared_ptr<const Mesh2D> target, int order);

/// All three orders at every node of `target`, evaluated in parallel.
std::array<ScalarField, 3> sample_all_orders(const MultiscaleSolution& solution,
                                             std::shared_ptr<const Mesh2D> target);

namespace serial {
std::array<ScalarField, 3> sample_all_orders(const MultiscaleSolution& solution,
                                             std::shared_ptr<const Mesh2D> target);
}

}  // namespace sots
