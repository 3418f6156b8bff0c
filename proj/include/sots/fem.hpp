#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "sots/locator.hpp"
#include "sots/mesh.hpp"
#include "sots/sparse.hpp"

namespace sots {

using ScalarFunction = std::function<double(const Point2&)>;

/// Nodal coefficients of a P1 function on a specific mesh.
class ScalarField {
 public:
  ScalarField(std::shared_ptr<const Mesh2D> mesh, std::vector<double> values);

  const Mesh2D& mesh() const { return *mesh_; }
  const std::shared_ptr<const Mesh2D>& mesh_ptr() const { return mesh_; }
  std::span<const double> values() const { return values_; }
  double operator[](int node) const { return values_[node]; }
  int size() const { return static_cast<int>(values_.size()); }

 private:
  std::shared_ptr<const Mesh2D> mesh_;
  std::vector<double> values_;
};

/// Per-element constant conductivity tensors.
struct ConductivityField {
  std::vector<Tensor2> tensors;

  /// Throws AssemblyError on non-finite entries and InvalidSpec when a tensor
  /// is not symmetric positive definite.
  void validate() const;

  static ConductivityField from_phases(const Mesh2D& mesh, double k_matrix, double k_inclusion);
  static ConductivityField uniform(const Mesh2D& mesh, const Tensor2& k);
};

/// Linear system over all mesh nodes, or over the free nodes once Dirichlet
/// constraints have been eliminated.
struct SparseSystem {
  int num_nodes = 0;
  CsrMatrix matrix;
  std::vector<double> rhs;
  /// Reduced index -> mesh node.
  std::vector<int> free_nodes;
  /// Prescribed nodes, ascending, and their values.
  std::vector<int> fixed_nodes;
  std::vector<double> fixed_values;
  /// Free-row x fixed-column block of the original matrix.
  CsrMatrix coupling;

  bool constrained() const { return !fixed_nodes.empty() || static_cast<int>(free_nodes.size()) != num_nodes; }

  /// Maps a full-length load vector onto the free nodes, moving the prescribed
  /// values to the right-hand side.
  std::vector<double> reduce(std::span<const double> full_rhs) const;
  /// Scatters free-node values and prescribed values into a full nodal vector.
  std::vector<double> expand(std::span<const double> free_values) const;
};

/// Prescribed nodal values; setting a node twice with different values throws ConstraintError.
class DirichletValues {
 public:
  void set(int node, double value);
  const std::map<int, double>& values() const { return values_; }
  bool empty() const { return values_.empty(); }

 private:
  std::map<int, double> values_;
};

SparseSystem assemble_stiffness(const Mesh2D& mesh, const ConductivityField& k);
SparseSystem assemble_stiffness(const Mesh2D& mesh, const ConductivityField& k,
                                const NodeIncidence& incidence);

/// Volume term by edge-midpoint quadrature, boundary term by two-point Gauss
/// on the Neumann edges. Either function may be empty (treated as zero).
std::vector<double> assemble_load(const Mesh2D& mesh, const ScalarFunction& source,
                                  const ScalarFunction& neumann_flux);

/// Symmetric elimination of the prescribed nodes.
SparseSystem apply_dirichlet(const SparseSystem& system, const DirichletValues& values);

struct SolverOptions {
  double rel_tol = 1e-10;
  int max_iter_factor = 50;
};

struct SolveStats {
  int iterations = 0;
  double rel_residual = 0.0;
};

/// Jacobi-preconditioned conjugate gradients on the free block; returns the full nodal vector.
std::vector<double> solve_spd(const SparseSystem& system, std::span<const double> reduced_rhs,
                              const SolverOptions& options = {}, SolveStats* stats = nullptr);
std::vector<double> solve_spd(const SparseSystem& system, const SolverOptions& options = {},
                              SolveStats* stats = nullptr);
ScalarField solve_spd(std::shared_ptr<const Mesh2D> mesh, const SparseSystem& system,
                      const SolverOptions& options = {}, SolveStats* stats = nullptr);

double interpolate(const ScalarField& field, const PointLocator& locator, const Point2& p);
double interpolate(const ScalarField& field, const Point2& p);
double interpolate(std::span<const double> values, const Mesh2D& mesh, const Location& loc);

struct GradientField {
  std::vector<double> dx;
  std::vector<double> dy;
};

/// Area-weighted patch average of the constant element gradients.
GradientField recover_gradient(const Mesh2D& mesh, std::span<const double> values);
GradientField recover_gradient(const ScalarField& field);
/// Patch average restricted to elements tagged `subdomain_tag`; other nodes hold NaN.
GradientField recover_gradient(const Mesh2D& mesh, std::span<const double> values,
                               int subdomain_tag);

/// One recovered gradient per subdomain tag (indexed by tag). Patches only use
/// elements of that subdomain; nodes not touching the subdomain hold NaN.
std::vector<GradientField> recover_gradient_by_subdomain(const Mesh2D& mesh,
                                                         std::span<const double> values);
std::vector<GradientField> recover_gradient_by_subdomain(const ScalarField& field);

struct NormReport {
  double l2_distance = 0.0;
  double h1_distance = 0.0;
  double l2_a = 0.0;
  double h1_a = 0.0;
};

/// L2 by edge-midpoint quadrature of (a-b)^2, H1 seminorm from constant element gradients.
NormReport norms(const ScalarField& a, const ScalarField& b);

}  // namespace sots
