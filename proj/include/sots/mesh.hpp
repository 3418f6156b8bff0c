#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sots/geometry.hpp"

namespace sots {

enum class BoundaryKind : std::uint8_t { dirichlet, neumann };

struct BoundaryEdge {
  std::array<int, 2> nodes{};  // oriented counter-clockwise with respect to the domain
  BoundaryKind kind = BoundaryKind::dirichlet;

  friend bool operator==(const BoundaryEdge&, const BoundaryEdge&) = default;
};

/// Boundary condition kind per side of a rectangular domain.
struct BoundarySides {
  BoundaryKind left = BoundaryKind::dirichlet;
  BoundaryKind right = BoundaryKind::dirichlet;
  BoundaryKind bottom = BoundaryKind::dirichlet;
  BoundaryKind top = BoundaryKind::dirichlet;
};

/// Conforming P1 triangulation with per-element material and subdomain tags.
///
/// `subdomain` is empty for unit-cell meshes. Elements are counter-clockwise.
struct Mesh2D {
  std::vector<Point2> nodes;
  std::vector<std::array<int, 3>> elements;
  std::vector<int> phase;
  std::vector<int> subdomain;
  std::vector<BoundaryEdge> boundary;

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int num_elements() const { return static_cast<int>(elements.size()); }
  bool has_subdomains() const { return !subdomain.empty(); }

  double signed_area(int e) const;
  Point2 centroid(int e) const;
  double total_area() const;

  /// Nodes lying on any boundary edge, ascending, without duplicates.
  std::vector<int> boundary_nodes() const;
  std::vector<int> boundary_nodes(BoundaryKind kind) const;

  friend bool operator==(const Mesh2D&, const Mesh2D&) = default;
};

/// Constant P1 basis gradients of one triangle.
struct ElementGeometry {
  double area = 0.0;
  std::array<double, 3> dx{};
  std::array<double, 3> dy{};
};

ElementGeometry element_geometry(const Mesh2D& mesh, int e);

enum class InclusionShape { none, circle, square };

/// Inclusion inside the unit cell; `size` is the radius of a circle or the side of a square.
struct Inclusion {
  InclusionShape shape = InclusionShape::none;
  Point2 center{0.5, 0.5};
  double size = 0.0;

  bool contains(const Point2& y) const;
};

struct UnitCellSpec {
  std::string cell_id;
  int divisions = 16;
  Inclusion inclusion;
  double k_matrix = 1.0;
  double k_inclusion = 1.0;

  void validate() const;
  double conductivity(int phase) const { return phase == 0 ? k_matrix : k_inclusion; }
};

struct SubdomainSpec {
  Rect region;
  std::string cell_id;
  double epsilon = 1.0;

  /// Number of whole periods along x and y.
  std::array<int, 2> period_counts() const;
  void validate() const;
};

/// Throws InvalidSpec unless the subdomain regions have disjoint interiors and cover `domain`.
void validate_tiling(const Rect& domain, std::span<const SubdomainSpec> subdomains);

/// Index of the subdomain owning `p`; on shared boundaries the region with the
/// lexicographically smallest lower-left corner wins. Returns -1 when `p` is outside.
int owning_subdomain(std::span<const SubdomainSpec> subdomains, const Point2& p);

/// Structured n x n mesh of (0,1)^2. Squares are split along the diagonal that
/// points towards the cell centre, so the mesh is mirror symmetric about both
/// midlines when n is even.
Mesh2D generate_unit_cell_mesh(const UnitCellSpec& spec);
Mesh2D generate_unit_cell_mesh(const UnitCellSpec& spec, int divisions);

/// Structured mesh of `domain` with `resolution` squares per unit length.
Mesh2D generate_macro_mesh(const Rect& domain, std::span<const SubdomainSpec> subdomains,
                           int resolution, const BoundarySides& sides = {});

/// Replicates the unit-cell mesh of each subdomain's cell, scaled by its epsilon.
/// `divisions_by_cell` overrides the per-cell divisions; cells not listed use
/// their spec's `divisions`.
Mesh2D generate_fine_mesh(const Rect& domain, std::span<const SubdomainSpec> subdomains,
                          std::span<const UnitCellSpec> cells,
                          const std::map<std::string, int>& divisions_by_cell = {},
                          const BoundarySides& sides = {});
Mesh2D generate_fine_mesh(const Rect& domain, std::span<const SubdomainSpec> subdomains,
                          std::span<const UnitCellSpec> cells, int per_cell_divisions,
                          const BoundarySides& sides = {});

const UnitCellSpec& find_cell(std::span<const UnitCellSpec> cells, const std::string& id);

/// Throws MeshingError unless every interior edge is shared by exactly two elements.
void check_conformity(const Mesh2D& mesh);

}  // namespace sots
