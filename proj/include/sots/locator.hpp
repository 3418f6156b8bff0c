#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "sots/mesh.hpp"

namespace sots {

struct Location {
  int element = -1;
  std::array<double, 3> barycentric{};
};

/// Bucket-grid point location on a triangle mesh.
///
/// Among all elements containing the query point the lowest index is returned,
/// so points on shared edges and nodes resolve deterministically.
class PointLocator {
 public:
  explicit PointLocator(std::shared_ptr<const Mesh2D> mesh);

  const Mesh2D& mesh() const { return *mesh_; }
  const std::shared_ptr<const Mesh2D>& mesh_ptr() const { return mesh_; }

  std::optional<Location> try_locate(const Point2& p, int subdomain_tag = -1) const;

  /// Throws OutOfDomain when no element contains `p`. A non-negative
  /// `subdomain_tag` restricts the search to elements carrying that tag.
  Location locate(const Point2& p, int subdomain_tag = -1) const;

 private:
  std::array<int, 2> bucket_of(const Point2& p) const;

  std::shared_ptr<const Mesh2D> mesh_;
  double x0_ = 0.0, y0_ = 0.0, bw_ = 1.0, bh_ = 1.0;
  int nbx_ = 1, nby_ = 1;
  std::vector<int> offsets_;
  std::vector<int> items_;
};

/// One-shot convenience wrapper around PointLocator.
Location locate_point(const Mesh2D& mesh, const Point2& p);

}  // namespace sots
