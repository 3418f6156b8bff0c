#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sots/mesh.hpp"

namespace sots {

struct NamedData {
  std::string name;
  std::span<const double> values;
};

/// Legacy ASCII VTK unstructured grid. Phase and subdomain tags go to CELL_DATA,
/// the given fields to POINT_DATA.
void write_vtk(const std::filesystem::path& path, const Mesh2D& mesh,
               const std::vector<NamedData>& point_data = {});

}  // namespace sots
