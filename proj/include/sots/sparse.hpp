#pragma once

#include <span>
#include <vector>

#include "sots/mesh.hpp"

namespace sots {

/// Row-compressed sparse matrix with sorted column indices per row.
struct CsrMatrix {
  int rows = 0;
  std::vector<int> row_ptr{0};
  std::vector<int> cols;
  std::vector<double> vals;

  int nnz() const { return static_cast<int>(cols.size()); }

  /// Position of (i, j) in `vals`, or -1 when outside the pattern.
  int find(int i, int j) const;
  double at(int i, int j) const;

  static CsrMatrix identity(int n);
};

/// Node-to-element incidence, each list ascending.
struct NodeIncidence {
  std::vector<int> offsets;
  std::vector<int> elements;

  std::span<const int> of(int node) const {
    return {elements.data() + offsets[node],
            static_cast<std::size_t>(offsets[node + 1] - offsets[node])};
  }
};

NodeIncidence node_incidence(const Mesh2D& mesh);

/// P1 sparsity pattern of `mesh` with zero values.
CsrMatrix p1_pattern(const Mesh2D& mesh, const NodeIncidence& incidence);

}  // namespace sots
