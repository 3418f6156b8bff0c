#pragma once

#include <array>
#include <span>
#include <vector>

#include "sots/geometry.hpp"
#include "sots/mesh.hpp"
#include "sots/sparse.hpp"

namespace sots::kernels {

/// Block length of the deterministic reductions. Partial sums are formed per
/// block and added in block order, so results do not depend on thread count.
inline constexpr std::size_t kReductionBlock = 4096;

/// Local P1 stiffness of element `e` for a constant tensor.
std::array<std::array<double, 3>, 3> local_stiffness(const Mesh2D& mesh, int e, const Tensor2& k);

// Straightforward single-threaded versions, kept as the reference the OpenMP
// kernels are tested and benchmarked against.
namespace serial {

void spmv(const CsrMatrix& a, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> x, std::span<const double> y);
void assemble_stiffness(const Mesh2D& mesh, std::span<const Tensor2> k, CsrMatrix& pattern);
std::vector<std::array<double, 2>> element_gradients(const Mesh2D& mesh,
                                                     std::span<const double> values);

}  // namespace serial

void spmv(const CsrMatrix& a, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> x, std::span<const double> y);
/// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);
/// y = x + beta * y
void xpby(std::span<const double> x, double beta, std::span<double> y);

/// Row-parallel gather assembly. Each entry accumulates its element
/// contributions in ascending element order, matching serial::assemble_stiffness bit for bit.
void assemble_stiffness(const Mesh2D& mesh, std::span<const Tensor2> k,
                        const NodeIncidence& incidence, CsrMatrix& pattern);

std::vector<std::array<double, 2>> element_gradients(const Mesh2D& mesh,
                                                     std::span<const double> values);

int max_threads();

}  // namespace sots::kernels
