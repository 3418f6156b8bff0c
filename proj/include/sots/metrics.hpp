#pragma once

#include <array>
#include <string>
#include <vector>

#include "sots/fem.hpp"

namespace sots {

struct MeshCost {
  std::string label;
  int elements = 0;
  int nodes = 0;
  int unknowns = 0;
};

struct StageTiming {
  std::string stage;
  double seconds = 0.0;
};

/// Relative errors of the order 0/1/2 reconstructions against the reference,
/// in percent: `l2` holds Terror0..2, `h1` holds TError0..2.
struct ErrorReport {
  std::array<double, 3> l2{};
  std::array<double, 3> h1{};
  std::array<NormReport, 3> raw{};
  std::vector<MeshCost> costs;
  std::vector<StageTiming> timings;

  double seconds(const std::string& stage) const;
};

/// Throws ContractError when the reference has zero L2 norm or H1 seminorm.
ErrorReport compare(const ScalarField& reference, const std::array<ScalarField, 3>& samples);

/// Two-block table of the six percentages followed by the mesh sizes. Timings
/// are kept out so identical runs produce identical reports.
std::string format_report(const ErrorReport& report);
std::string format_timings(const ErrorReport& report);
std::string format_report_csv(const ErrorReport& report);

}  // namespace sots
