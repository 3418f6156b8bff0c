#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sots/config.hpp"
#include "sots/error.hpp"
#include "sots/metrics.hpp"
#include "sots/reconstruction.hpp"

namespace sots {

/// Wraps the error that aborted a pipeline stage.
class StageError : public Error {
 public:
  StageError(Stage stage, const std::string& what) : Error(what), stage_(stage) {}
  Stage stage() const noexcept { return stage_; }

 private:
  Stage stage_;
};

/// Process exit status for a failure in `stage`.
int exit_code(Stage stage);

struct RunOptions {
  bool write_artifacts = true;
  std::ostream* log = nullptr;
};

struct RunResult {
  std::vector<CellSolutionSet> cells;
  std::vector<TensorDiagnostics> diagnostics;
  std::shared_ptr<const Mesh2D> macro_mesh;
  std::shared_ptr<const Mesh2D> fine_mesh;
  std::optional<ScalarField> t0;
  std::optional<ScalarField> reference;
  std::optional<std::array<ScalarField, 3>> samples;
  std::optional<MultiscaleSolution> solution;
  ErrorReport report;
  bool has_metrics = false;

  /// Cell plus macro unknowns, and the fine-mesh unknowns.
  int multiscale_unknowns() const;
  int reference_unknowns() const;
};

/// Runs mesh generation, first-order cells, homogenized coefficients, the
/// macro solve, second-order cells, reconstruction, the reference solve and the
/// error metrics, in that order. Only the configured stages (and what they
/// depend on) are executed.
RunResult run(const ExperimentConfig& config, const RunOptions& options = {});

struct SweepRow {
  double epsilon_max = 0.0;
  std::optional<ErrorReport> report;
  std::string error;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// Least-squares slope of log(TError2) against log(epsilon_max); NaN with fewer than two runs.
  double slope = 0.0;
};

/// Reruns the pipeline with every epsilon scaled so that the largest equals
/// each entry of `epsilons`. Failing runs are recorded and the sweep continues.
SweepResult sweep_epsilon(const ExperimentConfig& config, std::span<const double> epsilons,
                          const RunOptions& options = {});

std::string format_sweep(const SweepResult& sweep);

/// Holds `<dir>/.lock` for the lifetime of the object; throws when another run owns it.
class OutputLock {
 public:
  explicit OutputLock(const std::filesystem::path& dir);
  ~OutputLock();
  OutputLock(const OutputLock&) = delete;
  OutputLock& operator=(const OutputLock&) = delete;

 private:
  std::filesystem::path path_;
};

void write_tensor(const std::filesystem::path& path, const Tensor2& k);

}  // namespace sots
