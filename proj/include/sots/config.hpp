#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sots/expression.hpp"
#include "sots/fem.hpp"
#include "sots/mesh.hpp"

namespace sots {

enum class Stage { cells, macro, reconstruct, reference, metrics };

const char* stage_name(Stage stage);
/// Parses a comma separated list such as "cells,macro" or "all".
std::set<Stage> parse_stages(const std::string& list);

/// Problem data, meshes, solver settings and outputs of one experiment.
///
/// Units follow the material tables: lengths in cm, conductivities in W/(m K),
/// sources in J/(cm^3 s), temperatures in K. `conductivity_scale` converts the
/// conductivities to W/(cm K) before the macro and reference problems are assembled.
struct ExperimentConfig {
  std::string name = "experiment";
  Rect domain{0.0, 0.0, 1.0, 1.0};
  std::vector<UnitCellSpec> cells;
  std::map<std::string, int> fine_divisions;
  std::vector<SubdomainSpec> subdomains;
  std::string source = "0";
  std::string dirichlet = "0";
  std::string neumann = "0";
  BoundarySides sides;
  int macro_resolution = 16;
  double conductivity_scale = 0.01;
  SolverOptions solver;
  std::filesystem::path output_dir = "out";
  std::set<Stage> stages{Stage::cells, Stage::macro, Stage::reconstruct, Stage::reference,
                         Stage::metrics};
  bool write_vtk = true;

  /// Throws ConfigError (or InvalidSpec) when the config breaks an invariant.
  void validate() const;
  int fine_divisions_of(const UnitCellSpec& cell) const;
  double epsilon_max() const;
};

ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace sots
