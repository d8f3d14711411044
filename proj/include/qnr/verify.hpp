// Property battery over a single matrix and the registry of worked examples.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qnr/io.hpp"

namespace qnr {

struct RunConfig {
  std::string input;
  std::size_t samples = 100000;
  int angles = 720;
  std::uint64_t seed = 42;
  std::optional<double> tol;  ///< overrides the slack of the radius identities (default 1e-8)
  std::string csv_path;
  std::string svg_path;
  std::string json_path;
  bool timings = false;  ///< include per-check runtimes in the JSON (breaks byte-identical reruns)

  void validate() const;  ///< throws std::invalid_argument on samples < 1 or angles < 8
};

enum class Status { Pass, Fail, Skip };

std::string to_string(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::Skip;
  nlohmann::json measured = nlohmann::json::object();
  double tolerance = 0.0;
  double runtime_ms = 0.0;
  std::string note;
};

struct VerifyReport {
  std::string subject;
  std::vector<CheckResult> checks;

  bool ok() const;  ///< no check failed
  int exit_code() const { return ok() ? 0 : 1; }
  const CheckResult* find(const std::string& name) const;
  nlohmann::json to_json(bool timings = false) const;
};

/// Runs the full battery on A: spectrum, projection containment, radius
/// identities and inequalities, section convexity, set operations and, for
/// 2x2 input, the closed-form case geometry.
VerifyReport run_verify(const QMatrix& a, const RunConfig& config, const std::string& subject = "input");

struct DemoEntry {
  std::string name;
  std::string description;
  QMatrix matrix;
};

const std::vector<DemoEntry>& demo_registry();
const DemoEntry& find_demo(const std::string& name);  ///< throws std::invalid_argument listing the registry

/// Loads the named matrix, runs the checks stated for it and writes the CSV
/// and SVG of its section when paths are configured.
VerifyReport run_demo(const std::string& name, const RunConfig& config);

}  // namespace qnr
