// qnr: quaternionic numerical range from the command line.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or input error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qnr/spectrum.hpp"
#include "qnr/verify.hpp"

namespace {

using nlohmann::json;
using qnr::RunConfig;

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool needs_input) {
  auto* input = cmd->add_option("-i,--input", cfg.input, "Matrix JSON file");
  if (needs_input) input->required();
  cmd->add_option("-n,--samples", cfg.samples, "Number of sampled unit vectors")->capture_default_str();
  cmd->add_option("--angles", cfg.angles, "Angle grid of the support sweep")->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  cmd->add_option("--tol", cfg.tol, "Slack for the radius identities (default 1e-8)");
  cmd->add_option("-o,--out", cfg.json_path, "Output file (stdout when omitted)");
  cmd->add_option("--svg", cfg.svg_path, "Write an SVG plot of the section");
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text;
  else
    qnr::write_file(path, text);
}

qnr::QMatrix load(const RunConfig& cfg) {
  cfg.validate();
  return qnr::parse_matrix(cfg.input);
}

int cmd_spectrum(const RunConfig& cfg) {
  const auto a = load(cfg);
  const auto report = qnr::verify_spectrum(a);
  json values = json::array(), residuals = json::array();
  for (const auto& c : report.checks) {
    values.push_back({{"re", c.value.real()}, {"im", c.value.imag()}, {"mult", c.multiplicity}});
    residuals.push_back(c.delta_residual);
  }
  emit(cfg.json_path, qnr::dump_json({{"schema_version", 1},
                                      {"standard_eigenvalues", values},
                                      {"residuals", residuals},
                                      {"bound", report.bound},
                                      {"ok", report.all_pass}}));
  return report.all_pass ? 0 : 1;
}

int cmd_radius(const RunConfig& cfg) {
  const auto a = load(cfg);
  const double w = qnr::numerical_radius(a, cfg.angles);
  const auto lb = qnr::radius_lower_bound(a, 4096, cfg.seed);
  const double slack = cfg.tol.value_or(1e-8);
  emit(cfg.json_path, qnr::dump_json({{"schema_version", 1},
                                      {"w", w},
                                      {"norm", qnr::operator_norm(a)},
                                      {"lower_bound", lb.value}}));
  return lb.value <= w + slack ? 0 : 1;
}

int cmd_norm(const RunConfig& cfg) {
  const auto a = load(cfg);
  emit(cfg.json_path, qnr::dump_json({{"schema_version", 1}, {"norm", qnr::operator_norm(a)}}));
  return 0;
}

int cmd_section(const RunConfig& cfg) {
  const auto a = load(cfg);
  const auto section = qnr::section_plus(qnr::sample_range(a, cfg.samples, cfg.seed));
  emit(cfg.json_path, qnr::csv_text(section.points));
  if (!cfg.svg_path.empty()) {
    std::optional<qnr::Region2D> region;
    if (a.n() == 2) region = qnr::classify_case(qnr::triangularize2(a));
    qnr::emit_svg(section, region ? &*region : nullptr, cfg.svg_path);
  }
  return 0;
}

int cmd_classify(const RunConfig& cfg) {
  const auto a = load(cfg);
  if (a.n() != 2) throw UsageError("classify requires a 2x2 matrix, got n = " + std::to_string(a.n()));
  const auto t = qnr::triangularize2(a);
  const auto region = qnr::classify_case(t);
  json out{{"schema_version", 1},
           {"case", region.case_number},
           {"z1", qnr::complex_to_json(t.z1)},
           {"z2", qnr::complex_to_json(t.z2)},
           {"abs_p", t.p.norm()},
           {"region", qnr::region_to_json(region)}};
  emit(cfg.json_path, qnr::dump_json(out));
  if (!cfg.svg_path.empty())
    qnr::emit_svg(qnr::section_plus(qnr::sample_range(a, cfg.samples, cfg.seed)), &region, cfg.svg_path);
  return 0;
}

int finish(const qnr::VerifyReport& report, const RunConfig& cfg) {
  emit(cfg.json_path, qnr::dump_json(report.to_json(cfg.timings)));
  for (const auto& c : report.checks)
    std::cerr << qnr::to_string(c.status) << "  " << c.name << (c.note.empty() ? "" : "  (" + c.note + ")") << "\n";
  return report.exit_code();
}

std::string demo_help() {
  std::string s = "Run a worked example by name:";
  for (const auto& d : qnr::demo_registry()) s += "\n  " + d.name + "  " + d.description;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternionic numerical range: spectrum, radius, sections and verification"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string demo_name;

  auto* spectrum = app.add_subcommand("spectrum", "Standard eigenvalues with null-space residuals (JSON)");
  add_common(spectrum, cfg, true);
  auto* radius = app.add_subcommand("radius", "Numerical radius, operator norm and sampled lower bound (JSON)");
  add_common(radius, cfg, true);
  auto* norm = app.add_subcommand("norm", "Operator norm (JSON)");
  add_common(norm, cfg, true);
  auto* section = app.add_subcommand("section", "Sampled upper section as CSV re,im");
  add_common(section, cfg, true);
  auto* classify = app.add_subcommand("classify", "Closed-form case of a 2x2 matrix (JSON)");
  add_common(classify, cfg, true);
  auto* verify = app.add_subcommand("verify", "Full property battery (JSON report)");
  add_common(verify, cfg, true);
  verify->add_option("--csv", cfg.csv_path, "Write the sampled section as CSV");
  verify->add_flag("--timings", cfg.timings, "Include per-check runtimes in the report");
  auto* demo = app.add_subcommand("demo", demo_help());
  add_common(demo, cfg, false);
  demo->add_option("name", demo_name, "Demo name")->required();
  demo->add_option("--csv", cfg.csv_path, "Write the sampled section as CSV");
  demo->add_flag("--timings", cfg.timings, "Include per-check runtimes in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*spectrum) return cmd_spectrum(cfg);
    if (*radius) return cmd_radius(cfg);
    if (*norm) return cmd_norm(cfg);
    if (*section) return cmd_section(cfg);
    if (*classify) return cmd_classify(cfg);
    if (*verify) {
      const auto a = load(cfg);
      if (!cfg.svg_path.empty() || !cfg.csv_path.empty()) {
        const auto s = qnr::section_plus(qnr::sample_range(a, cfg.samples, cfg.seed));
        if (!cfg.csv_path.empty()) qnr::emit_csv(s, cfg.csv_path);
        if (!cfg.svg_path.empty()) {
          std::optional<qnr::Region2D> region;
          if (a.n() == 2) region = qnr::classify_case(qnr::triangularize2(a));
          qnr::emit_svg(s, region ? &*region : nullptr, cfg.svg_path);
        }
      }
      return finish(qnr::run_verify(a, cfg, cfg.input), cfg);
    }
    if (*demo) return finish(qnr::run_demo(demo_name, cfg), cfg);
  } catch (const qnr::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsageError;
}
