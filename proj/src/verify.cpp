#include "qnr/verify.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qnr/spectrum.hpp"

namespace qnr {

using nlohmann::json;

namespace {

template <class F>
CheckResult timed(const std::string& name, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult c = body();
  c.name = name;
  c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return c;
}

Status status_of(bool ok) { return ok ? Status::Pass : Status::Fail; }

CheckResult skipped(std::string note) {
  CheckResult c;
  c.status = Status::Skip;
  c.note = std::move(note);
  return c;
}

json spectrum_json(const StdEigenList& spec) {
  json out = json::array();
  for (std::size_t l = 0; l < spec.values.size(); ++l)
    out.push_back({{"re", spec.values[l].real()}, {"im", spec.values[l].imag()}, {"mult", spec.multiplicities[l]}});
  return out;
}

struct Radii {
  double w = 0.0;
  double norm = 0.0;
  double norm_sq = 0.0;  ///< |A^2|
};

Radii radii(const QMatrix& a, int angles) {
  return {numerical_radius(a, angles), operator_norm(a), operator_norm(a * a)};
}

bool normal_matrix(const QMatrix& a) {
  const double scale = std::max(1.0, a.frobenius_norm());
  return is_normal(a, 1e-9 * scale * scale);
}

QMatrix random_projection(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<std::size_t> rank(1, std::max<std::size_t>(1, n - 1));
  const std::size_t k = rank(rng);
  std::vector<QVector> cols;
  for (std::size_t c = 0; c < k; ++c) cols.push_back(random_unit_vector(n, rng));
  const auto basis = orthonormalize(cols, rng);
  QMatrix p(n);
  for (const auto& u : basis)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) p(r, c) += u[r] * u[c].conj();
  return p;
}

CheckResult spectrum_check(const QMatrix& a) {
  CheckResult c;
  const auto report = verify_spectrum(a);
  double worst = 0.0;
  StdEigenList list;
  for (const auto& s : report.checks) {
    worst = std::max(worst, s.delta_residual);
    list.values.push_back(s.value);
    list.multiplicities.push_back(s.multiplicity);
  }
  c.measured = {{"standard_eigenvalues", spectrum_json(list)}, {"max_delta_residual", worst}};
  c.tolerance = report.bound;
  c.status = status_of(report.all_pass);
  return c;
}

CheckResult closed_form_check(const QMatrix& a, const RunConfig& config, int expected_case) {
  CheckResult c;
  const auto r = case_equality_check(a, config.samples, config.seed);
  c.measured = {{"case", r.region.case_number},
                {"z1", complex_to_json(r.form.z1)},
                {"z2", complex_to_json(r.form.z2)},
                {"abs_p", r.form.p.norm()},
                {"region", region_to_json(r.region)},
                {"containment", r.containment}};
  if (r.filled) c.measured["filled_hausdorff"] = *r.filled;
  if (r.filled_points) c.measured["filled_pointwise"] = *r.filled_points;
  if (r.witness_residual) c.measured["witness_residual"] = *r.witness_residual;
  if (r.young_slack) c.measured["young_slack"] = *r.young_slack;
  if (r.v_attained) c.measured["v_residual"] = *r.v_attained;
  if (r.real_interval) c.measured["real_interval"] = *r.real_interval;
  if (r.gap_area) c.measured["gap_area"] = *r.gap_area;
  c.tolerance = r.containment_tol;
  c.note = r.note;
  c.status = status_of(r.pass() && (expected_case == 0 || r.region.case_number == expected_case));
  return c;
}

CheckResult convexity_conditions(const QMatrix& a, const RunConfig& config, std::optional<bool> expect_convex) {
  CheckResult c;
  const auto ev = convexity_evidence(a, 8, config.seed, config.angles);
  c.measured = {{"projection_probes", ev.projection_probes},
                {"projection_attained", ev.projection_attained},
                {"boundary_probes", ev.boundary_probes},
                {"boundary_attained", ev.boundary_attained}};
  c.note = ev.note();
  c.status = !expect_convex || *expect_convex != ev.counterexample() ? Status::Pass : Status::Fail;
  return c;
}

void write_artifacts(const QMatrix& a, const RunConfig& config) {
  if (config.csv_path.empty() && config.svg_path.empty()) return;
  const auto section = section_plus(sample_range(a, config.samples, config.seed));
  if (!config.csv_path.empty()) emit_csv(section, config.csv_path);
  if (!config.svg_path.empty()) {
    std::optional<Region2D> region;
    if (a.n() == 2) region = classify_case(triangularize2(a));
    emit_svg(section, region ? &*region : nullptr, config.svg_path);
  }
}

QMatrix diag(std::initializer_list<Quaternion> d) { return QMatrix::diagonal(std::vector<Quaternion>(d)); }

}  // namespace

void RunConfig::validate() const {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (angles < 8) throw std::invalid_argument("angles must be >= 8");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "unknown";
}

bool VerifyReport::ok() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

json VerifyReport::to_json(bool timings) const {
  json list = json::array();
  int failed = 0;
  for (const auto& c : checks) {
    json entry{{"name", c.name}, {"status", to_string(c.status)}, {"measured", c.measured}, {"tolerance", c.tolerance}};
    if (!c.note.empty()) entry["note"] = c.note;
    if (timings) entry["runtime_ms"] = c.runtime_ms;
    if (c.status == Status::Fail) ++failed;
    list.push_back(entry);
  }
  return {{"schema_version", 1}, {"subject", subject}, {"ok", ok()}, {"failed", failed}, {"checks", list}};
}

VerifyReport run_verify(const QMatrix& a, const RunConfig& config, const std::string& subject) {
  config.validate();
  VerifyReport report;
  report.subject = subject;
  const std::size_t n = a.n();
  const double slack = config.tol.value_or(1e-8);
  Rng rng(split_seed(config.seed, 0xa11));
  const Radii r = radii(a, config.angles);
  const bool normal = normal_matrix(a);

  auto add = [&](const std::string& name, auto&& body) { report.checks.push_back(timed(name, body)); };

  add("spectrum", [&] { return spectrum_check(a); });

  add("radius_lower_bound", [&] {
    CheckResult c;
    const auto lb = radius_lower_bound(a, 4096, config.seed);
    c.measured = {{"w", r.w}, {"lower_bound", lb.value}};
    c.tolerance = 1e-4;
    c.status = status_of(lb.value <= r.w + slack && r.w - lb.value <= 1e-4);
    return c;
  });

  add("norm_equivalence", [&] {
    CheckResult c;
    c.measured = {{"w", r.w}, {"norm", r.norm}};
    c.tolerance = slack;
    c.status = status_of(r.w <= r.norm + slack && r.norm <= 2.0 * r.w + slack);
    return c;
  });

  add("sharpened_bound", [&] {
    CheckResult c;
    const double bound = 0.5 * (r.norm + std::sqrt(r.norm_sq));
    c.measured = {{"w", r.w}, {"bound", bound}, {"norm_of_square", r.norm_sq}};
    c.tolerance = slack;
    c.status = status_of(r.w <= bound + slack);
    return c;
  });

  add("normal_radius", [&] {
    if (!normal) return skipped("matrix is not normal");
    CheckResult c;
    c.measured = {{"w", r.w}, {"norm", r.norm}};
    c.tolerance = slack;
    c.status = status_of(std::abs(r.w - r.norm) <= slack);
    return c;
  });

  add("square_zero_radius", [&] {
    if (r.norm_sq > 1e-12 * std::max(1.0, r.norm * r.norm)) {
      CheckResult c = skipped("A^2 != 0");
      c.measured = {{"norm_of_square", r.norm_sq}};
      return c;
    }
    CheckResult c;
    c.measured = {{"w", r.w}, {"half_norm", r.norm / 2.0}};
    c.tolerance = slack;
    c.status = status_of(std::abs(r.w - r.norm / 2.0) <= slack);
    return c;
  });

  add("radius_equals_norm", [&] {
    if (std::abs(r.w - r.norm) > slack) return skipped("w < |A|");
    CheckResult c;
    c.measured = {{"norm_of_square", r.norm_sq}, {"norm_squared", r.norm * r.norm}};
    c.tolerance = 1e-6;
    c.status = status_of(std::abs(r.norm_sq - r.norm * r.norm) <= 1e-6);
    return c;
  });

  add("compression", [&] {
    CheckResult c;
    const QMatrix p = random_projection(n, rng);
    const QMatrix b = random_matrix(n, rng);
    const double wp = numerical_radius(p * a * p, config.angles);
    const double nb = operator_norm(b);
    const double wb = numerical_radius(b * a * qadjoint(b), config.angles);
    c.measured = {{"w_compressed", wp}, {"w", r.w}, {"w_congruence", wb}, {"norm_b_squared_w", nb * nb * r.w}};
    c.tolerance = slack;
    c.status = status_of(wp <= r.w + slack && wb <= nb * nb * r.w + slack * std::max(1.0, nb * nb));
    return c;
  });

  add("block_diagonal", [&] {
    CheckResult c;
    const QMatrix other = random_matrix(n, rng);
    const double wo = numerical_radius(other, config.angles);
    const double wd = numerical_radius(QMatrix::block_diagonal(a, other), config.angles);
    c.measured = {{"w_block", wd}, {"w_a", r.w}, {"w_b", wo}};
    c.tolerance = slack;
    c.status = status_of(std::abs(wd - std::max(r.w, wo)) <= slack);
    return c;
  });

  add("polarization", [&] {
    CheckResult c;
    const auto pr = polarization_check(a, 20, config.seed);
    const double tol = 1e-9 * std::max(1.0, a.frobenius_norm()) * 16.0;
    c.measured = {{"general_error", pr.general_error},
                  {"hermitian_error", pr.hermitian_error},
                  {"bound_slack", pr.bound_slack},
                  {"non_hermitian_gap", pr.stated_gap}};
    c.tolerance = tol;
    c.note = "the sum equals 8 re<X,AY> - 4<Y,AX>, which is 4<X,AY> exactly when A is self-adjoint";
    c.status = status_of(pr.general_error <= tol && pr.hermitian_error <= tol && pr.bound_slack >= -tol);
    return c;
  });

  add("projection_identity", [&] {
    CheckResult c;
    const auto pr = projection_check(a, std::min<std::size_t>(config.samples, 10000), config.seed, config.angles);
    c.measured = {{"samples", pr.samples},
                  {"min_margin", pr.min_margin},
                  {"outside", pr.outside},
                  {"boundary_targets", pr.boundary_targets},
                  {"max_boundary_gap", pr.max_boundary_gap}};
    c.tolerance = 1e-7;
    c.status = status_of(pr.pass());
    return c;
  });

  add("section_convexity", [&] {
    CheckResult c;
    const auto cr = section_convexity_check(a, 10, config.seed);
    c.measured = {{"pairs", cr.pairs}, {"attained", cr.attained}, {"retried", cr.retried}, {"max_residual", cr.max_residual}};
    c.tolerance = 1e-6;
    c.status = status_of(cr.pass());
    return c;
  });

  add("set_operations", [&] {
    CheckResult c;
    const auto so = set_ops_check(a, random_matrix(n, rng), config.seed, config.samples);
    c.measured = {{"affine_error", so.affine_error},
                  {"sum_error", so.sum_error},
                  {"unitary_witness_error", so.unitary_witness_error},
                  {"unitary_hausdorff", so.unitary_hausdorff},
                  {"adjoint_witness_error", so.adjoint_witness_error},
                  {"adjoint_hausdorff", so.adjoint_hausdorff}};
    c.tolerance = so.hausdorff_tol;
    c.status = status_of(so.pass());
    return c;
  });

  add("normal_hull", [&] {
    if (!normal) return skipped("matrix is not normal");
    CheckResult c;
    const auto nh = normal_hull_check(a, 200, config.seed);
    c.measured = {{"probes", nh.probes}, {"max_deviation", nh.max_deviation}};
    c.tolerance = 1e-6;
    c.status = status_of(nh.pass);
    return c;
  });

  add("convexity_conditions", [&] { return convexity_conditions(a, config, std::nullopt); });

  add("closed_form_case", [&] {
    if (n != 2) return skipped("closed forms exist for 2x2 only");
    return closed_form_check(a, config, 0);
  });

  return report;
}

const std::vector<DemoEntry>& demo_registry() {
  static const std::vector<DemoEntry> registry = [] {
    const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k(), one(1.0), zero;
    std::vector<DemoEntry> r;
    r.push_back({"diag-k11", "diag(k, 1, 1): 0 is not in W although k/2 - k/2 = 0", diag({k, one, one})});
    r.push_back({"neednot", "[[j]]: W is the unit imaginary sphere, a proper subset of Omega of W(chi_A)", diag({j})});
    r.push_back({"diag-kk", "diag(k, k): Case 1, W is the solid imaginary ball, section [0, i]", diag({k, k})});
    r.push_back({"case2", "diag(i, 1+2i): Case 2, section conv{i, 1+2i, 1/3}", diag({i, one + 2.0 * i})});
    r.push_back({"case3", "[[0, 2j], [0, 0]]: Case 3, section the half disk of radius 1",
                 QMatrix{{zero, 2.0 * j}, {zero, zero}}});
    r.push_back({"case4", "[[i, 1], [0, 1+2i]]: Case 4, section inside the Minkowski bound",
                 QMatrix{{i, one}, {zero, one + 2.0 * i}}});
    r.push_back({"twin-j", "diag(j, -j): a single standard eigenvalue i of multiplicity 2", diag({j, -1.0 * j})});
    r.push_back({"radius-half-norm", "w = 1 = |A|/2 while A^2 != 0",
                 QMatrix{{zero, one + std::sqrt(3.0) * k, zero}, {zero, zero, zero}, {zero, zero, j}}});
    r.push_back({"nilpotent-jk", "|A^2| = |A|^2 = 1 while w = 1/sqrt(2)",
                 QMatrix{{zero, zero, zero}, {j, zero, zero}, {zero, k, zero}}});
    return r;
  }();
  return registry;
}

const DemoEntry& find_demo(const std::string& name) {
  for (const auto& d : demo_registry())
    if (d.name == name) return d;
  std::string names;
  for (const auto& d : demo_registry()) names += (names.empty() ? "" : ", ") + d.name;
  throw std::invalid_argument("unknown demo '" + name + "'; available: " + names);
}

VerifyReport run_demo(const std::string& name, const RunConfig& config) {
  config.validate();
  const DemoEntry& demo = find_demo(name);
  const QMatrix& a = demo.matrix;
  VerifyReport report;
  report.subject = name;
  auto add = [&](const std::string& check, auto&& body) { report.checks.push_back(timed(check, body)); };

  if (name == "diag-k11") {
    add("min_modulus", [&] {
      CheckResult c;
      double lo = std::numeric_limits<double>::infinity();
      for (const auto& s : sample_range(a, config.samples, config.seed)) lo = std::min(lo, s.value.norm());
      const double bound = 1.0 / std::sqrt(2.0) - 1e-3;
      c.measured = {{"min_abs_q", lo}, {"bound", bound}};
      c.tolerance = 1e-3;
      c.status = status_of(lo >= bound);
      return c;
    });
    add("zero_not_attained", [&] {
      CheckResult c;
      const bool found = attain_section_point(a, 0.0, 32, config.seed).has_value();
      c.measured = {{"found", found}};
      c.status = status_of(!found);
      return c;
    });
    add("section_convexity", [&] {
      CheckResult c;
      const auto cr = section_convexity_check(a, 20, config.seed);
      c.measured = {{"pairs", cr.pairs}, {"attained", cr.attained}, {"max_residual", cr.max_residual}};
      c.tolerance = 1e-6;
      c.status = status_of(cr.pass());
      return c;
    });
  } else if (name == "neednot") {
    add("zero_in_chi_range", [&] {
      CheckResult c;
      const CMatrix chi = chi_embed(a);
      const auto sweep = complex_range_sweep(chi, config.angles, true);
      const double depth = interior_depth(hull2d(sweep.boundary), 0.0);
      const double margin = range_margin(chi, sweep, 0.0);
      const std::vector<Complex> v{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
      const double witness = std::abs(cdot(v, chi * v));
      c.measured = {{"relative_depth", depth}, {"support_margin", margin}, {"witness_value", witness}};
      c.tolerance = 0.9;
      c.status = status_of(depth > 0.9 && margin >= -1e-9 && witness <= 1e-15);
      return c;
    });
    add("zero_not_attained", [&] {
      CheckResult c;
      const bool found = attain_section_point(a, 0.0, 32, config.seed).has_value();
      c.measured = {{"found", found}};
      c.status = status_of(!found);
      return c;
    });
    add("unit_modulus", [&] {
      CheckResult c;
      double worst = 0.0;
      for (const auto& s : sample_range(a, config.samples, config.seed))
        worst = std::max(worst, std::abs(s.value.norm() - 1.0));
      c.measured = {{"max_deviation", worst}};
      c.tolerance = 1e-10;
      c.status = status_of(worst <= 1e-10);
      return c;
    });
  } else if (name == "diag-kk" || name == "case2" || name == "case3" || name == "case4") {
    const int expected = name == "diag-kk" ? 1 : name[4] - '0';
    add("closed_form_case", [&] { return closed_form_check(a, config, expected); });
    if (name == "diag-kk") add("convexity_conditions", [&] { return convexity_conditions(a, config, true); });
  } else if (name == "twin-j") {
    add("spectrum", [&] {
      CheckResult c = spectrum_check(a);
      const auto spec = spherical_spectrum(a);
      const bool shape = spec.values.size() == 1 && spec.multiplicities[0] == 2 && std::abs(spec.values[0] - Complex(0, 1)) < 1e-9;
      c.tolerance = 1e-8;
      c.status = status_of(shape && c.measured["max_delta_residual"].get<double>() < 1e-8);
      return c;
    });
    add("normal_hull", [&] {
      CheckResult c;
      const auto nh = normal_hull_check(a, 200, config.seed);
      c.measured = {{"max_deviation", nh.max_deviation}};
      c.tolerance = 1e-6;
      c.status = status_of(nh.pass);
      return c;
    });
  } else if (name == "radius-half-norm") {
    add("radius_and_norm", [&] {
      CheckResult c;
      const Radii r = radii(a, config.angles);
      const Quaternion e3 = quadratic_form(a, QVector::basis(3, 2));
      c.measured = {{"w", r.w}, {"norm", r.norm}, {"norm_of_square", r.norm_sq}, {"abs_q_e3", e3.norm()}};
      c.tolerance = 1e-6;
      c.status = status_of(std::abs(r.w - 1.0) <= 1e-6 && std::abs(r.norm - 2.0) <= 1e-9 && r.norm_sq > 1e-6 &&
                           std::abs(e3.norm() - 1.0) <= 1e-12);
      return c;
    });
    add("radius_lower_bound", [&] {
      CheckResult c;
      const auto lb = radius_lower_bound(a, 4096, config.seed);
      c.measured = {{"lower_bound", lb.value}};
      c.tolerance = 1e-4;
      c.status = status_of(lb.value >= 1.0 - 1e-4 && lb.value <= 1.0 + 1e-8);
      return c;
    });
  } else if (name == "nilpotent-jk") {
    add("radius_and_norms", [&] {
      CheckResult c;
      const Radii r = radii(a, config.angles);
      c.measured = {{"w", r.w}, {"norm", r.norm}, {"norm_of_square", r.norm_sq}};
      c.tolerance = 1e-5;
      c.status = status_of(std::abs(r.w - 1.0 / std::sqrt(2.0)) <= 1e-5 && std::abs(r.norm_sq - 1.0) <= 1e-9 &&
                           std::abs(r.norm * r.norm - 1.0) <= 1e-9);
      return c;
    });
  }

  write_artifacts(a, config);
  return report;
}

}  // namespace qnr
