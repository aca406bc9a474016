// Copyright 2026 The pointint Authors
// SPDX-License-Identifier: Apache-2.0

// Parameter-space scans over boundary-condition families.
//
// Grid file:
//   {
//     "family": "self_adjoint" | "pt" | "general",
//     "parameters": { name: value | {"values": [...]} |
//                            {"min": x, "max": y, "steps": n, "endpoint": true} },
//     "ybe_samples": 4
//   }
//
// Parameters (outermost loop first, last varies fastest):
//   self_adjoint  theta, a, b, c         d = (1 + bc) / a; a = 0 points are skipped
//   pt            theta, phi, b, c       points with b < 0 or 1 + bc < 0 are skipped
//   general       alpha_re, alpha_im, beta_re, beta_im,
//                 gamma_re, gamma_im, delta_re, delta_im   degenerate points are skipped
// Missing parameters default to 0. Ranges include both endpoints unless
// "endpoint" is false.

#pragma once

#include <charconv>
#include <map>
#include <string>
#include <vector>

#include "pointint/classify.hpp"
#include "pointint/io.hpp"
#include "pointint/parallel.hpp"
#include "pointint/spectrum.hpp"
#include "pointint/ybe.hpp"

namespace pointint {

enum class ScanFamily { self_adjoint, pt, general };

inline std::string_view to_string(ScanFamily f) {
  switch (f) {
  case ScanFamily::self_adjoint: return "self_adjoint";
  case ScanFamily::pt: return "pt";
  case ScanFamily::general: return "general";
  }
  return "general";
}

inline const std::vector<std::string> &family_parameters(ScanFamily f) {
  static const std::vector<std::string> sa{"theta", "a", "b", "c"};
  static const std::vector<std::string> pt{"theta", "phi", "b", "c"};
  static const std::vector<std::string> general{"alpha_re", "alpha_im", "beta_re", "beta_im",
                                                "gamma_re", "gamma_im", "delta_re", "delta_im"};
  switch (f) {
  case ScanFamily::self_adjoint: return sa;
  case ScanFamily::pt: return pt;
  case ScanFamily::general: return general;
  }
  return general;
}

struct GridSpec {
  ScanFamily family = ScanFamily::general;
  std::vector<std::string> names;
  std::vector<std::vector<double>> axes;
  int ybe_samples = 4;
};

inline std::vector<double> axis_from_json(const Json &j, const std::string &name) {
  if (j.is_number())
    return {j.get<double>()};
  if (!j.is_object())
    input_error("parameter \"" + name + "\" must be a number or an object");
  if (j.contains("values")) {
    std::vector<double> values;
    if (!j.at("values").is_array() || j.at("values").empty())
      input_error("\"values\" of \"" + name + "\" must be a non-empty array");
    for (const Json &v : j.at("values"))
      values.push_back(number_from_json(v, name));
    return values;
  }
  if (!j.contains("min") || !j.contains("max") || !j.contains("steps"))
    input_error("range \"" + name + "\" needs min, max and steps");
  const double lo = number_from_json(j.at("min"), name + ".min");
  const double hi = number_from_json(j.at("max"), name + ".max");
  if (!j.at("steps").is_number_integer() || j.at("steps").get<int>() < 1)
    input_error("\"steps\" of \"" + name + "\" must be a positive integer");
  const int steps = j.at("steps").get<int>();
  const bool endpoint = !j.contains("endpoint") || j.at("endpoint").get<bool>();
  if (steps == 1)
    return {lo};
  const double h = (hi - lo) / (endpoint ? steps - 1 : steps);
  std::vector<double> values;
  for (int i = 0; i < steps; ++i)
    values.push_back(endpoint && i == steps - 1 ? hi : lo + i * h);
  return values;
}

inline GridSpec grid_spec_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string())
    input_error("grid spec needs a string \"family\"");
  GridSpec spec;
  const auto family = j.at("family").get<std::string>();
  if (family == "self_adjoint")
    spec.family = ScanFamily::self_adjoint;
  else if (family == "pt")
    spec.family = ScanFamily::pt;
  else if (family == "general")
    spec.family = ScanFamily::general;
  else
    input_error("unknown family \"" + family + "\"");

  const Json params = j.contains("parameters") ? j.at("parameters") : Json::object();
  if (!params.is_object())
    input_error("\"parameters\" must be an object");
  spec.names = family_parameters(spec.family);
  for (auto it = params.begin(); it != params.end(); ++it)
    if (std::find(spec.names.begin(), spec.names.end(), it.key()) == spec.names.end())
      input_error("parameter \"" + it.key() + "\" does not belong to family " + family);
  for (const auto &name : spec.names)
    spec.axes.push_back(params.contains(name) ? axis_from_json(params.at(name), name)
                                              : std::vector<double>{0.0});
  if (j.contains("ybe_samples")) {
    if (!j.at("ybe_samples").is_number_integer() || j.at("ybe_samples").get<int>() < 1)
      input_error("\"ybe_samples\" must be a positive integer");
    spec.ybe_samples = j.at("ybe_samples").get<int>();
  }
  return spec;
}

struct ScanRecord {
  std::size_t index = 0;
  std::vector<double> params;
  Matrix2 matrix;
  ClassificationReport report;
  bool real_spectrum_condition = false;
  bool real_spectrum_direct = false;
  bool spectrum_is_real = false;
  bool integrable = false;
  bool delta_type = false;
  std::string ybe_verdict;
  int bound_state_count = 0;
};

struct ScanResult {
  GridSpec spec;
  std::uint64_t seed = 0;
  std::size_t grid_points = 0;
  std::size_t skipped = 0;
  std::vector<ScanRecord> records;
  Json summary;
  bool claims_hold = true;
};

namespace detail {

inline std::optional<Matrix2> grid_matrix(ScanFamily family, const std::vector<double> &p) {
  switch (family) {
  case ScanFamily::self_adjoint: {
    const double theta = p[0], a = p[1], b = p[2], c = p[3];
    if (a == 0.0)
      return std::nullopt;
    return SAParams{theta, a, b, c, (1.0 + b * c) / a}.reconstruct();
  }
  case ScanFamily::pt: {
    const double b = p[2], c = p[3];
    if (b < 0.0 || 1.0 + b * c < 0.0)
      return std::nullopt;
    return PTParams{p[0], p[1], b, c}.reconstruct();
  }
  case ScanFamily::general:
    return Matrix2{{p[0], p[1]}, {p[2], p[3]}, {p[4], p[5]}, {p[6], p[7]}};
  }
  return std::nullopt;
}

inline std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, end);
}

inline bool near(double x, double target) { return std::abs(x - target) < 1e-9; }

inline bool angle_near(double x, double target) {
  const double d = wrap_angle(x - target);
  return d < 1e-9 || kTwoPi - d < 1e-9;
}

} // namespace detail

inline ScanRecord evaluate_scan_point(const BoundaryCondition &bc, int ybe_samples,
                                      std::uint64_t ybe_seed) {
  ScanRecord rec;
  rec.matrix = bc.matrix();
  rec.report = classify(bc);
  rec.real_spectrum_condition = rec.report.has_real_spectrum_by_paper_condition == Ternary::yes;
  rec.real_spectrum_direct = roots_pure_imaginary(bc);
  rec.spectrum_is_real = spectrum_is_real(bc);
  rec.integrable = integrable(bc);
  rec.delta_type = is_delta_type(rec.report.special_tags);
  rec.bound_state_count = static_cast<int>(bound_states(bc).size());

  YbeScanOptions opts;
  opts.num_states = {1, 2};
  opts.num_particles = {3};
  opts.parallel = false;
  try {
    rec.ybe_verdict = std::string(to_string(ybe_scan(bc, ybe_samples, ybe_seed, opts).verdict));
  } catch (const Error &e) {
    if (e.code() != ErrorCode::pole_saturation)
      throw;
    rec.ybe_verdict = "pole_saturation";
  }
  return rec;
}

namespace detail {

struct Claim {
  std::string name;
  std::string description;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<std::size_t> examples; // first few violating record indices

  Claim(std::string n, std::string d) : name(std::move(n)), description(std::move(d)) {}

  void check(bool applies, bool holds, std::size_t index) {
    if (!applies)
      return;
    ++checked;
    if (!holds) {
      ++violations;
      if (examples.size() < 10)
        examples.push_back(index);
    }
  }

  Json to_json() const {
    return Json{{"name", name},       {"description", description}, {"checked", checked},
                {"violations", violations}, {"holds", violations == 0},
                {"violating_records", examples}};
  }
};

inline std::string flag_key(const ScanRecord &r) {
  auto b = [](bool v) { return v ? "1" : "0"; };
  return std::string("self_adjoint=") + b(r.report.is_self_adjoint) + ",pt=" + b(r.report.is_pt) +
         ",real_spectrum_condition=" + b(r.real_spectrum_condition) +
         ",real_spectrum_direct=" + b(r.real_spectrum_direct) + ",integrable=" + b(r.integrable);
}

} // namespace detail

/// Claims over the grid, evaluated on non-marginal records only:
///   - parametric and root-level real-spectrum verdicts agree
///   - PT real-spectrum condition agrees with the root-level spectrum
///   - integrable with real gamma means self-adjoint delta or anti-delta
///   - integrable PT points are b = 0, theta = 0, phi in {0, pi}, and all such points are integrable
///   - integrable points pass the numerical Yang-Baxter check
inline Json summarize_scan(const ScanResult &result, bool &claims_hold) {
  using detail::Claim;
  Claim rs{"real_spectrum_agreement",
           "parametric real-spectrum condition agrees with all-roots-pure-imaginary"};
  Claim pt_rs{"pt_real_spectrum_agreement",
              "PT real-spectrum condition agrees with spectrum_is_real on PT points"};
  Claim int_delta{"integrable_real_gamma_is_delta_type",
                  "integrable points with real gamma are self-adjoint delta or anti-delta"};
  Claim pt_int{"pt_integrable_is_delta_slice",
               "PT points are integrable exactly when theta = b = 0 and phi in {0, pi}"};
  Claim int_ybe{"integrable_passes_ybe",
                "integrable points pass the numerical Yang-Baxter check"};

  std::map<std::string, std::size_t> flag_counts;
  std::map<std::string, std::size_t> ybe_by_integrable;
  std::size_t marginal = 0, pt_integrable_delta = 0, pt_integrable_anti_delta = 0;
  std::size_t ybe_pass_non_integrable = 0;
  std::map<std::string, std::size_t> beta_ray;

  for (const ScanRecord &r : result.records) {
    ++flag_counts[detail::flag_key(r)];
    ++ybe_by_integrable[(r.integrable ? "integrable:" : "non_integrable:") + r.ybe_verdict];
    if (r.report.marginal) {
      ++marginal;
      continue;
    }
    rs.check(true, r.real_spectrum_condition == r.real_spectrum_direct, r.index);
    if (r.report.pt_params)
      pt_rs.check(true, *r.report.pt_real_spectrum_condition == r.spectrum_is_real, r.index);

    const bool real_gamma = std::abs(r.matrix.gamma.imag()) < tol::kMembership;
    int_delta.check(r.integrable && real_gamma, r.report.is_self_adjoint && r.delta_type, r.index);

    if (r.report.pt_params) {
      const PTParams &p = *r.report.pt_params;
      const bool phi_zero = detail::angle_near(p.phi, 0.0);
      const bool phi_pi = detail::angle_near(p.phi, kPi);
      const bool slice = detail::near(p.b, 0.0) && detail::angle_near(p.theta, 0.0) &&
                         (phi_zero || phi_pi);
      pt_int.check(true, slice == r.integrable, r.index);
      if (r.integrable && slice)
        ++(phi_zero ? pt_integrable_delta : pt_integrable_anti_delta);
    }
    int_ybe.check(r.integrable, r.ybe_verdict == "pass", r.index);

    if (!r.integrable && r.ybe_verdict == "pass")
      ++ybe_pass_non_integrable;
    const Matrix2 &m = r.matrix;
    if (std::abs(m.alpha - 1.0) < tol::kMembership && std::abs(m.delta - 1.0) < tol::kMembership &&
        std::abs(m.gamma) < tol::kMembership && std::abs(m.beta) >= tol::kMembership)
      ++beta_ray[r.ybe_verdict];
  }

  Json claims = Json::array();
  claims_hold = true;
  for (const Claim *c : {&rs, &pt_rs, &int_delta, &pt_int, &int_ybe}) {
    claims.push_back(c->to_json());
    claims_hold = claims_hold && c->violations == 0;
  }

  Json flags = Json::object();
  for (const auto &[k, v] : flag_counts)
    flags[k] = v;
  Json ybe_counts = Json::object();
  for (const auto &[k, v] : ybe_by_integrable)
    ybe_counts[k] = v;
  Json ray = Json::object();
  for (const auto &[k, v] : beta_ray)
    ray[k] = v;

  return Json{{"schema_version", kSchemaVersion},
              {"family", std::string(to_string(result.spec.family))},
              {"seed", result.seed},
              {"grid_points", result.grid_points},
              {"records", result.records.size()},
              {"skipped_infeasible", result.skipped},
              {"marginal_records", marginal},
              {"flag_counts", flags},
              {"claims", claims},
              {"observations",
               {{"ybe_verdicts", ybe_counts},
                {"ybe_pass_non_integrable", ybe_pass_non_integrable},
                {"pt_integrable_delta", pt_integrable_delta},
                {"pt_integrable_anti_delta", pt_integrable_anti_delta},
                {"beta_ray_gamma_zero_alpha_delta_one", ray}}},
              {"all_claims_hold", claims_hold}};
}

inline ScanResult run_scan(const GridSpec &spec, std::uint64_t seed) {
  ScanResult result;
  result.spec = spec;
  result.seed = seed;

  std::size_t total = 1;
  for (const auto &axis : spec.axes)
    total *= axis.size();
  result.grid_points = total;

  // Decode every grid point in row-major order, keep the feasible ones.
  std::vector<std::vector<double>> points;
  std::vector<std::size_t> grid_index;
  std::vector<BoundaryCondition> bcs;
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::vector<double> p(spec.axes.size());
    std::size_t rest = flat;
    for (std::size_t d = spec.axes.size(); d-- > 0;) {
      p[d] = spec.axes[d][rest % spec.axes[d].size()];
      rest /= spec.axes[d].size();
    }
    const auto m = detail::grid_matrix(spec.family, p);
    if (!m) {
      ++result.skipped;
      continue;
    }
    try {
      bcs.push_back(make_nonseparated(*m));
    } catch (const Error &e) {
      if (e.code() != ErrorCode::degenerate_matrix)
        throw;
      ++result.skipped;
      continue;
    }
    points.push_back(std::move(p));
    grid_index.push_back(flat);
  }

  result.records.resize(bcs.size());
  parallel_for(bcs.size(), [&](std::size_t i) {
    ScanRecord rec = evaluate_scan_point(bcs[i], spec.ybe_samples, seed ^ (grid_index[i] * 0x9E3779B97F4A7C15ull));
    rec.index = grid_index[i];
    rec.params = points[i];
    result.records[i] = std::move(rec);
  });

  result.summary = summarize_scan(result, result.claims_hold);
  return result;
}

inline const std::vector<std::string> &scan_csv_columns() {
  static const std::vector<std::string> cols{
      "index",          "family",        "theta",         "a",
      "b",              "c",             "d",             "phi",
      "alpha_re",       "alpha_im",      "beta_re",       "beta_im",
      "gamma_re",       "gamma_im",      "delta_re",      "delta_im",
      "self_adjoint",   "pt",            "pt_real_condition",
      "real_spectrum_condition",         "real_spectrum_direct",
      "spectrum_is_real", "integrable",  "delta_type",    "ybe_verdict",
      "marginal",       "bound_state_count"};
  return cols;
}

/// Fixed column order; parameters that do not belong to the family are empty.
inline std::string scan_to_csv(const ScanResult &result) {
  using detail::format_double;
  std::string out;
  const auto &cols = scan_csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i)
    out += (i ? "," : "") + cols[i];
  out += '\n';

  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  for (const ScanRecord &r : result.records) {
    std::map<std::string, std::string> family_values;
    for (std::size_t i = 0; i < result.spec.names.size(); ++i)
      family_values[result.spec.names[i]] = format_double(r.params[i]);
    if (result.spec.family == ScanFamily::self_adjoint)
      family_values["d"] = format_double((1.0 + r.params[2] * r.params[3]) / r.params[1]);
    auto fv = [&](const char *name) {
      auto it = family_values.find(name);
      return it == family_values.end() ? std::string() : it->second;
    };
    const Matrix2 &m = r.matrix;
    std::vector<std::string> row{
        std::to_string(r.index),
        std::string(to_string(result.spec.family)),
        fv("theta"), fv("a"), fv("b"), fv("c"), fv("d"), fv("phi"),
        format_double(m.alpha.real()), format_double(m.alpha.imag()),
        format_double(m.beta.real()), format_double(m.beta.imag()),
        format_double(m.gamma.real()), format_double(m.gamma.imag()),
        format_double(m.delta.real()), format_double(m.delta.imag()),
        b(r.report.is_self_adjoint), b(r.report.is_pt),
        r.report.pt_real_spectrum_condition ? b(*r.report.pt_real_spectrum_condition) : "",
        b(r.real_spectrum_condition), b(r.real_spectrum_direct), b(r.spectrum_is_real),
        b(r.integrable), b(r.delta_type), r.ybe_verdict, b(r.report.marginal),
        std::to_string(r.bound_state_count)};
    for (std::size_t i = 0; i < row.size(); ++i)
      out += (i ? "," : "") + row[i];
    out += '\n';
  }
  return out;
}

} // namespace pointint
