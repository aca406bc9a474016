// Copyright 2026 The pointint Authors
// SPDX-License-Identifier: Apache-2.0

// JSON-in / JSON-out bodies of the command-line subcommands.

#pragma once

#include <cstdint>

#include "pointint/bethe.hpp"
#include "pointint/classify.hpp"
#include "pointint/io.hpp"
#include "pointint/scan.hpp"
#include "pointint/spectrum.hpp"
#include "pointint/ybe.hpp"

namespace pointint {

inline constexpr int kCliMaxParticles = 5;

/// Input is either a bare boundary condition or {"boundary_condition": {...}, ...}.
inline BoundaryCondition extract_boundary_condition(const Json &input) {
  if (input.is_object() && input.contains("boundary_condition"))
    return boundary_condition_from_json(input.at("boundary_condition"));
  return boundary_condition_from_json(input);
}

inline Json cmd_classify(const Json &input) {
  const BoundaryCondition bc = extract_boundary_condition(input);
  Json out = to_json(classify(bc));
  out["schema_version"] = kSchemaVersion;
  out["boundary_condition"] = to_json(bc);
  return out;
}

inline Json cmd_spectrum(const Json &input) {
  const BoundaryCondition bc = extract_boundary_condition(input);
  if (bc.kind() == BcKind::separated_pt)
    throw Error(ErrorCode::unsupported, "spectra of separated PT conditions are not computed");

  const ClassificationReport report = classify(bc);
  Json out{{"schema_version", kSchemaVersion},
           {"boundary_condition", to_json(bc)},
           {"classification",
            {{"is_self_adjoint", report.is_self_adjoint},
             {"is_pt", report.is_pt},
             {"has_real_spectrum_by_paper_condition",
              std::string(to_string(report.has_real_spectrum_by_paper_condition))},
             {"marginal", report.marginal}}}};

  std::vector<BoundState> states;
  if (bc.is_nonseparated()) {
    const DispersionRoots roots = dispersion_roots(bc);
    Json list = Json::array();
    for (const auto &r : roots.roots)
      list.push_back({{"k", to_json(r.k)}, {"multiplicity", r.multiplicity}});
    out["dispersion"] = {
        {"degree", roots.degree}, {"roots", list}, {"identity_like", roots.identity_like}};
    states = bound_states(bc);
    out["spectrum_is_real"] = spectrum_is_real(bc);
    out["roots_pure_imaginary"] = roots_pure_imaginary(bc);
  } else {
    out["dispersion"] = nullptr;
    states = separated_bound_states(bc);
    out["spectrum_is_real"] = true;
    out["roots_pure_imaginary"] = nullptr;
  }

  Json list = Json::array();
  for (const BoundState &bs : states) {
    Json j = to_json(bs);
    j["pt_symmetric"] =
        bs.side == BoundSide::both ? Json(eigenfunction_pt_symmetric(bs)) : Json(nullptr);
    j["norm_squared"] = eigenfunction_norm_squared(bs);
    list.push_back(j);
  }
  out["bound_states"] = list;
  out["bound_state_count"] = states.size();
  return out;
}

inline Json cmd_ybe(const Json &input, int samples, std::uint64_t seed) {
  const BoundaryCondition bc = extract_boundary_condition(input);
  Json out = to_json(ybe_scan(bc, samples, seed));
  out["schema_version"] = kSchemaVersion;
  out["boundary_condition"] = to_json(bc);
  out["integrable"] = integrable(bc);
  return out;
}

/// {"boundary_condition", "config", "momenta", "alpha_identity"?}. Without
/// alpha_identity the basis vector with labels s_i = ((i - 1) mod n) + 1 is used.
inline Json cmd_bethe(const Json &input) {
  if (!input.is_object() || !input.contains("config") || !input.contains("momenta"))
    input_error("bethe input needs \"boundary_condition\", \"config\" and \"momenta\"");
  const BoundaryCondition bc = extract_boundary_condition(input);
  const SpinConfig config = spin_config_from_json(input.at("config"));
  if (config.num_particles() < 2 || config.num_particles() > kCliMaxParticles)
    input_error("bethe supports 2 <= N <= 5");

  std::vector<double> momenta;
  if (!input.at("momenta").is_array())
    input_error("\"momenta\" must be an array");
  for (const Json &k : input.at("momenta"))
    momenta.push_back(number_from_json(k, "momentum"));
  if (static_cast<int>(momenta.size()) != config.num_particles())
    input_error("need one momentum per particle");

  AmplitudeVector alpha(config);
  if (input.contains("alpha_identity")) {
    alpha = amplitude_from_json(input.at("alpha_identity"), config);
  } else {
    std::vector<int> labels;
    for (int i = 0; i < config.num_particles(); ++i)
      labels.push_back(i % config.num_states());
    alpha = AmplitudeVector::basis(config, labels);
  }

  const AmplitudeTable table = propagate_amplitudes(bc, momenta, alpha, config);
  Json out{{"schema_version", kSchemaVersion},
           {"boundary_condition", to_json(bc)},
           {"integrable", integrable(bc)},
           {"table", to_json(table)}};
  out["two_body_boundary_residual"] = nullptr;
  out["three_body_consistency"] = nullptr;
  if (config.num_particles() == 2) {
    const auto wf = two_body_solve(bc, momenta[0], momenta[1], alpha, config.statistics());
    out["two_body_boundary_residual"] = boundary_residual(wf);
  }
  if (config.num_particles() == 3) {
    const double r = three_body_consistency(bc, momenta, alpha, config);
    out["three_body_consistency"] = r;
    out["three_body_verdict"] = std::string(to_string(ybe_verdict(r)));
  }
  return out;
}

inline ScanResult cmd_scan(const Json &grid, std::uint64_t seed) {
  return run_scan(grid_spec_from_json(grid), seed);
}

} // namespace pointint
