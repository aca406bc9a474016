// Copyright 2026 The pointint Authors
// SPDX-License-Identifier: Apache-2.0

// JSON wire formats.
//
//   complex              {"re": x, "im": y}
//   boundary condition   {"type": "nonseparated", "matrix": [[z, z], [z, z]]}
//                        {"type": "separated_sa", "h_plus": x | "inf", "h_minus": x | "inf"}
//                        {"type": "separated_pt", "h0": x, "h1": y, "theta": t}
//   spin config          {"num_particles": N, "num_states": n, "statistics": "boson" | "fermion"}
//   amplitude vector     {"config": {...}, "entries": [z, ...]}   (s_1 most significant)

#pragma once

#include <string>

#include "json.hpp"

#include "pointint/bethe.hpp"
#include "pointint/classify.hpp"
#include "pointint/spectrum.hpp"
#include "pointint/tensor.hpp"
#include "pointint/ybe.hpp"

namespace pointint {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

[[noreturn]] inline void input_error(const std::string &what) {
  throw Error(ErrorCode::invalid_argument, what);
}

inline Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

inline double number_from_json(const Json &j, const std::string &what) {
  if (!j.is_number())
    input_error(what + " must be a number");
  return j.get<double>();
}

/// Accepts {"re": x, "im": y} or a bare real number.
inline Complex complex_from_json(const Json &j) {
  if (j.is_number())
    return {j.get<double>(), 0.0};
  if (!j.is_object() || !j.contains("re"))
    input_error("complex number must be {\"re\": x, \"im\": y}");
  const double re = number_from_json(j.at("re"), "re");
  const double im = j.contains("im") ? number_from_json(j.at("im"), "im") : 0.0;
  return {re, im};
}

inline Json extended_real_to_json(double h) {
  if (std::isinf(h))
    return "inf";
  return h;
}

inline double extended_real_from_json(const Json &j, const std::string &what) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf" || s == "infinity")
      return kInfiniteStrength;
    input_error(what + " must be a number or \"inf\"");
  }
  return number_from_json(j, what);
}

inline Json to_json(const BoundaryCondition &bc) {
  switch (bc.kind()) {
  case BcKind::non_separated: {
    const Matrix2 &m = bc.matrix();
    return Json{{"type", "nonseparated"},
                {"matrix", Json::array({Json::array({to_json(m.alpha), to_json(m.beta)}),
                                        Json::array({to_json(m.gamma), to_json(m.delta)})})}};
  }
  case BcKind::separated_sa: {
    const SeparatedSA &s = bc.separated_sa();
    return Json{{"type", "separated_sa"},
                {"h_plus", extended_real_to_json(s.h_plus)},
                {"h_minus", extended_real_to_json(s.h_minus)}};
  }
  case BcKind::separated_pt: {
    const SeparatedPT &s = bc.separated_pt();
    return Json{{"type", "separated_pt"}, {"h0", s.h0}, {"h1", s.h1}, {"theta", s.theta}};
  }
  }
  return {};
}

/// Validates shape and values; degenerate matrices raise degenerate_matrix.
inline BoundaryCondition boundary_condition_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    input_error("boundary condition needs a string \"type\"");
  const auto type = j.at("type").get<std::string>();
  if (type == "nonseparated") {
    if (!j.contains("matrix"))
      input_error("nonseparated boundary condition needs \"matrix\"");
    const Json &mat = j.at("matrix");
    if (!mat.is_array() || mat.size() != 2 || !mat[0].is_array() || !mat[1].is_array() ||
        mat[0].size() != 2 || mat[1].size() != 2)
      input_error("\"matrix\" must be a 2x2 array");
    return make_nonseparated(complex_from_json(mat[0][0]), complex_from_json(mat[0][1]),
                             complex_from_json(mat[1][0]), complex_from_json(mat[1][1]));
  }
  if (type == "separated_sa") {
    if (!j.contains("h_plus") || !j.contains("h_minus"))
      input_error("separated_sa needs \"h_plus\" and \"h_minus\"");
    return make_separated_sa(extended_real_from_json(j.at("h_plus"), "h_plus"),
                             extended_real_from_json(j.at("h_minus"), "h_minus"));
  }
  if (type == "separated_pt") {
    if (!j.contains("h0") || !j.contains("h1") || !j.contains("theta"))
      input_error("separated_pt needs \"h0\", \"h1\" and \"theta\"");
    return make_separated_pt(number_from_json(j.at("h0"), "h0"), number_from_json(j.at("h1"), "h1"),
                             number_from_json(j.at("theta"), "theta"));
  }
  input_error("unknown boundary condition type \"" + type + "\"");
}

inline Json to_json(const SAParams &p) {
  return Json{{"theta", p.theta}, {"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}};
}
inline Json to_json(const PTParams &p) {
  return Json{{"theta", p.theta}, {"phi", p.phi}, {"b", p.b}, {"c", p.c}};
}
inline Json to_json(const RSParams &p) {
  return Json{{"theta", p.theta}, {"t", p.t}, {"b", p.b}, {"c", p.c}};
}

template <class T> Json optional_to_json(const std::optional<T> &v) {
  return v ? to_json(*v) : Json(nullptr);
}

inline Json to_json(const SpecialTag &tag) {
  switch (tag.kind) {
  case TagKind::free: return Json{{"kind", "free"}};
  case TagKind::delta: return Json{{"kind", "delta"}, {"c", tag.strength}};
  case TagKind::anti_delta: return Json{{"kind", "anti_delta"}, {"c", tag.strength}};
  case TagKind::dirichlet:
  case TagKind::neumann:
    return Json{{"kind", tag.kind == TagKind::dirichlet ? "dirichlet" : "neumann"},
                {"side", tag.side == HalfLine::left ? "left" : "right"}};
  }
  return {};
}

inline Json to_json(const ClassificationReport &r) {
  Json tags = Json::array();
  for (const auto &t : r.special_tags)
    tags.push_back(to_json(t));
  return Json{{"is_self_adjoint", r.is_self_adjoint},
              {"sa_params", optional_to_json(r.sa_params)},
              {"is_pt", r.is_pt},
              {"pt_params", optional_to_json(r.pt_params)},
              {"pt_real_spectrum_condition",
               r.pt_real_spectrum_condition ? Json(*r.pt_real_spectrum_condition) : Json(nullptr)},
              {"has_real_spectrum_by_paper_condition",
               std::string(to_string(r.has_real_spectrum_by_paper_condition))},
              {"rs_params", optional_to_json(r.rs_params)},
              {"special_tags", tags},
              {"marginal", r.marginal}};
}

inline Json to_json(const BoundState &bs) {
  return Json{{"k", to_json(bs.k)},
              {"lambda", to_json(bs.lambda)},
              {"ratio", to_json(bs.ratio)},
              {"side", std::string(to_string(bs.side))}};
}

inline Json to_json(const SpinConfig &c) {
  return Json{{"num_particles", c.num_particles()},
              {"num_states", c.num_states()},
              {"statistics", std::string(to_string(c.statistics()))}};
}

inline Statistics statistics_from_json(const Json &j) {
  if (!j.is_string())
    input_error("statistics must be \"boson\" or \"fermion\"");
  const auto s = j.get<std::string>();
  if (s == "boson")
    return Statistics::boson;
  if (s == "fermion")
    return Statistics::fermion;
  input_error("statistics must be \"boson\" or \"fermion\"");
}

inline SpinConfig spin_config_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("num_particles") || !j.contains("num_states"))
    input_error("config needs \"num_particles\" and \"num_states\"");
  if (!j.at("num_particles").is_number_integer() || !j.at("num_states").is_number_integer())
    input_error("num_particles and num_states must be integers");
  const Statistics stats =
      j.contains("statistics") ? statistics_from_json(j.at("statistics")) : Statistics::boson;
  return {j.at("num_particles").get<int>(), j.at("num_states").get<int>(), stats};
}

inline Json entries_to_json(const AmplitudeVector &v) {
  Json out = Json::array();
  for (Complex z : v.entries())
    out.push_back(to_json(z));
  return out;
}

inline Json to_json(const AmplitudeVector &v) {
  return Json{{"config", to_json(v.config())}, {"entries", entries_to_json(v)}};
}

/// Either a full entry list or {"basis_labels": [s_1, ..., s_N]} with 1-based labels.
inline AmplitudeVector amplitude_from_json(const Json &j, const SpinConfig &config) {
  if (j.is_object() && j.contains("basis_labels")) {
    std::vector<int> labels;
    for (const Json &s : j.at("basis_labels")) {
      if (!s.is_number_integer())
        input_error("basis labels must be integers");
      labels.push_back(s.get<int>() - 1);
    }
    return AmplitudeVector::basis(config, labels);
  }
  const Json &entries = j.is_object() && j.contains("entries") ? j.at("entries") : j;
  if (!entries.is_array())
    input_error("amplitude entries must be an array");
  std::vector<Complex> values;
  for (const Json &z : entries)
    values.push_back(complex_from_json(z));
  return AmplitudeVector(config, std::move(values));
}

inline std::string permutation_key(const Permutation &p) {
  std::string key;
  const bool separated = p.size() > 9;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (separated && i > 0)
      key += '-';
    key += std::to_string(p[i]);
  }
  return key;
}

inline Json to_json(const AmplitudeTable &t) {
  Json entries = Json::object(), paths = Json::object();
  for (const auto &[perm, amp] : t.entries)
    entries[permutation_key(perm)] = entries_to_json(amp);
  for (const auto &[perm, path] : t.paths)
    paths[permutation_key(perm)] = path;
  return Json{{"momenta", t.momenta},
              {"config", to_json(t.config)},
              {"entries", entries},
              {"paths", paths}};
}

inline Json to_json(const YbeReport &r) {
  Json breakdown = Json::array();
  for (const auto &b : r.breakdown) {
    Json row{{"num_states", b.num_states},
             {"num_particles", b.num_particles},
             {"statistics", std::string(to_string(b.statistics))},
             {"residual_ybe", b.residual_ybe},
             {"residual_inverse", b.residual_inverse}};
    row["residual_commute"] = b.num_particles >= 4 ? Json(b.residual_commute) : Json(nullptr);
    breakdown.push_back(row);
  }
  return Json{{"residual_ybe", r.residual_ybe},
              {"residual_inverse", r.residual_inverse},
              {"residual_commute", r.residual_commute},
              {"passed", r.passed},
              {"verdict", std::string(to_string(r.verdict))},
              {"seed", r.seed},
              {"samples_requested", r.samples_requested},
              {"samples_used", r.samples_used},
              {"rejected_draws", r.rejected_draws},
              {"breakdown", breakdown}};
}

inline Json error_json(const Error &e) {
  return Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
}

} // namespace pointint
