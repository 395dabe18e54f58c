// Copyright 2026 The sepdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON document formats for ensembles, measurements and bound reports.
// Ensemble/measurement files carry amplitudes at full round-trip precision;
// report values are rounded to 12 significant digits so reports are stable
// bytes under re-serialization.

#ifndef SEPDIST_IO_HPP
#define SEPDIST_IO_HPP

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sepdist/bounds.hpp"
#include "sepdist/ensemble.hpp"
#include "sepdist/measurement.hpp"
#include "sepdist/state.hpp"
#include "sepdist/types.hpp"

namespace sepdist {

using Json = nlohmann::ordered_json;

namespace detail {

inline double round12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

inline const Json& require_field(const Json& j, const std::string& key,
                                 const std::string& where) {
  if (!j.contains(key))
    raise(Errc::ParseError, where + ": missing field '" + key + "'");
  return j.at(key);
}

template <typename Scalar>
ComplexVector<Scalar> parse_amplitudes(const Json& j,
                                       const std::string& where) {
  if (!j.is_array())
    raise(Errc::ParseError, where + ": amplitudes must be an array");
  ComplexVector<Scalar> v(j.size());
  Index i = 0;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number())
      raise(Errc::ParseError,
            where + "[" + std::to_string(i) + "]: expected [re, im]");
    v(i) = Complex<Scalar>(static_cast<Scalar>(pair[0].get<double>()),
                           static_cast<Scalar>(pair[1].get<double>()));
    ++i;
  }
  return v;
}

template <typename Scalar>
Json amplitudes_to_json(const ComplexVector<Scalar>& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i)
    out.push_back({static_cast<double>(v(i).real()),
                   static_cast<double>(v(i).imag())});
  return out;
}

inline std::vector<Index> parse_dims(const Json& j, const std::string& where) {
  const Json& dims = require_field(j, "dims", where);
  if (!dims.is_array() || dims.empty())
    raise(Errc::ParseError, where + ": dims must be a nonempty array");
  std::vector<Index> out;
  for (const auto& d : dims) {
    if (!d.is_number_integer())
      raise(Errc::ParseError, where + ": dims entries must be integers");
    out.push_back(d.get<Index>());
  }
  return out;
}

}  // namespace detail

template <typename Scalar>
Json ensemble_to_json(const Ensemble<Scalar>& s) {
  Json doc;
  doc["dims"] = s.dims();
  Json states = Json::array();
  for (Index i = 0; i < s.size(); ++i) {
    Json st;
    st["prob"] = static_cast<double>(s.probs[i]);
    st["amplitudes"] = detail::amplitudes_to_json(s.states[i].amplitudes);
    states.push_back(std::move(st));
  }
  doc["states"] = std::move(states);
  return doc;
}

template <typename Scalar>
Ensemble<Scalar> ensemble_from_json(const Json& doc,
                                    const Tolerances<Scalar>& tol = {}) {
  const auto dims = detail::parse_dims(doc, "ensemble");
  const Json& states = detail::require_field(doc, "states", "ensemble");
  if (!states.is_array() || states.empty())
    raise(Errc::ParseError, "ensemble: states must be a nonempty array");
  std::vector<StateVector<Scalar>> psi;
  std::vector<Scalar> probs;
  Index i = 0;
  for (const auto& st : states) {
    const std::string where = "ensemble.states[" + std::to_string(i) + "]";
    const Json& prob = detail::require_field(st, "prob", where);
    if (!prob.is_number())
      raise(Errc::ParseError, where + ": prob must be a number");
    probs.push_back(static_cast<Scalar>(prob.get<double>()));
    psi.push_back(make_state_vector(
        dims,
        detail::parse_amplitudes<Scalar>(
            detail::require_field(st, "amplitudes", where), where),
        tol));
    ++i;
  }
  return make_ensemble(std::move(psi), std::move(probs), tol);
}

template <typename Scalar>
Json measurement_to_json(const SeparablePovm<Scalar>& m,
                         const std::optional<DecodingMap<Scalar>>& g = {}) {
  Json doc;
  doc["dims"] = m.dims;
  Json outcomes = Json::array();
  for (const auto& o : m.outcomes) {
    Json entry;
    entry["weight"] = static_cast<double>(o.weight);
    Json factors = Json::array();
    for (const auto& f : o.factors)
      factors.push_back(detail::amplitudes_to_json(f));
    entry["factors"] = std::move(factors);
    outcomes.push_back(std::move(entry));
  }
  doc["outcomes"] = std::move(outcomes);
  if (g) {
    Json decoding = Json::array();
    for (const auto& guess : g->guesses) {
      Json entry;
      if (std::holds_alternative<Index>(guess))
        entry["member"] = std::get<Index>(guess);
      else
        entry["state"] = detail::amplitudes_to_json(
            std::get<ComplexVector<Scalar>>(guess));
      decoding.push_back(std::move(entry));
    }
    doc["decoding"] = std::move(decoding);
  }
  return doc;
}

template <typename Scalar>
struct MeasurementDocument {
  SeparablePovm<Scalar> povm;
  std::optional<DecodingMap<Scalar>> decoding;
};

template <typename Scalar>
MeasurementDocument<Scalar> measurement_from_json(
    const Json& doc, const Tolerances<Scalar>& tol = {}) {
  const auto dims = detail::parse_dims(doc, "measurement");
  const Json& outcomes = detail::require_field(doc, "outcomes", "measurement");
  if (!outcomes.is_array() || outcomes.empty())
    raise(Errc::ParseError, "measurement: outcomes must be a nonempty array");
  std::vector<SeparableOutcome<Scalar>> parsed;
  Index a = 0;
  for (const auto& o : outcomes) {
    const std::string where = "measurement.outcomes[" + std::to_string(a) + "]";
    const Json& weight = detail::require_field(o, "weight", where);
    if (!weight.is_number())
      raise(Errc::ParseError, where + ": weight must be a number");
    const Json& factors = detail::require_field(o, "factors", where);
    if (!factors.is_array() || factors.size() != dims.size())
      raise(Errc::ParseError, where + ": need one factor per party");
    SeparableOutcome<Scalar> outcome;
    outcome.weight = static_cast<Scalar>(weight.get<double>());
    Index p = 0;
    for (const auto& f : factors) {
      outcome.factors.push_back(detail::parse_amplitudes<Scalar>(
          f, where + ".factors[" + std::to_string(p) + "]"));
      ++p;
    }
    parsed.push_back(std::move(outcome));
    ++a;
  }
  MeasurementDocument<Scalar> out;
  out.povm = make_separable_povm(dims, std::move(parsed), tol);
  if (doc.contains("decoding")) {
    const Json& decoding = doc.at("decoding");
    if (!decoding.is_array())
      raise(Errc::ParseError, "measurement: decoding must be an array");
    DecodingMap<Scalar> g;
    Index idx = 0;
    for (const auto& entry : decoding) {
      const std::string where =
          "measurement.decoding[" + std::to_string(idx) + "]";
      if (entry.contains("member")) {
        if (!entry.at("member").is_number_integer())
          raise(Errc::ParseError, where + ": member must be an integer");
        g.guesses.emplace_back(entry.at("member").get<Index>());
      } else if (entry.contains("state")) {
        ComplexVector<Scalar> v =
            detail::parse_amplitudes<Scalar>(entry.at("state"), where);
        if (std::abs(v.norm() - Scalar(1)) > tol.normalization)
          raise(Errc::BadState, where + ": guess state is not normalized");
        g.guesses.emplace_back(std::move(v));
      } else {
        raise(Errc::ParseError, where + ": need 'member' or 'state'");
      }
      ++idx;
    }
    out.decoding = std::move(g);
  }
  return out;
}

template <typename Scalar>
Json bound_report_to_json(const BoundReport<Scalar>& report) {
  Json doc;
  Json bounds = Json::array();
  for (const auto& b : report.bounds) {
    Json entry;
    entry["name"] = b.name;
    entry["scope"] = to_string(b.scope);
    entry["side"] = to_string(b.side);
    entry["quantity"] = to_string(b.quantity);
    entry["cut"] = b.cut ? Json(b.cut->label()) : Json(nullptr);
    entry["raw"] = detail::round12(static_cast<double>(b.raw));
    entry["capped"] = detail::round12(static_cast<double>(b.capped));
    entry["informative"] = b.informative;
    entry["mode"] = to_string(b.mode);
    bounds.push_back(std::move(entry));
  }
  doc["bounds"] = std::move(bounds);
  Json achieved = Json::array();
  for (const auto& a : report.achieved) {
    Json entry;
    entry["label"] = a.label;
    entry["quantity"] = to_string(a.quantity);
    entry["value"] = detail::round12(static_cast<double>(a.value));
    achieved.push_back(std::move(entry));
  }
  doc["achieved"] = std::move(achieved);
  auto opt = [](const std::optional<Scalar>& v) {
    return v ? Json(detail::round12(static_cast<double>(*v))) : Json(nullptr);
  };
  Json summary;
  summary["orthogonal"] = report.orthogonal;
  summary["equiprobable"] = report.equiprobable;
  summary["spanRank"] = report.spanRank;
  summary["bestLowerFidelity"] = opt(report.bestLowerFidelity);
  summary["bestUpperFidelity"] = opt(report.bestUpperFidelity);
  summary["bestLowerSuccess"] = opt(report.bestLowerSuccess);
  summary["bestUpperSuccess"] = opt(report.bestUpperSuccess);
  summary["fidelityDetermined"] = opt(report.fidelityDetermined);
  summary["successDetermined"] = opt(report.successDetermined);
  doc["summary"] = std::move(summary);
  doc["warnings"] = report.warnings;
  return doc;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    raise(Errc::ParseError, e.what());
  }
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

inline void save_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) raise(Errc::ParseError, "cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

}  // namespace sepdist

#endif  // SEPDIST_IO_HPP
