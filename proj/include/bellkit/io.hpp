// Copyright 2026 The bellkit Authors
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

#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bellkit/bell_operators.hpp"
#include "bellkit/errors.hpp"
#include "bellkit/maximizer.hpp"
#include "bellkit/observables.hpp"
#include "bellkit/state.hpp"

namespace bellkit {

// ---------------------------------------------------------------------------
// Parsing. Inputs are UTF-8 JSON documents:
//   settings: {"qubits": 2|3, "a": [x,y,z], "a_prime": [...], "b": [...],
//              "b_prime": [...], "c": [...]?, "c_prime": [...]?}
//   state:    {"qubits": 2|3, "amplitudes": [[re, im], ...]}
// Vectors and amplitudes must be unit-norm within 1e-9; they are
// renormalized to working precision after validation.
// ---------------------------------------------------------------------------

namespace detail {

inline Vec3 parse_vec3(const nlohmann::json& j, const std::string& name) {
  if (!j.is_array() || j.size() != 3) {
    throw InvalidInput("settings field '" + name + "' must be a 3-vector");
  }
  Vec3 v;
  double* comps[3] = {&v.x, &v.y, &v.z};
  for (int i = 0; i < 3; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_number()) {
      throw InvalidInput("settings field '" + name + "' must be numeric");
    }
    *comps[i] = j[static_cast<std::size_t>(i)].get<double>();
    if (!std::isfinite(*comps[i])) {
      throw InvalidInput("settings field '" + name + "' must be finite");
    }
  }
  if (std::abs(norm(v) - 1.0) > 1e-9) {
    throw InvalidInput("settings field '" + name +
                       "' is not unit length within 1e-9");
  }
  return normalized(v);
}

inline nlohmann::json parse_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidInput("document is not valid JSON");
  return j;
}

}  // namespace detail

inline Settings parse_settings_document(const std::string& text) {
  const nlohmann::json j = detail::parse_json(text);
  if (!j.is_object()) throw InvalidInput("settings document must be an object");
  if (!j.contains("qubits") || !j["qubits"].is_number_integer()) {
    throw InvalidInput("settings document needs an integer 'qubits' field");
  }
  const int qubits = j["qubits"].get<int>();
  if (qubits != 2 && qubits != 3) {
    throw InvalidInput("settings 'qubits' must be 2 or 3");
  }
  for (const char* field : {"a", "a_prime", "b", "b_prime"}) {
    if (!j.contains(field)) {
      throw InvalidInput(std::string("settings document is missing '") +
                         field + "'");
    }
  }
  const bool has_c = j.contains("c") || j.contains("c_prime");
  if (qubits == 2 && has_c) {
    throw InvalidInput("two-qubit settings must not define 'c'/'c_prime'");
  }
  if (qubits == 3 && !(j.contains("c") && j.contains("c_prime"))) {
    throw InvalidInput("three-qubit settings need 'c' and 'c_prime'");
  }

  const SpinObservable a = observable_from_vector(detail::parse_vec3(j["a"], "a"));
  const SpinObservable ap =
      observable_from_vector(detail::parse_vec3(j["a_prime"], "a_prime"));
  const SpinObservable b = observable_from_vector(detail::parse_vec3(j["b"], "b"));
  const SpinObservable bp =
      observable_from_vector(detail::parse_vec3(j["b_prime"], "b_prime"));
  if (qubits == 2) return ChshSettings{a, ap, b, bp};
  const SpinObservable c = observable_from_vector(detail::parse_vec3(j["c"], "c"));
  const SpinObservable cp =
      observable_from_vector(detail::parse_vec3(j["c_prime"], "c_prime"));
  return KlyshkoSettings{a, ap, b, bp, c, cp};
}

inline PureState parse_state_document(const std::string& text) {
  const nlohmann::json j = detail::parse_json(text);
  if (!j.is_object()) throw InvalidInput("state document must be an object");
  if (!j.contains("qubits") || !j["qubits"].is_number_integer()) {
    throw InvalidInput("state document needs an integer 'qubits' field");
  }
  const int qubits = j["qubits"].get<int>();
  if (qubits != 2 && qubits != 3) {
    throw InvalidInput("state 'qubits' must be 2 or 3");
  }
  const std::size_t dim = std::size_t{1} << qubits;
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array() ||
      j["amplitudes"].size() != dim) {
    throw InvalidInput("state document needs " + std::to_string(dim) +
                       " [re, im] amplitude pairs");
  }
  std::vector<Complex> amps(dim);
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const nlohmann::json& pair = j["amplitudes"][i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
      throw InvalidInput("amplitude " + std::to_string(i) +
                         " must be a [re, im] pair");
    }
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw InvalidInput("amplitude " + std::to_string(i) + " must be finite");
    }
    amps[i] = Complex(re, im);
    norm_sq += std::norm(amps[i]);
  }
  if (std::abs(std::sqrt(norm_sq) - 1.0) > 1e-9) {
    throw InvalidInput("state amplitudes are not unit norm within 1e-9");
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (Complex& a : amps) a *= inv;
  return PureState(qubits, std::move(amps));
}

// ---------------------------------------------------------------------------
// Emission. Output documents are written with a fixed field order and every
// floating-point number rendered with 17 significant digits, so identical
// inputs produce byte-identical output.
// ---------------------------------------------------------------------------

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return std::string(buf);
}

inline std::string emit_vec3(const Vec3& v) {
  return "[" + format_double(v.x) + "," + format_double(v.y) + "," +
         format_double(v.z) + "]";
}

inline std::string emit_settings(const ChshSettings& s) {
  return std::string("{\"qubits\":2") +
         ",\"a\":" + emit_vec3(s.a.direction) +
         ",\"a_prime\":" + emit_vec3(s.a_prime.direction) +
         ",\"b\":" + emit_vec3(s.b.direction) +
         ",\"b_prime\":" + emit_vec3(s.b_prime.direction) + "}";
}

inline std::string emit_settings(const KlyshkoSettings& s) {
  return std::string("{\"qubits\":3") +
         ",\"a\":" + emit_vec3(s.a.direction) +
         ",\"a_prime\":" + emit_vec3(s.a_prime.direction) +
         ",\"b\":" + emit_vec3(s.b.direction) +
         ",\"b_prime\":" + emit_vec3(s.b_prime.direction) +
         ",\"c\":" + emit_vec3(s.c.direction) +
         ",\"c_prime\":" + emit_vec3(s.c_prime.direction) + "}";
}

inline std::string emit_settings(const Settings& s) {
  return std::visit([](const auto& inner) { return emit_settings(inner); }, s);
}

inline std::string emit_state(const PureState& psi) {
  std::string out = "{\"qubits\":" + std::to_string(psi.n_qubits()) +
                    ",\"amplitudes\":[";
  for (std::size_t i = 0; i < psi.dimension(); ++i) {
    if (i > 0) out += ",";
    out += "[" + format_double(psi.amplitudes()[i].real()) + "," +
           format_double(psi.amplitudes()[i].imag()) + "]";
  }
  out += "]}";
  return out;
}

/// Row-major [re, im] pairs, the wire format for 2x2 unitaries.
inline std::string emit_matrix(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (r + c > 0) out += ",";
      out += "[" + format_double(m(r, c).real()) + "," +
             format_double(m(r, c).imag()) + "]";
    }
  out += "]";
  return out;
}

}  // namespace bellkit
