#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nlselab/nlse/forcing.hpp"

namespace nlselab {

/// Initial condition at t2_start: zero field, analytic one-soliton parameters,
/// or a tabulated field loaded by the caller.
struct InitialCondition {
  enum class Kind { zero, soliton, table };
  Kind kind = Kind::zero;
  double a = 1.0, b = 0.0, x0 = 0.0, phi0 = 0.0;  // soliton parameters
  std::vector<Complex> table;
};

/// Full description of one driven run in slow variables.
struct SimulationConfig {
  std::size_t grid_n = 1024;
  double grid_length = 40.0;
  double epsilon = 0.1;
  double t2_start = -0.5;
  double t2_end = 0.5;
  double dt2 = 0.0;  // 0 -> largest step allowed by the invariant
  InitialCondition initial;
  ForcingProfile forcing = ForcingProfile::gaussian(0.0);
  std::size_t snapshot_stride = 0;  // 0 -> only first and last
  bool diagnostics = true;
  // test hooks: individual solver substeps can be switched off
  bool enable_nonlinear = true;
  bool enable_dispersion = true;

  bool forced() const { return !forcing.is_zero(); }

  /// Largest dt2 the stepping invariant allows for this config: the fast
  /// phase must advance less than pi/4 per step at the domain ends.
  double dt2_bound() const {
    const double tmax = std::max(std::abs(t2_start), std::abs(t2_end));
    double b = 0.1;
    if (forced() && tmax > 0.0) {
      b = std::min(b, epsilon * epsilon * 3.14159265358979323846 / (4.0 * tmax));
    }
    return b;
  }

  void validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
      throw std::invalid_argument("config: epsilon must lie in (0, 1)");
    }
    if (!(t2_start < t2_end)) {
      throw std::invalid_argument("config: t2_start must be < t2_end");
    }
    if (forced() && !(t2_start < 0.0 && 0.0 < t2_end)) {
      throw std::invalid_argument(
          "config: a driven run must span the resonance (t2_start < 0 < t2_end)");
    }
    if (!(dt2 > 0.0)) {
      throw std::invalid_argument("config: dt2 must be > 0");
    }
    if (dt2 > dt2_bound() * (1.0 + 1e-12)) {
      throw std::invalid_argument(
          "config: dt2 violates the step invariant dt2 <= min(1e-1, eps^2*pi/(4*max(|t2_start|,|t2_end|))); "
          "bound is " + std::to_string(dt2_bound()));
    }
    if (initial.kind == InitialCondition::Kind::soliton && !(initial.a > 0.0)) {
      throw std::invalid_argument("config: soliton amplitude must be > 0");
    }
  }

  SimulationConfig with_defaults() const {
    SimulationConfig c = *this;
    if (c.dt2 == 0.0) c.dt2 = c.dt2_bound();
    return c;
  }
};

namespace config_json {

inline void fail_unknown(const nlohmann::json& j, const std::set<std::string>& known,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) {
      throw std::invalid_argument("config: unknown key '" + it.key() + "' in " + where);
    }
  }
}

inline nlohmann::json to_json(const SimulationConfig& c) {
  nlohmann::json j;
  j["grid"] = {{"n", c.grid_n}, {"length", c.grid_length}};
  j["epsilon"] = c.epsilon;
  j["t2_start"] = c.t2_start;
  j["t2_end"] = c.t2_end;
  j["dt2"] = c.dt2;
  switch (c.initial.kind) {
    case InitialCondition::Kind::zero:
      j["initial"] = {{"kind", "zero"}};
      break;
    case InitialCondition::Kind::soliton:
      j["initial"] = {{"kind", "soliton"},
                      {"a", c.initial.a},
                      {"b", c.initial.b},
                      {"x0", c.initial.x0},
                      {"phi0", c.initial.phi0}};
      break;
    case InitialCondition::Kind::table: {
      nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
      for (const auto& v : c.initial.table) {
        re.push_back(v.real());
        im.push_back(v.imag());
      }
      j["initial"] = {{"kind", "table"}, {"re", re}, {"im", im}};
      break;
    }
  }
  switch (c.forcing.kind) {
    case ForcingProfile::Kind::gaussian:
      j["forcing"] = {{"kind", "gaussian"},
                      {"amplitude", c.forcing.amplitude},
                      {"width", c.forcing.width},
                      {"center", c.forcing.center}};
      break;
    case ForcingProfile::Kind::sech:
      j["forcing"] = {{"kind", "sech"},
                      {"amplitude", c.forcing.amplitude},
                      {"width", c.forcing.width},
                      {"center", c.forcing.center}};
      break;
    case ForcingProfile::Kind::table: {
      nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
      for (const auto& v : c.forcing.table) {
        re.push_back(v.real());
        im.push_back(v.imag());
      }
      j["forcing"] = {{"kind", "table"}, {"re", re}, {"im", im}};
      break;
    }
  }
  j["snapshot_stride"] = c.snapshot_stride;
  j["diagnostics"] = c.diagnostics;
  j["enable_nonlinear"] = c.enable_nonlinear;
  j["enable_dispersion"] = c.enable_dispersion;
  return j;
}

inline std::vector<Complex> complex_table(const nlohmann::json& j) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (re.size() != im.size()) {
    throw std::invalid_argument("config: re/im tables differ in length");
  }
  std::vector<Complex> out(re.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = Complex{re[i].get<double>(), im[i].get<double>()};
  }
  return out;
}

inline SimulationConfig from_json(const nlohmann::json& j) {
  fail_unknown(j,
               {"grid", "epsilon", "t2_start", "t2_end", "dt2", "initial", "forcing",
                "snapshot_stride", "diagnostics", "enable_nonlinear", "enable_dispersion"},
               "top level");
  SimulationConfig c;
  if (j.contains("grid")) {
    fail_unknown(j["grid"], {"n", "length"}, "grid");
    c.grid_n = j["grid"].value("n", c.grid_n);
    c.grid_length = j["grid"].value("length", c.grid_length);
  }
  c.epsilon = j.value("epsilon", c.epsilon);
  c.t2_start = j.value("t2_start", c.t2_start);
  c.t2_end = j.value("t2_end", c.t2_end);
  c.dt2 = j.value("dt2", c.dt2);
  if (j.contains("initial")) {
    const auto& ji = j["initial"];
    fail_unknown(ji, {"kind", "a", "b", "x0", "phi0", "re", "im"}, "initial");
    const std::string kind = ji.value("kind", "zero");
    if (kind == "zero") {
      c.initial.kind = InitialCondition::Kind::zero;
    } else if (kind == "soliton") {
      c.initial.kind = InitialCondition::Kind::soliton;
      c.initial.a = ji.value("a", 1.0);
      c.initial.b = ji.value("b", 0.0);
      c.initial.x0 = ji.value("x0", 0.0);
      c.initial.phi0 = ji.value("phi0", 0.0);
    } else if (kind == "table") {
      c.initial.kind = InitialCondition::Kind::table;
      c.initial.table = complex_table(ji);
    } else {
      throw std::invalid_argument("config: unknown initial.kind '" + kind + "'");
    }
  }
  if (j.contains("forcing")) {
    const auto& jf = j["forcing"];
    fail_unknown(jf, {"kind", "amplitude", "width", "center", "re", "im"}, "forcing");
    const std::string kind = jf.value("kind", "gaussian");
    if (kind == "gaussian") {
      c.forcing = ForcingProfile::gaussian(jf.value("amplitude", 0.0), jf.value("width", 1.0),
                                           jf.value("center", 0.0));
    } else if (kind == "sech") {
      c.forcing = ForcingProfile::sech(jf.value("amplitude", 0.0), jf.value("width", 1.0),
                                       jf.value("center", 0.0));
    } else if (kind == "table") {
      c.forcing = ForcingProfile::tabulated(complex_table(jf));
    } else {
      throw std::invalid_argument("config: unknown forcing.kind '" + kind + "'");
    }
  }
  c.snapshot_stride = j.value("snapshot_stride", c.snapshot_stride);
  c.diagnostics = j.value("diagnostics", c.diagnostics);
  c.enable_nonlinear = j.value("enable_nonlinear", c.enable_nonlinear);
  c.enable_dispersion = j.value("enable_dispersion", c.enable_dispersion);
  return c;
}

}  // namespace config_json

/// FNV-1a hash of the canonical JSON form; reports embed it so reruns are
/// checkable bit-for-bit.
inline std::uint64_t config_hash(const SimulationConfig& c) {
  const std::string s = config_json::to_json(c).dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace nlselab
