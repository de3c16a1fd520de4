#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlselab/core/field.hpp"
#include "nlselab/core/grid.hpp"

namespace nlselab {

/// Smooth, rapidly decaying driving-force amplitude f(x1).
///
/// The closed forms are part of the contract:
///   gaussian: f(x) = a exp(-((x-x0)/sigma)^2)
///   sech:     f(x) = a sech((x-x0)/sigma)
/// A tabulated profile carries explicit samples for the target grid.
struct ForcingProfile {
  enum class Kind { gaussian, sech, table };

  Kind kind = Kind::gaussian;
  double amplitude = 0.0;
  double width = 1.0;
  double center = 0.0;
  std::vector<Complex> table;  // used only for Kind::table

  static ForcingProfile gaussian(double a, double sigma = 1.0, double x0 = 0.0) {
    check_width(sigma);
    return {Kind::gaussian, a, sigma, x0, {}};
  }
  static ForcingProfile sech(double a, double sigma = 1.0, double x0 = 0.0) {
    check_width(sigma);
    return {Kind::sech, a, sigma, x0, {}};
  }
  static ForcingProfile tabulated(std::vector<Complex> samples) {
    ForcingProfile p;
    p.kind = Kind::table;
    p.table = std::move(samples);
    return p;
  }

  bool is_zero() const {
    if (kind == Kind::table) {
      for (const auto& v : table)
        if (v != Complex{0.0, 0.0}) return false;
      return true;
    }
    return amplitude == 0.0;
  }

  /// Sample onto a grid.  Enforces the decay invariant |f|_edge <= 1e-12 |f|_max.
  WaveField evaluate(const Grid1D& g) const {
    WaveField f(g);
    switch (kind) {
      case Kind::gaussian:
        for (std::size_t j = 0; j < g.size(); ++j) {
          const double r = (g.x(j) - center) / width;
          f[j] = Complex{amplitude * std::exp(-r * r), 0.0};
        }
        break;
      case Kind::sech:
        for (std::size_t j = 0; j < g.size(); ++j) {
          const double r = (g.x(j) - center) / width;
          f[j] = Complex{amplitude / std::cosh(r), 0.0};
        }
        break;
      case Kind::table:
        if (table.size() != g.size()) {
          throw std::invalid_argument("ForcingProfile: table size does not match grid");
        }
        f.values = table;
        break;
    }
    require_finite(f);
    if (!is_zero() && edge_decay_ratio(f) > 1e-12) {
      throw std::invalid_argument(
          "ForcingProfile: profile does not decay at the domain edges (|f|_edge > 1e-12 |f|_max)");
    }
    return f;
  }

 private:
  static void check_width(double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("ForcingProfile: width must be > 0");
  }
};

}  // namespace nlselab
