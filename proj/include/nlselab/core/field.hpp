#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "nlselab/core/grid.hpp"

namespace nlselab {

using Complex = std::complex<double>;

/// Complex field sampled on a Grid1D.  Plain value type; all operations on
/// fields leave their inputs unmodified.
struct WaveField {
  Grid1D grid;
  std::vector<Complex> values;

  WaveField() = default;
  explicit WaveField(const Grid1D& g) : grid(g), values(g.size(), Complex{0.0, 0.0}) {}
  WaveField(const Grid1D& g, std::vector<Complex> v) : grid(g), values(std::move(v)) {
    if (values.size() != g.size()) {
      throw std::invalid_argument("WaveField: value count does not match grid");
    }
  }

  std::size_t size() const { return values.size(); }
  Complex& operator[](std::size_t j) { return values[j]; }
  const Complex& operator[](std::size_t j) const { return values[j]; }
};

inline void require_same_grid(const WaveField& a, const WaveField& b) {
  if (!a.grid.same_as(b.grid)) {
    throw std::invalid_argument("fields live on different grids");
  }
}

inline bool all_finite(const WaveField& u) {
  for (const auto& v : u.values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

inline void require_finite(const WaveField& u) {
  if (!all_finite(u)) throw std::runtime_error("field contains non-finite values");
}

/// Max pointwise magnitude.
inline double sup_norm(const WaveField& u) {
  double m = 0.0;
  for (const auto& v : u.values) m = std::max(m, std::abs(v));
  return m;
}

/// Max pointwise magnitude of the difference; fields must share a grid.
inline double sup_distance(const WaveField& a, const WaveField& b) {
  require_same_grid(a, b);
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

/// Edge magnitude relative to the field maximum.  The periodic spectral
/// treatment of the whole-line problem is trustworthy only while this stays
/// below ~1e-8.
inline double edge_decay_ratio(const WaveField& u) {
  const double m = sup_norm(u);
  if (m == 0.0) return 0.0;
  const double e = std::max(std::abs(u.values.front()), std::abs(u.values.back()));
  return e / m;
}

inline bool edge_decay_ok(const WaveField& u, double tol = 1e-8) {
  return edge_decay_ratio(u) <= tol;
}

/// integral |u|^2 dx, rectangle rule (spectrally exact for the grid's band).
inline double mass(const WaveField& u) {
  double s = 0.0;
  for (const auto& v : u.values) s += std::norm(v);
  return s * u.grid.dx();
}

/// Spectral derivative of even order 2: transform, multiply by -k^2 (Nyquist
/// kept), inverse transform.
inline WaveField second_derivative(const WaveField& u) {
  require_finite(u);
  WaveField out = u;
  const auto& g = u.grid;
  g.plan().forward(out.values);
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double k = g.k(j);
    out.values[j] *= -k * k;
  }
  g.plan().inverse(out.values);
  return out;
}

/// Spectral first derivative (Nyquist zeroed).
inline WaveField first_derivative(const WaveField& u) {
  require_finite(u);
  WaveField out = u;
  const auto& g = u.grid;
  g.plan().forward(out.values);
  for (std::size_t j = 0; j < g.size(); ++j) {
    out.values[j] *= Complex{0.0, g.k_odd(j)};
  }
  g.plan().inverse(out.values);
  return out;
}

/// integral (|u_x|^2 - 1/2 |u|^4) dx — conserved Hamiltonian of the unforced
/// equation, used as a solver diagnostic.
inline double energy(const WaveField& u) {
  const WaveField ux = first_derivative(u);
  double s = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    s += std::norm(ux[j]) - 0.5 * std::norm(u[j]) * std::norm(u[j]);
  }
  return s * u.grid.dx();
}

/// Mass evaluated from the spectrum (Parseval route); used to cross-check the
/// physical-space quadrature.
inline double mass_spectral(const WaveField& u) {
  WaveField hat = u;
  u.grid.plan().forward(hat.values);
  double s = 0.0;
  for (const auto& v : hat.values) s += std::norm(v);
  const double n = static_cast<double>(u.size());
  return s * u.grid.length() / (n * n);
}

}  // namespace nlselab
