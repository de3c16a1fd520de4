#pragma once

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlselab/core/fft.hpp"

namespace nlselab {

/// Uniform periodic grid in the slow spatial variable.
///
/// Coordinates are x_j = -length/2 + j*dx, j = 0..n-1, and the wavenumbers
/// follow the standard FFT ordering: k_j = 2*pi*m_j/length with m_j = j for
/// j < n/2 and m_j = j - n otherwise.  For odd-order derivatives the Nyquist
/// mode (j = n/2) is zeroed; even-order derivatives keep it.
///
/// Grid1D is an immutable value: copies share the underlying tables, so it is
/// cheap to pass around and safe to read from many threads.
class Grid1D {
 public:
  Grid1D() = default;

  std::size_t size() const { return d_->n; }
  double length() const { return d_->length; }
  double dx() const { return d_->dx; }
  double x(std::size_t j) const { return d_->x[j]; }
  double k(std::size_t j) const { return d_->k[j]; }
  /// Wavenumber with the Nyquist mode zeroed (odd-order derivative table).
  double k_odd(std::size_t j) const { return d_->k_odd[j]; }
  const std::vector<double>& coords() const { return d_->x; }
  const std::vector<double>& wavenumbers() const { return d_->k; }
  const fft::Plan& plan() const { return d_->plan; }

  bool valid() const { return static_cast<bool>(d_); }
  bool same_as(const Grid1D& other) const {
    return d_ == other.d_ ||
           (d_ && other.d_ && d_->n == other.d_->n && d_->length == other.d_->length);
  }

  friend Grid1D make_grid(std::size_t n, double length);

 private:
  struct Data {
    std::size_t n;
    double length;
    double dx;
    std::vector<double> x;
    std::vector<double> k;
    std::vector<double> k_odd;
    fft::Plan plan;
    Data(std::size_t n_, double length_) : n(n_), length(length_), dx(length_ / n_), plan(n_) {}
  };
  std::shared_ptr<const Data> d_;
};

inline Grid1D make_grid(std::size_t n, double length) {
  if (n < 16 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("make_grid: n not a power of two (or < 16): n=" +
                                std::to_string(n));
  }
  if (!(length > 0.0)) {
    throw std::invalid_argument("make_grid: length must be positive");
  }
  auto d = std::make_shared<Grid1D::Data>(n, length);
  d->x.resize(n);
  d->k.resize(n);
  d->k_odd.resize(n);
  const double two_pi = 2.0 * 3.14159265358979323846;
  for (std::size_t j = 0; j < n; ++j) {
    d->x[j] = -length / 2.0 + static_cast<double>(j) * d->dx;
    const double m = (j < n / 2) ? static_cast<double>(j)
                                 : static_cast<double>(j) - static_cast<double>(n);
    d->k[j] = two_pi * m / length;
    d->k_odd[j] = (j == n / 2) ? 0.0 : d->k[j];
  }
  Grid1D g;
  g.d_ = std::move(d);
  return g;
}

}  // namespace nlselab
