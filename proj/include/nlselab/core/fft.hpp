#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nlselab::fft {

/// Radix-2 FFT plan for a fixed power-of-two size.
///
/// Tables (bit-reversal permutation, twiddle factors) are computed once and
/// immutable afterwards, so a single plan can be shared by concurrent callers.
/// Forward transform is unnormalized, inverse carries the 1/n factor.
class Plan {
 public:
  explicit Plan(std::size_t n) : n_(n) {
    if (n < 2 || (n & (n - 1)) != 0) {
      throw std::invalid_argument("fft::Plan: size must be a power of two >= 2");
    }
    bitrev_.resize(n);
    std::size_t log2n = 0;
    while ((std::size_t{1} << log2n) < n) ++log2n;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < log2n; ++b) {
        r = (r << 1) | ((i >> b) & 1u);
      }
      bitrev_[i] = r;
    }
    twiddle_.resize(n / 2);
    const double w = -2.0 * pi() / static_cast<double>(n);
    for (std::size_t j = 0; j < n / 2; ++j) {
      const double a = w * static_cast<double>(j);
      twiddle_[j] = {std::cos(a), std::sin(a)};
    }
  }

  std::size_t size() const { return n_; }

  /// In-place unnormalized forward transform: X_k = sum_j x_j e^{-2pi i jk/n}.
  void forward(std::complex<double>* data) const { transform(data, false); }

  /// In-place inverse transform with 1/n normalization.
  void inverse(std::complex<double>* data) const {
    for (std::size_t i = 0; i < n_; ++i) data[i] = std::conj(data[i]);
    transform(data, false);
    const double inv = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) data[i] = std::conj(data[i]) * inv;
  }

  void forward(std::vector<std::complex<double>>& v) const {
    check(v.size());
    forward(v.data());
  }
  void inverse(std::vector<std::complex<double>>& v) const {
    check(v.size());
    inverse(v.data());
  }

 private:
  static constexpr double pi() { return 3.14159265358979323846; }

  void check(std::size_t m) const {
    if (m != n_) throw std::invalid_argument("fft::Plan: size mismatch");
  }

  void transform(std::complex<double>* a, bool) const {
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t j = bitrev_[i];
      if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n_; len <<= 1) {
      const std::size_t half = len >> 1;
      const std::size_t tstep = n_ / len;
      for (std::size_t start = 0; start < n_; start += len) {
        const std::complex<double>* tw = twiddle_.data();
        for (std::size_t j = 0; j < half; ++j, tw += tstep) {
          const std::complex<double> u = a[start + j];
          const std::complex<double> v = a[start + j + half] * (*tw);
          a[start + j] = u + v;
          a[start + j + half] = u - v;
        }
      }
    }
  }

  std::size_t n_;
  std::vector<std::size_t> bitrev_;
  std::vector<std::complex<double>> twiddle_;
};

}  // namespace nlselab::fft
