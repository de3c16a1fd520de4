#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "nlselab/asym/fresnel.hpp"
#include "nlselab/core/field.hpp"
#include "nlselab/core/quadrature.hpp"
#include "nlselab/nlse/forcing.hpp"
#include "nlselab/nlse/sweep.hpp"

namespace nlselab {

/// How many terms of an ansatz are assembled.
enum class ExpansionOrder { leading, second };

/// Connection formula: the post-resonance initial condition
///   v|_{t2=0} = u(x1,0) + (1-i) sqrt(pi) f(x1).
inline WaveField connection_map(const WaveField& u0, const WaveField& f) {
  require_same_grid(u0, f);
  WaveField out = u0;
  const Complex c1 = fresnel::connection_constant();
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += c1 * f[j];
  return out;
}

inline WaveField connection_map(const WaveField& u0, const ForcingProfile& f) {
  return connection_map(u0, f.evaluate(u0.grid));
}

/// Pre-resonance outer ansatz, as a slow-frame envelope U = Psi/eps:
///   leading:  u1 + eps B2 e^{i theta}
///   second:   + eps^3 (B41 e^{i theta} + B4m1 e^{-i theta}) + eps^4 B52 e^{2 i theta}
/// with  B2 = -f/t2,  B4m1 = -u1^2 B2*/t2,  B52 = -u1* B2^2/(2 t2),
///       B41 = -(i dB2/dt2 + B2_xx + |u1|^2 B2)/t2,  dB2/dt2 = f/t2^2.
inline WaveField outer_pre_field(const WaveField& u1, const WaveField& f, double t2,
                                 double epsilon, ExpansionOrder order) {
  require_same_grid(u1, f);
  if (t2 == 0.0) {
    throw std::invalid_argument("outer_pre_field: forced-mode coefficients are singular at t2 = 0");
  }
  const SweepPhase sweep(epsilon);
  const Complex eip = std::polar(1.0, sweep.theta(t2));

  WaveField out = u1;
  for (std::size_t j = 0; j < out.size(); ++j) {
    const Complex B2 = -f[j] / t2;
    out[j] += epsilon * B2 * eip;
  }
  if (order == ExpansionOrder::second) {
    WaveField B2field(u1.grid);
    for (std::size_t j = 0; j < B2field.size(); ++j) B2field[j] = -f[j] / t2;
    const WaveField B2xx = second_derivative(B2field);
    const Complex I{0.0, 1.0};
    const double e3 = epsilon * epsilon * epsilon;
    const double e4 = e3 * epsilon;
    for (std::size_t j = 0; j < out.size(); ++j) {
      const Complex B2 = B2field[j];
      const Complex dB2 = f[j] / (t2 * t2);
      const Complex B41 = -(I * dB2 + B2xx[j] + std::norm(u1[j]) * B2) / t2;
      const Complex B4m1 = -u1[j] * u1[j] * std::conj(B2) / t2;
      const Complex B52 = -std::conj(u1[j]) * B2 * B2 / (2.0 * t2);
      out[j] += e3 * (B41 * eip + B4m1 / eip) + e4 * B52 * eip * eip;
    }
  }
  return out;
}

inline WaveField outer_pre_field(const WaveField& u1, const ForcingProfile& f, double t2,
                                 double epsilon, ExpansionOrder order = ExpansionOrder::leading) {
  return outer_pre_field(u1, f.evaluate(u1.grid), t2, epsilon, order);
}

/// Post-resonance outer ansatz:
///   leading:  v1 + eps A2 e^{i theta},  A2 = -f/t2
///   second:   + eps^3 (A41 e^{i theta} + A4m1 e^{-i theta})
/// with  A41 = -(i dA2/dt2 + A2_xx + 2 |v1|^2 A2)/t2,  A4m1 = -v1^2 A2*/t2.
inline WaveField outer_post_field(const WaveField& v1, const WaveField& f, double t2,
                                  double epsilon,
                                  ExpansionOrder order = ExpansionOrder::leading) {
  require_same_grid(v1, f);
  if (t2 == 0.0) {
    throw std::invalid_argument("outer_post_field: forced-mode coefficients are singular at t2 = 0");
  }
  const SweepPhase sweep(epsilon);
  const Complex eip = std::polar(1.0, sweep.theta(t2));

  WaveField out = v1;
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] += epsilon * (-f[j] / t2) * eip;
  }
  if (order == ExpansionOrder::second) {
    WaveField A2field(v1.grid);
    for (std::size_t j = 0; j < A2field.size(); ++j) A2field[j] = -f[j] / t2;
    const WaveField A2xx = second_derivative(A2field);
    const Complex I{0.0, 1.0};
    const double e3 = epsilon * epsilon * epsilon;
    for (std::size_t j = 0; j < out.size(); ++j) {
      const Complex A2 = A2field[j];
      const Complex dA2 = f[j] / (t2 * t2);
      const Complex A41 = -(I * dA2 + A2xx[j] + 2.0 * std::norm(v1[j]) * A2) / t2;
      const Complex A4m1 = -v1[j] * v1[j] * std::conj(A2) / t2;
      out[j] += e3 * (A41 * eip + A4m1 / eip);
    }
  }
  return out;
}

inline WaveField outer_post_field(const WaveField& v1, const ForcingProfile& f, double t2,
                                  double epsilon,
                                  ExpansionOrder order = ExpansionOrder::leading) {
  return outer_post_field(v1, f.evaluate(v1.grid), t2, epsilon, order);
}

/// Inner (resonance-layer) expansion in t1 = t2/eps.
///
/// Leading order solves i dw1/dt1 = f e^{i t1^2/2} with w1 -> u0 as
/// t1 -> -inf:   w1(t1) = u0 - i f F(t1).
///
/// The second-order term solves dw2/dt1 = i X(t1),
/// X = w1_xx + |w1|^2 w1, with w2 - (d u1/dt2|_0) t1 -> 0 as t1 -> -inf.
/// Writing w1 = u0 + c F(t1), c = -i f, the t1 dependence enters only
/// through the scalar monomials {F, F*, F^2, |F|^2, |F|^2 F}:
///   X = X_inf + C1 F + C2 F* + C3 F^2 + C4 |F|^2 + C5 |F|^2 F,
///   X_inf = u0_xx + |u0|^2 u0,  C1 = c_xx + 2|u0|^2 c,  C2 = u0^2 c*,
///   C3 = u0* c^2,  C4 = 2 u0 |c|^2,  C5 = |c|^2 c.
/// The first four monomials integrate in closed form:
///   I1 = t F + i e^{i t^2/2}
///   I3 = t F^2 + 2 i F e^{i t^2/2} - i sqrt(2) F(sqrt(2) t)
///   I4 = t |F|^2 + 2 Re[i F* e^{i t^2/2}]
/// (each antiderivative vanishes as t -> -inf); only the cubic-in-f monomial
/// |F|^2 F needs quadrature, and its integrand decays like |t|^-3 on the left,
/// so the start point is benign.
class InnerLayer {
 public:
  InnerLayer(const WaveField& u0, const WaveField& f, double quad_start = -200.0)
      : u0_(u0), quad_start_(quad_start) {
    require_same_grid(u0, f);
    c_ = f;
    const Complex mi{0.0, -1.0};
    for (auto& v : c_.values) v *= mi;
    const WaveField u0xx = second_derivative(u0_);
    const WaveField cxx = second_derivative(c_);
    const auto n = u0.size();
    Xm_ = WaveField(u0.grid);
    C1_ = WaveField(u0.grid);
    C2_ = WaveField(u0.grid);
    C3_ = WaveField(u0.grid);
    C4_ = WaveField(u0.grid);
    C5_ = WaveField(u0.grid);
    for (std::size_t j = 0; j < n; ++j) {
      const Complex a = u0[j], c = c_[j];
      Xm_[j] = u0xx[j] + std::norm(a) * a;
      C1_[j] = cxx[j] + 2.0 * std::norm(a) * c;
      C2_[j] = a * a * std::conj(c);
      C3_[j] = std::conj(a) * c * c;
      C4_[j] = 2.0 * a * std::norm(c);
      C5_[j] = std::norm(c) * c;
    }
  }

  const WaveField& u0() const { return u0_; }

  /// w1(t1) = u0 - i f F(t1);  t1 may be +-infinity.
  WaveField w1(double t1) const {
    const Complex F = fresnel_cumulative(t1);
    WaveField out = u0_;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c_[j] * F;
    return out;
  }

  /// w1 limit as t1 -> +inf: the connection field u0 + (1-i) sqrt(pi) f.
  WaveField w1_limit() const { return w1(std::numeric_limits<double>::infinity()); }

  /// Matching slope at t1 -> -inf: i X(-inf) = d u1/dt2 |_{t2=0}.
  WaveField w2_slope_minus() const { return scaled(Xm_, {0.0, 1.0}); }

  /// Large-t1 slope, closed form: i (w10_xx + |w10|^2 w10) at w10 = w1(+inf).
  WaveField w2_slope_plus_closed() const {
    const WaveField w10 = w1_limit();
    const WaveField w10xx = second_derivative(w10);
    WaveField out(u0_.grid);
    const Complex I{0.0, 1.0};
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = I * (w10xx[j] + std::norm(w10[j]) * w10[j]);
    }
    return out;
  }

  /// w2(t1).  Throws if the quadrature start is not deep enough in the
  /// matching region (slope mismatch above 1%).
  WaveField w2(double t1) const {
    check_start();
    const Complex F = fresnel_cumulative(t1);
    const Complex ph = std::exp(Complex{0.0, 0.5 * t1 * t1});
    const Complex I{0.0, 1.0};
    const Complex I1 = t1 * F + I * ph;
    const Complex I3 = t1 * F * F + 2.0 * I * F * ph -
                       I * std::sqrt(2.0) * fresnel_cumulative(std::sqrt(2.0) * t1);
    const double I4 = t1 * std::norm(F) + 2.0 * std::real(I * std::conj(F) * ph);
    const Complex I5 = cubic_integral(t1);
    WaveField out(u0_.grid);
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = I * (Xm_[j] * t1 + C1_[j] * I1 + C2_[j] * std::conj(I1) + C3_[j] * I3 +
                    C4_[j] * I4 + C5_[j] * I5);
    }
    return out;
  }

  /// Offset of the large-t1 linear asymptote in closed form:
  ///   w20 = sqrt(2) F(inf) C3 + sqrt(2) pi C5.
  /// (The F^2 antiderivative contributes -i sqrt2 F(inf) and the cubic
  /// monomial the universal constant -i sqrt2 pi; the other offsets vanish.)
  WaveField w2_offset_closed() const {
    WaveField out(u0_.grid);
    const Complex finf = fresnel::full_integral();
    const double pi = 3.14159265358979323846;
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = std::sqrt(2.0) * finf * C3_[j] + std::sqrt(2.0) * pi * C5_[j];
    }
    return out;
  }

  double quad_start() const { return quad_start_; }

 private:
  static WaveField scaled(const WaveField& a, Complex s) {
    WaveField out = a;
    for (auto& v : out.values) v *= s;
    return out;
  }

  void check_start() const {
    // at the quadrature start the local slope must already match i X(-inf)
    const Complex F0 = fresnel_cumulative(quad_start_);
    double dev = 0.0, scale = 0.0;
    for (std::size_t j = 0; j < u0_.size(); ++j) {
      const Complex dX = C1_[j] * F0 + C2_[j] * std::conj(F0) + C3_[j] * F0 * F0 +
                         C4_[j] * std::norm(F0) + C5_[j] * std::norm(F0) * F0;
      dev = std::max(dev, std::abs(dX));
      const Complex Xp = Xm_[j] + C1_[j] * fresnel::full_integral();
      scale = std::max(scale, std::max(std::abs(Xm_[j]), std::abs(Xp)));
    }
    if (scale > 0.0 && dev > 0.01 * scale) {
      throw std::invalid_argument(
          "InnerLayer: quadrature start not large enough (slope mismatch > 1%)");
    }
  }

  /// I5(t1) = int_{-inf}^{t1} |F|^2 F dtau; integrand ~ |tau|^-3 at -inf so the
  /// truncated start contributes O(|start|^-4).
  Complex cubic_integral(double t1) const {
    if (t1 <= quad_start_) return {0.0, 0.0};
    auto mono = [](double tau) {
      const Complex F = fresnel_cumulative(tau);
      return std::norm(F) * F;
    };
    const auto r = quadrature::integrate(mono, quad_start_, t1, 1e-11, 1e-11);
    return r.value;
  }

  WaveField u0_, c_;
  WaveField Xm_, C1_, C2_, C3_, C4_, C5_;
  double quad_start_;
};

/// Inner ansatz as an envelope: w1 for `leading`, w1 + eps w2 for `second`.
inline WaveField inner_field(const WaveField& u0, const WaveField& f, double t1, double epsilon,
                             ExpansionOrder order, double quad_start = -200.0) {
  InnerLayer layer(u0, f, quad_start);
  WaveField out = layer.w1(t1);
  if (order == ExpansionOrder::second) {
    const WaveField w2 = layer.w2(t1);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += epsilon * w2[j];
  }
  return out;
}

inline WaveField inner_field(const WaveField& u0, const ForcingProfile& f, double t1,
                             double epsilon, ExpansionOrder order,
                             double quad_start = -200.0) {
  return inner_field(u0, f.evaluate(u0.grid), t1, epsilon, order, quad_start);
}

/// Numerically extract the large-t1 behaviour w2 ~ w21 t1 + w20.
///
/// The slope comes from a finite difference of w2 over [30, 60] and is checked
/// against the closed form; the offset follows the limit definition, with the
/// O(1/t1) remainder removed by Richardson extrapolation in 1/t1.  Throws when
/// the tail fit residual exceeds 1%.
inline std::pair<WaveField, WaveField> w2_limit_slope_and_offset(const WaveField& u0,
                                                                 const WaveField& f) {
  InnerLayer layer(u0, f);
  const double Ta = 30.0, Tb = 60.0;
  const WaveField wa = layer.w2(Ta);
  const WaveField wb = layer.w2(Tb);
  WaveField slope_num(u0.grid);
  for (std::size_t j = 0; j < slope_num.size(); ++j) {
    slope_num[j] = (wb[j] - wa[j]) / (Tb - Ta);
  }
  const WaveField slope_closed = layer.w2_slope_plus_closed();
  const double scale =
      std::max({sup_norm(slope_closed), sup_norm(layer.w2_slope_minus()), 1e-30});
  if (sup_distance(slope_num, slope_closed) > 0.01 * scale) {
    throw std::runtime_error("w2_limit_slope_and_offset: non-convergent limit (slope residual > 1%)");
  }
  WaveField off_a(u0.grid), off_b(u0.grid), offset(u0.grid);
  for (std::size_t j = 0; j < offset.size(); ++j) {
    off_a[j] = wa[j] - slope_closed[j] * Ta;
    off_b[j] = wb[j] - slope_closed[j] * Tb;
    offset[j] = 2.0 * off_b[j] - off_a[j];
  }
  const double off_scale = std::max(sup_norm(offset), scale);
  if (sup_distance(off_a, off_b) > 0.01 * std::max(off_scale, 1e-30) + 1e-14) {
    throw std::runtime_error("w2_limit_slope_and_offset: non-convergent limit (tail fit residual > 1%)");
  }
  return {slope_num, offset};
}

inline std::pair<WaveField, WaveField> w2_limit_slope_and_offset(const WaveField& u0,
                                                                 const ForcingProfile& f) {
  return w2_limit_slope_and_offset(u0, f.evaluate(u0.grid));
}

}  // namespace nlselab
