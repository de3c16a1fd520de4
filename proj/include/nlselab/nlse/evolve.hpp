#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlselab/asym/fresnel.hpp"
#include "nlselab/core/field.hpp"
#include "nlselab/nlse/config.hpp"
#include "nlselab/nlse/sweep.hpp"

namespace nlselab {

/// Per-snapshot conserved-quantity diagnostics.
struct SnapshotDiag {
  double mass = 0.0;
  double energy = 0.0;
};

/// Ordered snapshots of one run, plus the configuration that produced them.
struct Trajectory {
  SimulationConfig config;
  std::vector<double> times;
  std::vector<WaveField> fields;
  std::vector<SnapshotDiag> diags;
  bool aborted = false;
  std::string abort_reason;

  std::size_t size() const { return times.size(); }
  const WaveField& front() const { return fields.front(); }
  const WaveField& back() const { return fields.back(); }
};

/// Exact one-soliton envelope of i U_t + U_xx + |U|^2 U = 0:
///   U = sqrt(2) a sech(a(x - 2 b t - x0)) exp(i(b x + (a^2 - b^2) t + phi0)).
/// (Substitution into the equation is verified by the pde_residual tests.)
inline WaveField analytic_soliton(const Grid1D& g, double a, double b = 0.0, double x0 = 0.0,
                                  double phi0 = 0.0, double t2 = 0.0) {
  if (!(a > 0.0)) throw std::invalid_argument("analytic_soliton: a must be > 0");
  WaveField u(g);
  const double amp = std::sqrt(2.0) * a;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double x = g.x(j);
    const double arg = a * (x - 2.0 * b * t2 - x0);
    const double phase = b * x + (a * a - b * b) * t2 + phi0;
    u[j] = std::polar(amp / std::cosh(arg), phase);
  }
  return u;
}

namespace detail {

inline WaveField initial_field(const SimulationConfig& cfg, const Grid1D& g) {
  switch (cfg.initial.kind) {
    case InitialCondition::Kind::zero:
      return WaveField(g);
    case InitialCondition::Kind::soliton:
      return analytic_soliton(g, cfg.initial.a, cfg.initial.b, cfg.initial.x0, cfg.initial.phi0,
                              cfg.t2_start);
    case InitialCondition::Kind::table:
      if (cfg.initial.table.size() != g.size()) {
        throw std::invalid_argument("config: tabulated initial field does not match grid");
      }
      return WaveField(g, cfg.initial.table);
  }
  throw std::logic_error("unreachable");
}

inline bool blown_up(const WaveField& u) {
  for (const auto& v : u.values) {
    const double r = v.real(), i = v.imag();
    if (!std::isfinite(r) || !std::isfinite(i)) return true;
    if (std::abs(r) > 1e6 || std::abs(i) > 1e6) return true;
  }
  return false;
}

}  // namespace detail

/// Integrate i U_t2 + U_x1x1 + |U|^2 U = (1/eps) f(x1) e^{i theta(t2)} from
/// t2_start to t2_end by symmetric Strang splitting:
///
///   half linear step (Fourier) .
///   forcing increment over [t, t+dt/2]   U -= (i/eps) f Phi(t, t+dt/2)
///   full nonlinear rotation              U *= exp(i |U|^2 dt)
///   forcing increment over [t+dt/2, t+dt]
///   half linear step
///
/// with Phi(ta, tb) = int e^{i theta} dtau evaluated by exact Fresnel
/// increments, so the step size is governed by the envelope alone.  Each
/// substep is exactly solvable; the composition is second order.
inline Trajectory evolve(const SimulationConfig& raw) {
  const SimulationConfig cfg = raw.with_defaults();
  cfg.validate();

  const Grid1D g = make_grid(cfg.grid_n, cfg.grid_length);
  WaveField u = detail::initial_field(cfg, g);
  require_finite(u);

  const bool forced = cfg.forced();
  WaveField f = cfg.forcing.evaluate(g);

  const std::size_t nsteps =
      static_cast<std::size_t>(std::llround((cfg.t2_end - cfg.t2_start) / cfg.dt2));
  if (nsteps == 0) throw std::invalid_argument("config: time span shorter than dt2");
  const double dt = (cfg.t2_end - cfg.t2_start) / static_cast<double>(nsteps);

  // half-step linear multiplier exp(-i k^2 dt/2)
  std::vector<Complex> lin_half(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double k = g.k(j);
    lin_half[j] = std::polar(1.0, -k * k * dt * 0.5);
  }

  Trajectory traj;
  traj.config = cfg;
  const std::size_t stride = cfg.snapshot_stride;
  auto snapshot = [&](double t) {
    traj.times.push_back(t);
    traj.fields.push_back(u);
    if (cfg.diagnostics) {
      traj.diags.push_back({mass(u), energy(u)});
    }
  };
  snapshot(cfg.t2_start);

  const double inv_eps = 1.0 / cfg.epsilon;
  for (std::size_t step = 0; step < nsteps; ++step) {
    const double t = cfg.t2_start + static_cast<double>(step) * dt;

    if (cfg.enable_dispersion) {
      g.plan().forward(u.values);
      for (std::size_t j = 0; j < g.size(); ++j) u[j] *= lin_half[j];
      g.plan().inverse(u.values);
    }
    if (forced) {
      const Complex phi = fresnel_increment(t, t + 0.5 * dt, cfg.epsilon);
      const Complex c = Complex{0.0, -1.0} * inv_eps * phi;
      for (std::size_t j = 0; j < g.size(); ++j) u[j] += c * f[j];
    }
    if (cfg.enable_nonlinear) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        u[j] *= std::polar(1.0, std::norm(u[j]) * dt);
      }
    }
    if (forced) {
      const Complex phi = fresnel_increment(t + 0.5 * dt, t + dt, cfg.epsilon);
      const Complex c = Complex{0.0, -1.0} * inv_eps * phi;
      for (std::size_t j = 0; j < g.size(); ++j) u[j] += c * f[j];
    }
    if (cfg.enable_dispersion) {
      g.plan().forward(u.values);
      for (std::size_t j = 0; j < g.size(); ++j) u[j] *= lin_half[j];
      g.plan().inverse(u.values);
    }

    if (detail::blown_up(u)) {
      traj.aborted = true;
      traj.abort_reason = "blow-up detected at t2 = " + std::to_string(t + dt) +
                          " (sup|U| > 1e6 or non-finite)";
      break;
    }
    const bool last = (step + 1 == nsteps);
    if (last || (stride != 0 && (step + 1) % stride == 0)) {
      snapshot(cfg.t2_start + static_cast<double>(step + 1) * dt);
    }
  }
  return traj;
}

/// Sup-norm of the discrete equation residual at an interior snapshot:
///   i (U_{i+1} - U_{i-1}) / (2 dt_snap) + U_xx + |U|^2 U - (1/eps) f e^{i theta}.
/// The time derivative uses the snapshot spacing, so trajectories meant for
/// residual probing should be recorded with stride 1.
inline double pde_residual(const Trajectory& traj, std::size_t index) {
  if (index < 1 || index + 1 >= traj.size()) {
    throw std::out_of_range("pde_residual: index must be interior");
  }
  const WaveField& um = traj.fields[index - 1];
  const WaveField& u0 = traj.fields[index];
  const WaveField& up = traj.fields[index + 1];
  const double dt = 0.5 * (traj.times[index + 1] - traj.times[index - 1]);
  const WaveField uxx = second_derivative(u0);

  WaveField forcing_term(u0.grid);
  if (traj.config.forced()) {
    const WaveField f = traj.config.forcing.evaluate(u0.grid);
    const SweepPhase sweep(traj.config.epsilon);
    const Complex e = std::polar(1.0 / traj.config.epsilon, sweep.theta(traj.times[index]));
    for (std::size_t j = 0; j < f.size(); ++j) forcing_term[j] = e * f[j];
  }

  double sup = 0.0;
  const Complex I{0.0, 1.0};
  for (std::size_t j = 0; j < u0.size(); ++j) {
    const Complex ut = (up[j] - um[j]) / (2.0 * dt);
    const Complex r = I * ut + uxx[j] + std::norm(u0[j]) * u0[j] - forcing_term[j];
    sup = std::max(sup, std::abs(r));
  }
  return sup;
}

/// | dM/dt2 - 2 int Im(conj(U) g) dx | at an interior snapshot, with
/// g = (1/eps) f e^{i theta}; certifies the forcing implementation.
inline double mass_balance_residual(const Trajectory& traj, std::size_t index) {
  if (index < 1 || index + 1 >= traj.size()) {
    throw std::out_of_range("mass_balance_residual: index must be interior");
  }
  if (traj.diags.size() != traj.size()) {
    throw std::invalid_argument("mass_balance_residual: trajectory lacks diagnostics");
  }
  const double dMdt = (traj.diags[index + 1].mass - traj.diags[index - 1].mass) /
                      (traj.times[index + 1] - traj.times[index - 1]);
  double pump = 0.0;
  if (traj.config.forced()) {
    const WaveField& u0 = traj.fields[index];
    const WaveField f = traj.config.forcing.evaluate(u0.grid);
    const SweepPhase sweep(traj.config.epsilon);
    const Complex e = std::polar(1.0 / traj.config.epsilon, sweep.theta(traj.times[index]));
    double s = 0.0;
    for (std::size_t j = 0; j < u0.size(); ++j) {
      s += std::imag(std::conj(u0[j]) * (e * f[j]));
    }
    pump = 2.0 * s * u0.grid.dx();
  }
  return std::abs(dMdt - pump);
}

}  // namespace nlselab
