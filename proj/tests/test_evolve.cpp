#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "nlselab/nlse/evolve.hpp"

using namespace nlselab;
using Catch::Approx;

namespace {
SimulationConfig soliton_run(double t_end, double dt, double a = 1.0) {
  SimulationConfig c;
  c.grid_n = 1024;
  c.grid_length = 40.0;
  c.epsilon = 0.1;
  c.t2_start = 0.0;
  c.t2_end = t_end;
  c.dt2 = dt;
  c.initial.kind = InitialCondition::Kind::soliton;
  c.initial.a = a;
  c.forcing = ForcingProfile::gaussian(0.0);
  return c;
}
}  // namespace

TEST_CASE("analytic soliton satisfies the equation (substitution check)") {
  auto g = make_grid(1024, 40.0);
  // b must wind integrally on the periodic domain (multiple of 2 pi / L),
  // otherwise the phase factor is discontinuous at the seam
  const double b_wind = 6.0 * 3.14159265358979323846 / g.length();
  for (auto [a, b] : {std::pair{1.0, 0.0}, std::pair{1.0, b_wind}}) {
    const double t2 = 0.37;
    auto u = analytic_soliton(g, a, b, 0.0, 0.2, t2);
    // analytic time derivative:
    //   dU/dt = [2 a b tanh(a xi) + i (a^2 - b^2)] U  with xi = x - 2 b t - x0
    WaveField ut(g);
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double xi = g.x(j) - 2.0 * b * t2;
      ut[j] = (Complex{2.0 * a * b * std::tanh(a * xi), a * a - b * b}) * u[j];
    }
    auto uxx = second_derivative(u);
    double interior = 0.0, global = 0.0;
    const Complex I{0.0, 1.0};
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double r = std::abs(I * ut[j] + uxx[j] + std::norm(u[j]) * u[j]);
      global = std::max(global, r);
      if (std::abs(g.x(j)) <= 15.0) interior = std::max(interior, r);
    }
    CAPTURE(a, b);
    CHECK(interior <= 1e-9);
    CHECK(global <= 1e-4);  // periodization seam noise, case-dependent constant
  }
}

TEST_CASE("soliton properties") {
  auto g = make_grid(1024, 40.0);
  auto u = analytic_soliton(g, 1.0);
  CHECK(std::abs(u[g.size() / 2] - Complex{std::sqrt(2.0), 0.0}) <= 1e-6);
  for (auto [a, b, x0, p0] : {std::tuple{1.0, 0.0, 0.0, 0.0}, std::tuple{0.5, 0.3, 2.0, 1.1}}) {
    CHECK(mass(analytic_soliton(g, a, b, x0, p0)) == Approx(4.0 * a).margin(1e-8));
  }
  CHECK_THROWS(analytic_soliton(g, -1.0));
}

TEST_CASE("unforced soliton ground truth") {
  auto traj = evolve(soliton_run(1.0, 1e-3));
  REQUIRE_FALSE(traj.aborted);
  auto exact = analytic_soliton(traj.back().grid, 1.0, 0.0, 0.0, 0.0, 1.0);
  CHECK(sup_distance(traj.back(), exact) <= 1e-6);

  const double m0 = traj.diags.front().mass;
  const double m1 = traj.diags.back().mass;
  CHECK(std::abs(m1 - m0) / m0 <= 1e-8);
  const double e0 = traj.diags.front().energy;
  const double e1 = traj.diags.back().energy;
  CHECK(std::abs(e1 - e0) / std::abs(e0) <= 1e-6);
}

TEST_CASE("Strang order: halving dt shrinks error by ~4") {
  auto fine = evolve(soliton_run(0.5, 6.25e-5));
  auto c1 = evolve(soliton_run(0.5, 1e-3));
  auto c2 = evolve(soliton_run(0.5, 5e-4));
  const double e1 = sup_distance(c1.back(), fine.back());
  const double e2 = sup_distance(c2.back(), fine.back());
  const double factor = e1 / e2;
  CHECK(factor >= 3.0);
  CHECK(factor <= 5.0);
}

TEST_CASE("time reversal returns the initial condition") {
  auto traj = evolve(soliton_run(0.4, 1e-3));
  // U(x,t) -> conj(U) evolves the same equation backwards
  SimulationConfig back = soliton_run(0.4, 1e-3);
  back.initial.kind = InitialCondition::Kind::table;
  back.initial.table = traj.back().values;
  for (auto& v : back.initial.table) v = std::conj(v);
  auto rev = evolve(back);
  WaveField recovered = rev.back();
  for (auto& v : recovered.values) v = std::conj(v);
  CHECK(sup_distance(recovered, traj.front()) <= 1e-8);
}

TEST_CASE("pure-forcing run reproduces the exact Fresnel antiderivative") {
  SimulationConfig c;
  c.grid_n = 256;
  c.grid_length = 40.0;
  c.epsilon = 0.1;
  c.t2_start = -0.5;
  c.t2_end = 0.5;
  c.dt2 = 0.0;  // use the invariant bound
  c.forcing = ForcingProfile::gaussian(0.5);
  c.enable_nonlinear = false;
  c.enable_dispersion = false;
  auto traj = evolve(c);
  const auto& cfg = traj.config;
  const WaveField f = cfg.forcing.evaluate(traj.back().grid);
  const Complex coef =
      Complex{0.0, -1.0} / cfg.epsilon * fresnel_increment(cfg.t2_start, cfg.t2_end, cfg.epsilon);
  double err = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    err = std::max(err, std::abs(traj.back()[j] - coef * f[j]));
  }
  CHECK(err <= 1e-10);
}

TEST_CASE("pde_residual on the analytic trajectory") {
  auto g = make_grid(1024, 40.0);
  Trajectory traj;
  traj.config = soliton_run(1.0, 1e-4).with_defaults();
  const double h = 1e-4;
  for (int i = 0; i < 3; ++i) {
    const double t = 0.2 + h * i;
    traj.times.push_back(t);
    traj.fields.push_back(analytic_soliton(g, 1.0, 0.0, 0.0, 0.0, t));
  }
  // centered-difference error O(h^2) plus the periodization seam floor
  CHECK(pde_residual(traj, 1) <= 1e-6);
  CHECK_THROWS(pde_residual(traj, 0));
  CHECK_THROWS(pde_residual(traj, 2));

  // zero field, zero forcing -> exactly zero
  Trajectory z;
  z.config = traj.config;
  for (int i = 0; i < 3; ++i) {
    z.times.push_back(0.1 * i);
    z.fields.push_back(WaveField(g));
  }
  CHECK(pde_residual(z, 1) == 0.0);
}

TEST_CASE("mass balance residual") {
  SECTION("unforced: equals |dM/dt| and is tiny") {
    auto c = soliton_run(0.1, 1e-3);
    c.snapshot_stride = 1;
    auto traj = evolve(c);
    CHECK(mass_balance_residual(traj, traj.size() / 2) <= 1e-8);
  }
  SECTION("driven: second order in dt") {
    SimulationConfig c;
    c.grid_n = 512;
    c.grid_length = 40.0;
    c.epsilon = 0.1;
    c.t2_start = -0.5;
    c.t2_end = 0.5;
    c.forcing = ForcingProfile::gaussian(0.5);
    c.snapshot_stride = 1;

    c.dt2 = 2e-3;
    auto r1 = evolve(c);
    c.dt2 = 1e-3;
    auto r2 = evolve(c);
    // compare at the same physical time (t2 = 0.25)
    const auto idx_of = [](const Trajectory& t, double when) {
      std::size_t best = 1;
      for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        if (std::abs(t.times[i] - when) < std::abs(t.times[best] - when)) best = i;
      }
      return best;
    };
    const double b1 = mass_balance_residual(r1, idx_of(r1, 0.25));
    const double b2 = mass_balance_residual(r2, idx_of(r2, 0.25));
    // regression pin: M(t) oscillates at the fast-phase rate, so the centred
    // difference carries dt^2 * theta'^2 * M; measured 3.5e-3 at dt=2e-3
    CHECK(b1 <= 6e-3);
    const double ratio = b1 / b2;
    CHECK(ratio >= 2.5);
    CHECK(ratio <= 6.0);
  }
}

TEST_CASE("blow-up detection aborts with last good snapshot") {
  SimulationConfig c = soliton_run(0.5, 1e-3);
  c.initial.kind = InitialCondition::Kind::table;
  c.initial.table.assign(1024, Complex{2e6, 0.0});
  auto traj = evolve(c);
  CHECK(traj.aborted);
  CHECK(traj.abort_reason.find("blow-up") != std::string::npos);
  CHECK(traj.size() >= 1);
}

TEST_CASE("config invariants") {
  auto c = soliton_run(0.5, 1e-3);
  c.forcing = ForcingProfile::gaussian(0.5);
  c.t2_start = -0.5;
  c.t2_end = 0.5;
  c.epsilon = 0.05;
  c.dt2 = 0.05;  // far above eps^2 pi / (4 * 0.5) ~ 3.9e-3
  CHECK_THROWS_WITH(evolve(c), Catch::Matchers::ContainsSubstring("dt2"));

  c.dt2 = 1e-3;
  c.t2_start = 0.1;  // driven run must span the resonance
  CHECK_THROWS(evolve(c));

  c.t2_start = -0.5;
  c.epsilon = 1.5;
  CHECK_THROWS(evolve(c));
}

TEST_CASE("snapshot cadence") {
  auto c = soliton_run(0.1, 1e-3);
  c.snapshot_stride = 10;
  auto traj = evolve(c);
  REQUIRE(traj.size() == 11);  // t=0 plus every 10th of 100 steps
  for (std::size_t i = 1; i < traj.size(); ++i) {
    CHECK(traj.times[i] > traj.times[i - 1]);
  }
}
