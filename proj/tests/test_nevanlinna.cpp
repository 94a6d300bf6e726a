#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vdlab/maps.hpp"
#include "vdlab/nevanlinna.hpp"
#include "vdlab/quad.hpp"

using namespace vdlab;

namespace {

// ---- closed-form oracles, independent of the library quadrature ----------

// z^d sends {tau <= u} to the disc of radius e^{du} covered d times, so the
// normalized spherical area of the image is d * s^2 / (1 + s^2) at s = e^{du}.
double power_t1(int d, double u) {
  const double s2 = std::exp(2.0 * d * u);
  if (!std::isfinite(s2)) return double(d);
  return d * s2 / (1.0 + s2);
}

// integral_{-inf}^{u} power_t1 dv; antiderivative is log(1 + e^{2dv}) / 2
double power_T1(int d, double u) { return 0.5 * std::log1p(std::exp(2.0 * d * u)); }

double power_A1(int d, double a, double b) { return power_T1(d, b) - power_T1(d, a); }

// Composite Simpson on [a, b], n panels (n even).
template <typename F>
double simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// Spherical area of e^z over |z| <= e^u. The density depends on x = Re z
// alone, so the disc integral reduces to one real integral.
double exp_t1(double u) {
  const double rho = std::exp(u);
  const double cut = std::min(rho, 30.0);
  auto f = [rho](double x) {
    const double e2 = std::exp(2.0 * x);
    const double g = e2 / ((1.0 + e2) * (1.0 + e2));
    const double s = std::max(rho * rho - x * x, 0.0);
    return g * 2.0 * std::sqrt(s);
  };
  return simpson(f, -cut, cut, 4000) / kPi;
}

// integral_{-inf}^{u} exp_t1 dv, truncated 40 units down (tail < e^{u-40})
double exp_T1(double u) {
  return simpson([](double v) { return exp_t1(v); }, u - 40.0, u, 400);
}

QuadPlan grid_plan(long budget = 100000) {
  QuadPlan p;
  p.method = QuadPlan::Method::radialGrid;
  p.budget = budget;
  return p;
}

QuadPlan mc_plan(long budget, unsigned long long seed = 7) {
  QuadPlan p;
  p.method = QuadPlan::Method::monteCarlo;
  p.budget = budget;
  p.seed = seed;
  p.shells = 32;
  return p;
}

// Hand-built series for exercising the condition verdicts in isolation.
CharacteristicSeries synth(std::vector<double> r, std::vector<double> t,
                           std::vector<double> T, WeightKind kind, int j = 1,
                           double atomT = 0.0) {
  CharacteristicSeries s;
  s.j = j;
  s.k = 1;
  s.weightKind = kind;
  s.floor = kind == WeightKind::dCase ? r.front() - 1.0 : -1e300;
  s.atomT = atomT;
  s.r = r;
  s.t = t;
  s.tErr.assign(r.size(), 0.0);
  s.T = T;
  s.TErr.assign(r.size(), 0.0);
  return s;
}

CharacteristicSeries synth_from(std::vector<double> r,
                                double (*tf)(double), double (*Tf)(double),
                                WeightKind kind, int j = 1, double atomT = 0.0) {
  std::vector<double> t, T;
  for (double x : r) {
    t.push_back(tf(x));
    T.push_back(Tf(x));
  }
  return synth(r, t, T, kind, j, atomT);
}

}  // namespace

TEST_CASE("power map characteristic matches the covered-disc area") {
  auto map = make_power(3);
  auto exh = standard_exhaustion("logAbs", 1);
  auto sched = linspace(1.0, 6.0, 21);

  auto s1 = characteristic(map, exh, 1, sched, WeightKind::ddcCase, grid_plan());
  validate_series(s1);
  for (size_t i = 0; i < sched.size(); ++i) {
    CHECK(s1.t[i] == doctest::Approx(power_t1(3, sched[i])).epsilon(1e-6));
    CHECK(s1.T[i] == doctest::Approx(power_T1(3, sched[i])).epsilon(2e-4));
  }

  auto s0 = characteristic(map, exh, 0, sched, WeightKind::ddcCase, grid_plan());
  for (double v : s0.t) CHECK(v == 1.0);  // unit point mass, zero smooth part
  CHECK(s0.atomT == 1.0);
}

TEST_CASE("exp characteristic tracks the strip-area oracle") {
  auto map = make_exp();
  auto exh = standard_exhaustion("logAbs", 1);
  auto sched = linspace(1.0, 5.0, 41);

  auto s1 = characteristic(map, exh, 1, sched, WeightKind::ddcCase, grid_plan());
  validate_series(s1);
  for (size_t i = 0; i < sched.size(); i += 8)
    CHECK(s1.t[i] == doctest::Approx(exp_t1(sched[i])).epsilon(3e-5));
  CHECK(s1.T.back() == doctest::Approx(exp_T1(5.0)).epsilon(3e-3));

  // normalized characteristic sits near e^r / pi at moderate radius
  for (size_t i = 0; i < sched.size(); ++i) {
    if (sched[i] < 4.0) continue;
    const double ratio = s1.T[i] * kPi / std::exp(sched[i]);
    CHECK(ratio > 0.95);
    CHECK(ratio < 1.05);
  }
}

TEST_CASE("d-case cumulative of t0 is the clipped length") {
  auto map = make_power(2);
  auto exh = standard_exhaustion("logAbs", 1);
  auto sched = linspace(1.0, 6.0, 11);
  auto s0 = characteristic(map, exh, 0, sched, WeightKind::dCase, grid_plan());
  validate_series(s0);
  for (size_t i = 0; i < sched.size(); ++i)
    CHECK(s0.T[i] == doctest::Approx(sched[i] - exh.r0).epsilon(1e-12));
}

TEST_CASE("d-mass ratio of a power map decays like 1/r") {
  auto map = make_power(3);
  auto exh = standard_exhaustion("logAbs", 1);
  auto sched = linspace(1.0, 6.0, 21);
  auto s1 = characteristic(map, exh, 1, sched, WeightKind::dCase, grid_plan());
  auto s0 = characteristic(map, exh, 0, sched, WeightKind::dCase, grid_plan());

  auto oracle = [&](double r) {
    const double A1 = power_A1(3, exh.r0, r);
    return (r - exh.r0) * power_t1(3, r) / (A1 * A1);
  };
  const double i3 = d_mass_ratio(s1, s0, 3.0).value;
  const double i6 = d_mass_ratio(s1, s0, 6.0).value;
  CHECK(i3 == doctest::Approx(oracle(3.0)).epsilon(1e-3));
  CHECK(i6 == doctest::Approx(oracle(6.0)).epsilon(1e-3));
  CHECK(i6 < i3);
  CHECK(std::abs((6.0 * i6) / (3.0 * i3) - 1.0) < 0.15);  // ~ 1/r scaling
}

TEST_CASE("band energy equals the cumulated t0 for one-dimensional maps") {
  auto exh = standard_exhaustion("logAbs", 1);
  for (auto map : {make_power(3), make_exp()}) {
    const double e = d_dirichlet_energy(map, exh, 1, 4.0, grid_plan()).value;
    CHECK(e == doctest::Approx(4.0 - exh.r0).epsilon(1e-9));
  }
}

TEST_CASE("direct and series routes to the d-mass ratio agree") {
  auto map = make_power(3);
  auto exh = standard_exhaustion("logAbs", 1);
  auto sched = linspace(1.0, 6.0, 21);
  auto s1 = characteristic(map, exh, 1, sched, WeightKind::dCase, grid_plan());
  auto s0 = characteristic(map, exh, 0, sched, WeightKind::dCase, grid_plan());
  auto a = d_mass_ratio(s1, s0, 5.0);
  auto b = d_mass_ratio_direct(map, exh, s1, 5.0, grid_plan());
  CHECK(b.value == doctest::Approx(a.value).epsilon(1e-6));
}

TEST_CASE("dual d-mass routes agree within error on a surface map") {
  std::vector<std::vector<Complex>> polys = {{Complex(0), Complex(0), Complex(1)},
                                             {Complex(0), Complex(0), Complex(1)}};
  auto map = make_polyk(polys);
  auto exh = standard_exhaustion("logAbs", 2);
  auto sched = linspace(0.5, 2.5, 9);

  auto s2 = characteristic(map, exh, 2, sched, WeightKind::dCase, mc_plan(200000));
  auto s1 = characteristic(map, exh, 1, sched, WeightKind::dCase, mc_plan(200000, 11));
  validate_series(s2);
  validate_series(s1);

  const double r = 2.5;
  auto viaSeries = d_mass_ratio(s2, s1, r);
  auto energy = d_dirichlet_energy(map, exh, 2, r, mc_plan(400000, 23));
  // compare the two numerators directly: E against the cumulated t1
  const int idx = s1.indexOf(r);
  const double A1 = s1.T[idx], A1err = s1.TErr[idx];
  CHECK(std::abs(energy.value - A1) <=
        3.0 * std::sqrt(energy.err * energy.err + A1err * A1err) + 1e-9);

  auto viaDirect = d_mass_ratio_direct(map, exh, s2, r, mc_plan(400000, 23));
  const double sigma = std::sqrt(viaSeries.err * viaSeries.err +
                                 viaDirect.err * viaDirect.err);
  CHECK(std::abs(viaDirect.value - viaSeries.value) <= 3.0 * sigma + 1e-12);
}

TEST_CASE("ddc-mass ratio: closed forms, decay, homogeneity") {
  auto map = make_power(3);
  auto exh = standard_exhaustion("logAbs", 1);
  auto sched = linspace(1.0, 6.0, 21);
  auto s1 = characteristic(map, exh, 1, sched, WeightKind::ddcCase, grid_plan());
  auto s0 = characteristic(map, exh, 0, sched, WeightKind::ddcCase, grid_plan());

  for (double r : {2.0, 4.0, 6.0}) {
    auto j = ddc_mass_ratio(s1, s0, r);
    CHECK(j.value == doctest::Approx(1.0 / power_T1(3, r)).epsilon(1e-3));
    // the product with T recovers t0 identically
    CHECK(j.value * s1.T[s1.indexOf(r)] ==
          doctest::Approx(s0.t[s0.indexOf(r)]).epsilon(1e-12));
  }
  CHECK(ddc_mass_ratio(s1, s0, 6.0).value < ddc_mass_ratio(s1, s0, 3.0).value);

  // rescaling omega by c = 2 multiplies t_j by 2^j: J picks up exactly 1/2
  auto s1c = s1;
  for (auto& v : s1c.t) v *= 2.0;
  for (auto& v : s1c.T) v *= 2.0;
  auto s0c = s0;  // j = 0 row is unscaled
  const double base = ddc_mass_ratio(s1, s0, 4.0).value;
  const double scaled = ddc_mass_ratio(s1c, s0c, 4.0).value;
  CHECK(scaled * 2.0 == base);
}

TEST_CASE("degenerate denominators are refused") {
  auto r = linspace(1.0, 6.0, 11);
  auto zero = synth(r, std::vector<double>(11, 0.0), std::vector<double>(11, 0.0),
                    WeightKind::dCase, 1);
  auto ones = synth(r, std::vector<double>(11, 1.0), r, WeightKind::dCase, 0);
  CHECK_THROWS_AS((void)d_mass_ratio(zero, ones, 6.0), std::domain_error);
  auto zeroT = synth(r, std::vector<double>(11, 1.0), std::vector<double>(11, 0.0),
                     WeightKind::ddcCase, 1);
  auto onesC = synth(r, std::vector<double>(11, 1.0), r, WeightKind::ddcCase, 0);
  CHECK_THROWS_AS((void)ddc_mass_ratio(zeroT, onesC, 6.0), std::domain_error);
}

// ---- condition checks -----------------------------------------------------

namespace {

SeriesBundle bundle(const CharacteristicSeries& sj, const CharacteristicSeries& sjm1,
                    double R = std::numeric_limits<double>::infinity()) {
  SeriesBundle b;
  b.sj = &sj;
  b.sjm1 = &sjm1;
  b.R = R;
  return b;
}

struct SeriesFixture {
  MapSpec map;
  ExhaustionSpec exh = standard_exhaustion("logAbs", 1);
  std::vector<double> sched = linspace(1.0, 9.0, 17);
  CharacteristicSeries d1, d0, c1, c0;
  explicit SeriesFixture(MapSpec m) : map(std::move(m)) {
    d1 = characteristic(map, exh, 1, sched, WeightKind::dCase, grid_plan());
    d0 = characteristic(map, exh, 0, sched, WeightKind::dCase, grid_plan());
    c1 = characteristic(map, exh, 1, sched, WeightKind::ddcCase, grid_plan());
    c0 = characteristic(map, exh, 0, sched, WeightKind::ddcCase, grid_plan());
  }
};

const SeriesFixture& power_fix() {
  static SeriesFixture f{make_power(3)};
  return f;
}

const SeriesFixture& exp_fix() {
  static SeriesFixture f{make_exp()};
  return f;
}

// least-squares slope over the tail half of (x, y), for oracle checks
double tail_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size(), lo = n / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = lo; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double m = double(n - lo);
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace

TEST_CASE("simpledMR holds for power and exp, fails for shrinking area") {
  const auto& p = power_fix();
  const auto& e = exp_fix();
  CHECK(check_condition("simpledMR", bundle(p.d1, p.d0)).holds);
  CHECK(check_condition("simpledMR", bundle(e.d1, e.d0)).holds);

  // t1 decaying like e^{-u}: the cumulative stays bounded, the ratio does not sink
  auto r = linspace(1.0, 9.0, 17);
  std::vector<double> t, T;
  for (double x : r) {
    t.push_back(std::exp(-x));
    T.push_back(0.05 + std::exp(-1.0) - std::exp(-x));
  }
  auto tiny = synth(r, t, T, WeightKind::dCase, 1);
  auto ones = synth(r, std::vector<double>(r.size(), 1.0), r, WeightKind::dCase, 0);
  CHECK_FALSE(check_condition("simpledMR", bundle(tiny, ones)).holds);
}

TEST_CASE("alphaMR with linear alpha separates exp from power growth") {
  const auto& p = power_fix();
  const auto& e = exp_fix();
  ConditionParams lin;
  lin.alphaKind = "linear";
  CHECK(check_condition("alphaMR", bundle(e.d1, e.d0), lin).holds);
  // for z^d the curve tends to the constant 1/d and never sinks
  CHECK_FALSE(check_condition("alphaMR", bundle(p.d1, p.d0), lin).holds);
}

TEST_CASE("minimaldMR: harmonic divergence for parabolic t0") {
  const auto& p = power_fix();
  auto rep = check_condition("minimaldMR", bundle(p.d1, p.d0));
  CHECK(rep.holds);
  CHECK(rep.extrapolated);

  // exponentially growing denominator: the integral converges
  auto r = linspace(1.0, 9.0, 17);
  std::vector<double> t, T;
  for (double x : r) {
    t.push_back(std::exp(x));
    T.push_back(std::exp(x));
  }
  auto grow = synth(r, t, T, WeightKind::dCase, 0);
  auto top = synth(r, t, T, WeightKind::dCase, 1);
  CHECK_FALSE(check_condition("minimaldMR", bundle(top, grow)).holds);
}

TEST_CASE("MR1supdelta diverges for the power map") {
  const auto& p = power_fix();
  auto rep = check_condition("MR1supdelta", bundle(p.d1, p.d0));
  CHECK(rep.holds);
  CHECK(rep.extrapolated);
  CHECK(rep.note.find("delta") != std::string::npos);
}

TEST_CASE("logdclosed holds for power, fails for a flat synthetic curve") {
  const auto& p = power_fix();
  CHECK(check_condition("logdclosed", bundle(p.c1, p.c0)).holds);

  auto r = linspace(1.0, 9.0, 17);
  std::vector<double> T;
  for (double x : r) T.push_back(std::sqrt(x));
  auto flat = synth(r, std::vector<double>(r.size(), 1.0), T, WeightKind::ddcCase, 1);
  auto ones = synth(r, std::vector<double>(r.size(), 1.0), r, WeightKind::ddcCase, 0);
  CHECK_FALSE(check_condition("logdclosed", bundle(flat, ones)).holds);
}

TEST_CASE("MR2sup tracks relative growth of t1 over t0") {
  const auto& p = power_fix();
  const auto& e = exp_fix();
  CHECK(check_condition("MR2sup", bundle(e.c1, e.c0)).holds);
  CHECK(check_condition("MR2sup", bundle(p.c1, p.c0)).holds);

  auto r = linspace(1.0, 9.0, 17);
  std::vector<double> t, T;
  for (double x : r) {
    t.push_back(std::exp(-x));          // t1/t0 integrates to a constant
    T.push_back(10.0 + x);              // log T keeps growing
  }
  auto shrink = synth(r, t, T, WeightKind::ddcCase, 1);
  auto ones = synth(r, std::vector<double>(r.size(), 1.0), r, WeightKind::ddcCase, 0);
  CHECK_FALSE(check_condition("MR2sup", bundle(shrink, ones)).holds);
}

TEST_CASE("diskEnergy separates divergent energy from the covering catalog maps") {
  // synthetic series with t ~ 1/(R - r): the energy integral just diverges
  auto exh = standard_exhaustion("ballLog", 1);
  auto sched = linspace(std::log(0.30), std::log(0.995), 24);
  std::vector<double> t, T;
  for (double u : sched) t.push_back(1.0 / -u);
  double acc = 0.0;
  for (size_t i = 0; i < sched.size(); ++i) {
    if (i) acc += 0.5 * (t[i] + t[i - 1]) * (sched[i] - sched[i - 1]);
    T.push_back(acc);
  }
  auto div = synth(sched, t, T, WeightKind::ddcCase, 1);
  auto ones = synth(sched, std::vector<double>(sched.size(), 1.0), T,
                    WeightKind::ddcCase, 0);
  auto rep = check_condition("diskEnergy", bundle(div, ones, exh.R));
  CHECK(rep.holds);
  CHECK(rep.extrapolated);

  // the half-plane exponential cover spreads over a sphere neighborhood of
  // the unit circle: its area grows only like (R - r)^{-1/2}, so the energy
  // integral converges and the condition fails
  auto cover = make_disk_cover();
  auto sc = characteristic(cover, exh, 1, sched, WeightKind::ddcCase, grid_plan());
  auto sc0 = characteristic(cover, exh, 0, sched, WeightKind::ddcCase, grid_plan());
  validate_series(sc);
  CHECK_FALSE(check_condition("diskEnergy", bundle(sc, sc0, exh.R)).holds);
  std::vector<double> lx, ly;
  for (size_t i = 0; i < sched.size(); ++i) {
    lx.push_back(std::log(-sched[i]));
    ly.push_back(std::log(sc.t[i]));
  }
  const double slope = tail_slope(lx, ly);
  CHECK(slope > -0.75);
  CHECK(slope < -0.25);

  // a bounded map has bounded area: nothing diverges
  auto lin = make_linear_scale(2.0);
  auto sl = characteristic(lin, exh, 1, sched, WeightKind::ddcCase, grid_plan());
  auto sl0 = characteristic(lin, exh, 0, sched, WeightKind::ddcCase, grid_plan());
  CHECK_FALSE(check_condition("diskEnergy", bundle(sl, sl0, exh.R)).holds);
}

TEST_CASE("scaleCond on the expanding linear family") {
  auto exh = standard_exhaustion("logAbs", 1);
  auto sched = linspace(0.5, 4.5, 9);
  auto family = make_family("familyNz", 4);

  std::vector<CharacteristicSeries> fj, fj0;
  for (auto& m : family) {
    fj.push_back(characteristic(m, exh, 1, sched, WeightKind::ddcCase, grid_plan()));
    fj0.push_back(characteristic(m, exh, 0, sched, WeightKind::ddcCase, grid_plan()));
  }
  // oracle: member n has spherical disc mass (n e^u)^2 / (1 + (n e^u)^2)
  for (int n : {0, 1, 2, 3}) {
    const double lam = double(1 << n);
    for (size_t i = 0; i < sched.size(); i += 4) {
      const double s2 = lam * lam * std::exp(2.0 * sched[i]);
      CHECK(fj[n].t[i] == doctest::Approx(s2 / (1.0 + s2)).epsilon(1e-6));
    }
  }

  SeriesBundle b;
  std::vector<const CharacteristicSeries*> pj, pj0;
  for (size_t i = 0; i < fj.size(); ++i) {
    pj.push_back(&fj[i]);
    pj0.push_back(&fj0[i]);
    b.familyParam.push_back(double(1 << i));
  }
  b.familyJ = pj;
  b.familyJm1 = pj0;
  auto rep = check_condition("scaleCond", b);
  // the smooth part of t0 vanishes identically on a parabolic curve domain
  CHECK(rep.holds);
  for (double v : rep.curve) CHECK(v == 0.0);

  // synthetic failing family: fake a surface-like t0 of unit size
  auto r = linspace(0.5, 4.5, 9);
  auto ones = synth(r, std::vector<double>(r.size(), 1.0), r, WeightKind::ddcCase, 0);
  SeriesBundle bad;
  bad.familyJ = {pj[0], pj[1], pj[2], pj[3]};
  bad.familyJm1 = {&ones, &ones, &ones, &ones};
  bad.familyParam = {1.0, 2.0, 4.0, 8.0};
  CHECK_FALSE(check_condition("scaleCond", bad).holds);
}

TEST_CASE("condition checks refuse short schedules") {
  auto r = linspace(1.0, 3.0, 5);
  auto s = synth(r, std::vector<double>(5, 1.0), r, WeightKind::dCase, 1);
  auto s0 = synth(r, std::vector<double>(5, 1.0), r, WeightKind::dCase, 0);
  CHECK_THROWS_AS((void)check_condition("simpledMR", bundle(s, s0)),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)check_condition("nosuch", bundle(s, s0)),
                  std::invalid_argument);
}

// ---- growth classification -------------------------------------------------

TEST_CASE("growth: exp has order one in the log radius, powers have order zero") {
  const auto& e = exp_fix();
  auto g = growth_classify(e.c1, &e.c0, GrowthMode::finiteOrder);
  CHECK(g.order == doctest::Approx(1.0).epsilon(0.1));
  CHECK(g.ratioDiverges);

  const auto& p = power_fix();
  auto gp = growth_classify(p.c1, &p.c0, GrowthMode::finiteOrder);
  CHECK(std::abs(gp.order) < 0.05);
  CHECK_FALSE(gp.ratioDiverges);
}

TEST_CASE("growth: constant series has order exactly zero") {
  auto r = linspace(1.0, 9.0, 17);
  auto s = synth(r, std::vector<double>(r.size(), 1.0), r, WeightKind::ddcCase, 1);
  auto g = growth_classify(s, nullptr, GrowthMode::finiteOrder);
  CHECK(g.order == 0.0);
  CHECK(g.fitResidual == 0.0);
}

TEST_CASE("growth: log-order fit recovers the exponent") {
  // schedule abscissae already live on the log-radius scale, so a power law
  // in the schedule variable is a log-power law in the underlying radius
  auto r = linspace(4.0, 60.0, 15);
  std::vector<double> t, tc, T;
  for (double x : r) {
    t.push_back(x * x * x);
    tc.push_back(std::pow(x, 3.5));
    T.push_back(x * x * x * x / 4.0);
  }
  auto top = synth(r, t, T, WeightKind::ddcCase, 1);
  auto companion = synth(r, tc, T, WeightKind::ddcCase, 0);
  auto g = growth_classify(top, &companion, GrowthMode::logOrder);
  CHECK(g.order == doctest::Approx(3.0).epsilon(0.02));
  CHECK(g.ratioBeta == doctest::Approx(0.5).epsilon(0.05));
  CHECK(g.lowerBoundHolds);

  // top/companion decaying faster than any 1/log power below one: refused
  std::vector<double> tsteep;
  for (double x : r) tsteep.push_back(std::pow(x, 4.5));
  auto steep = synth(r, tsteep, T, WeightKind::ddcCase, 0);
  auto gbad = growth_classify(top, &steep, GrowthMode::logOrder);
  CHECK(gbad.ratioBeta == doctest::Approx(1.5).epsilon(0.05));
  CHECK_FALSE(gbad.lowerBoundHolds);
}

TEST_CASE("growth: non-monotone series is refused") {
  auto r = linspace(1.0, 9.0, 17);
  std::vector<double> t(r.size(), 1.0);
  t[8] = 0.2;
  auto s = synth(r, t, r, WeightKind::ddcCase, 1);
  CHECK_THROWS_AS((void)growth_classify(s, nullptr, GrowthMode::finiteOrder),
                  std::domain_error);
}

// ---- input validation -------------------------------------------------------

TEST_CASE("characteristic validates its inputs") {
  auto map = make_power(2);
  auto exh = standard_exhaustion("logAbs", 1);
  auto plan = grid_plan();
  CHECK_THROWS_AS(
      (void)characteristic(map, exh, 2, linspace(1, 2, 4), WeightKind::ddcCase, plan),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)characteristic(map, exh, 1, {2.0, 1.0}, WeightKind::ddcCase, plan),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)characteristic(map, exh, 1, {0.1, 1.0}, WeightKind::dCase, plan),
      std::invalid_argument);  // starts below the clip floor

  auto ball = standard_exhaustion("ballLog", 1);
  CHECK_THROWS_AS(
      (void)characteristic(make_linear_scale(1.0), ball, 1, {1.0, 2.0},
                           WeightKind::ddcCase, plan),
      std::invalid_argument);  // schedule beyond the ceiling
}
