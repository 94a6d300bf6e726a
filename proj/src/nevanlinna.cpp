#include "vdlab/nevanlinna.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vdlab {

namespace {

constexpr double kTiny = 1e-300;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Verdict thresholds, fixed here so reports are comparable across runs.
constexpr double kHitZeroRatio = 1e-9;  // curve minimum counting as zero
constexpr double kSinkSlope = -0.15;    // log-log decay accepted as liminf 0
constexpr double kDivergeSlope = 0.5;   // partial-integral growth vs log abscissa
constexpr double kMR2Slope = 0.1;
constexpr double kDiskSlope = -0.98;    // density ~ (R - r)^{-1} or worse
constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ull;

double guard_of(double err) { return std::max(3.0 * err, kTiny); }

QuadPlan seeded(const QuadPlan& plan, int interval) {
  QuadPlan p = plan;
  p.seed = plan.seed + kSeedStride * static_cast<std::uint64_t>(interval + 1);
  return p;
}

// Lebesgue density of mu_j = (dd^c tau)^{k-j} ^ pullback(omega^j) at z,
// smooth part only; the possible point mass at the origin is bookkept by
// the caller.
double mu_density(const MapSpec& map, const ExhaustionSpec& exh, int j,
                  const VecC& z) {
  const int k = exh.k;
  if (j == 0) {
    const Formd dd = exh.ddctau(z);
    std::vector<std::pair<const Formd*, int>> fs{{&dd, k}};
    return mixed_wedge_density(fs);
  }
  const MapJet jet = map.jet(z);
  const Formd fw = fs_pullback(jet.value, jet.jac);
  if (j == k) {
    std::vector<std::pair<const Formd*, int>> fs{{&fw, k}};
    return mixed_wedge_density(fs);
  }
  const Formd dd = exh.ddctau(z);
  std::vector<std::pair<const Formd*, int>> fs{{&dd, k - j}, {&fw, j}};
  return mixed_wedge_density(fs);
}

void check_levels(const CharacteristicSeries& sj, const CharacteristicSeries& sm,
                  const char* who) {
  if (sm.j != sj.j - 1)
    throw std::invalid_argument(std::string(who) +
                                ": series levels must be j and j-1");
}

void require_same_schedule(const CharacteristicSeries& a,
                           const CharacteristicSeries& b, const char* who) {
  if (a.r.size() != b.r.size())
    throw std::invalid_argument(std::string(who) + ": schedules differ in length");
  for (size_t i = 0; i < a.r.size(); ++i)
    if (std::abs(a.r[i] - b.r[i]) > 1e-9 * std::max(1.0, std::abs(a.r[i])))
      throw std::invalid_argument(std::string(who) + ": schedules differ");
}

// --- fitting helpers -------------------------------------------------------

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
  size_t lo = 0;  // first index used
};

LineFit fit_from(const std::vector<double>& x, const std::vector<double>& y,
                 size_t lo) {
  const size_t n = x.size();
  const double m = static_cast<double>(n - lo);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = lo; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = m * sxx - sx * sx;
  LineFit f;
  f.lo = lo;
  if (den != 0.0) f.slope = (m * sxy - sx * sy) / den;
  f.intercept = (sy - f.slope * sx) / m;
  double ss = 0;
  for (size_t i = lo; i < n; ++i) {
    const double d = y[i] - (f.intercept + f.slope * x[i]);
    ss += d * d;
  }
  f.rms = std::sqrt(ss / m);
  return f;
}

// fit over the later half of the points (all of them when few)
LineFit tail_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  const size_t lo = n >= 8 ? n / 2 : 0;
  if (n < lo + 3)
    throw std::domain_error("condition check: too few usable points for a fit");
  return fit_from(x, y, lo);
}

// progress coordinate for schedules approaching R, shifted so logs behave
std::vector<double> shifted_abscissae(const std::vector<double>& r, double R) {
  std::vector<double> xs(r.size());
  for (size_t i = 0; i < r.size(); ++i)
    xs[i] = std::isinf(R) ? r[i] : -std::log(R - r[i]);
  const double x0 = xs.empty() ? 0.0 : xs.front();
  for (auto& v : xs) v = v - x0 + 1.0;
  return xs;
}

std::vector<int> prefix_minima(const std::vector<double>& c) {
  std::vector<int> w;
  double best = kInf;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] < best) {
      best = c[i];
      w.push_back(static_cast<int>(i));
    }
  return w;
}

std::vector<int> prefix_maxima(const std::vector<double>& c) {
  std::vector<int> w;
  double best = -kInf;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] > best) {
      best = c[i];
      w.push_back(static_cast<int>(i));
    }
  return w;
}

std::string fmt(const char* pat, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, pat, a);
  return buf;
}

// Shared verdict for the liminf-to-zero family: the curve either touches
// zero on the schedule, or must sink at a clear power-law rate.
void liminf_zero_verdict(ConditionReport& rep, double R) {
  if (rep.curve.empty())
    throw std::domain_error("condition check: no usable schedule points");
  for (auto& v : rep.curve) v = std::max(v, 0.0);
  rep.witness = prefix_minima(rep.curve);
  const double mx = *std::max_element(rep.curve.begin(), rep.curve.end());
  const double mn = *std::min_element(rep.curve.begin(), rep.curve.end());
  if (mx <= 0.0 || mn <= kHitZeroRatio * mx) {
    rep.holds = true;
    rep.extrapolated = false;
    rep.note += "; curve reaches zero on the schedule";
    return;
  }
  const auto xs = shifted_abscissae(rep.x, R);
  std::vector<double> lx, ly;
  for (size_t i = 0; i < rep.curve.size(); ++i)
    if (rep.curve[i] > 0.0) {
      lx.push_back(std::log(xs[i]));
      ly.push_back(std::log(rep.curve[i]));
    }
  const LineFit f = tail_fit(lx, ly);
  rep.extrapolated = true;
  rep.holds = f.slope <= kSinkSlope;
  rep.note += fmt("; tail decay exponent %.3f", f.slope);
}

// Shared verdict for the integral-diverges family: the partial integral of a
// positive integrand must keep growing against the log of the progress
// coordinate (a divergent ~1/r integrand gives slope about 1).
void divergence_verdict(ConditionReport& rep, const std::vector<double>& partial,
                        double R) {
  if (partial.size() < 3)
    throw std::domain_error("condition check: no usable schedule points");
  const auto xs = shifted_abscissae(rep.x, R);
  std::vector<double> lx(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) lx[i] = std::log(xs[i]);
  const LineFit f = tail_fit(lx, partial);
  rep.extrapolated = true;
  rep.holds = f.slope >= kDivergeSlope;
  for (size_t i = f.lo; i < partial.size(); ++i)
    rep.witness.push_back(static_cast<int>(i));
  rep.note += fmt("; partial-integral growth rate %.3f", f.slope);
}

// cumulative of t against the schedule; dCase series carry the exact value
std::vector<double> cumulative_mass(const CharacteristicSeries& s) {
  if (s.weightKind == WeightKind::dCase) return s.T;
  std::vector<double> A(s.r.size(), 0.0);
  for (size_t i = 1; i < s.r.size(); ++i)
    A[i] = A[i - 1] + 0.5 * (s.t[i] + s.t[i - 1]) * (s.r[i] - s.r[i - 1]);
  return A;
}

std::vector<double> cumulative_mass_err(const CharacteristicSeries& s) {
  if (s.weightKind == WeightKind::dCase) return s.TErr;
  std::vector<double> e(s.r.size(), 0.0);
  for (size_t i = 1; i < s.r.size(); ++i)
    e[i] = (s.r[i] - s.r.front()) * s.tErr[i];
  return e;
}

double interp_linear(const std::vector<double>& x, const std::vector<double>& y,
                     double at) {
  const auto it = std::upper_bound(x.begin(), x.end(), at);
  if (it == x.begin()) return y.front();
  if (it == x.end()) return y.back();
  const size_t hi = static_cast<size_t>(it - x.begin());
  const double w = (at - x[hi - 1]) / (x[hi] - x[hi - 1]);
  return y[hi - 1] + w * (y[hi] - y[hi - 1]);
}

}  // namespace

// --- series ------------------------------------------------------------------

int CharacteristicSeries::indexOf(double radius) const {
  for (size_t i = 0; i < r.size(); ++i)
    if (std::abs(r[i] - radius) <= 1e-9 * std::max(1.0, std::abs(radius)))
      return static_cast<int>(i);
  throw std::invalid_argument("series schedule has no entry at the requested radius");
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2 || !(hi > lo))
    throw std::invalid_argument("linspace: need n >= 2 and hi > lo");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
  out.back() = hi;
  return out;
}

CharacteristicSeries characteristic(const MapSpec& map, const ExhaustionSpec& exh,
                                    int j, const std::vector<double>& schedule,
                                    WeightKind kind, const QuadPlan& plan) {
  const int k = exh.k;
  if (map.k != k)
    throw std::invalid_argument("characteristic: map and exhaustion dimensions differ");
  if (j < 0 || j > k)
    throw std::invalid_argument("characteristic: level j outside [0, domain dimension]");
  if (schedule.empty())
    throw std::invalid_argument("characteristic: empty schedule");
  for (size_t i = 0; i < schedule.size(); ++i) {
    if (!std::isfinite(schedule[i]))
      throw std::invalid_argument("characteristic: non-finite schedule radius");
    if (i > 0 && !(schedule[i] > schedule[i - 1]))
      throw std::invalid_argument("characteristic: schedule must be strictly increasing");
    if (!(schedule[i] < exh.R))
      throw std::invalid_argument("characteristic: schedule reaches the exhaustion ceiling");
  }
  if (kind == WeightKind::dCase && !(schedule.front() >= exh.r0))
    throw std::invalid_argument(
        "characteristic: clipped weights need the schedule to start at or above the clip floor");

  const int n = static_cast<int>(schedule.size());
  const double atomHere = (j == 0) ? exh.atomMass : 0.0;
  auto plain = [&](const VecC& z) { return mu_density(map, exh, j, z); };

  CharacteristicSeries s;
  s.j = j;
  s.k = k;
  s.weightKind = kind;
  s.atomT = atomHere;
  s.floor = kind == WeightKind::dCase ? exh.r0 : -kInf;
  s.mapId = map.id;
  s.exhId = exh.id;
  s.r = schedule;
  s.t.assign(n, 0.0);
  s.tErr.assign(n, 0.0);
  s.T.assign(n, 0.0);
  s.TErr.assign(n, 0.0);

  // increments of the smooth mass across schedule cells, plus the weighted
  // head integral that makes T exact at the first radius
  std::vector<double> inc(n, 0.0), incErr(n, 0.0);
  double below = 0.0, belowErr = 0.0;  // dCase only: smooth mass at tau <= r0
  double head = 0.0, headErr = 0.0;

  if (kind == WeightKind::ddcCase) {
    const double r1 = schedule.front();
    auto res = integrate_sublevel(exh, -kInf, r1, seeded(plan, 0), 2,
                                  [&](const VecC& z, double* out) {
                                    const double d = plain(z);
                                    out[0] = d;
                                    out[1] = (r1 - exh.tau(z)) * d;
                                  });
    inc[0] = res[0].value;
    incErr[0] = res[0].err;
    head = res[1].value;
    headErr = res[1].err;
  } else {
    auto resB = integrate_sublevel(exh, -kInf, exh.r0, seeded(plan, 0), plain);
    below = resB.value;
    belowErr = resB.err;
    if (schedule.front() > exh.r0) {
      const double r1 = schedule.front();
      auto res = integrate_sublevel(exh, exh.r0, r1, seeded(plan, n + 1), 2,
                                    [&](const VecC& z, double* out) {
                                      const double d = plain(z);
                                      out[0] = d;
                                      out[1] = (r1 - exh.tau(z)) * d;
                                    });
      inc[0] = res[0].value;
      incErr[0] = res[0].err;
      head = res[1].value;  // integral of (r_1 - tau) over the clip band
      headErr = res[1].err;
    }
  }
  for (int l = 1; l < n; ++l) {
    auto res =
        integrate_sublevel(exh, schedule[l - 1], schedule[l], seeded(plan, l), plain);
    inc[l] = res.value;
    incErr[l] = res.err;
  }

  // density column: full mass of {tau <= r_i}
  double acc = atomHere + (kind == WeightKind::dCase ? below : 0.0);
  double var = kind == WeightKind::dCase ? belowErr * belowErr : 0.0;
  for (int i = 0; i < n; ++i) {
    acc += inc[i];
    var += incErr[i] * incErr[i];
    s.t[i] = acc;
    s.tErr[i] = std::sqrt(var);
  }

  // cumulative column
  if (kind == WeightKind::ddcCase && j == 0 && atomHere > 0.0) {
    // the log weight integrates the point mass at tau = -inf to infinity;
    // report that honestly instead of a truncated stand-in
    for (int i = 0; i < n; ++i) s.T[i] = kInf;
    return s;
  }
  if (kind == WeightKind::ddcCase) {
    s.T[0] = head;
  } else {
    s.T[0] = (schedule.front() - exh.r0) * (atomHere + below) + head;
  }
  for (int i = 1; i < n; ++i)
    s.T[i] = s.T[i - 1] +
             0.5 * (s.t[i] + s.t[i - 1]) * (schedule[i] - schedule[i - 1]);

  // error propagation: T[i] is linear in the independent interval integrals,
  // so accumulate squared coefficient * error per source
  for (int i = 0; i < n; ++i) {
    double v = headErr * headErr;
    if (kind == WeightKind::dCase) {
      const double cb = schedule[i] - exh.r0;
      v += cb * cb * belowErr * belowErr;
    }
    const double c0 = schedule[i] - schedule.front();
    v += c0 * c0 * incErr[0] * incErr[0];
    for (int m = 1; m <= i; ++m) {
      const double cm =
          0.5 * (schedule[m] - schedule[m - 1]) + (schedule[i] - schedule[m]);
      v += cm * cm * incErr[m] * incErr[m];
    }
    s.TErr[i] = std::sqrt(v);
  }
  return s;
}

void validate_series(const CharacteristicSeries& s) {
  const size_t n = s.r.size();
  if (n == 0 || s.t.size() != n || s.T.size() != n || s.tErr.size() != n ||
      s.TErr.size() != n)
    throw std::domain_error("series validation: ragged columns");
  for (size_t i = 1; i < n; ++i)
    if (!(s.r[i] > s.r[i - 1]))
      throw std::domain_error("series validation: schedule not increasing");
  for (size_t i = 0; i < n; ++i) {
    if (!std::isfinite(s.t[i]) || s.t[i] < -2.0 * s.tErr[i] - kTiny)
      throw std::domain_error("series validation: negative density beyond error");
    if (!std::isfinite(s.T[i])) {
      const bool knownInfinite = s.weightKind == WeightKind::ddcCase &&
                                 s.j == 0 && s.atomT > 0.0 && s.T[i] == kInf;
      if (!knownInfinite)
        throw std::domain_error("series validation: non-finite cumulative");
      continue;
    }
    if (i == 0 && s.T[0] < -2.0 * s.TErr[0] - kTiny)
      throw std::domain_error("series validation: negative cumulative at the base");
    if (i > 0 && std::isfinite(s.T[i - 1]) &&
        s.T[i] < s.T[i - 1] - 2.0 * (s.TErr[i] + s.TErr[i - 1]) - kTiny)
      throw std::domain_error("series validation: cumulative decreases beyond error");
  }
}

// --- mass ratios ---------------------------------------------------------------

RatioValue d_mass_ratio(const CharacteristicSeries& sj,
                        const CharacteristicSeries& sjm1, double r) {
  if (sj.weightKind != WeightKind::dCase || sjm1.weightKind != WeightKind::dCase)
    throw std::invalid_argument("d_mass_ratio: both series must be dCase");
  check_levels(sj, sjm1, "d_mass_ratio");
  const int i = sj.indexOf(r), i2 = sjm1.indexOf(r);
  const double tj = sj.t[i], etj = sj.tErr[i];
  const double Aj = sj.T[i], eAj = sj.TErr[i];
  const double Am = sjm1.T[i2], eAm = sjm1.TErr[i2];
  if (!(Aj > guard_of(eAj)))
    throw std::domain_error("d_mass_ratio: level-j mass degenerate, ratio indeterminate");
  RatioValue out;
  out.value = Am * tj / (Aj * Aj);
  const double dAm = tj / (Aj * Aj) * eAm;
  const double dtj = Am / (Aj * Aj) * etj;
  const double dAj = 2.0 * out.value / Aj * eAj;
  out.err = std::sqrt(dAm * dAm + dtj * dtj + dAj * dAj);
  return out;
}

QuadResult d_dirichlet_energy(const MapSpec& map, const ExhaustionSpec& exh,
                              int j, double r, const QuadPlan& plan) {
  const int k = exh.k;
  if (map.k != k)
    throw std::invalid_argument("d_dirichlet_energy: map and exhaustion dimensions differ");
  if (j < 1 || j > k)
    throw std::invalid_argument("d_dirichlet_energy: level j outside [1, domain dimension]");
  if (!(r > exh.r0) || !(r < exh.R))
    throw std::invalid_argument("d_dirichlet_energy: radius outside (r0, R)");
  auto dens = [&](const VecC& z) -> double {
    const VecC g = exh.dtau(z);
    Formd band;  // Gram of d tau ^ d^c tau
    band.coeff = (g.conjugate() * g.transpose()).eval();
    band.positive = true;
    Formd dd, fw;
    std::vector<std::pair<const Formd*, int>> fs;
    fs.push_back({&band, 1});
    if (k - j > 0) {
      dd = exh.ddctau(z);
      fs.push_back({&dd, k - j});
    }
    if (j - 1 > 0) {
      const MapJet jet = map.jet(z);
      fw = fs_pullback(jet.value, jet.jac);
      fs.push_back({&fw, j - 1});
    }
    return mixed_wedge_density(fs);
  };
  return integrate_sublevel(exh, exh.r0, r, plan, dens);
}

RatioValue d_mass_ratio_direct(const MapSpec& map, const ExhaustionSpec& exh,
                               const CharacteristicSeries& sj, double r,
                               const QuadPlan& plan) {
  if (sj.weightKind != WeightKind::dCase)
    throw std::invalid_argument("d_mass_ratio_direct: series must be dCase");
  const int i = sj.indexOf(r);
  const double tj = sj.t[i], etj = sj.tErr[i];
  const double Aj = sj.T[i], eAj = sj.TErr[i];
  if (!(Aj > guard_of(eAj)))
    throw std::domain_error("d_mass_ratio_direct: level-j mass degenerate, ratio indeterminate");
  const QuadResult E = d_dirichlet_energy(map, exh, sj.j, r, plan);
  RatioValue out;
  out.value = E.value * tj / (Aj * Aj);
  const double dE = tj / (Aj * Aj) * E.err;
  const double dtj = E.value / (Aj * Aj) * etj;
  const double dAj = 2.0 * out.value / Aj * eAj;
  out.err = std::sqrt(dE * dE + dtj * dtj + dAj * dAj);
  return out;
}

RatioValue ddc_mass_ratio(const CharacteristicSeries& sj,
                          const CharacteristicSeries& sjm1, double r) {
  if (sj.weightKind != WeightKind::ddcCase)
    throw std::invalid_argument("ddc_mass_ratio: level-j series must be ddcCase");
  check_levels(sj, sjm1, "ddc_mass_ratio");
  const int i = sj.indexOf(r), i2 = sjm1.indexOf(r);
  const double Tj = sj.T[i], eTj = sj.TErr[i];
  if (!std::isfinite(Tj) || !(Tj > guard_of(eTj)))
    throw std::domain_error("ddc_mass_ratio: characteristic degenerate, ratio indeterminate");
  RatioValue out;
  out.value = sjm1.t[i2] / Tj;
  const double dt = sjm1.tErr[i2] / Tj;
  const double dT = out.value / Tj * eTj;
  out.err = std::sqrt(dt * dt + dT * dT);
  return out;
}

// --- conditions ------------------------------------------------------------------

const std::vector<std::string>& condition_ids() {
  static const std::vector<std::string> ids = {
      "simpledMR", "alphaMR",    "minimaldMR", "MR1supdelta",
      "MR2sup",    "logdclosed", "diskEnergy", "scaleCond"};
  return ids;
}

namespace {

ConditionReport scale_condition(const SeriesBundle& b, const ConditionParams& prm) {
  ConditionReport rep;
  rep.id = "scaleCond";
  const auto& FJ = b.familyJ;
  const auto& FM = b.familyJm1;
  if (FJ.empty() || FJ.size() != FM.size() || FJ.size() != b.familyParam.size())
    throw std::invalid_argument("scaleCond: family series and parameters must align");
  if (FJ.size() < 2)
    throw std::invalid_argument("scaleCond: need at least 2 family members");
  if (!(prm.scaleC > 1.0))
    throw std::invalid_argument("scaleCond: shrink factor must exceed 1");
  const double lc = std::log(prm.scaleC);
  for (size_t m = 0; m < FJ.size(); ++m) {
    const auto* SJ = FJ[m];
    const auto* SM = FM[m];
    if (!SJ || !SM) throw std::invalid_argument("scaleCond: null family member");
    if (SJ->r.size() < 8 || SM->r.size() < 8)
      throw std::invalid_argument("check_condition: need at least 8 radii");
    require_same_schedule(*SJ, *SM, "scaleCond");
    double best = kInf;
    bool any = false;
    for (size_t i = 0; i < SM->r.size(); ++i) {
      const double rs = SM->r[i] - lc;  // shrunk radius on the u scale
      if (rs < SJ->r.front() - 1e-12 || rs > SJ->r.back() + 1e-12) continue;
      const double tj = interp_linear(SJ->r, SJ->t, rs);
      const double etj = interp_linear(SJ->r, SJ->tErr, rs);
      if (!(tj > guard_of(etj))) continue;
      const double smooth = std::max(SM->t[i] - SM->atomT, 0.0);
      const double v = smooth / tj;
      if (!any || v < best) best = v;
      any = true;
    }
    if (!any)
      throw std::domain_error("scaleCond: no usable radii for a family member");
    rep.x.push_back(b.familyParam[m]);
    rep.curve.push_back(best);
  }
  rep.note = fmt("smooth part of the lower density against the shrunk upper one, c = %g",
                 prm.scaleC);
  liminf_zero_verdict(rep, kInf);
  return rep;
}

}  // namespace

ConditionReport check_condition(const std::string& id, const SeriesBundle& b,
                                const ConditionParams& prm) {
  if (id == "scaleCond") return scale_condition(b, prm);

  const CharacteristicSeries* sj = b.sj;
  const CharacteristicSeries* sm = b.sjm1;
  if (!sj || !sm)
    throw std::invalid_argument("check_condition: bundle is missing the level series");
  if (sj->r.size() < 8)
    throw std::invalid_argument("check_condition: need at least 8 radii");
  require_same_schedule(*sj, *sm, "check_condition");

  ConditionReport rep;
  rep.id = id;
  const size_t n = sj->r.size();

  if (id == "simpledMR") {
    const auto A = cumulative_mass(*sj);
    const auto eA = cumulative_mass_err(*sj);
    for (size_t i = 0; i < n; ++i) {
      if (!(A[i] > guard_of(eA[i]))) continue;
      rep.x.push_back(sj->r[i]);
      rep.curve.push_back(sm->t[i] / A[i]);
    }
    rep.note = "lower density over the cumulative upper mass";
    liminf_zero_verdict(rep, b.R);
    return rep;
  }

  if (id == "alphaMR") {
    std::function<double(double)> alpha;
    if (prm.alphaKind == "linear")
      alpha = [](double s) { return s; };
    else if (prm.alphaKind == "loglinear")
      alpha = [](double s) { return s * std::log(std::exp(1.0) + s); };
    else
      throw std::invalid_argument("alphaMR: unknown alpha kind '" + prm.alphaKind + "'");
    const auto Aj = cumulative_mass(*sj);
    const auto eAj = cumulative_mass_err(*sj);
    const auto Am = cumulative_mass(*sm);
    const auto eAm = cumulative_mass_err(*sm);
    for (size_t i = 0; i < n; ++i) {
      if (!(Aj[i] > guard_of(eAj[i])) || !(Am[i] > guard_of(eAm[i]))) continue;
      rep.x.push_back(sj->r[i]);
      rep.curve.push_back(alpha(Aj[i]) * Am[i] / (Aj[i] * Aj[i]));
    }
    rep.note = "comparison scale " + prm.alphaKind +
               " (divergent reciprocal integral)";
    liminf_zero_verdict(rep, b.R);
    return rep;
  }

  if (id == "minimaldMR") {
    const auto Am = cumulative_mass(*sm);
    const auto eAm = cumulative_mass_err(*sm);
    std::vector<double> g;
    for (size_t i = 0; i < n; ++i) {
      if (!(Am[i] > guard_of(eAm[i]))) continue;
      rep.x.push_back(sm->r[i]);
      g.push_back(1.0 / Am[i]);
    }
    std::vector<double> q(g.size(), 0.0);
    for (size_t i = 1; i < g.size(); ++i)
      q[i] = q[i - 1] + 0.5 * (g[i] + g[i - 1]) * (rep.x[i] - rep.x[i - 1]);
    rep.curve = q;
    rep.note = "partial integral of the reciprocal cumulative lower mass";
    divergence_verdict(rep, q, b.R);
    return rep;
  }

  if (id == "MR1supdelta") {
    const auto Aj = cumulative_mass(*sj);
    const auto eAj = cumulative_mass_err(*sj);
    const auto Am = cumulative_mass(*sm);
    const auto eAm = cumulative_mass_err(*sm);
    std::vector<double> r, aj, am;
    for (size_t i = 0; i < n; ++i) {
      if (!(Aj[i] > guard_of(eAj[i])) || !(Am[i] > guard_of(eAm[i]))) continue;
      r.push_back(sj->r[i]);
      aj.push_back(Aj[i]);
      am.push_back(Am[i]);
    }
    if (r.size() < 3)
      throw std::domain_error("condition check: no usable schedule points");
    const auto xs = shifted_abscissae(r, b.R);
    std::vector<double> lx(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) lx[i] = std::log(xs[i]);
    double bestSlope = -kInf, bestDelta = 0.0;
    std::vector<double> bestQ;
    for (double d : prm.deltaGrid) {
      std::vector<double> q(r.size(), 0.0);
      auto g = [&](size_t i) { return d * std::pow(aj[i], 1.0 - d) / am[i]; };
      for (size_t i = 1; i < r.size(); ++i)
        q[i] = q[i - 1] + 0.5 * (g(i) + g(i - 1)) * (r[i] - r[i - 1]);
      const LineFit f = tail_fit(lx, q);
      if (f.slope > bestSlope) {
        bestSlope = f.slope;
        bestDelta = d;
        bestQ = q;
      }
    }
    rep.x = r;
    rep.curve = bestQ;
    rep.extrapolated = true;
    rep.holds = bestSlope >= kDivergeSlope;
    for (size_t i = r.size() / 2; i < r.size(); ++i)
      rep.witness.push_back(static_cast<int>(i));
    rep.note = fmt("best delta = %g", bestDelta) +
               fmt(", partial-integral growth rate %.3f", bestSlope);
    return rep;
  }

  if (id == "MR2sup") {
    if (sj->weightKind != WeightKind::ddcCase)
      throw std::invalid_argument("MR2sup: level-j series must be ddcCase");
    std::vector<double> r, g, T;
    for (size_t i = 0; i < n; ++i) {
      if (!(sm->t[i] > guard_of(sm->tErr[i]))) continue;
      if (!std::isfinite(sj->T[i]) || !(sj->T[i] > 1.0 + 1e-12)) continue;
      r.push_back(sj->r[i]);
      g.push_back(sj->t[i] / sm->t[i]);
      T.push_back(sj->T[i]);
    }
    if (r.size() < 3)
      throw std::domain_error("condition check: no usable schedule points");
    std::vector<double> q(r.size(), 0.0);
    for (size_t i = 1; i < r.size(); ++i)
      q[i] = q[i - 1] + 0.5 * (g[i] + g[i - 1]) * (r[i] - r[i - 1]);
    rep.x = r;
    rep.curve.resize(r.size());
    for (size_t i = 0; i < r.size(); ++i) rep.curve[i] = q[i] / std::log(T[i]);
    rep.witness = prefix_maxima(rep.curve);
    const auto xs = shifted_abscissae(r, b.R);
    std::vector<double> lx, ly;
    for (size_t i = 0; i < r.size(); ++i)
      if (rep.curve[i] > 0.0) {
        lx.push_back(std::log(xs[i]));
        ly.push_back(std::log(rep.curve[i]));
      }
    const LineFit f = tail_fit(lx, ly);
    rep.extrapolated = true;
    rep.holds = f.slope >= kMR2Slope && rep.curve.back() > rep.curve.front();
    rep.note = fmt("log-normalized relative growth, tail exponent %.3f", f.slope);
    return rep;
  }

  if (id == "logdclosed") {
    if (sj->weightKind != WeightKind::ddcCase)
      throw std::invalid_argument("logdclosed: level-j series must be ddcCase");
    const bool unbounded = std::isinf(b.R);
    for (size_t i = 0; i < n; ++i) {
      const double factor = unbounded ? sj->r[i] : 1.0;
      if (!(factor > 0.0)) continue;
      if (!std::isfinite(sj->T[i]) || !(sj->T[i] > guard_of(sj->TErr[i]))) continue;
      rep.x.push_back(sj->r[i]);
      rep.curve.push_back(factor * sm->t[i] * sj->t[i] / (sj->T[i] * sj->T[i]));
    }
    rep.note = unbounded ? "density product over squared characteristic, log-radius factor"
                         : "density product over squared characteristic";
    liminf_zero_verdict(rep, b.R);
    return rep;
  }

  if (id == "diskEnergy") {
    if (!(b.R < kInf))
      throw std::invalid_argument("diskEnergy: needs a finite exhaustion ceiling");
    std::vector<double> lx, ly;
    for (size_t i = 0; i < n; ++i) {
      if (!(sj->t[i] > guard_of(sj->tErr[i]))) continue;
      rep.x.push_back(sj->r[i]);
      rep.curve.push_back(sj->t[i]);
      lx.push_back(std::log(b.R - sj->r[i]));
      ly.push_back(std::log(sj->t[i]));
    }
    if (rep.x.size() < 3)
      throw std::domain_error("condition check: no usable schedule points");
    const LineFit f = tail_fit(lx, ly);
    rep.witness = prefix_maxima(rep.curve);
    rep.extrapolated = true;
    rep.holds = f.slope <= kDiskSlope;
    rep.note = fmt("density growth exponent %.3f toward the ceiling", f.slope);
    return rep;
  }

  throw std::invalid_argument("check_condition: unknown condition id '" + id + "'");
}

// --- growth classification ---------------------------------------------------------

GrowthReport growth_classify(const CharacteristicSeries& top,
                             const CharacteristicSeries* companion,
                             GrowthMode mode) {
  GrowthReport rep;
  rep.mode = mode;
  const size_t n = top.r.size();
  if (n < 8)
    throw std::invalid_argument("growth_classify: need at least 8 radii");
  for (size_t i = 1; i < n; ++i)
    if (top.t[i] < top.t[i - 1] - 2.0 * (top.tErr[i] + top.tErr[i - 1]) - kTiny)
      throw std::domain_error("growth_classify: series not monotone, fit refused");

  std::vector<double> x, y;
  for (size_t i = 0; i < n; ++i) {
    if (mode == GrowthMode::logOrder && !(top.r[i] > 0.0))
      throw std::invalid_argument("growth_classify: log-order mode needs positive radii");
    if (!(top.t[i] > 0.0)) continue;
    x.push_back(mode == GrowthMode::finiteOrder ? top.r[i] : std::log(top.r[i]));
    y.push_back(std::log(top.t[i]));
  }
  if (x.size() < 4)
    throw std::domain_error("growth_classify: too few positive density values");
  const LineFit f = tail_fit(x, y);
  rep.order = f.slope;
  rep.fitResidual = f.rms;
  rep.note = mode == GrowthMode::finiteOrder
                 ? "slope of log density against the log-radius variable"
                 : "slope of log density against the log of the log-radius variable";

  if (companion) {
    require_same_schedule(top, *companion, "growth_classify");
    std::vector<double> rr, rho;
    for (size_t i = 0; i < n; ++i) {
      if (!(companion->t[i] > guard_of(companion->tErr[i]))) continue;
      if (!(top.t[i] > 0.0)) continue;
      rr.push_back(top.r[i]);
      rho.push_back(top.t[i] / companion->t[i]);
    }
    if (rr.size() >= 4) {
      const auto xs = shifted_abscissae(rr, kInf);
      std::vector<double> lx(xs.size()), ly(rho.size());
      for (size_t i = 0; i < xs.size(); ++i) {
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(rho[i]);
      }
      const LineFit fd = tail_fit(lx, ly);
      rep.ratioDiverges = fd.slope >= kMR2Slope && rho.back() > rho.front();
      bool positive = true;
      for (double v : rr) positive = positive && v > 0.0;
      if (positive) {
        std::vector<double> lr(rr.size());
        for (size_t i = 0; i < rr.size(); ++i) lr[i] = std::log(rr[i]);
        const LineFit fb = tail_fit(lr, ly);
        rep.ratioBeta = -fb.slope;
        rep.ratioC = std::exp(fb.intercept);
        rep.lowerBoundHolds = rep.ratioBeta < 1.0;
      }
    }
  }
  return rep;
}

}  // namespace vdlab
