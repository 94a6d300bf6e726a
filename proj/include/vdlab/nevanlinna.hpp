#pragma once

#include <limits>
#include <string>
#include <vector>

#include "vdlab/maps.hpp"
#include "vdlab/quad.hpp"

namespace vdlab {

// Weighting convention for the cumulative column T of a series.
//
// Radii live on the u = tau scale throughout (u = log sigma for log-type
// exhaustions). The density t_j(r) is the mass of
//   mu_j = (dd^c tau)^{k-j} ^ pullback(omega^j)
// on the full sublevel set {tau <= r}, independent of the weight kind.
// The cumulative column differs:
//
//   ddcCase:  T_j(r) = integral_{-inf}^{r} t_j(u) du
//             (the normalizer of the log^+(r/sigma) weight),
//   dCase:    T_j(r) = integral_{r0}^{r} t_j(u) du
//             (the clip floor r0 comes from the exhaustion; this is the
//             quantity the d-mass ratio is built from).
//
// Both are computed as an exact weighted quadrature up to the first schedule
// radius plus a trapezoid across the schedule above it.
enum class WeightKind { dCase, ddcCase };

struct CharacteristicSeries {
  int j = 0;
  int k = 1;
  WeightKind weightKind = WeightKind::ddcCase;
  double floor = 0.0;   // lower limit of the T cumulation (-inf for ddcCase)
  double atomT = 0.0;   // point-mass part included in every t value (j = 0)

  std::vector<double> r;  // schedule, strictly increasing
  std::vector<double> t, tErr;
  std::vector<double> T, TErr;

  std::string mapId, exhId;

  int indexOf(double radius) const;  // exact schedule lookup, throws if absent
};

std::vector<double> linspace(double lo, double hi, int n);

CharacteristicSeries characteristic(const MapSpec& map, const ExhaustionSpec& exh,
                                    int j, const std::vector<double>& schedule,
                                    WeightKind kind, const QuadPlan& plan);

// Throws unless t >= -2 stderr everywhere, T is nondecreasing within
// 2 * propagated error, and T at the first radius is >= -2 stderr.
void validate_series(const CharacteristicSeries& s);

struct RatioValue {
  double value = 0.0;
  double err = 0.0;
};

// I_j(r) = (integral_{r0}^{r} t_{j-1}) * t_j(r) / (integral_{r0}^{r} t_j)^2,
// assembled from two dCase series sharing one schedule.
RatioValue d_mass_ratio(const CharacteristicSeries& sj,
                        const CharacteristicSeries& sjm1, double r);

// Band energy E(r) = integral_{r0 < tau <= r} d tau ^ d^c tau ^
// (dd^c tau)^{k-j} ^ pullback(omega^{j-1}), evaluated by fresh quadrature.
// Flux bookkeeping makes E(r) equal integral_{r0}^{r} t_{j-1}(s) ds exactly,
// atom included, so this is an independent route to the I_j numerator.
QuadResult d_dirichlet_energy(const MapSpec& map, const ExhaustionSpec& exh,
                              int j, double r, const QuadPlan& plan);

// I_j with the numerator integral replaced by d_dirichlet_energy; t_j and its
// cumulative come from the series. Cross-validates d_mass_ratio.
RatioValue d_mass_ratio_direct(const MapSpec& map, const ExhaustionSpec& exh,
                               const CharacteristicSeries& sj, double r,
                               const QuadPlan& plan);

// J_j(r) = t_{j-1}(r) / T_j(r) with a ddcCase series in the denominator.
RatioValue ddc_mass_ratio(const CharacteristicSeries& sj,
                          const CharacteristicSeries& sjm1, double r);

// --- growth and decay conditions ----------------------------------------

struct ConditionParams {
  std::string alphaKind = "linear";  // alphaMR comparison scale: "linear" or
                                     // "loglinear" (both have divergent
                                     // integral of ds/alpha)
  double scaleC = 2.0;               // scaleCond shrink factor, sigma scale
  std::vector<double> deltaGrid = {0.5, 0.2, 0.1, 0.05, 0.02, 0.01};
};

struct ConditionReport {
  std::string id;
  bool holds = false;        // numerically consistent with the condition
  bool extrapolated = false; // verdict rests on a declared-form fit
  std::vector<double> x;     // abscissae of the diagnostic curve
  std::vector<double> curve;
  std::vector<int> witness;  // indices of the extremizing subsequence
  std::string note;
};

// Series inputs for one condition check. sj / sjm1 carry the level j and
// j - 1 data; R is the exhaustion ceiling (decides how the schedule is
// extrapolated). The family vectors are only read by scaleCond: one series
// pair per member, familyParam holding the member label (for example the
// scaling factor n).
struct SeriesBundle {
  const CharacteristicSeries* sj = nullptr;
  const CharacteristicSeries* sjm1 = nullptr;
  double R = std::numeric_limits<double>::infinity();
  std::vector<const CharacteristicSeries*> familyJ, familyJm1;
  std::vector<double> familyParam;
};

// id is one of condition_ids(). Limit conditions report holds when the curve
// is consistent with the stated limit over the schedule; divergence
// conditions are always extrapolated from a declared power fit and tagged so.
ConditionReport check_condition(const std::string& id, const SeriesBundle& bundle,
                                const ConditionParams& params = ConditionParams());

const std::vector<std::string>& condition_ids();

// --- growth classification ------------------------------------------------

enum class GrowthMode { finiteOrder, logOrder };

struct GrowthReport {
  GrowthMode mode = GrowthMode::finiteOrder;
  double order = 0.0;        // slope of log t against r (finiteOrder) or
                             // against log r (logOrder)
  double fitResidual = 0.0;  // rms residual of the regression, log scale

  // Companion verdicts, filled when a level j - 1 series is supplied.
  bool ratioDiverges = false;  // t_j / t_{j-1} grows across the schedule
  double ratioC = 0.0;         // fitted lower bound t_j/t_{j-1} >= c (log r)^-beta
  double ratioBeta = 0.0;
  bool lowerBoundHolds = false;  // beta < 1
  std::string note;
};

GrowthReport growth_classify(const CharacteristicSeries& top,
                             const CharacteristicSeries* companion,
                             GrowthMode mode);

}  // namespace vdlab
