#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "vdlab/forms.hpp"
#include "vdlab/rng.hpp"

namespace vdlab {

// Value and derivative of a homogeneous representative at one domain point.
// Both carry the same scale: the true representative is exp(logScale) * value
// and its Jacobian is exp(logScale) * jac. Metric quantities (fs_pullback)
// only see the pair, so the scale cancels; it exists to keep exp-type maps
// inside double range at large radius.
struct MapJet {
  VecC value;        // (m+1) entries, never all zero
  MatC jac;          // (m+1) x k
  double logScale = 0.0;
};

// Zero of a scalar equation with multiplicity (k = 1 enumerators).
using RootList = std::vector<std::pair<Complex, int>>;

// Preimage of a point target with multiplicity (k = m enumerators).
using PointPreimageList = std::vector<std::pair<VecC, int>>;

struct MapSpec {
  std::string id;
  int k = 1;  // domain dimension
  int m = 1;  // target P^m
  std::function<MapJet(const VecC&)> jet;

  // Optional closed forms; null when the catalog entry has none.
  //
  // hyper_log_deriv: z, a  ->  d/dz log <F(z), a>  (k = 1 only), written in a
  // form that stays finite when the homogeneous representative overflows.
  std::function<Complex(Complex, const VecC&)> hyper_log_deriv;

  // hyper_preimages: all zeros of <F, a> with |z| <= maxAbs (k = 1 only).
  std::function<RootList(const VecC&, double)> hyper_preimages;

  // point_preimages: all preimages of the point [q] with ||z|| <= maxNorm
  // (equidimensional maps only).
  std::function<PointPreimageList(const VecC&, double)> point_preimages;
};

struct ExhaustionSpec {
  std::string id;
  int k = 1;
  double R = std::numeric_limits<double>::infinity();  // sup of tau
  double r0 = 0.25;       // base radius: weights clip at tau = r0
  bool isParabolic = true;
  bool isLogType = true;  // tau = log sigma for an exhaustion sigma
  double atomMass = 0.0;  // point mass of (dd^c tau)^k at the origin
  double boundaryMass = 1.0;  // mass of d^c tau ^ (dd^c tau)^{k-1} on a level set

  std::function<double(const VecC&)> tau;
  std::function<VecC(const VecC&)> dtau;    // Wirtinger gradient d tau / d z_p
  std::function<Formd(const VecC&)> ddctau;

  // Radial chart: the point with tau = u in direction dir (dir a unit vector
  // of C^k). Inverts tau along rays; quadrature shells and boundary rules are
  // built from it.
  std::function<VecC(double, const VecC&)> from_radial;
};

struct DivisorSpec {
  enum class Kind { hyperplane, point };
  Kind kind = Kind::hyperplane;
  VecC a;  // unit vector in C^{m+1}: hyperplane <Z, a> = 0, or point [a]
  std::string name;
};

// --- catalog -----------------------------------------------------------

MapSpec make_power(int d);
MapSpec make_exp();
MapSpec make_exp_curve();
// One polynomial per domain coordinate, coefficients low order first:
// z -> [1 : p_1(z_1) : ... : p_k(z_k)]. k = polys.size(), m = k.
MapSpec make_polyk(const std::vector<std::vector<Complex>>& polys);
MapSpec make_disk_cover();
// z -> [1 : lambda z] on the unit ball; the scaling-family member.
MapSpec make_linear_scale(double lambda);

// Sequence families: "familyNz" gives lambda = 1, 2, 4, ..., "familyZOverN"
// gives lambda = 1, 1/2, 1/4, ... (count members each).
std::vector<MapSpec> make_family(const std::string& id, int count);

ExhaustionSpec standard_exhaustion(const std::string& id, int k);

// --- divisors ----------------------------------------------------------

DivisorSpec hyperplane_divisor(const VecC& a, std::string name = "");
DivisorSpec point_divisor(const VecC& q, std::string name = "");
// P^1 convenience: the hyperplane cutting out the single point w = w0.
DivisorSpec finite_point_divisor(Complex w0);
// The point w = infinity on P^1 (omitted by every catalog entire map).
DivisorSpec infinity_divisor();

// FS-uniform hyperplane in the dual of P^m.
DivisorSpec sample_hyperplane_fs(Rng& rng, int m);
// P^1 target with log|w| uniform in [logLo, logHi] and uniform argument.
DivisorSpec sample_point_log_uniform(Rng& rng, double logLo, double logHi);

// --- polynomial roots (companion-matrix solver, Newton-polished) -------

RootList poly_roots(const std::vector<Complex>& coeffs, double clusterTol = 1e-8);

// --- catalog listing for the CLI ---------------------------------------

struct CatalogEntry {
  std::string id;
  std::string signature;
  std::string note;
};
std::vector<CatalogEntry> catalog_maps();
std::vector<CatalogEntry> catalog_exhaustions();

}  // namespace vdlab
