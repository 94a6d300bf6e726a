#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "vdlab/forms.hpp"
#include "vdlab/maps.hpp"

namespace vdlab {

// Quadrature request. monteCarlo works in any dimension; radialGrid is the
// high-accuracy one-variable route (grid in the radial coordinate times an
// adaptive rule on circles).
struct QuadPlan {
  enum class Method { radialGrid, monteCarlo };
  Method method = Method::monteCarlo;
  long budget = 200000;   // total evaluation target, >= 1000
  std::uint64_t seed = 1;
  int shells = 16;        // radial strata for monteCarlo, >= 4
  int threads = 0;        // 0: resolve from VDLAB_THREADS, else as given
};

struct QuadResult {
  double value = 0.0;
  double err = 0.0;   // one-sigma statistical error, or grid-refinement bound
  long evals = 0;
};

// Thread count for quadrature: a positive request wins, otherwise the
// VDLAB_THREADS environment variable, otherwise 1. The result never changes
// any computed value, only wall time: work is split into fixed blocks with
// per-block random streams and reduced in block order.
int resolve_threads(int requested);

// Integral over the region {uLo < tau <= uHi} of a density against Lebesgue
// measure on C^k. `density` writes `dim` components per point; components
// share sample points, so ratios of components are positively correlated.
// uLo may be -infinity (the full sublevel set); the unbounded tail is cut
// where its volume is below any representable contribution.
std::vector<QuadResult> integrate_sublevel(
    const ExhaustionSpec& exh, double uLo, double uHi, const QuadPlan& plan,
    int dim, const std::function<void(const VecC&, double*)>& density);

QuadResult integrate_sublevel(const ExhaustionSpec& exh, double uLo,
                              double uHi, const QuadPlan& plan,
                              const std::function<double(const VecC&)>& density);

// Integral over the level set {tau = u} against the boundary measure
// d^c tau ^ (dd^c tau)^{k-1}, of total mass exh.boundaryMass (for the
// catalog exhaustions: boundaryMass times the uniform angular measure).
std::vector<QuadResult> integrate_boundary(
    const ExhaustionSpec& exh, double u, const QuadPlan& plan, int dim,
    const std::function<void(const VecC&, double*)>& f);

QuadResult integrate_boundary(const ExhaustionSpec& exh, double u,
                              const QuadPlan& plan,
                              const std::function<double(const VecC&)>& f);

}  // namespace vdlab
