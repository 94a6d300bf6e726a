#include "vdlab/quad.hpp"

#include "vdlab/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace vdlab {

namespace {

constexpr long kBlockSize = 4096;
constexpr int kMaxDensityDim = 16;
// Tail cut for unbounded inner regions: volume fraction e^{-2k * kTailSpan}
// is far below double precision against any integrable density.
constexpr double kTailSpan = 46.0;

void validate(const QuadPlan& plan, int dim) {
  if (plan.budget < 1000)
    throw std::invalid_argument("QuadPlan: budget must be at least 1000");
  if (plan.shells < 4)
    throw std::invalid_argument("QuadPlan: need at least 4 shells");
  if (dim < 1 || dim > kMaxDensityDim)
    throw std::invalid_argument("quad: density dimension out of range");
}

// Euclidean radius of the tau = u sphere.
double radius_of(const ExhaustionSpec& exh, double u) {
  VecC e1 = VecC::Zero(exh.k);
  e1(0) = Complex(1, 0);
  return exh.from_radial(u, e1).norm();
}

// Runs work(0..nBlocks-1), possibly on several threads. Each block owns its
// output slot, so the schedule cannot affect results.
void run_blocks(int nThreads, int nBlocks,
                const std::function<void(int)>& work) {
  if (nThreads <= 1 || nBlocks <= 1) {
    for (int b = 0; b < nBlocks; ++b) work(b);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr firstError = nullptr;
  std::mutex errLock;
  auto worker = [&]() {
    for (;;) {
      const int b = next.fetch_add(1);
      if (b >= nBlocks) return;
      try {
        work(b);
      } catch (...) {
        std::lock_guard<std::mutex> g(errLock);
        if (!firstError) firstError = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int spawn = std::min(nThreads, nBlocks);
  pool.reserve(spawn);
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (firstError) std::rethrow_exception(firstError);
}

struct BlockStat {
  double sum[kMaxDensityDim] = {0};
  double sumsq[kMaxDensityDim] = {0};
  long n = 0;
};

// Periodic trapezoid rule on the circle tau = u, doubled until stable.
// Returns the plain angular average of each component.
void circle_average(const ExhaustionSpec& exh, double u, long maxNodes,
                    int dim, const std::function<void(const VecC&, double*)>& f,
                    double* avg, double* err, long* evals) {
  const long cap = std::max<long>(64, maxNodes);
  long n = 16;
  double cur[kMaxDensityDim] = {0};
  double prev[kMaxDensityDim];
  double buf[kMaxDensityDim];
  long used = 0;
  VecC dir(1);
  auto pass = [&](long nodes, double* out) {
    for (int c = 0; c < dim; ++c) out[c] = 0.0;
    for (long i = 0; i < nodes; ++i) {
      const double th = 2.0 * kPi * (static_cast<double>(i) + 0.5) /
                        static_cast<double>(nodes);
      dir(0) = Complex(std::cos(th), std::sin(th));
      f(exh.from_radial(u, dir), buf);
      for (int c = 0; c < dim; ++c) out[c] += buf[c];
    }
    for (int c = 0; c < dim; ++c) out[c] /= static_cast<double>(nodes);
    used += nodes;
  };
  pass(n, cur);
  for (;;) {
    for (int c = 0; c < dim; ++c) prev[c] = cur[c];
    n *= 2;
    pass(n, cur);
    double diff = 0.0, scale = 0.0;
    for (int c = 0; c < dim; ++c) {
      diff = std::max(diff, std::abs(cur[c] - prev[c]));
      scale = std::max(scale, std::abs(cur[c]));
    }
    if (diff <= 1e-10 * (scale + 1e-12) || 2 * n > cap) {
      for (int c = 0; c < dim; ++c) {
        avg[c] = cur[c];
        err[c] = diff;
      }
      *evals = used;
      return;
    }
  }
}

// State for the adaptive radial rule.
struct GridCtx {
  const ExhaustionSpec* exh;
  int dim;
  const std::function<void(const VecC&, double*)>* density;
  long circleCap;
  long evals = 0;
  long evalCap = 0;
  double tol[kMaxDensityDim];
  double value[kMaxDensityDim] = {0};
  double errAcc[kMaxDensityDim] = {0};
};

// Circle average times the radial Jacobian 2 pi rho |rho'| at height u, so
// that integrating val du over [uLo, uHi] gives the Lebesgue integral.
void grid_node(GridCtx& ctx, double u, double* val) {
  const ExhaustionSpec& exh = *ctx.exh;
  const double h = 1e-6 * (1.0 + std::abs(u));
  const double rp = radius_of(exh, u + h);
  const double rm = radius_of(exh, u - h);
  const double rho = radius_of(exh, u);
  const double drho = (rp - rm) / (2.0 * h);
  double avg[kMaxDensityDim], cerr[kMaxDensityDim];
  long e = 0;
  circle_average(exh, u, ctx.circleCap, ctx.dim, *ctx.density, avg, cerr, &e);
  ctx.evals += e;
  const double jac = 2.0 * kPi * rho * std::abs(drho);
  for (int c = 0; c < ctx.dim; ++c) val[c] = avg[c] * jac;
}

// Classic adaptive Simpson, vector-valued: a panel is accepted only when
// every component passes its tolerance.
void grid_adapt(GridCtx& ctx, double a, double b, const double* fa,
                const double* fm, const double* fb, const double* whole,
                double tolScale, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  double flm[kMaxDensityDim], frm[kMaxDensityDim];
  grid_node(ctx, lm, flm);
  grid_node(ctx, rm, frm);
  const double h6 = (b - a) / 12.0;
  double left[kMaxDensityDim], right[kMaxDensityDim];
  bool ok = true;
  for (int c = 0; c < ctx.dim; ++c) {
    left[c] = h6 * (fa[c] + 4.0 * flm[c] + fm[c]);
    right[c] = h6 * (fm[c] + 4.0 * frm[c] + fb[c]);
    if (std::abs(left[c] + right[c] - whole[c]) > 15.0 * ctx.tol[c] * tolScale)
      ok = false;
  }
  if (ok || depth >= 24 || ctx.evals > ctx.evalCap) {
    for (int c = 0; c < ctx.dim; ++c) {
      const double refined = left[c] + right[c];
      ctx.value[c] += refined + (refined - whole[c]) / 15.0;
      ctx.errAcc[c] += std::abs(refined - whole[c]) / 15.0;
    }
    return;
  }
  grid_adapt(ctx, a, m, fa, flm, fm, left, 0.5 * tolScale, depth + 1);
  grid_adapt(ctx, m, b, fm, frm, fb, right, 0.5 * tolScale, depth + 1);
}

std::vector<QuadResult> sublevel_grid(
    const ExhaustionSpec& exh, double uLo, double uHi, const QuadPlan& plan,
    int dim, const std::function<void(const VecC&, double*)>& density) {
  // One-variable high-accuracy route: adaptive Simpson in u of
  // (circle average) * 2 pi rho rho', with circles done by the periodic
  // trapezoid rule. In the u variable both exponential volume growth and
  // the logarithmic weights of characteristic heads are tame.
  const double lo = std::max(uLo, uHi - kTailSpan);
  std::vector<QuadResult> out(dim);

  GridCtx ctx;
  ctx.exh = &exh;
  ctx.dim = dim;
  ctx.density = &density;
  ctx.circleCap = std::clamp<long>(plan.budget / 32, 512, 8192);
  ctx.evalCap = 200L * plan.budget;

  // Coarse pass: fixed panels to size the integrand, then per-component
  // absolute tolerances for the adaptive refinement.
  const int nCoarse = 24;
  const double h = (uHi - lo) / nCoarse;
  std::vector<double> nodes(static_cast<std::size_t>(2 * nCoarse + 1) * dim);
  for (int i = 0; i <= 2 * nCoarse; ++i)
    grid_node(ctx, lo + 0.5 * h * i, nodes.data() + static_cast<std::size_t>(i) * dim);
  double scale[kMaxDensityDim] = {0};
  for (int p = 0; p < nCoarse; ++p) {
    const double* fa = nodes.data() + static_cast<std::size_t>(2 * p) * dim;
    const double* fm = fa + dim;
    const double* fb = fm + dim;
    for (int c = 0; c < dim; ++c)
      scale[c] += std::abs(h / 6.0 * (fa[c] + 4.0 * fm[c] + fb[c]));
  }
  for (int c = 0; c < dim; ++c)
    ctx.tol[c] = 1e-10 * scale[c] / nCoarse + 1e-300;

  for (int p = 0; p < nCoarse; ++p) {
    const double* fa = nodes.data() + static_cast<std::size_t>(2 * p) * dim;
    const double* fm = fa + dim;
    const double* fb = fm + dim;
    double whole[kMaxDensityDim];
    for (int c = 0; c < dim; ++c)
      whole[c] = h / 6.0 * (fa[c] + 4.0 * fm[c] + fb[c]);
    grid_adapt(ctx, lo + h * p, lo + h * (p + 1), fa, fm, fb, whole, 1.0, 0);
  }

  for (int c = 0; c < dim; ++c) {
    out[c].value = ctx.value[c];
    out[c].err = ctx.errAcc[c] + 1e-14 * std::abs(ctx.value[c]);
    out[c].evals = ctx.evals;
  }
  return out;
}

}  // namespace

int resolve_threads(int requested) {
  if (requested > 0) return std::min(requested, 64);
  if (const char* env = std::getenv("VDLAB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return std::min(v, 64);
  }
  return 1;
}

std::vector<QuadResult> integrate_sublevel(
    const ExhaustionSpec& exh, double uLo, double uHi, const QuadPlan& plan,
    int dim, const std::function<void(const VecC&, double*)>& density) {
  validate(plan, dim);
  std::vector<QuadResult> out(dim);
  if (!(uHi > uLo)) return out;

  if (plan.method == QuadPlan::Method::radialGrid) {
    if (exh.k != 1)
      throw std::invalid_argument("radialGrid quadrature needs k = 1");
    return sublevel_grid(exh, uLo, uHi, plan, dim, density);
  }

  const int k = exh.k;
  const double lo = std::max(uLo, uHi - kTailSpan);
  const double rA = radius_of(exh, lo);
  const double rB = radius_of(exh, uHi);
  const double rhoHi = std::max(rA, rB);
  const double rhoLo = std::min(rA, rB);
  if (!(rhoHi > 0.0)) return out;
  // Volume of the Euclidean annulus in C^k = R^{2k}.
  double ballConst = 1.0;  // pi^k / k!
  for (int i = 1; i <= k; ++i) ballConst *= kPi / static_cast<double>(i);
  const double ratio = rhoLo / rhoHi;
  double ratio2k = 1.0;
  for (int i = 0; i < 2 * k; ++i) ratio2k *= ratio;
  double rhoHi2k = 1.0;
  for (int i = 0; i < 2 * k; ++i) rhoHi2k *= rhoHi;
  const double volume = ballConst * rhoHi2k * (1.0 - ratio2k);
  if (volume == 0.0) return out;

  // Strata are equal slices in u between lo and uHi; equal sample counts per
  // stratum put work where the radial scale changes, not where volume does.
  const int S = plan.shells;
  const double du = (uHi - lo) / static_cast<double>(S);
  struct Stratum {
    double q0, q1;   // volume quantiles within the annulus
    long n;
    long firstBlock;
    long nBlocks;
  };
  std::vector<Stratum> strata(S);
  long totalBlocks = 0;
  for (int s = 0; s < S; ++s) {
    const double ua = lo + du * s;
    const double ub = (s == S - 1) ? uHi : lo + du * (s + 1);
    auto quant = [&](double u) {
      const double r = radius_of(exh, u) / rhoHi;
      double r2k = 1.0;
      for (int i = 0; i < 2 * k; ++i) r2k *= r;
      return (r2k - ratio2k) / (1.0 - ratio2k);
    };
    const double qa = quant(ua), qb = quant(ub);
    strata[s].q0 = std::min(qa, qb);
    strata[s].q1 = std::max(qa, qb);
    strata[s].n = plan.budget / S + (s < plan.budget % S ? 1 : 0);
    strata[s].n = std::max<long>(strata[s].n, 2);
    strata[s].firstBlock = totalBlocks;
    strata[s].nBlocks = (strata[s].n + kBlockSize - 1) / kBlockSize;
    totalBlocks += strata[s].nBlocks;
  }

  std::vector<BlockStat> stats(totalBlocks);
  const double inv2k = 1.0 / static_cast<double>(2 * k);
  auto work = [&](int blockId) {
    // Locate the stratum owning this block.
    int s = 0;
    while (s + 1 < S && strata[s + 1].firstBlock <= blockId) ++s;
    const Stratum& st = strata[s];
    const long within = blockId - st.firstBlock;
    const long nHere = std::min(kBlockSize, st.n - within * kBlockSize);
    Rng rng = Rng::stream(plan.seed, 0xA1, static_cast<std::uint64_t>(s),
                          static_cast<std::uint64_t>(within));
    BlockStat& bs = stats[blockId];
    double dirR[2 * kMaxDim];
    double buf[kMaxDensityDim];
    VecC z(k);
    for (long i = 0; i < nHere; ++i) {
      const double q = st.q0 + (st.q1 - st.q0) * rng.uniform();
      const double t = ratio2k + q * (1.0 - ratio2k);
      const double rho = rhoHi * std::pow(t, inv2k);
      rng.sphere_direction(dirR, k);
      for (int c = 0; c < k; ++c)
        z(c) = rho * Complex(dirR[2 * c], dirR[2 * c + 1]);
      density(z, buf);
      for (int c = 0; c < dim; ++c) {
        bs.sum[c] += buf[c];
        bs.sumsq[c] += buf[c] * buf[c];
      }
      ++bs.n;
    }
  };
  run_blocks(resolve_threads(plan.threads), static_cast<int>(totalBlocks), work);

  // Deterministic reduction: strata in order, blocks in order.
  for (int s = 0; s < S; ++s) {
    const Stratum& st = strata[s];
    const double vol = volume * (st.q1 - st.q0);
    double sum[kMaxDensityDim] = {0};
    double sumsq[kMaxDensityDim] = {0};
    long n = 0;
    for (long b = 0; b < st.nBlocks; ++b) {
      const BlockStat& bs = stats[st.firstBlock + b];
      for (int c = 0; c < dim; ++c) {
        sum[c] += bs.sum[c];
        sumsq[c] += bs.sumsq[c];
      }
      n += bs.n;
    }
    for (int c = 0; c < dim; ++c) {
      const double mean = sum[c] / static_cast<double>(n);
      const double var =
          std::max(0.0, sumsq[c] / static_cast<double>(n) - mean * mean) *
          static_cast<double>(n) / static_cast<double>(n - 1);
      out[c].value += vol * mean;
      out[c].err += vol * vol * var / static_cast<double>(n);
      out[c].evals += n;
    }
  }
  for (int c = 0; c < dim; ++c) out[c].err = std::sqrt(out[c].err);
  return out;
}

QuadResult integrate_sublevel(const ExhaustionSpec& exh, double uLo,
                              double uHi, const QuadPlan& plan,
                              const std::function<double(const VecC&)>& density) {
  auto vec = integrate_sublevel(
      exh, uLo, uHi, plan, 1,
      [&](const VecC& z, double* out) { out[0] = density(z); });
  return vec[0];
}

std::vector<QuadResult> integrate_boundary(
    const ExhaustionSpec& exh, double u, const QuadPlan& plan, int dim,
    const std::function<void(const VecC&, double*)>& f) {
  validate(plan, dim);
  std::vector<QuadResult> out(dim);

  if (exh.k == 1) {
    // Periodic trapezoid doubling; spectrally accurate for smooth data.
    double avg[kMaxDensityDim], err[kMaxDensityDim];
    long evals = 0;
    circle_average(exh, u, plan.budget, dim, f, avg, err, &evals);
    for (int c = 0; c < dim; ++c) {
      out[c].value = exh.boundaryMass * avg[c];
      out[c].err = exh.boundaryMass * err[c];
      out[c].evals = evals;
    }
    return out;
  }

  // Spheres in higher dimension: plain Monte Carlo over directions, blocked
  // and reduced in fixed order.
  const int k = exh.k;
  const long nBlocks = (plan.budget + kBlockSize - 1) / kBlockSize;
  std::vector<BlockStat> stats(nBlocks);
  auto work = [&](int blockId) {
    const long nHere =
        std::min(kBlockSize, plan.budget - static_cast<long>(blockId) * kBlockSize);
    Rng rng = Rng::stream(plan.seed, 0xB7, static_cast<std::uint64_t>(blockId), 0);
    BlockStat& bs = stats[blockId];
    double dirR[2 * kMaxDim];
    double buf[kMaxDensityDim];
    VecC dir(k);
    for (long i = 0; i < nHere; ++i) {
      rng.sphere_direction(dirR, k);
      for (int c = 0; c < k; ++c) dir(c) = Complex(dirR[2 * c], dirR[2 * c + 1]);
      f(exh.from_radial(u, dir), buf);
      for (int c = 0; c < dim; ++c) {
        bs.sum[c] += buf[c];
        bs.sumsq[c] += buf[c] * buf[c];
      }
      ++bs.n;
    }
  };
  run_blocks(resolve_threads(plan.threads), static_cast<int>(nBlocks), work);

  double sum[kMaxDensityDim] = {0};
  double sumsq[kMaxDensityDim] = {0};
  long n = 0;
  for (long b = 0; b < nBlocks; ++b) {
    for (int c = 0; c < dim; ++c) {
      sum[c] += stats[b].sum[c];
      sumsq[c] += stats[b].sumsq[c];
    }
    n += stats[b].n;
  }
  for (int c = 0; c < dim; ++c) {
    const double mean = sum[c] / static_cast<double>(n);
    const double var =
        std::max(0.0, sumsq[c] / static_cast<double>(n) - mean * mean) *
        static_cast<double>(n) / static_cast<double>(n - 1);
    out[c].value = exh.boundaryMass * mean;
    out[c].err = exh.boundaryMass * std::sqrt(var / static_cast<double>(n));
    out[c].evals = n;
  }
  return out;
}

QuadResult integrate_boundary(const ExhaustionSpec& exh, double u,
                              const QuadPlan& plan,
                              const std::function<double(const VecC&)>& f) {
  auto vec = integrate_boundary(
      exh, u, plan, 1, [&](const VecC& z, double* out) { out[0] = f(z); });
  return vec[0];
}

}  // namespace vdlab
