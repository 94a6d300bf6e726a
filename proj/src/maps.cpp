#include "vdlab/maps.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <functional>
#include <numeric>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace vdlab {

namespace {

// Integer power by squaring; cpow_int(z, 0) == 1 for every z, including 0.
Complex cpow_int(Complex z, int n) {
  Complex acc(1.0, 0.0);
  while (n > 0) {
    if (n & 1) acc *= z;
    z *= z;
    n >>= 1;
  }
  return acc;
}

std::string fmt_complex(Complex w) {
  char buf[64];
  if (w.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.4g", w.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.4g%+.4gi", w.real(), w.imag());
  }
  return buf;
}

void require_target_dim(const VecC& a, int want, const char* who) {
  if (static_cast<int>(a.size()) != want)
    throw std::invalid_argument(std::string(who) +
                                ": divisor vector has wrong dimension");
}

// Horner evaluation of p and p' (coefficients low order first).
void horner2(const std::vector<Complex>& c, Complex z, Complex& p, Complex& dp) {
  p = Complex(0, 0);
  dp = Complex(0, 0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
}

constexpr double kTwoPi = 2.0 * kPi;

}  // namespace

// --- polynomial roots ----------------------------------------------------

RootList poly_roots(const std::vector<Complex>& coeffs, double clusterTol) {
  // Strip negligible leading coefficients.
  double big = 0.0;
  for (const Complex& c : coeffs) big = std::max(big, std::abs(c));
  if (big == 0.0) return {};  // identically zero: no isolated roots to report
  std::vector<Complex> c = coeffs;
  while (c.size() > 1 && std::abs(c.back()) <= 1e-14 * big) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};

  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = Complex(1, 0);
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("poly_roots: eigensolver failed");

  std::vector<Complex> roots(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + n);
  // Newton polish. For a root of multiplicity m the residual shrinks by
  // (m-1)/m per step, so several steps are kept to tighten clusters.
  for (Complex& z : roots) {
    for (int it = 0; it < 8; ++it) {
      Complex p, dp;
      horner2(c, z, p, dp);
      if (std::abs(dp) < 1e-300) break;
      const Complex step = p / dp;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      z -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
  }

  // Single-linkage clustering into (root, multiplicity) pairs. An m-fold
  // root scatters its computed copies over a radius of order eps^{1/m}, a
  // floor no amount of polishing removes, so the merge tolerance is kept
  // above sqrt(eps) regardless of the requested value.
  const double tolEff = std::max(clusterTol, 6e-7);
  std::vector<int> parent(roots.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const double tol = tolEff * std::max(1.0, std::abs(roots[i]));
      if (std::abs(roots[i] - roots[j]) <= tol)
        parent[find(static_cast<int>(j))] = find(static_cast<int>(i));
    }
  RootList out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (find(static_cast<int>(i)) != static_cast<int>(i)) continue;
    Complex center(0, 0);
    int mult = 0;
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (find(static_cast<int>(j)) == static_cast<int>(i)) {
        center += roots[j];
        ++mult;
      }
    out.emplace_back(center / static_cast<double>(mult), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
    return a.first.imag() < b.first.imag();
  });
  return out;
}

// --- catalog maps ---------------------------------------------------------

MapSpec make_power(int d) {
  if (d < 1) throw std::invalid_argument("make_power: need d >= 1");
  MapSpec s;
  s.id = "power" + std::to_string(d);
  s.k = 1;
  s.m = 1;
  s.jet = [d](const VecC& z) {
    const Complex w = z(0);
    const double r = std::abs(w);
    MapJet jet;
    jet.value = VecC::Zero(2);
    jet.jac = MatC::Zero(2, 1);
    if (r <= 1.0) {
      jet.value(0) = Complex(1, 0);
      jet.value(1) = cpow_int(w, d);
      jet.jac(1, 0) = static_cast<double>(d) * cpow_int(w, d - 1);
      jet.logScale = 0.0;
    } else {
      // Scale by |z|^{-d} so entries stay bounded at any radius.
      const Complex what = w / r;
      const Complex wd = cpow_int(what, d);
      jet.value(0) = Complex(std::exp(-d * std::log(r)), 0);
      jet.value(1) = wd;
      jet.jac(1, 0) = static_cast<double>(d) * wd / w;
      jet.logScale = d * std::log(r);
    }
    return jet;
  };
  s.hyper_log_deriv = [d](Complex z, const VecC& a) -> Complex {
    require_target_dim(a, 2, "power.hyper_log_deriv");
    const Complex a0 = std::conj(a(0)), a1 = std::conj(a(1));
    if (a1 == Complex(0, 0)) return Complex(0, 0);
    if (std::abs(z) <= 1.0) {
      return static_cast<double>(d) * a1 * cpow_int(z, d - 1) /
             (a0 + a1 * cpow_int(z, d));
    }
    const Complex zi = Complex(1, 0) / z;
    return (static_cast<double>(d) * a1 * zi) / (a0 * cpow_int(zi, d) + a1);
  };
  s.hyper_preimages = [d](const VecC& a, double maxAbs) -> RootList {
    require_target_dim(a, 2, "power.hyper_preimages");
    const Complex a0 = std::conj(a(0)), a1 = std::conj(a(1));
    if (a1 == Complex(0, 0)) return {};  // first coordinate never vanishes
    const Complex c = -a0 / a1;
    if (c == Complex(0, 0)) return {{Complex(0, 0), d}};
    const double rho = std::exp(std::log(std::abs(c)) / d);
    if (rho > maxAbs) return {};
    RootList out;
    const double base = std::arg(c) / d;
    for (int j = 0; j < d; ++j) {
      const double th = base + kTwoPi * j / d;
      out.emplace_back(Complex(rho * std::cos(th), rho * std::sin(th)), 1);
    }
    return out;
  };
  return s;
}

MapSpec make_exp() {
  MapSpec s;
  s.id = "exp";
  s.k = 1;
  s.m = 1;
  s.jet = [](const VecC& z) {
    const Complex w = z(0);
    const double L = std::max(0.0, w.real());
    MapJet jet;
    jet.value = VecC::Zero(2);
    jet.jac = MatC::Zero(2, 1);
    const Complex e = std::exp(w - L);
    jet.value(0) = Complex(std::exp(-L), 0);
    jet.value(1) = e;
    jet.jac(1, 0) = e;
    jet.logScale = L;
    return jet;
  };
  s.hyper_log_deriv = [](Complex z, const VecC& a) -> Complex {
    require_target_dim(a, 2, "exp.hyper_log_deriv");
    const Complex a0 = std::conj(a(0)), a1 = std::conj(a(1));
    if (a1 == Complex(0, 0)) return Complex(0, 0);
    if (a0 == Complex(0, 0)) return Complex(1, 0);
    if (z.real() >= 0.0) {
      return Complex(1, 0) / (Complex(1, 0) + (a0 / a1) * std::exp(-z));
    }
    const Complex w = (a1 / a0) * std::exp(z);
    return w / (Complex(1, 0) + w);
  };
  s.hyper_preimages = [](const VecC& a, double maxAbs) -> RootList {
    require_target_dim(a, 2, "exp.hyper_preimages");
    const Complex a0 = std::conj(a(0)), a1 = std::conj(a(1));
    if (a1 == Complex(0, 0) || a0 == Complex(0, 0)) return {};
    const Complex c = -a0 / a1;  // solve e^z = c
    const double x = std::log(std::abs(c));
    if (std::abs(x) > maxAbs) return {};
    const double ymax = std::sqrt(maxAbs * maxAbs - x * x);
    const double th = std::arg(c);
    RootList out;
    const long nLo = static_cast<long>(std::ceil((-ymax - th) / kTwoPi));
    const long nHi = static_cast<long>(std::floor((ymax - th) / kTwoPi));
    for (long n = nLo; n <= nHi; ++n)
      out.emplace_back(Complex(x, th + kTwoPi * n), 1);
    return out;
  };
  return s;
}

MapSpec make_exp_curve() {
  MapSpec s;
  s.id = "expCurve";
  s.k = 1;
  s.m = 2;
  s.jet = [](const VecC& z) {
    const Complex w = z(0);
    const double r = std::abs(w);
    const double L = std::max({0.0, w.real(), r > 0.0 ? std::log(r) : -1.0});
    MapJet jet;
    jet.value = VecC::Zero(3);
    jet.jac = MatC::Zero(3, 1);
    const double s0 = std::exp(-L);
    const Complex e = std::exp(w - L);
    jet.value(0) = Complex(s0, 0);
    jet.value(1) = w * s0;
    jet.value(2) = e;
    jet.jac(1, 0) = Complex(s0, 0);
    jet.jac(2, 0) = e;
    jet.logScale = L;
    return jet;
  };
  s.hyper_log_deriv = [](Complex z, const VecC& a) -> Complex {
    require_target_dim(a, 3, "expCurve.hyper_log_deriv");
    const Complex a0 = std::conj(a(0)), a1 = std::conj(a(1)),
                  a2 = std::conj(a(2));
    if (a2 == Complex(0, 0)) {
      if (a1 == Complex(0, 0)) return Complex(0, 0);
      return a1 / (a0 + a1 * z);
    }
    if (z.real() >= 0.0) {
      const Complex t = std::exp(-z);
      return (a1 * t + a2) / ((a0 + a1 * z) * t + a2);
    }
    const Complex e = std::exp(z);
    return (a1 + a2 * e) / (a0 + a1 * z + a2 * e);
  };
  return s;
}

MapSpec make_polyk(const std::vector<std::vector<Complex>>& polys) {
  const int k = static_cast<int>(polys.size());
  if (k < 1 || k > kMaxDim)
    throw std::invalid_argument("make_polyk: need 1 <= k <= kMaxDim polynomials");
  for (const auto& p : polys)
    if (p.empty()) throw std::invalid_argument("make_polyk: empty polynomial");
  MapSpec s;
  s.id = "polyk_k" + std::to_string(k);
  s.k = k;
  s.m = k;
  s.jet = [polys, k](const VecC& z) {
    Complex v[kMaxDim], dv[kMaxDim];
    double L = 0.0;
    for (int i = 0; i < k; ++i) {
      horner2(polys[i], z(i), v[i], dv[i]);
      const double av = std::abs(v[i]);
      if (av > 1.0) L = std::max(L, std::log(av));
    }
    const double sc = std::exp(-L);
    MapJet jet;
    jet.value = VecC::Zero(k + 1);
    jet.jac = MatC::Zero(k + 1, k);
    jet.value(0) = Complex(sc, 0);
    for (int i = 0; i < k; ++i) {
      jet.value(i + 1) = v[i] * sc;
      jet.jac(i + 1, i) = dv[i] * sc;
    }
    jet.logScale = L;
    return jet;
  };
  if (k == 1) {
    const std::vector<Complex> p = polys[0];
    s.hyper_log_deriv = [p](Complex z, const VecC& a) -> Complex {
      require_target_dim(a, 2, "polyk.hyper_log_deriv");
      const Complex a0 = std::conj(a(0)), a1 = std::conj(a(1));
      if (a1 == Complex(0, 0)) return Complex(0, 0);
      Complex v, dv;
      horner2(p, z, v, dv);
      return a1 * dv / (a0 + a1 * v);
    };
    s.hyper_preimages = [p](const VecC& a, double maxAbs) -> RootList {
      require_target_dim(a, 2, "polyk.hyper_preimages");
      const Complex a0 = std::conj(a(0)), a1 = std::conj(a(1));
      if (a1 == Complex(0, 0)) return {};
      std::vector<Complex> q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) q[i] = a1 * p[i];
      q[0] += a0;
      RootList all = poly_roots(q);
      RootList out;
      for (const auto& [z, mult] : all)
        if (std::abs(z) <= maxAbs * (1.0 + 1e-12)) out.emplace_back(z, mult);
      return out;
    };
  }
  s.point_preimages = [polys, k](const VecC& q, double maxNorm)
      -> PointPreimageList {
    if (static_cast<int>(q.size()) != k + 1)
      throw std::invalid_argument("polyk.point_preimages: wrong dimension");
    double qmax = 0.0;
    for (int i = 0; i <= k; ++i) qmax = std::max(qmax, std::abs(q(i)));
    if (qmax == 0.0)
      throw std::invalid_argument("polyk.point_preimages: zero target");
    if (std::abs(q(0)) <= 1e-14 * qmax) return {};  // hyperplane at infinity
    // Coordinate-wise roots, then the Cartesian product.
    std::vector<RootList> perCoord(k);
    for (int i = 0; i < k; ++i) {
      std::vector<Complex> shift = polys[i];
      shift[0] -= q(i + 1) / q(0);
      perCoord[i] = poly_roots(shift);
      if (perCoord[i].empty()) return {};
    }
    PointPreimageList out;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      VecC z(k);
      int mult = 1;
      for (int i = 0; i < k; ++i) {
        z(i) = perCoord[i][idx[i]].first;
        mult *= perCoord[i][idx[i]].second;
      }
      if (z.norm() <= maxNorm * (1.0 + 1e-12)) out.emplace_back(z, mult);
      int pos = k - 1;
      while (pos >= 0 && ++idx[pos] == perCoord[pos].size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
    return out;
  };
  return s;
}

MapSpec make_disk_cover() {
  MapSpec s;
  s.id = "diskCover";
  s.k = 1;
  s.m = 1;
  auto mobius = [](Complex z) { return (Complex(1, 0) + z) / (Complex(1, 0) - z); };
  s.jet = [mobius](const VecC& z) {
    const Complex w = mobius(z(0));
    const Complex wdot = Complex(2, 0) / ((Complex(1, 0) - z(0)) * (Complex(1, 0) - z(0)));
    const double L = std::max(0.0, w.real());
    MapJet jet;
    jet.value = VecC::Zero(2);
    jet.jac = MatC::Zero(2, 1);
    const Complex e = std::exp(w - L);
    jet.value(0) = Complex(std::exp(-L), 0);
    jet.value(1) = e;
    jet.jac(1, 0) = wdot * e;
    jet.logScale = L;
    return jet;
  };
  s.hyper_log_deriv = [mobius](Complex z, const VecC& a) -> Complex {
    require_target_dim(a, 2, "diskCover.hyper_log_deriv");
    const Complex a0 = std::conj(a(0)), a1 = std::conj(a(1));
    if (a1 == Complex(0, 0)) return Complex(0, 0);
    const Complex w = mobius(z);
    const Complex wdot = Complex(2, 0) / ((Complex(1, 0) - z) * (Complex(1, 0) - z));
    if (a0 == Complex(0, 0)) return wdot;
    if (w.real() >= 0.0)
      return wdot / (Complex(1, 0) + (a0 / a1) * std::exp(-w));
    const Complex v = (a1 / a0) * std::exp(w);
    return wdot * v / (Complex(1, 0) + v);
  };
  s.hyper_preimages = [](const VecC& a, double maxAbs) -> RootList {
    require_target_dim(a, 2, "diskCover.hyper_preimages");
    const Complex a0 = std::conj(a(0)), a1 = std::conj(a(1));
    if (a1 == Complex(0, 0) || a0 == Complex(0, 0)) return {};
    const Complex c = -a0 / a1;  // solve e^w = c, w in the right half plane
    const double x = std::log(std::abs(c));
    if (x <= 0.0) return {};
    const double M = std::min(maxAbs, 1.0 - 1e-9);
    // |(w-1)/(w+1)| <= M is, at fixed Re w = x, an interval |Im w| <= Y.
    const double rhs = M * M * (x + 1.0) * (x + 1.0) - (x - 1.0) * (x - 1.0);
    if (rhs < 0.0) return {};
    const double Y = std::sqrt(rhs / (1.0 - M * M));
    const double th = std::arg(c);
    RootList out;
    const long nLo = static_cast<long>(std::ceil((-Y - th) / kTwoPi));
    const long nHi = static_cast<long>(std::floor((Y - th) / kTwoPi));
    for (long n = nLo; n <= nHi; ++n) {
      const Complex w(x, th + kTwoPi * n);
      const Complex z = (w - Complex(1, 0)) / (w + Complex(1, 0));
      if (std::abs(z) <= maxAbs * (1.0 + 1e-12)) out.emplace_back(z, 1);
    }
    return out;
  };
  return s;
}

MapSpec make_linear_scale(double lambda) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("make_linear_scale: need lambda > 0");
  MapSpec s;
  char buf[48];
  std::snprintf(buf, sizeof buf, "linearScale_%g", lambda);
  s.id = buf;
  s.k = 1;
  s.m = 1;
  s.jet = [lambda](const VecC& z) {
    const Complex w = lambda * z(0);
    const double r = std::abs(w);
    const double L = (r > 1.0) ? std::log(r) : 0.0;
    const double sc = std::exp(-L);
    MapJet jet;
    jet.value = VecC::Zero(2);
    jet.jac = MatC::Zero(2, 1);
    jet.value(0) = Complex(sc, 0);
    jet.value(1) = w * sc;
    jet.jac(1, 0) = Complex(lambda * sc, 0);
    jet.logScale = L;
    return jet;
  };
  s.hyper_log_deriv = [lambda](Complex z, const VecC& a) -> Complex {
    require_target_dim(a, 2, "linearScale.hyper_log_deriv");
    const Complex a0 = std::conj(a(0)), a1 = std::conj(a(1));
    if (a1 == Complex(0, 0)) return Complex(0, 0);
    return a1 * lambda / (a0 + a1 * lambda * z);
  };
  s.hyper_preimages = [lambda](const VecC& a, double maxAbs) -> RootList {
    require_target_dim(a, 2, "linearScale.hyper_preimages");
    const Complex a0 = std::conj(a(0)), a1 = std::conj(a(1));
    if (a1 == Complex(0, 0)) return {};
    const Complex z = -a0 / (a1 * lambda);
    if (std::abs(z) <= maxAbs * (1.0 + 1e-12)) return {{z, 1}};
    return {};
  };
  return s;
}

std::vector<MapSpec> make_family(const std::string& id, int count) {
  if (count < 1) throw std::invalid_argument("make_family: need count >= 1");
  std::vector<MapSpec> out;
  out.reserve(count);
  long n = 1;
  for (int i = 0; i < count; ++i, n *= 2) {
    if (id == "familyNz") {
      MapSpec s = make_linear_scale(static_cast<double>(n));
      s.id = "nz_" + std::to_string(n);
      out.push_back(std::move(s));
    } else if (id == "familyZOverN") {
      MapSpec s = make_linear_scale(1.0 / static_cast<double>(n));
      s.id = "zOverN_" + std::to_string(n);
      out.push_back(std::move(s));
    } else {
      throw std::invalid_argument("make_family: unknown family '" + id + "'");
    }
  }
  return out;
}

// --- exhaustions ------------------------------------------------------------

namespace {

ExhaustionSpec log_norm_exhaustion(int k) {
  ExhaustionSpec e;
  e.k = k;
  e.tau = [](const VecC& z) {
    const double s = z.squaredNorm();
    return 0.5 * std::log(s);
  };
  e.dtau = [k](const VecC& z) {
    const double s = z.squaredNorm();
    if (s == 0.0) return VecC::Zero(k).eval();
    return (z.conjugate() / (2.0 * s)).eval();
  };
  e.ddctau = [k](const VecC& z) {
    const double s = z.squaredNorm();
    Formd f;
    if (s == 0.0) {
      f.coeff = MatC::Zero(k, k);
      return f;
    }
    f.coeff = ((s * MatC::Identity(k, k) - z * z.adjoint()) / (2.0 * s * s)).eval();
    f.positive = true;
    return f;
  };
  e.from_radial = [](double u, const VecC& dir) {
    return (std::exp(u) * dir).eval();
  };
  return e;
}

}  // namespace

ExhaustionSpec standard_exhaustion(const std::string& id, int k) {
  if (k < 1 || k > kMaxDim)
    throw std::invalid_argument("standard_exhaustion: need 1 <= k <= kMaxDim");
  if (id == "logAbs") {
    ExhaustionSpec e = log_norm_exhaustion(k);
    e.id = "logAbs";
    e.R = std::numeric_limits<double>::infinity();
    e.r0 = 0.25;
    e.isParabolic = true;
    e.isLogType = true;
    e.atomMass = 1.0;
    e.boundaryMass = 1.0;
    return e;
  }
  if (id == "ballLog") {
    ExhaustionSpec e = log_norm_exhaustion(k);
    e.id = "ballLog";
    e.R = 0.0;  // tau < 0 on the unit ball
    e.r0 = std::log(0.1);
    e.isParabolic = true;
    e.isLogType = true;
    e.atomMass = 1.0;
    e.boundaryMass = 1.0;
    return e;
  }
  if (id == "puncturedDisk") {
    if (k != 1)
      throw std::invalid_argument("standard_exhaustion: puncturedDisk needs k = 1");
    ExhaustionSpec e;
    e.id = "puncturedDisk";
    e.k = 1;
    e.R = std::numeric_limits<double>::infinity();
    e.r0 = std::log(4.0);  // tau at the outer rim |z| = 1/2
    e.isParabolic = true;
    e.isLogType = true;
    e.atomMass = 0.0;   // the puncture carries no point mass
    e.boundaryMass = 2.0;
    e.tau = [](const VecC& z) {
      const double s = z.squaredNorm();
      return -std::log(s);
    };
    e.dtau = [](const VecC& z) {
      VecC g(1);
      g(0) = Complex(-1, 0) / z(0);
      return g;
    };
    e.ddctau = [](const VecC&) {
      Formd f;
      f.coeff = MatC::Zero(1, 1);
      f.positive = true;
      return f;
    };
    e.from_radial = [](double u, const VecC& dir) {
      return (std::exp(-0.5 * u) * dir).eval();
    };
    return e;
  }
  throw std::invalid_argument("standard_exhaustion: unknown id '" + id + "'");
}

// --- divisors ---------------------------------------------------------------

DivisorSpec hyperplane_divisor(const VecC& a, std::string name) {
  const double n = a.norm();
  if (!(n > 1e-300))
    throw std::invalid_argument("hyperplane_divisor: zero vector");
  DivisorSpec d;
  d.kind = DivisorSpec::Kind::hyperplane;
  d.a = a / n;
  d.name = name.empty() ? "hyperplane" : std::move(name);
  return d;
}

DivisorSpec point_divisor(const VecC& q, std::string name) {
  const double n = q.norm();
  if (!(n > 1e-300)) throw std::invalid_argument("point_divisor: zero vector");
  DivisorSpec d;
  d.kind = DivisorSpec::Kind::point;
  d.a = q / n;
  d.name = name.empty() ? "point" : std::move(name);
  return d;
}

DivisorSpec finite_point_divisor(Complex w0) {
  VecC a(2);
  a(0) = -std::conj(w0);
  a(1) = Complex(1, 0);
  return hyperplane_divisor(a, "w=" + fmt_complex(w0));
}

DivisorSpec infinity_divisor() {
  VecC a(2);
  a(0) = Complex(1, 0);
  a(1) = Complex(0, 0);
  return hyperplane_divisor(a, "w=inf");
}

DivisorSpec sample_hyperplane_fs(Rng& rng, int m) {
  if (m < 1 || m + 1 > kMaxHomog)
    throw std::invalid_argument("sample_hyperplane_fs: bad target dimension");
  VecC a(m + 1);
  for (int i = 0; i <= m; ++i) {
    double g0, g1;
    rng.gaussian2(g0, g1);
    a(i) = Complex(g0, g1);
  }
  return hyperplane_divisor(a, "random");
}

DivisorSpec sample_point_log_uniform(Rng& rng, double logLo, double logHi) {
  const double u = rng.uniform(logLo, logHi);
  const double th = rng.uniform(0.0, kTwoPi);
  const Complex w0 = std::exp(u) * Complex(std::cos(th), std::sin(th));
  return finite_point_divisor(w0);
}

// --- catalog listing ----------------------------------------------------

std::vector<CatalogEntry> catalog_maps() {
  return {
      {"power<d>", "C -> P1, z -> [1 : z^d]",
       "degree d >= 1; closed-form characteristic available for checks"},
      {"exp", "C -> P1, z -> [1 : e^z]",
       "order-one growth; omits 0 and infinity"},
      {"expCurve", "C -> P2, z -> [1 : z : e^z]",
       "nondegenerate curve in P2"},
      {"polyk_k<k>", "C^k -> P^k, z -> [1 : p_1(z_1) : ... : p_k(z_k)]",
       "coordinate-wise polynomials; point preimages enumerable"},
      {"diskCover", "D -> P1, z -> [1 : e^{(1+z)/(1-z)}]",
       "infinite-energy map of the unit disk"},
      {"linearScale_<l>", "z -> [1 : l z]",
       "building block of the scaling families"},
      {"nz_<n>", "family z -> [1 : n z], n = 1, 2, 4, ...",
       "scaling family; concentrates mass near the origin"},
      {"zOverN_<n>", "family z -> [1 : z/n], n = 1, 2, 4, ...",
       "scaling family; flattens toward a constant"},
  };
}

std::vector<CatalogEntry> catalog_exhaustions() {
  return {
      {"logAbs", "tau = log ||z|| on C^k",
       "r0 = 0.25; unit point mass at 0; unit level-set mass"},
      {"ballLog", "tau = log ||z|| on the unit ball, tau < 0",
       "r0 = log 0.1; unit point mass at 0; unit level-set mass"},
      {"puncturedDisk", "tau = log (1/|z|^2) on 0 < |z| <= 1/2",
       "r0 = log 4; no point mass; level-set mass 2"},
  };
}

}  // namespace vdlab
