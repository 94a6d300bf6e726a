#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace vdlab {

// Dimension caps keep every matrix in this header on the stack. Domains are
// C^k with k <= kMaxDim and targets P^m with m + 1 <= kMaxHomog.
inline constexpr int kMaxDim = 4;
inline constexpr int kMaxHomog = 6;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

template <typename Scalar>
using ComplexMat =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic, 0,
                  kMaxHomog, kMaxHomog>;
template <typename Scalar>
using ComplexVec =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1, 0, kMaxHomog, 1>;

using MatC = ComplexMat<double>;
using VecC = ComplexVec<double>;
using Complex = std::complex<double>;

// A smooth (1,1)-form (i/pi) * Sum A_pq dz_p ^ dzbar_q at a point, stored as
// the Gram matrix of the associated Hermitian metric: the value of the metric
// on a tangent vector xi is xi^H * coeff * xi. With this storage the pullback
// under a holomorphic map with Jacobian J is exactly J^H * coeff * J, and all
// scalar densities (mixed discriminants) agree with the dz^dzbar coefficient
// convention because Hermitian conjugation leaves them unchanged.
template <typename Scalar>
struct HermitianForm {
  ComplexMat<Scalar> coeff;
  bool positive = false;  // advisory flag, set by constructors that know

  int dim() const { return static_cast<int>(coeff.rows()); }

  bool is_hermitian(Scalar tol = Scalar(1e-10)) const {
    return (coeff - coeff.adjoint()).cwiseAbs().maxCoeff() <= tol;
  }

  // Restores exact Hermitian symmetry after numeric differentiation.
  void hermitize() { coeff = ((coeff + coeff.adjoint()) / Scalar(2)).eval(); }

  static HermitianForm zero(int k) {
    HermitianForm f;
    f.coeff = ComplexMat<Scalar>::Zero(k, k);
    f.positive = true;
    return f;
  }

  static HermitianForm identity(int k) {
    HermitianForm f;
    f.coeff = ComplexMat<Scalar>::Identity(k, k);
    f.positive = true;
    return f;
  }
};

using Formd = HermitianForm<double>;

// Mixed discriminant D(A_1, ..., A_k), normalized so D(A, ..., A) = det A.
// Computed by polarization of the determinant polynomial:
//   D = (1/k!) * Sum_{S subset of {1..k}, S nonempty} (-1)^{k-|S|} det(Sum_{i in S} A_i).
template <typename Scalar>
std::complex<Scalar> mixed_discriminant(
    const std::vector<const ComplexMat<Scalar>*>& mats) {
  const int k = static_cast<int>(mats.size());
  if (k == 0) return std::complex<Scalar>(1, 0);
  const int n = static_cast<int>(mats[0]->rows());
  if (n != k)
    throw std::invalid_argument("mixed_discriminant: need k matrices of size k");
  if (k == 1) return (*mats[0])(0, 0);
  if (k == 2) {
    const auto& a = *mats[0];
    const auto& b = *mats[1];
    return (a(0, 0) * b(1, 1) + b(0, 0) * a(1, 1) - a(0, 1) * b(1, 0) -
            b(0, 1) * a(1, 0)) /
           Scalar(2);
  }
  std::complex<Scalar> acc(0, 0);
  ComplexMat<Scalar> sum(n, n);
  const unsigned full = (1u << k);
  for (unsigned mask = 1; mask < full; ++mask) {
    sum.setZero();
    int bits = 0;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        sum += *mats[i];
        ++bits;
      }
    const Scalar sign = ((k - bits) % 2 == 0) ? Scalar(1) : Scalar(-1);
    acc += sign * sum.determinant();
  }
  Scalar fact(1);
  for (int i = 2; i <= k; ++i) fact *= Scalar(i);
  return acc / fact;
}

// Density against Lebesgue measure dlambda of the top wedge
// alpha_1 ^ ... ^ alpha_k of (1,1)-forms on C^k:
//   k! * D(A_1, ..., A_k) * (2/pi)^k.
// The single-form identity case over C reproduces (i/pi) dz ^ dzbar = (2/pi) dlambda.
template <typename Scalar>
Scalar mixed_wedge_density(
    const std::vector<std::pair<const HermitianForm<Scalar>*, int>>& factors) {
  std::vector<const ComplexMat<Scalar>*> mats;
  for (const auto& [form, mult] : factors)
    for (int i = 0; i < mult; ++i) mats.push_back(&form->coeff);
  const int k = static_cast<int>(mats.size());
  if (k == 0) return Scalar(1);
  Scalar fact(1);
  for (int i = 2; i <= k; ++i) fact *= Scalar(i);
  const Scalar scale = std::pow(Scalar(2) / Scalar(kPi), k);
  return fact * scale * mixed_discriminant<Scalar>(mats).real();
}

template <typename Scalar>
Scalar mixed_wedge_density(const std::vector<const HermitianForm<Scalar>*>& forms) {
  std::vector<std::pair<const HermitianForm<Scalar>*, int>> factors;
  for (auto* f : forms) factors.emplace_back(f, 1);
  return mixed_wedge_density<Scalar>(factors);
}

// Fast path used in quadrature loops: density of alpha1^a ^ alpha2^b on C^k
// for k <= 2 without heap traffic.
inline double wedge_density_pair(const MatC& a, int ma, const MatC& b, int mb) {
  const int k = ma + mb;
  if (k == 1) {
    const MatC& m = (ma == 1) ? a : b;
    return (2.0 / kPi) * m(0, 0).real();
  }
  if (k == 2) {
    Complex d;
    if (ma == 2)
      d = a.determinant();
    else if (mb == 2)
      d = b.determinant();
    else
      d = (a(0, 0) * b(1, 1) + b(0, 0) * a(1, 1) - a(0, 1) * b(1, 0) -
           b(0, 1) * a(1, 0)) /
          2.0;
    return 2.0 * (2.0 / kPi) * (2.0 / kPi) * d.real();
  }
  HermitianForm<double> fa, fb;
  fa.coeff = a;
  fb.coeff = b;
  std::vector<std::pair<const HermitianForm<double>*, int>> fs;
  if (ma > 0) fs.emplace_back(&fa, ma);
  if (mb > 0) fs.emplace_back(&fb, mb);
  return mixed_wedge_density<double>(fs);
}

// Pullback of a (1,1)-form under a holomorphic map with Jacobian J
// (rows index target coordinates, columns domain coordinates).
template <typename Scalar>
HermitianForm<Scalar> pullback_form(const ComplexMat<Scalar>& jac,
                                    const HermitianForm<Scalar>& h) {
  HermitianForm<Scalar> out;
  out.coeff = (jac.adjoint() * h.coeff * jac).eval();
  out.positive = h.positive;
  return out;
}

// Affine chart of P^m: homogeneous coordinate `chart` is set to 1 and the
// remaining m coordinates are w.
struct ChartPoint {
  int chart = 0;
  VecC w;  // length m

  int m() const { return static_cast<int>(w.size()); }

  VecC homogeneous() const {
    const int mm = m();
    VecC z(mm + 1);
    int j = 0;
    for (int i = 0; i <= mm; ++i) z(i) = (i == chart) ? Complex(1, 0) : w(j++);
    return z;
  }

  static ChartPoint from_homogeneous(const VecC& z) {
    int best = 0;
    for (int i = 1; i < z.size(); ++i)
      if (std::abs(z(i)) > std::abs(z(best))) best = i;
    ChartPoint p;
    p.chart = best;
    p.w.resize(z.size() - 1);
    int j = 0;
    for (int i = 0; i < z.size(); ++i)
      if (i != best) p.w(j++) = z(i) / z(best);
    return p;
  }
};

// Fubini-Study form on P^m in an affine chart, normalized so that the total
// mass of omega^m over P^m is 1. Gram matrix:
//   M_pq = (delta_pq (1 + |w|^2) - w_p wbar_q) / (2 (1 + |w|^2)^2).
inline Formd fs_form_at(const ChartPoint& p) {
  const int m = p.m();
  const double s = p.w.squaredNorm();
  const double denom = 2.0 * (1.0 + s) * (1.0 + s);
  Formd f;
  f.coeff = ((1.0 + s) * MatC::Identity(m, m) - p.w * p.w.adjoint()) / denom;
  f.positive = true;
  return f;
}

// Pullback phi^*(omega_FS) from a scaled homogeneous representative:
// F_true = F * e^L, J_true = J * e^L with common real scale L (which cancels).
// Formula: (J^H J - (J^H Fhat)(Fhat^H J)) / (2 ||F||^2), manifestly PSD.
inline Formd fs_pullback(const VecC& f, const MatC& jac) {
  const double n2 = f.squaredNorm();
  const VecC fhat = f / std::sqrt(n2);
  const VecC jhf = jac.adjoint() * fhat;
  Formd out;
  out.coeff = ((jac.adjoint() * jac - jhf * jhf.adjoint()) / (2.0 * n2)).eval();
  out.positive = true;
  return out;
}

// Central-difference complex Hessian of a real-valued function on C^k,
// returned in the same Gram convention as everything else. Step size
// h = hScale * (1 + |z|) per coordinate.
inline Formd numeric_ddc(const std::function<double(const VecC&)>& u,
                         const VecC& z, double hScale = 1e-4) {
  const int k = static_cast<int>(z.size());
  MatC hess(k, k);
  VecC zp = z;
  double uscale = 0.0;  // largest |u| seen; sets the rounding-noise floor
  auto evalAt = [&](int p, Complex dp, int q, Complex dq) {
    zp = z;
    zp(p) += dp;
    zp(q) += dq;
    const double v = u(zp);
    uscale = std::max(uscale, std::abs(v));
    return v;
  };
  for (int p = 0; p < k; ++p) {
    const double h = hScale * (1.0 + std::abs(z(p)));
    // Laplacian in the z_p plane over 4.
    const double c = u(z);
    const double lap = evalAt(p, Complex(h, 0), p, Complex(0, 0)) +
                       evalAt(p, Complex(-h, 0), p, Complex(0, 0)) +
                       evalAt(p, Complex(0, h), p, Complex(0, 0)) +
                       evalAt(p, Complex(0, -h), p, Complex(0, 0)) - 4.0 * c;
    hess(p, p) = Complex(lap / (4.0 * h * h), 0.0);
    for (int q = p + 1; q < k; ++q) {
      const double hp = hScale * (1.0 + std::abs(z(p)));
      const double hq = hScale * (1.0 + std::abs(z(q)));
      auto mixed = [&](Complex ep, Complex eq) {
        return (evalAt(p, ep, q, eq) - evalAt(p, ep, q, -eq) -
                evalAt(p, -ep, q, eq) + evalAt(p, -ep, q, -eq)) /
               (4.0 * hp * hq);
      };
      const double uxx = mixed(Complex(hp, 0), Complex(hq, 0));
      const double uyy = mixed(Complex(0, hp), Complex(0, hq));
      const double uxy = mixed(Complex(hp, 0), Complex(0, hq));
      const double uyx = mixed(Complex(0, hp), Complex(hq, 0));
      // d^2u / dz_p dzbar_q = (uxx + uyy + i (uxy - uyx)) / 4
      const Complex hpq(0.25 * (uxx + uyy), 0.25 * (uxy - uyx));
      hess(p, q) = hpq;
      hess(q, p) = std::conj(hpq);
    }
  }
  Formd out;
  out.coeff = hess.conjugate();  // Hessian -> Gram convention
  out.hermitize();
  // Entries below the rounding-noise floor of the stencil, roughly
  // eps * |u| / h^2, carry no information. If the whole matrix sits under
  // it (pluriharmonic input), report exact zero.
  double hmin = std::numeric_limits<double>::infinity();
  for (int p = 0; p < k; ++p)
    hmin = std::min(hmin, hScale * (1.0 + std::abs(z(p))));
  const double floor = 32.0 * 2.220446049250313e-16 * (1.0 + uscale) / (hmin * hmin);
  if (out.coeff.cwiseAbs().maxCoeff() < floor) out.coeff.setZero();
  return out;
}

// ---- Generic wedge evaluation on the standard real frame ----
//
// Pairings of dS_r and band integrands mix honest 1-forms (dtau, d^c tau,
// del of a function) with (1,1)-forms. Rather than hand-deriving each density
// (a reliable source of sign bugs), the factors are wedged symbolically and
// evaluated on the frame (e_1, i e_1, ..., e_k, i e_k), which spans a unit
// volume box; the value is then exactly the density against Lebesgue measure.

struct WedgeFactor {
  enum Kind { kOneForm, kMatForm } kind = kMatForm;
  // kOneForm: real or complex 1-form b_p dz_p + c_p dzbar_p.
  VecC b, c;
  // kMatForm: (1,1)-form with Gram matrix M, including its (i/pi) prefactor.
  MatC M;

  int degree() const { return kind == kOneForm ? 1 : 2; }

  static WedgeFactor one_form(const VecC& dz, const VecC& dzbar) {
    WedgeFactor f;
    f.kind = kOneForm;
    f.b = dz;
    f.c = dzbar;
    return f;
  }
  // d of a real function with del-gradient g (g_p = du/dz_p).
  static WedgeFactor d_real(const VecC& g) {
    return one_form(g, g.conjugate());
  }
  // d^c of a real function, d^c = (i/2pi)(dbar - del).
  static WedgeFactor dc_real(const VecC& g) {
    const Complex i2pi(0.0, 1.0 / (2.0 * kPi));
    return one_form((-i2pi * g).eval(), (i2pi * g.conjugate()).eval());
  }
  // del of a (possibly complex) function with del-gradient g.
  static WedgeFactor del(const VecC& g) {
    VecC zero = VecC::Zero(g.size());
    return one_form(g, zero);
  }
  static WedgeFactor mat(const MatC& m) {
    WedgeFactor f;
    f.kind = kMatForm;
    f.M = m;
    return f;
  }

  // Value on one (complexified) tangent vector; only valid for kOneForm.
  // Plain bilinear sums: Sum b_p u_p + Sum c_p conj(u_p).
  Complex value1(const VecC& u) const {
    return (b.transpose() * u)(0, 0) + (c.transpose() * u.conjugate())(0, 0);
  }
  // Value on an ordered pair; only valid for kMatForm. The (i/pi)-convention
  // (1,1)-form with Gram M evaluates on (u, v) to -(2/pi) Im(v^H M u).
  Complex value2(const VecC& u, const VecC& v) const {
    const Complex t = (v.adjoint() * M * u)(0, 0);
    return Complex(-(2.0 / kPi) * t.imag(), 0.0);
  }
};

namespace detail {

inline Complex wedge_eval_rec(const std::vector<WedgeFactor>& factors,
                              std::size_t fi, unsigned avail,
                              const std::vector<VecC>& frame) {
  if (fi == factors.size()) return Complex(1.0, 0.0);
  const WedgeFactor& f = factors[fi];
  // Collect remaining vector indices in ascending order.
  int idx[2 * kMaxDim];
  int n = 0;
  for (int i = 0; i < 2 * kMaxDim; ++i)
    if (avail & (1u << i)) idx[n++] = i;
  Complex acc(0.0, 0.0);
  if (f.degree() == 1) {
    for (int a = 0; a < n; ++a) {
      const Complex v = f.value1(frame[idx[a]]);
      if (v == Complex(0.0, 0.0)) continue;
      const double sign = (a % 2 == 0) ? 1.0 : -1.0;  // move to front past a slots
      acc += sign * v *
             wedge_eval_rec(factors, fi + 1, avail & ~(1u << idx[a]), frame);
    }
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const Complex v = f.value2(frame[idx[a]], frame[idx[b]]);
        if (v == Complex(0.0, 0.0)) continue;
        // Parity of moving elements at positions (a, b) to the front: a + (b-1).
        const double sign = ((a + b - 1) % 2 == 0) ? 1.0 : -1.0;
        acc += sign * v *
               wedge_eval_rec(factors, fi + 1,
                              avail & ~((1u << idx[a]) | (1u << idx[b])), frame);
      }
  }
  return acc;
}

}  // namespace detail

// Density against Lebesgue measure of the wedge of the given factors on C^k.
// Total degree must be 2k. Complex-valued in general (e.g. del g factors);
// callers take real parts as appropriate.
inline Complex wedge_density(const std::vector<WedgeFactor>& factors, int k) {
  int deg = 0;
  for (const auto& f : factors) deg += f.degree();
  if (deg != 2 * k)
    throw std::invalid_argument("wedge_density: degrees must sum to 2k");
  std::vector<VecC> frame;
  frame.reserve(2 * k);
  for (int p = 0; p < k; ++p) {
    VecC e = VecC::Zero(k);
    e(p) = Complex(1, 0);
    frame.push_back(e);
    VecC ie = VecC::Zero(k);
    ie(p) = Complex(0, 1);
    frame.push_back(ie);
  }
  const unsigned avail = (1u << (2 * k)) - 1u;
  return detail::wedge_eval_rec(factors, 0, avail, frame);
}

}  // namespace vdlab
