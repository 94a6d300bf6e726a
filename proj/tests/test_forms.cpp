#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vdlab/forms.hpp"
#include "vdlab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

using namespace vdlab;

namespace {

MatC random_hermitian(Rng& rng, int n, bool psd) {
  MatC a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double g0, g1;
      rng.gaussian2(g0, g1);
      a(i, j) = Complex(g0, g1);
    }
  if (psd) return (a.adjoint() * a).eval();
  return ((a + a.adjoint()) / 2.0).eval();
}

// Independent route to the mixed discriminant: average over permutations of
// determinants with column j taken from matrix sigma(j).
Complex mixed_discriminant_by_columns(const std::vector<MatC>& mats) {
  const int k = static_cast<int>(mats.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Complex acc(0, 0);
  double count = 0;
  do {
    MatC m(k, k);
    for (int j = 0; j < k; ++j) m.col(j) = mats[perm[j]].col(j);
    acc += m.determinant();
    count += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc / count;
}

}  // namespace

TEST_CASE("mixed discriminant agrees with the column-permutation expansion") {
  Rng rng(2024);
  for (int k = 2; k <= 3; ++k) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<MatC> mats;
      for (int i = 0; i < k; ++i) mats.push_back(random_hermitian(rng, k, false));
      std::vector<const MatC*> ptrs;
      for (const auto& m : mats) ptrs.push_back(&m);
      const Complex a = mixed_discriminant<double>(ptrs);
      const Complex b = mixed_discriminant_by_columns(mats);
      CHECK(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(b)));
    }
  }
}

TEST_CASE("mixed discriminant of equal arguments is the determinant") {
  Rng rng(7);
  for (int k = 1; k <= 4; ++k) {
    const MatC a = random_hermitian(rng, k, false);
    std::vector<const MatC*> ptrs(k, &a);
    const Complex d = mixed_discriminant<double>(ptrs);
    CHECK(std::abs(d - a.determinant()) <= 1e-9 * (1.0 + std::abs(a.determinant())));
  }
}

TEST_CASE("single identity form has Lebesgue density 2/pi") {
  Formd id1 = Formd::identity(1);
  std::vector<const HermitianForm<double>*> fs{&id1};
  CHECK(mixed_wedge_density<double>(fs) == doctest::Approx(2.0 / kPi).epsilon(1e-12));
}

TEST_CASE("Fubini-Study form: chart values and density") {
  // At the chart origin of P^1 the Gram coefficient is exactly 1/2.
  ChartPoint origin;
  origin.chart = 0;
  origin.w = VecC::Zero(1);
  const Formd f0 = fs_form_at(origin);
  CHECK(f0.coeff(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(f0.coeff(0, 0).imag() == 0.0);

  // Away from the origin the P^1 density against Lebesgue measure is
  // 1 / (pi (1 + |w|^2)^2).
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    ChartPoint p;
    p.chart = 0;
    p.w = VecC::Zero(1);
    double g0, g1;
    rng.gaussian2(g0, g1);
    p.w(0) = Complex(g0, g1);
    const double s = p.w.squaredNorm();
    const Formd f = fs_form_at(p);
    std::vector<const HermitianForm<double>*> fs{&f};
    const double dens = mixed_wedge_density<double>(fs);
    const double expect = 1.0 / (kPi * (1.0 + s) * (1.0 + s));
    CHECK(dens == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("Fubini-Study form on P^2 is Hermitian positive with known trace") {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    ChartPoint p;
    p.chart = 0;
    p.w = VecC::Zero(2);
    for (int i = 0; i < 2; ++i) {
      double g0, g1;
      rng.gaussian2(g0, g1);
      p.w(i) = Complex(g0, g1);
    }
    const Formd f = fs_form_at(p);
    CHECK(f.is_hermitian());
    const double s = p.w.squaredNorm();
    // trace = (2(1+s) - s) / (2 (1+s)^2)
    const double expect = (2.0 * (1.0 + s) - s) / (2.0 * (1.0 + s) * (1.0 + s));
    CHECK(f.coeff.trace().real() == doctest::Approx(expect).epsilon(1e-12));
    Eigen::SelfAdjointEigenSolver<MatC> es(f.coeff);
    CHECK(es.eigenvalues().minCoeff() >= -1e-14);
  }
}

TEST_CASE("pullback through a chart map matches the projective route") {
  // phi(z) = z^2 as a map C -> P^1. Route one: chart pullback J^H M J with
  // the affine derivative. Route two: fs_pullback from the homogeneous pair.
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    double g0, g1;
    rng.gaussian2(g0, g1);
    const Complex z(g0, g1);

    ChartPoint p;
    p.chart = 0;
    p.w = VecC::Zero(1);
    p.w(0) = z * z;
    MatC jchart(1, 1);
    jchart(0, 0) = 2.0 * z;
    const Formd viaChart = pullback_form(jchart, fs_form_at(p));

    VecC f(2);
    f(0) = Complex(1, 0);
    f(1) = z * z;
    MatC jac = MatC::Zero(2, 1);
    jac(1, 0) = 2.0 * z;
    const Formd viaProj = fs_pullback(f, jac);

    CHECK(std::abs(viaChart.coeff(0, 0) - viaProj.coeff(0, 0)) <= 1e-13);

    const double s = std::norm(z * z);
    const double expect = std::norm(2.0 * z) / (2.0 * (1.0 + s) * (1.0 + s));
    CHECK(viaProj.coeff(0, 0).real() == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("fs_pullback ignores the common scale of the representative") {
  Rng rng(14);
  VecC f(3);
  MatC jac(3, 2);
  for (int i = 0; i < 3; ++i) {
    double g0, g1;
    rng.gaussian2(g0, g1);
    f(i) = Complex(g0, g1);
    for (int j = 0; j < 2; ++j) {
      rng.gaussian2(g0, g1);
      jac(i, j) = Complex(g0, g1);
    }
  }
  const Formd base = fs_pullback(f, jac);
  const double c = 3.7e-2;
  const Formd scaled = fs_pullback((c * f).eval(), (c * jac).eval());
  CHECK((base.coeff - scaled.coeff).cwiseAbs().maxCoeff() <= 1e-12);
  Eigen::SelfAdjointEigenSolver<MatC> es(base.coeff);
  CHECK(es.eigenvalues().minCoeff() >= -1e-14);
}

TEST_CASE("numeric complex Hessian matches the Fubini-Study potential") {
  auto potential = [](const VecC& w) {
    return 0.5 * std::log(1.0 + w.squaredNorm());
  };
  Rng rng(15);
  for (int m = 1; m <= 2; ++m) {
    for (int trial = 0; trial < 5; ++trial) {
      ChartPoint p;
      p.chart = 0;
      p.w = VecC::Zero(m);
      for (int i = 0; i < m; ++i) {
        double g0, g1;
        rng.gaussian2(g0, g1);
        p.w(i) = 0.8 * Complex(g0, g1);
      }
      const Formd num = numeric_ddc(potential, p.w);
      const Formd exact = fs_form_at(p);
      CHECK((num.coeff - exact.coeff).cwiseAbs().maxCoeff() <= 1e-6);
    }
  }
}

TEST_CASE("numeric complex Hessian of a pluriharmonic function is flushed to zero") {
  auto u = [](const VecC& z) { return (z(0) * z(0) + 2.0 * z(0)).real(); };
  VecC z(1);
  z(0) = Complex(0.7, -0.3);
  const Formd f = numeric_ddc(u, z);
  CHECK(f.coeff.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("frame wedge evaluation agrees with mixed discriminants") {
  Rng rng(16);
  for (int k = 1; k <= 3; ++k) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<MatC> mats;
      std::vector<WedgeFactor> factors;
      std::vector<const HermitianForm<double>*> ptrs;
      std::vector<HermitianForm<double>> forms(k);
      for (int i = 0; i < k; ++i) {
        forms[i].coeff = random_hermitian(rng, k, true);
        factors.push_back(WedgeFactor::mat(forms[i].coeff));
      }
      for (int i = 0; i < k; ++i) ptrs.push_back(&forms[i]);
      const double direct = mixed_wedge_density<double>(ptrs);
      const Complex viaFrame = wedge_density(factors, k);
      CHECK(std::abs(viaFrame.imag()) <= 1e-10 * (1.0 + std::abs(direct)));
      CHECK(viaFrame.real() == doctest::Approx(direct).epsilon(1e-9));
    }
  }
}

TEST_CASE("wedge of d tau and d^c tau reproduces the radial Dirichlet density") {
  // tau = log|z| on C: d tau ^ d^c tau has density 1/(2 pi |z|^2), which
  // integrates over an annulus a < |z| < b to log(b/a).
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    double g0, g1;
    rng.gaussian2(g0, g1);
    const Complex z(g0 + 2.0, g1);  // keep away from 0
    VecC g(1);
    g(0) = 1.0 / (2.0 * z);
    const Complex dens =
        wedge_density({WedgeFactor::d_real(g), WedgeFactor::dc_real(g)}, 1);
    const double expect = 1.0 / (2.0 * kPi * std::norm(z));
    CHECK(dens.real() == doctest::Approx(expect).epsilon(1e-11));
    CHECK(std::abs(dens.imag()) <= 1e-15);
  }
}

TEST_CASE("wedge evaluation handles mixed one-form and matrix factors") {
  // On C^2: d tau ^ d^c tau ^ alpha, with tau = log||z|| and alpha a random
  // positive form, compared against the closed-form effective Gram of
  // d tau ^ d^c tau, namely (conj g) g^T with g the Wirtinger gradient.
  Rng rng(18);
  for (int trial = 0; trial < 10; ++trial) {
    VecC z(2);
    for (int i = 0; i < 2; ++i) {
      double g0, g1;
      rng.gaussian2(g0, g1);
      z(i) = Complex(g0, g1) + Complex(1.5, 0);
    }
    const double s = z.squaredNorm();
    VecC g = (z.conjugate() / (2.0 * s)).eval();

    HermitianForm<double> alpha;
    alpha.coeff = random_hermitian(rng, 2, true);
    HermitianForm<double> eff;
    eff.coeff = (g.conjugate() * g.transpose()).eval();

    const Complex viaFrame = wedge_density(
        {WedgeFactor::d_real(g), WedgeFactor::dc_real(g),
         WedgeFactor::mat(alpha.coeff)},
        2);
    std::vector<const HermitianForm<double>*> ptrs{&eff, &alpha};
    const double direct = mixed_wedge_density<double>(ptrs);
    CHECK(viaFrame.real() == doctest::Approx(direct).epsilon(1e-9));
  }
}
