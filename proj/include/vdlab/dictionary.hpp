#pragma once

#include "vdlab/forms.hpp"
#include "vdlab/rng.hpp"

#include <string>
#include <vector>

namespace vdlab {

// Dictionary of bounded smooth test functions on P^m: real and imaginary
// parts of ratios of monomials of degree <= 2 in homogeneous coordinates
// divided by ||Z||^(2 deg). Pairing forms are f * omega^j with f from here.
// The generation order below is frozen; bump the version string if it ever
// changes so serialized moment vectors stay comparable.
inline constexpr const char* kDictionaryVersion = "tf-v1";

struct TestForm {
  std::string name;
  // Monomial factors: indices of Z-coordinates (numerator) and conjugated
  // Z-coordinates. Equal lengths <= 2; empty means the constant 1.
  std::vector<int> zIdx, zbarIdx;
  bool imagPart = false;
  double supNorm = 1.0;  // sampled bound, inflated 5%

  double eval_unit(const VecC& zhat) const {
    if (zIdx.empty()) return 1.0;
    Complex prod(1.0, 0.0);
    for (int i : zIdx) prod *= zhat(i);
    for (int i : zbarIdx) prod *= std::conj(zhat(i));
    return imagPart ? prod.imag() : prod.real();
  }

  double eval(const VecC& z) const {
    if (zIdx.empty()) return 1.0;
    return eval_unit((z / z.norm()).eval());
  }
};

// FS-uniform point of P^m as a unit homogeneous vector (pushforward of the
// round measure on the unit sphere of C^{m+1}).
inline VecC fs_uniform_point(Rng& rng, int m) {
  VecC z(m + 1);
  double n2 = 0.0;
  for (int i = 0; i <= m; ++i) {
    double a, b;
    rng.gaussian2(a, b);
    z(i) = Complex(a, b);
    n2 += a * a + b * b;
  }
  return (z / std::sqrt(n2)).eval();
}

namespace detail {

inline void estimate_sup(TestForm& f, int m) {
  if (f.zIdx.empty()) {
    f.supNorm = 1.0;
    return;
  }
  Rng rng = Rng::stream(0x5eedf00dull, static_cast<std::uint64_t>(m),
                        std::hash<std::string>{}(f.name) & 0xffffffffull);
  double best = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const VecC z = fs_uniform_point(rng, m);
    best = std::max(best, std::abs(f.eval_unit(z)));
  }
  f.supNorm = 1.05 * best;
}

inline void push_pair(std::vector<TestForm>& out, int m, std::vector<int> zi,
                      std::vector<int> zbi, const std::string& name) {
  bool selfConj = (zi == zbi);
  TestForm re;
  re.name = "Re[" + name + "]";
  if (selfConj) re.name = name;
  re.zIdx = zi;
  re.zbarIdx = zbi;
  re.imagPart = false;
  estimate_sup(re, m);
  out.push_back(re);
  if (!selfConj) {
    TestForm im;
    im.name = "Im[" + name + "]";
    im.zIdx = zi;
    im.zbarIdx = zbi;
    im.imagPart = true;
    estimate_sup(im, m);
    out.push_back(im);
  }
}

}  // namespace detail

// Full dictionary for P^m in frozen order: the constant 1 first, then the
// degree-1 block, then the degree-2 block.
inline std::vector<TestForm> dictionary_full(int m) {
  std::vector<TestForm> out;
  TestForm one;
  one.name = "1";
  one.supNorm = 1.0;
  out.push_back(one);
  const std::string z = "Z";
  auto mono = [&](int i) { return z + std::to_string(i); };
  auto cmono = [&](int i) { return z + "~" + std::to_string(i); };
  // Degree 1: Z_i Zbar_j / |Z|^2.
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      detail::push_pair(out, m, {i}, {j}, mono(i) + cmono(j));
  for (int i = 1; i <= m; ++i)
    detail::push_pair(out, m, {i}, {i}, "|" + mono(i) + "|^2");
  // Degree 2: fixed small set of products of degree-1 entries.
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      detail::push_pair(out, m, {i, i}, {j, j},
                        "(" + mono(i) + cmono(j) + ")^2");
  for (int i = 1; i <= m; ++i)
    detail::push_pair(out, m, {i, i}, {i, i}, "|" + mono(i) + "|^4");
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      detail::push_pair(out, m, {i, j}, {j, j},
                        mono(i) + cmono(j) + "|" + mono(j) + "|^2");
      detail::push_pair(out, m, {i, i}, {i, j},
                        mono(i) + cmono(j) + "|" + mono(i) + "|^2");
      detail::push_pair(out, m, {i, j}, {i, j},
                        "|" + mono(i) + mono(j) + "|^2");
    }
  return out;
}

// Default pairing dictionary: the first 12 entries of the frozen order.
inline std::vector<TestForm> dictionary(int m, std::size_t count = 12) {
  auto full = dictionary_full(m);
  if (full.size() > count) full.resize(count);
  return full;
}

}  // namespace vdlab
