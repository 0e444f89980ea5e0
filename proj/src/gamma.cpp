#include "dtheta/gamma.hpp"

#include <array>
#include <cmath>

#include "dtheta/error.hpp"

namespace dtheta {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

// B_{2k}/(2k) for the digamma asymptotic series, k = 1..8.
constexpr std::array<double, 8> kBernoulliOver2k = {
    1.0 / 12.0,  -1.0 / 120.0,     1.0 / 252.0,    -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,     -3617.0 / 8160.0};
// B_{2k} for the trigamma asymptotic series, k = 1..8.
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6.0,  -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0};

cplx lanczos_log_gamma(cplx z) {
  // Valid for Re(z) >= 1/2.
  z -= 1.0;
  cplx series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

// log(sin(pi z)) without overflow for large |Im z|.
cplx log_sin_pi(cplx z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  if (z.imag() < 15.0) return std::log(std::sin(kPi * z));
  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}) for Im z > 0.
  const cplx i(0.0, 1.0);
  return std::log(0.5 * i) - i * kPi * z + std::log(1.0 - std::exp(2.0 * i * kPi * z));
}

}  // namespace

bool is_gamma_pole(cplx s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real());
}

cplx log_gamma(cplx s) {
  if (is_gamma_pole(s)) throw DomainError("log_gamma: pole at non-positive integer");
  if (s.real() >= 0.5) return lanczos_log_gamma(s);
  return std::log(kPi) - log_sin_pi(s) - lanczos_log_gamma(1.0 - s);
}

cplx complex_gamma(cplx s) {
  if (is_gamma_pole(s)) throw DomainError("complex_gamma: pole at non-positive integer");
  if (s.real() >= 0.5) return std::exp(lanczos_log_gamma(s));
  return kPi / (std::sin(kPi * s) * std::exp(lanczos_log_gamma(1.0 - s)));
}

cplx digamma(cplx s) {
  if (is_gamma_pole(s)) throw DomainError("digamma: pole at non-positive integer");
  if (s.real() < 0.5) return digamma(1.0 - s) - kPi / std::tan(kPi * s);
  cplx shift = 0.0;
  while (std::abs(s) < 12.0) {
    shift -= 1.0 / s;
    s += 1.0;
  }
  const cplx inv2 = 1.0 / (s * s);
  cplx pw = inv2, tail = 0.0;
  for (double c : kBernoulliOver2k) {
    tail += c * pw;
    pw *= inv2;
  }
  return shift + std::log(s) - 0.5 / s - tail;
}

cplx trigamma(cplx s) {
  if (is_gamma_pole(s)) throw DomainError("trigamma: pole at non-positive integer");
  if (s.real() < 0.5) {
    const cplx sn = std::sin(kPi * s);
    return -trigamma(1.0 - s) + kPi * kPi / (sn * sn);
  }
  cplx shift = 0.0;
  while (std::abs(s) < 12.0) {
    shift += 1.0 / (s * s);
    s += 1.0;
  }
  const cplx inv = 1.0 / s;
  const cplx inv2 = inv * inv;
  cplx pw = inv2 * inv, tail = 0.0;
  for (double b : kBernoulli) {
    tail += b * pw;
    pw *= inv2;
  }
  return shift + inv + 0.5 * inv2 + tail;
}

}  // namespace dtheta
