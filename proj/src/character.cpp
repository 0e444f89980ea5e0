#include "dtheta/character.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "dtheta/error.hpp"

namespace dtheta {
namespace {

int mod_pos(std::int64_t a, int q) {
  const std::int64_t r = a % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v > 0) {
    if (a % 2 == 0) return 0;
    const int a8 = static_cast<int>(((a % 8) + 8) % 8);
    if ((v & 1) && (a8 == 3 || a8 == 5)) result = -result;
  }
  // Jacobi symbol (a/n), n odd positive.
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t n8 = n % 8;
      if (n8 == 3 || n8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

DirichletCharacter::DirichletCharacter(int modulus, int order, std::vector<int> exponents)
    : modulus_(modulus), order_(order), exponents_(std::move(exponents)) {
  if (modulus_ < 1) throw ValidationError("character modulus must be positive");
  if (order_ < 1) throw ValidationError("character order must be positive");
  if (static_cast<int>(exponents_.size()) != modulus_)
    throw ValidationError("character table length " + std::to_string(exponents_.size()) +
                          " does not match modulus " + std::to_string(modulus_));
  for (int a = 1; a <= modulus_; ++a) {
    int& e = exponents_[a - 1];
    const bool unit = std::gcd(a, modulus_) == 1;
    if (!unit) {
      if (e != kZero) throw ValidationError("character must vanish at a=" + std::to_string(a));
      continue;
    }
    if (e == kZero) throw ValidationError("character vanishes at unit a=" + std::to_string(a));
    if (e < 0) throw ValidationError("negative character exponent");
    e %= order_;
  }
  if (exponents_[0] != 0) throw ValidationError("character must satisfy chi(1) = 1");

  // Complete multiplicativity on units; exhaustive for small moduli.
  std::vector<int> units;
  for (int a = 1; a <= modulus_; ++a)
    if (std::gcd(a, modulus_) == 1) units.push_back(a);
  auto check = [&](int a, int b) {
    const int c = static_cast<int>((static_cast<std::int64_t>(a) * b) % modulus_);
    const int cc = c == 0 ? modulus_ : c;
    if ((exponents_[a - 1] + exponents_[b - 1]) % order_ != exponents_[cc - 1])
      throw ValidationError("character is not multiplicative at (" + std::to_string(a) + ", " +
                            std::to_string(b) + ")");
  };
  if (units.size() <= 2048) {
    for (int a : units)
      for (int b : units) check(a, b);
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
    for (int i = 0; i < 200000; ++i) check(units[pick(rng)], units[pick(rng)]);
  }

  // Reduce to the exact order.
  int g = order_;
  for (int e : exponents_)
    if (e != kZero) g = std::gcd(g, e);
  if (g > 1) {
    order_ /= g;
    for (int& e : exponents_)
      if (e != kZero) e /= g;
  }
  values_.resize(modulus_);
  for (int a = 0; a < modulus_; ++a) {
    const int e = exponents_[a];
    values_[a] = e == kZero ? cplx(0.0) : std::polar(1.0, 2.0 * kPi * e / order_);
    // Exact values for the real cases keep quadratic tables integral.
    if (e != kZero && 2 * e == order_) values_[a] = -1.0;
    if (e == 0) values_[a] = 1.0;
  }
}

DirichletCharacter DirichletCharacter::principal(int modulus) {
  std::vector<int> ex(modulus);
  for (int a = 1; a <= modulus; ++a) ex[a - 1] = std::gcd(a, modulus) == 1 ? 0 : kZero;
  return DirichletCharacter(modulus, 1, std::move(ex));
}

DirichletCharacter DirichletCharacter::quadratic(std::int64_t disc) {
  const std::int64_t q = disc < 0 ? -disc : disc;
  if (q < 3 || q > 1000000) throw ValidationError("quadratic character: unsupported discriminant");
  std::vector<int> ex(q);
  for (std::int64_t a = 1; a <= q; ++a) {
    const int k = kronecker_symbol(disc, a);
    ex[a - 1] = k == 0 ? kZero : (k == 1 ? 0 : 1);
  }
  DirichletCharacter chi(static_cast<int>(q), 2, std::move(ex));
  if (chi.conductor() != q) throw ValidationError("quadratic character: discriminant is not fundamental");
  return chi;
}

DirichletCharacter DirichletCharacter::power_residue(int p, int m, int t) {
  if (!is_prime(p) || p == 2) throw ValidationError("power_residue: modulus must be an odd prime");
  if (m < 1 || (p - 1) % m != 0) throw ValidationError("power_residue: order must divide p-1");
  int g = 2;
  for (;; ++g) {
    bool primitive = true;
    for (int d = 1; d < p - 1; ++d) {
      if ((p - 1) % d) continue;
      std::int64_t x = 1;
      for (int i = 0; i < d; ++i) x = x * g % p;
      if (x == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }
  std::vector<int> ex(p, kZero);
  std::int64_t x = 1;
  for (int j = 0; j < p - 1; ++j) {
    ex[x - 1] = static_cast<int>((static_cast<std::int64_t>(j) * t) % m);
    x = x * g % p;
  }
  return DirichletCharacter(p, m, std::move(ex));
}

int DirichletCharacter::exponent(std::int64_t n) const { return exponents_[mod_pos(n - 1, modulus_)]; }

cplx DirichletCharacter::value(std::int64_t n) const { return values_[mod_pos(n - 1, modulus_)]; }

bool DirichletCharacter::is_even() const { return exponent(-1) == 0; }

int DirichletCharacter::conductor() const {
  for (int f = 1; f <= modulus_; ++f) {
    if (modulus_ % f) continue;
    bool ok = true;
    for (int a = 1 + f; a <= modulus_ && ok; a += f)
      if (std::gcd(a, modulus_) == 1 && exponents_[a - 1] != 0) ok = false;
    if (ok) return f;
  }
  return modulus_;
}

DirichletCharacter DirichletCharacter::primitive() const {
  const int f = conductor();
  if (f == modulus_) return *this;
  std::vector<int> ex(f, kZero);
  for (int a = 1; a <= f; ++a) {
    if (std::gcd(a, f) != 1) continue;
    int lift = a;
    while (std::gcd(lift, modulus_) != 1) lift += f;
    ex[a - 1] = exponents_[mod_pos(lift - 1, modulus_)];
  }
  return DirichletCharacter(f, order_, std::move(ex));
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<int> ex = exponents_;
  for (int& e : ex)
    if (e != kZero) e = (order_ - e) % order_;
  return DirichletCharacter(modulus_, order_, std::move(ex));
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& other) const {
  const int q = std::lcm(modulus_, other.modulus_);
  const int m = std::lcm(order_, other.order_);
  std::vector<int> ex(q, kZero);
  for (int a = 1; a <= q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    ex[a - 1] = (exponent(a) * (m / order_) + other.exponent(a) * (m / other.order_)) % m;
  }
  return DirichletCharacter(q, m, std::move(ex)).primitive();
}

bool DirichletCharacter::same_primitive(const DirichletCharacter& other) const {
  const DirichletCharacter a = primitive();
  const DirichletCharacter b = other.primitive();
  return a.modulus_ == b.modulus_ && a.order_ == b.order_ && a.exponents_ == b.exponents_;
}

std::string DirichletCharacter::to_line() const {
  std::ostringstream os;
  os << "char " << modulus_ << ' ' << order_ << ' ';
  for (int a = 0; a < modulus_; ++a) os << (a ? "," : "") << exponents_[a];
  return os.str();
}

}  // namespace dtheta
