#include "crdeg/field.hpp"

#include <array>

namespace crdeg {

thread_local std::uint64_t Fp::p_ = 2305843009213693951ULL;  // 2^61 - 1

Fp::Fp(std::int64_t v) {
  if (v >= 0) {
    v_ = static_cast<std::uint64_t>(v) % p_;
  } else {
    std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) + 1;
    m %= p_;
    v_ = m == 0 ? 0 : p_ - m;
  }
}

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this;
  Fp result(1);
  while (e != 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in prime field");
  // Extended Euclid on signed 128-bit values.
  __int128 a = v_, m = p_, x0 = 1, x1 = 0;
  while (m != 0) {
    __int128 q = a / m;
    __int128 t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (x0 < 0) x0 += p_;
  Fp r;
  r.v_ = static_cast<std::uint64_t>(x0);
  return r;
}

FpModulusGuard::FpModulusGuard(std::uint64_t p) : previous_(Fp::p_) {
  if (p < 3) throw std::invalid_argument("prime modulus must be at least 3");
  Fp::p_ = p;
}

FpModulusGuard::~FpModulusGuard() { Fp::p_ = previous_; }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; these bases are sufficient for all n < 2^64.
bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : bases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto b : bases) {
    std::uint64_t x = powmod(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(std::mt19937_64& rng, int bits) {
  if (bits < 3 || bits > 63) throw std::invalid_argument("random_prime: bits out of range");
  const std::uint64_t top = std::uint64_t{1} << (bits - 1);
  const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
  for (;;) {
    std::uint64_t c = (rng() & mask) | top | 1;
    if (is_probable_prime(c)) return c;
  }
}

std::string to_string(const Fp& x) { return std::to_string(x.value()); }
std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace crdeg
