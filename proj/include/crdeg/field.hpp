#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace crdeg {

/// Element of the prime field Z/pZ for a word-sized prime p.
///
/// The modulus is per-thread state, installed with FpModulusGuard for the
/// duration of a computation. Elements created under one modulus must not be
/// mixed with elements created under another.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v);  // NOLINT(google-explicit-constructor)

  static std::uint64_t modulus() { return p_; }
  std::uint64_t value() const { return v_; }

  Fp& operator+=(const Fp& o) {
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + (p_ - o.v_);
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const { return Fp() - *this; }

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

  Fp pow(std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  Fp inverse() const;

 private:
  friend class FpModulusGuard;
  static thread_local std::uint64_t p_;
  std::uint64_t v_ = 0;
};

/// Installs a modulus for Fp on the current thread and restores the previous
/// one on destruction.
class FpModulusGuard {
 public:
  explicit FpModulusGuard(std::uint64_t p);
  ~FpModulusGuard();
  FpModulusGuard(const FpModulusGuard&) = delete;
  FpModulusGuard& operator=(const FpModulusGuard&) = delete;

 private:
  std::uint64_t previous_;
};

using Rational = mpq_class;

bool is_probable_prime(std::uint64_t n);

/// Uniform random prime with exactly `bits` bits (bits in [3, 63]).
std::uint64_t random_prime(std::mt19937_64& rng, int bits = 62);

// Scalar-generic helpers used by the polynomial templates.

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Fp inverse(const Fp& x) { return x.inverse(); }
inline Rational inverse(const Rational& x) {
  if (sgn(x) == 0) throw std::domain_error("inverse of zero");
  Rational r = 1 / x;
  return r;
}

std::string to_string(const Fp& x);
std::string to_string(const Rational& x);

template <class F>
struct FieldName;
template <>
struct FieldName<Fp> {
  static constexpr const char* value = "prime";
};
template <>
struct FieldName<Rational> {
  static constexpr const char* value = "rational";
};

}  // namespace crdeg
