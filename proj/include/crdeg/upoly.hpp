#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "crdeg/field.hpp"

namespace crdeg {

/// Dense univariate polynomial over a field F. Coefficients are stored in
/// increasing degree with no trailing zeros; the zero polynomial is empty.
template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const F& c) { return UPoly(std::vector<F>{c}); }
  static UPoly monomial(const F& c, int degree) {
    std::vector<F> v(static_cast<std::size_t>(degree) + 1, F(0));
    v.back() = c;
    return UPoly(std::move(v));
  }
  static UPoly x() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }

  F coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : F(0);
  }
  const F& lead() const { return c_.back(); }

  F operator()(const F& t) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const F& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const F& s) { return a *= s; }
  friend UPoly operator*(const F& s, UPoly a) { return a *= s; }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (crdeg::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> r(c_.size() - 1, F(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(static_cast<std::int64_t>(i));
    return UPoly(std::move(r));
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && crdeg::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

/// Quotient and remainder; throws std::domain_error when dividing by zero.
template <class F>
std::pair<UPoly<F>, UPoly<F>> divmod(const UPoly<F>& a, const UPoly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly<F>(), a};
  std::vector<F> r = a.coeffs();
  std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, F(0));
  const F inv_lead = inverse(b.lead());
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= b.degree(); --i) {
    F coef = r[static_cast<std::size_t>(i)] * inv_lead;
    if (is_zero(coef)) continue;
    int shift = i - b.degree();
    q[static_cast<std::size_t>(shift)] = coef;
    for (std::size_t j = 0; j < bc.size(); ++j) r[static_cast<std::size_t>(shift) + j] -= coef * bc[j];
  }
  return {UPoly<F>(std::move(q)), UPoly<F>(std::move(r))};
}

template <class F>
UPoly<F> operator/(const UPoly<F>& a, const UPoly<F>& b) {
  return divmod(a, b).first;
}
template <class F>
UPoly<F> operator%(const UPoly<F>& a, const UPoly<F>& b) {
  return divmod(a, b).second;
}

template <class F>
UPoly<F> monic(const UPoly<F>& f) {
  if (f.is_zero()) return f;
  return f * inverse(f.lead());
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    UPoly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class F>
struct ExtendedGcd {
  UPoly<F> g, s, t;  // s*a + t*b = g, g monic
};

template <class F>
ExtendedGcd<F> extended_gcd(const UPoly<F>& a, const UPoly<F>& b) {
  UPoly<F> r0 = a, r1 = b;
  UPoly<F> s0 = UPoly<F>::constant(F(1)), s1;
  UPoly<F> t0, t1 = UPoly<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<F> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly<F> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = inverse(r0.lead());
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Product of the distinct irreducible factors of f, made monic. Assumes the
/// characteristic exceeds deg f (true for the word-sized primes used here).
template <class F>
UPoly<F> squarefree_part(const UPoly<F>& f) {
  if (f.is_constant()) return monic(f);
  return monic(f / gcd(f, f.derivative()));
}

/// base^e mod m.
template <class F>
UPoly<F> powmod(UPoly<F> base, std::uint64_t e, const UPoly<F>& m) {
  UPoly<F> result = UPoly<F>::constant(F(1)) % m;
  base = base % m;
  while (e != 0) {
    if (e & 1) result = (result * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return result;
}

template <class F>
std::string UPoly<F>::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const F& c = c_[static_cast<std::size_t>(i)];
    if (crdeg::is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    std::string cs = crdeg::to_string(c);
    if (i == 0) {
      out += cs;
    } else {
      if (cs != "1") out += "(" + cs + ")*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace crdeg
