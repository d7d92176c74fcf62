#pragma once

#include <exception>
#include <utility>
#include <vector>

#include "crdeg/mpoly.hpp"

namespace crdeg {

/// Thrown when a computation in K[t]/(g) meets a zero divisor. `factor` is a
/// proper monic factor of g; the caller restarts on factor and g/factor.
template <class F>
struct ZeroDivisorSplit : std::exception {
  explicit ZeroDivisorSplit(UPoly<F> f) : factor(std::move(f)) {}
  const char* what() const noexcept override { return "zero divisor in quotient ring"; }
  UPoly<F> factor;
};

/// The ring K[t]/(g) for monic squarefree g, i.e. a product of the fields
/// K[t]/(f) over the irreducible factors f of g. An element is a function on
/// the roots of g; zero tests that would have different answers on different
/// roots throw ZeroDivisorSplit instead of guessing (dynamic evaluation).
template <class F>
class QuotientRing {
 public:
  using Elem = UPoly<F>;

  explicit QuotientRing(UPoly<F> modulus) : g_(monic(modulus)) {
    if (g_.degree() < 1) throw std::invalid_argument("QuotientRing needs a nonconstant modulus");
  }

  const UPoly<F>& modulus() const { return g_; }
  int degree() const { return g_.degree(); }

  Elem from_base(const F& c) const { return Elem::constant(c); }
  Elem generator() const { return Elem::x() % g_; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b) % g_; }
  Elem neg(const Elem& a) const { return -a; }

  /// True for zero, false for a unit; throws ZeroDivisorSplit otherwise.
  bool is_zero(const Elem& a) const {
    if (a.is_zero()) return true;
    UPoly<F> d = gcd(a, g_);
    if (d.degree() == 0) return false;
    throw ZeroDivisorSplit<F>(d);
  }

  Elem inverse(const Elem& a) const {
    if (a.is_zero()) throw std::domain_error("QuotientRing: inverse of zero");
    auto eg = extended_gcd(a, g_);
    if (eg.g.degree() != 0) throw ZeroDivisorSplit<F>(eg.g);
    return eg.s % g_;
  }

  Elem evaluate(const MPoly<F>& p, const std::vector<Elem>& point) const {
    Elem acc;
    for (const auto& [m, c] : p.terms()) {
      Elem v = from_base(c);
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (int e = 0; e < m[i]; ++e) v = mul(v, point.at(i));
      }
      acc += v;
    }
    return acc;
  }

  /// Monic gcd in (K[t]/(g))[y] of the given polynomials (coefficient lists,
  /// index = degree in y). Returns an empty list for the zero polynomial.
  std::vector<Elem> poly_gcd(std::vector<std::vector<Elem>> polys) const {
    std::vector<Elem> acc;
    for (auto& p : polys) acc = gcd_pair(std::move(acc), std::move(p));
    return acc;
  }

 private:
  void normalize(std::vector<Elem>& p) const {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
  }

  std::vector<Elem> make_monic(std::vector<Elem> p) const {
    normalize(p);
    if (p.empty()) return p;
    Elem inv = inverse(p.back());
    for (auto& c : p) c = mul(c, inv);
    return p;
  }

  std::vector<Elem> gcd_pair(std::vector<Elem> a, std::vector<Elem> b) const {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
      b = make_monic(std::move(b));
      // a mod b, b monic
      while (a.size() >= b.size()) {
        Elem coef = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = sub(a[shift + j], mul(coef, b[j]));
        a.pop_back();
        normalize(a);
      }
      std::swap(a, b);
    }
    return make_monic(std::move(a));
  }

  UPoly<F> g_;
};

}  // namespace crdeg
