#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crdeg/upoly.hpp"

namespace crdeg {

inline constexpr int kMaxVars = 16;

/// Exponent vector. Array comparison gives lex order with variable 0 most
/// significant.
using Monomial = std::array<std::uint8_t, kMaxVars>;

inline bool divides(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (a[static_cast<std::size_t>(i)] > b[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

/// Sparse multivariate polynomial over F in at most kMaxVars variables.
/// Variable i prints as p{i+1}, matching 1-based point labels.
template <class F>
class MPoly {
 public:
  using Terms = std::map<Monomial, F>;

  MPoly() = default;

  static MPoly constant(const F& c) {
    MPoly p;
    if (!crdeg::is_zero(c)) p.t_.emplace(Monomial{}, c);
    return p;
  }
  static MPoly variable(int var) {
    check_var(var);
    Monomial m{};
    m[static_cast<std::size_t>(var)] = 1;
    MPoly p;
    p.t_.emplace(m, F(1));
    return p;
  }
  static MPoly term(const F& c, const Monomial& m) {
    MPoly p;
    if (!crdeg::is_zero(c)) p.t_.emplace(m, c);
    return p;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Monomial{}); }
  F constant_value() const {
    auto it = t_.find(Monomial{});
    return it == t_.end() ? F(0) : it->second;
  }
  std::size_t size() const { return t_.size(); }

  /// Lex-leading term; the polynomial must be nonzero.
  const std::pair<const Monomial, F>& leading() const { return *t_.rbegin(); }

  int degree_in(int var) const {
    int d = t_.empty() ? -1 : 0;
    for (const auto& [m, c] : t_) d = std::max<int>(d, m[static_cast<std::size_t>(var)]);
    return d;
  }
  int total_degree() const {
    int d = t_.empty() ? -1 : 0;
    for (const auto& [m, c] : t_) {
      int s = 0;
      for (auto e : m) s += e;
      d = std::max(d, s);
    }
    return d;
  }
  /// Bitmask of variables that occur.
  std::uint32_t variables() const {
    std::uint32_t mask = 0;
    for (const auto& [m, c] : t_) {
      for (int i = 0; i < kMaxVars; ++i) {
        if (m[static_cast<std::size_t>(i)] != 0) mask |= 1u << i;
      }
    }
    return mask;
  }
  bool contains(int var) const { return (variables() >> var) & 1u; }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  MPoly& operator*=(const F& s) {
    if (crdeg::is_zero(s)) {
      t_.clear();
      return *this;
    }
    for (auto& [m, c] : t_) c *= s;
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const F& s) { return a *= s; }
  friend MPoly operator*(const F& s, MPoly a) { return a *= s; }
  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.t_) {
      for (const auto& [mb, cb] : b.t_) {
        Monomial m{};
        for (std::size_t i = 0; i < m.size(); ++i) {
          unsigned e = unsigned{ma[i]} + mb[i];
          if (e > 255) throw std::overflow_error("MPoly exponent overflow");
          m[i] = static_cast<std::uint8_t>(e);
        }
        F c = ca * cb;
        r.add_term(m, c);
      }
    }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(int e) const {
    MPoly r = constant(F(1));
    MPoly b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e > 0) b *= b;
    }
    return r;
  }

  /// Coefficients with respect to `var`: result[j] multiplies var^j.
  std::vector<MPoly> coefficients_in(int var) const {
    std::vector<MPoly> out(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1);
    for (const auto& [m, c] : t_) {
      Monomial rest = m;
      auto j = rest[static_cast<std::size_t>(var)];
      rest[static_cast<std::size_t>(var)] = 0;
      out[j].t_.emplace(rest, c);
    }
    return out;
  }

  /// Replaces `var` by `value`.
  MPoly substitute(int var, const MPoly& value) const {
    auto cs = coefficients_in(var);
    MPoly acc;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * value + *it;
    return acc;
  }

  /// den^d * f(var = num/den) with d = degree of f in var. The result vanishes
  /// exactly where f(num/den) does, wherever den does not.
  MPoly substitute_fraction(int var, const MPoly& num, const MPoly& den) const {
    auto cs = coefficients_in(var);
    const int d = static_cast<int>(cs.size()) - 1;
    MPoly acc;
    MPoly num_pow = constant(F(1));
    for (int j = 0; j <= d; ++j) {
      if (!cs[static_cast<std::size_t>(j)].is_zero()) {
        acc += cs[static_cast<std::size_t>(j)] * num_pow * den.pow(d - j);
      }
      if (j < d) num_pow *= num;
    }
    return acc;
  }

  /// Value at a point of F^kMaxVars (unused coordinates ignored).
  F evaluate(const std::vector<F>& point) const {
    F acc(0);
    for (const auto& [m, c] : t_) {
      F v = c;
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (int e = 0; e < m[i]; ++e) v *= point.at(i);
      }
      acc += v;
    }
    return acc;
  }

  /// Univariate view; throws if any other variable occurs.
  UPoly<F> to_univariate(int var) const {
    if ((variables() & ~(1u << var)) != 0) throw std::logic_error("to_univariate: extra variables");
    std::vector<F> c(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1, F(0));
    for (const auto& [m, coef] : t_) c[m[static_cast<std::size_t>(var)]] = coef;
    return UPoly<F>(std::move(c));
  }
  static MPoly from_univariate(const UPoly<F>& u, int var) {
    MPoly r;
    for (int i = 0; i <= u.degree(); ++i) {
      Monomial m{};
      m[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(i);
      if (!crdeg::is_zero(u.coeff(i))) r.t_.emplace(m, u.coeff(i));
    }
    return r;
  }

  /// Scaled so that the leading coefficient is 1.
  MPoly monic() const {
    if (t_.empty()) return *this;
    return *this * inverse(leading().second);
  }

  std::string to_string() const;

 private:
  static void check_var(int var) {
    if (var < 0 || var >= kMaxVars) throw std::out_of_range("MPoly variable index");
  }
  void add_term(const Monomial& m, const F& c) {
    if (crdeg::is_zero(c)) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (crdeg::is_zero(it->second)) t_.erase(it);
    }
  }
  Terms t_;
};

/// Exact quotient f/g when g divides f, nullopt otherwise. Single-divisor
/// lex division: {g} is a Groebner basis of (g), so the remainder vanishes
/// iff g | f.
template <class F>
std::optional<MPoly<F>> divide_exact(const MPoly<F>& f, const MPoly<F>& g) {
  if (g.is_zero()) throw std::domain_error("MPoly division by zero");
  MPoly<F> rest = f;
  MPoly<F> q;
  const auto& [gm, gc] = g.leading();
  const F inv = inverse(gc);
  while (!rest.is_zero()) {
    const auto [rm, rc] = rest.leading();
    if (!divides(gm, rm)) return std::nullopt;
    Monomial qm{};
    for (std::size_t i = 0; i < qm.size(); ++i) qm[i] = static_cast<std::uint8_t>(rm[i] - gm[i]);
    F qc = rc * inv;
    auto t = MPoly<F>::term(qc, qm);
    q += t;
    rest -= t * g;
  }
  return q;
}

template <class F>
std::string MPoly<F>::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (int i = 0; i < kMaxVars; ++i) {
      auto e = m[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "p" + std::to_string(i + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string cs = crdeg::to_string(c);
    if (!out.empty()) out += " + ";
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += "(" + cs + ")*" + mono;
    }
  }
  return out;
}

}  // namespace crdeg
