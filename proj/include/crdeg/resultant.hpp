#pragma once

#include <utility>
#include <vector>

#include "crdeg/mpoly.hpp"

namespace crdeg {

/// Determinant of a square matrix over an integral domain by fraction-free
/// (Bareiss) elimination. R needs +, -, * and exact division via `div`.
template <class R, class ExactDiv>
R bareiss_determinant(std::vector<std::vector<R>> m, const R& zero, const R& one, ExactDiv div) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  R prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == zero) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == zero) ++swap_row;
      if (swap_row == n) return zero;
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = zero;
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  if (negate) det = zero - det;
  return det;
}

/// Sylvester resultant of two univariate polynomials given by coefficient
/// lists (index = degree) over an integral domain R. Formal degrees are the
/// list lengths minus one, so leading zeros are allowed.
template <class R, class ExactDiv>
R sylvester_resultant(const std::vector<R>& a, const std::vector<R>& b, const R& zero, const R& one,
                      ExactDiv div) {
  const int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  if (da < 0 || db < 0) return zero;
  const int n = da + db;
  if (n == 0) return one;
  std::vector<std::vector<R>> m(static_cast<std::size_t>(n), std::vector<R>(static_cast<std::size_t>(n), zero));
  for (int r = 0; r < db; ++r) {
    for (int i = 0; i <= da; ++i) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + da - i)] = a[static_cast<std::size_t>(i)];
  }
  for (int r = 0; r < da; ++r) {
    for (int i = 0; i <= db; ++i) {
      m[static_cast<std::size_t>(db + r)][static_cast<std::size_t>(r + db - i)] = b[static_cast<std::size_t>(i)];
    }
  }
  return bareiss_determinant(std::move(m), zero, one, div);
}

template <class F>
F resultant(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.is_zero() || b.is_zero()) return F(0);
  return sylvester_resultant<F>(a.coeffs(), b.coeffs(), F(0), F(1),
                                [](const F& x, const F& y) { return F(x / y); });
}

/// Res_y(a, b) for polynomials in the two variables x and y only; the result
/// is a polynomial in x.
template <class F>
UPoly<F> resultant_in(const MPoly<F>& a, const MPoly<F>& b, int y, int x) {
  if (a.is_zero() || b.is_zero()) return {};
  auto to_coeffs = [&](const MPoly<F>& p) {
    std::vector<UPoly<F>> out;
    for (const auto& c : p.coefficients_in(y)) out.push_back(c.to_univariate(x));
    return out;
  };
  auto exact = [](const UPoly<F>& num, const UPoly<F>& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw std::logic_error("Bareiss step was not exact");
    return q;
  };
  return sylvester_resultant<UPoly<F>>(to_coeffs(a), to_coeffs(b), UPoly<F>(),
                                       UPoly<F>::constant(F(1)), exact);
}

}  // namespace crdeg
