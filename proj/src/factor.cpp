#include "crdeg/factor.hpp"

#include <algorithm>

namespace crdeg {

namespace {

using P = UPoly<Fp>;

P random_below(int degree, std::mt19937_64& rng) {
  std::vector<Fp> c(static_cast<std::size_t>(degree));
  std::uniform_int_distribution<std::uint64_t> dist(0, Fp::modulus() - 1);
  for (auto& x : c) x = Fp(static_cast<std::int64_t>(dist(rng)));
  return P(std::move(c));
}

void equal_degree_split(const P& f, int d, std::mt19937_64& rng, std::vector<P>& out) {
  if (f.degree() == d) {
    out.push_back(monic(f));
    return;
  }
  const std::uint64_t half = (Fp::modulus() - 1) / 2;
  for (;;) {
    P a = random_below(f.degree(), rng);
    if (a.is_constant()) continue;
    // a^((p^d - 1)/2) = (prod_{i<d} a^(p^i))^((p-1)/2)
    P frob = a;
    P norm = a;
    for (int i = 1; i < d; ++i) {
      frob = powmod(frob, Fp::modulus(), f);
      norm = (norm * frob) % f;
    }
    P b = powmod(norm, half, f) - P::constant(Fp(1));
    P g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<P, int>> distinct_degree_factors(const P& f_in) {
  std::vector<std::pair<P, int>> out;
  P f = monic(f_in);
  P h = P::x() % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, Fp::modulus(), f);
    P g = gcd(f, h - P::x());
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

std::vector<P> factor_squarefree(const P& f, std::mt19937_64& rng) {
  if (Fp::modulus() % 2 == 0) throw std::invalid_argument("factor_squarefree needs an odd prime");
  std::vector<P> out;
  if (f.degree() <= 0) return out;
  for (const auto& [g, d] : distinct_degree_factors(f)) equal_degree_split(g, d, rng, out);
  std::sort(out.begin(), out.end(), [](const P& a, const P& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (std::size_t i = 0; i < ac.size(); ++i) {
      if (ac[i].value() != bc[i].value()) return ac[i].value() < bc[i].value();
    }
    return false;
  });
  return out;
}

bool is_irreducible(const P& f) {
  if (f.degree() <= 0) return false;
  auto parts = distinct_degree_factors(f);
  return parts.size() == 1 && parts.front().second == f.degree();
}

}  // namespace crdeg
