#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crdeg/factor.hpp"
#include "crdeg/mpoly.hpp"
#include "crdeg/quotient_ring.hpp"
#include "crdeg/resultant.hpp"

using namespace crdeg;
using Q = Rational;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

UPoly<Q> qpoly(std::initializer_list<long> c) {
  std::vector<Q> v;
  for (long x : c) v.emplace_back(x);
  return UPoly<Q>(v);
}

UPoly<Fp> random_fp_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(Fp::modulus()) - 1);
  std::vector<Fp> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(d(rng));
  c.emplace_back(1);
  return UPoly<Fp>(c);
}

}  // namespace

TEST_CASE("primality agrees with trial division") {
  for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_probable_prime(n) == trial_division_prime(n));
  CHECK(is_probable_prime((std::uint64_t{1} << 61) - 1));
  CHECK_FALSE(is_probable_prime(std::uint64_t{4294967291} * 3));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto p = random_prime(rng, 62);
    CHECK((p >> 61) == 1);
    CHECK(is_probable_prime(p));
  }
}

TEST_CASE("prime field arithmetic") {
  std::mt19937_64 rng(5);
  FpModulusGuard guard(random_prime(rng, 62));
  std::uniform_int_distribution<std::int64_t> d(1, static_cast<std::int64_t>(Fp::modulus()) - 1);
  for (int i = 0; i < 200; ++i) {
    Fp a(d(rng)), b(d(rng));
    CHECK(a * a.inverse() == Fp(1));
    CHECK((a + b) - b == a);
    CHECK((a / b) * b == a);
    CHECK(a.pow(Fp::modulus() - 1) == Fp(1));
  }
  CHECK(Fp(-1) + Fp(1) == Fp(0));
  CHECK_THROWS_AS(Fp(0).inverse(), std::domain_error);
}

TEST_CASE("modulus guard restores the previous modulus") {
  const auto before = Fp::modulus();
  {
    FpModulusGuard g(101);
    CHECK(Fp::modulus() == 101);
    CHECK(Fp(100) + Fp(1) == Fp(0));
  }
  CHECK(Fp::modulus() == before);
  CHECK_THROWS(FpModulusGuard(2));
}

TEST_CASE("univariate division and gcd") {
  auto a = qpoly({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
  auto b = qpoly({-2, 1});
  auto [q, r] = divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q * b == a);
  CHECK(gcd(a, qpoly({-3, 1}) * qpoly({5, 1})) == qpoly({-3, 1}));
  auto eg = extended_gcd(a, qpoly({7, 0, 1}));
  CHECK(eg.g.degree() == 0);
  CHECK(eg.s * a + eg.t * qpoly({7, 0, 1}) == eg.g);
  auto sq = qpoly({-2, 1}) * qpoly({-2, 1}) * qpoly({1, 1});
  CHECK(squarefree_part(sq) == qpoly({-2, -1, 1}));
  CHECK_THROWS_AS(divmod(a, UPoly<Q>()), std::domain_error);
}

TEST_CASE("factorization over a prime field reassembles and counts roots") {
  FpModulusGuard guard(1009);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = squarefree_part(random_fp_poly(rng, 2 + trial % 9));
    auto factors = factor_squarefree(f, rng);
    UPoly<Fp> prod = UPoly<Fp>::constant(Fp(1));
    int linear = 0;
    for (const auto& g : factors) {
      CHECK(is_irreducible(g));
      prod *= g;
      linear += g.degree() == 1;
    }
    CHECK(prod == monic(f));
    int roots = 0;
    for (std::int64_t x = 0; x < 1009; ++x) roots += is_zero(f(Fp(x)));
    CHECK(roots == linear);
  }
}

TEST_CASE("resultant equals the product of values at the roots") {
  // a = (x-1)(x+2)(x-5); Res(a, b) = b(1) b(-2) b(5) for monic a.
  auto a = qpoly({-1, 1}) * qpoly({2, 1}) * qpoly({-5, 1});
  auto b = qpoly({3, -4, 0, 2});
  CHECK(resultant(a, b) == b(Q(1)) * b(Q(-2)) * b(Q(5)));
  CHECK(resultant(a, qpoly({-1, 1})) == 0);
}

TEST_CASE("resultant_in specializes to the univariate resultant") {
  using P = MPoly<Q>;
  const P x = P::variable(0), y = P::variable(1), one = P::constant(Q(1));
  const P a = y * y * (x + one) + y * x - x * x * Q(3) + one;
  const P b = y * y * y - y * x * Q(2) + x + one * Q(5);
  const auto r = resultant_in(a, b, 1, 0);
  for (long x0 : {-3L, 2L, 7L, 11L}) {
    const auto ay = a.substitute(0, P::constant(Q(x0))).to_univariate(1);
    const auto by = b.substitute(0, P::constant(Q(x0))).to_univariate(1);
    CHECK(r(Q(x0)) == resultant(ay, by));
  }
}

TEST_CASE("substitute_fraction clears the denominator") {
  using P = MPoly<Q>;
  const P x = P::variable(0), y = P::variable(1), z = P::variable(2);
  const P f = x * x * y - x * z + y * Q(4) - P::constant(Q(1));
  const P num = y + z * Q(2), den = y - z;
  const P g = f.substitute_fraction(0, num, den);
  CHECK_FALSE(g.contains(0));
  const std::vector<Q> pt = {Q(0), Q(3), Q(-5)};
  const Q dv = den.evaluate(pt);
  const std::vector<Q> sub = {num.evaluate(pt) / dv, Q(3), Q(-5)};
  CHECK(g.evaluate(pt) == dv * dv * f.evaluate(sub));
}

TEST_CASE("exact multivariate division") {
  using P = MPoly<Q>;
  const P x = P::variable(0), y = P::variable(1);
  const P f = x * y - y + x * Q(3), g = x - y * Q(2) + P::constant(Q(1));
  auto q = divide_exact(f * g, g);
  REQUIRE(q);
  CHECK(*q == f);
  CHECK_FALSE(divide_exact(f, g));
}

TEST_CASE("quotient ring splits on zero divisors") {
  auto m = qpoly({-1, 1}) * qpoly({-2, 1});
  QuotientRing<Q> ring(m);
  const auto t = ring.generator();
  CHECK_FALSE(ring.is_zero(ring.from_base(Q(3))));
  CHECK(ring.is_zero(ring.mul(ring.sub(t, ring.from_base(Q(1))), ring.sub(t, ring.from_base(Q(2))))));
  try {
    (void)ring.is_zero(ring.sub(t, ring.from_base(Q(1))));
    FAIL("expected a split");
  } catch (const ZeroDivisorSplit<Q>& s) {
    CHECK(s.factor == qpoly({-1, 1}));
  }
  auto inv = ring.inverse(ring.add(t, ring.from_base(Q(5))));
  CHECK(ring.mul(inv, ring.add(t, ring.from_base(Q(5)))) == UPoly<Q>::constant(Q(1)));
}
