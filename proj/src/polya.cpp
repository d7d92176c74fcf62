#include "crdeg/polya.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace crdeg {

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

// Dense polynomial with rational coefficients; only what the cycle-index
// evaluation needs.
using QPoly = std::vector<mpq_class>;

QPoly mul(const QPoly& a, const QPoly& b) {
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

std::vector<std::pair<Partition, std::uint64_t>> cycle_types(int p) {
  if (p < 0 || p > 12) throw std::invalid_argument("cycle_types: p must be in 0..12");
  std::vector<Partition> parts;
  std::vector<int> cur;
  partitions_rec(p, p, cur, parts);
  std::vector<std::pair<Partition, std::uint64_t>> out;
  const std::uint64_t total = factorial(p);
  for (auto& pt : parts) {
    std::map<int, int> mult;
    for (int part : pt.parts) ++mult[part];
    std::uint64_t centralizer = 1;
    for (auto [j, m] : mult) {
      for (int i = 0; i < m; ++i) centralizer *= static_cast<std::uint64_t>(j);
      centralizer *= factorial(m);
    }
    out.emplace_back(std::move(pt), total / centralizer);
  }
  return out;
}

Partition induced_cycle_type(const Partition& pt, int k) {
  const int p = pt.total();
  if (p > 20) throw std::invalid_argument("induced_cycle_type: p too large");
  if (k < 0 || k > p) throw std::invalid_argument("induced_cycle_type: k out of range");
  // Representative: consecutive blocks form the cycles.
  std::vector<int> sigma(static_cast<std::size_t>(p));
  int start = 0;
  for (int len : pt.parts) {
    for (int i = 0; i < len; ++i) sigma[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
    start += len;
  }
  auto apply = [&](std::uint32_t s) {
    std::uint32_t t = 0;
    for (int v = 0; v < p; ++v) {
      if ((s >> v) & 1u) t |= 1u << sigma[static_cast<std::size_t>(v)];
    }
    return t;
  };
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 0; s < (1u << p); ++s) {
    if (std::popcount(s) == k) subsets.push_back(s);
  }
  std::vector<char> seen(std::size_t{1} << p, 0);
  Partition induced;
  for (auto s : subsets) {
    if (seen[s]) continue;
    int len = 0;
    std::uint32_t t = s;
    do {
      seen[t] = true;
      t = apply(t);
      ++len;
    } while (t != s);
    induced.parts.push_back(len);
  }
  std::sort(induced.parts.begin(), induced.parts.end(), std::greater<>());
  return induced;
}

CycleIndex cycle_index_symmetric(int p) {
  CycleIndex z;
  const mpq_class order(static_cast<unsigned long>(factorial(p)));
  for (auto& [pt, size] : cycle_types(p)) z.terms[pt] += mpq_class(static_cast<unsigned long>(size)) / order;
  return z;
}

CycleIndex induced_cycle_index(int p, int k) {
  CycleIndex z;
  const mpq_class order(static_cast<unsigned long>(factorial(p)));
  for (auto& [pt, size] : cycle_types(p)) {
    mpq_class w = mpq_class(static_cast<unsigned long>(size)) / order;
    z.terms[induced_cycle_type(pt, k)] += w;
  }
  return z;
}

CountingPolynomial counting_polynomial(int p, int n) {
  if (n < 0) throw std::invalid_argument("counting_polynomial: n must be nonnegative");
  if (p < n + 1) return CountingPolynomial{{mpz_class(1)}};
  if (p > 12) throw std::invalid_argument("counting_polynomial: p must be at most 12");
  const auto z = induced_cycle_index(p, n + 1);
  QPoly total(binomial(p, n + 1) + 1, mpq_class(0));
  for (const auto& [pt, weight] : z.terms) {
    QPoly term{mpq_class(1)};
    for (int len : pt.parts) {
      QPoly factor(static_cast<std::size_t>(len) + 1, mpq_class(0));
      factor[0] = 1;
      factor[static_cast<std::size_t>(len)] += 1;
      term = mul(term, factor);
    }
    for (std::size_t i = 0; i < term.size(); ++i) total[i] += weight * term[i];
  }
  CountingPolynomial out;
  for (auto& c : total) {
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("counting_polynomial: non-integral coefficient");
    out.coefficients.push_back(c.get_num());
  }
  return out;
}

mpz_class count_no_isolated(int p, int k, int n) {
  mpz_class with = counting_polynomial(p, n).coefficient(k);
  mpz_class without = counting_polynomial(p - 1, n).coefficient(k);
  return with - without;
}

}  // namespace crdeg
