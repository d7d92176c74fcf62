#pragma once

// Independent reference computations used by the unit and acceptance tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "crdeg/hypergraph.hpp"
#include "crdeg/polya.hpp"
#include "crdeg/solver.hpp"

namespace oracle {

using crdeg::Edge;
using crdeg::Hypergraph;
using Q = crdeg::Rational;
using QPoint = crdeg::ProjectivePoint<Q>;

inline std::vector<Edge> all_edges(int n) {
  std::vector<Edge> all;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) all.push_back({a, b, c, d});
  return all;
}

inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int k) {
  auto all = all_edges(n);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(k));
  return Hypergraph(n, all);
}

/// Random hypergraph with |E| = n - 3 and no isolated vertex.
inline Hypergraph random_valid(std::mt19937_64& rng, int n) {
  for (;;) {
    auto h = random_hypergraph(rng, n, n - 3);
    if (!h.has_isolated_vertex()) return h;
  }
}

inline std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Rows as 0/1 strings over eight columns.
inline Hypergraph from_rows(std::initializer_list<const char*> rows) {
  std::vector<Edge> edges;
  for (const char* r : rows) {
    Edge e{};
    int k = 0;
    for (int c = 0; c < 8; ++c)
      if (r[c] == '1') e[static_cast<std::size_t>(k++)] = c + 1;
    edges.push_back(e);
  }
  return Hypergraph(8, edges);
}

/// Counts bijections from edges to the vertices outside `deleted` with every
/// edge containing its image, by trying every assignment.
inline std::int64_t matchings_by_permutation(const Hypergraph& h, const std::vector<int>& deleted) {
  std::vector<int> rest;
  for (int v = 1; v <= h.n_vertices(); ++v)
    if (std::find(deleted.begin(), deleted.end(), v) == deleted.end()) rest.push_back(v);
  std::int64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t r = 0; r < rest.size() && ok; ++r) {
      const auto& e = h.edges()[r];
      ok = std::find(e.begin(), e.end(), rest[r]) != e.end();
    }
    count += ok;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

/// k-subsets fixed by a permutation with the given cycle lengths: unions of
/// whole cycles of total size k.
inline mpz_class fixed_subsets(const std::vector<int>& cycles, int k) {
  std::vector<mpz_class> c(static_cast<std::size_t>(k) + 1, 0);
  c[0] = 1;
  for (int len : cycles)
    for (int s = k; s >= len; --s) c[static_cast<std::size_t>(s)] += c[static_cast<std::size_t>(s - len)];
  return c[static_cast<std::size_t>(k)];
}

inline int mobius_mu(int n) {
  int r = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  return n > 1 ? -r : r;
}

/// Induced cycle type from the fixed-point counts of the powers of the
/// permutation: f(j) = sum over d | j of d * c_d, inverted by Moebius.
inline crdeg::Partition induced_by_inversion(const crdeg::Partition& pt, int k) {
  int order = 1;
  for (int len : pt.parts) order = std::lcm(order, len);
  auto f = [&](int j) {
    std::vector<int> cycles;
    for (int len : pt.parts) {
      const int g = std::gcd(len, j);
      for (int i = 0; i < g; ++i) cycles.push_back(len / g);
    }
    return fixed_subsets(cycles, k);
  };
  crdeg::Partition out;
  for (int j = 1; j <= order; ++j) {
    mpz_class sum = 0;
    for (int d = 1; d <= j; ++d)
      if (j % d == 0) sum += mobius_mu(j / d) * f(d);
    if (sum % j != 0) throw std::logic_error("induced_by_inversion: non-integral cycle count");
    const long c = mpz_class(sum / j).get_si();
    for (long i = 0; i < c; ++i) out.parts.push_back(j);
  }
  std::sort(out.parts.begin(), out.parts.end(), std::greater<>());
  return out;
}

inline Q random_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  Q q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// z -> (a z + b) / (c z + d) on the projective line.
inline QPoint mobius_map(const QPoint& z, const Q& a, const Q& b, const Q& c, const Q& d) {
  if (z.is_infinity()) return c == 0 ? QPoint::infinity() : QPoint::finite(Q(a / c));
  const Q den = c * z.value() + d;
  if (den == 0) return QPoint::infinity();
  return QPoint::finite(Q((a * z.value() + b) / den));
}

/// Draws four distinct points and an invertible map; true when the
/// cross-ratio is unchanged by the map.
inline bool mobius_invariance_case(std::mt19937_64& rng) {
  for (;;) {
    std::vector<QPoint> z;
    while (z.size() < 4) {
      auto p = (rng() % 7 == 0) ? QPoint::infinity() : QPoint::finite(random_q(rng));
      if (std::find(z.begin(), z.end(), p) == z.end()) z.push_back(p);
    }
    const Q a = random_q(rng), b = random_q(rng), c = random_q(rng), d = random_q(rng);
    if (a * d - b * c == 0) continue;
    std::vector<QPoint> w;
    for (const auto& p : z) w.push_back(mobius_map(p, a, b, c, d));
    return crdeg::cross_ratio(z[0], z[1], z[2], z[3]) == crdeg::cross_ratio(w[0], w[1], w[2], w[3]);
  }
}

inline const std::vector<Hypergraph>& published_degree_four() {
  static const std::vector<Hypergraph> v = {
      from_rows({"11110000", "11001100", "10100011", "01010011", "00111100"}),
      from_rows({"11101000", "11010100", "10100011", "01010011", "00111100"}),
      from_rows({"11110000", "11001100", "11000011", "00111100", "00110011"}),
      from_rows({"11101000", "11010100", "11000011", "00111100", "00110011"})};
  return v;
}

inline const std::vector<Hypergraph>& published_degree_three() {
  static const std::vector<Hypergraph> v = {
      from_rows({"11101000", "11010100", "10100110", "01010011", "00111001"}),
      from_rows({"11101000", "11010100", "10100110", "01011001", "00110011"}),
      from_rows({"11101000", "11010100", "11000011", "00111010", "00110101"}),
      from_rows({"11101000", "11010100", "10110010", "01110001", "00001111"}),
      from_rows({"11101000", "11010100", "10110010", "01100101", "00011011"}),
      from_rows({"11101000", "11100100", "11010010", "00111001", "00010111"}),
      from_rows({"11101000", "11100100", "11010010", "00110011", "00011101"}),
      from_rows({"11101000", "11100100", "10011010", "01010101", "00110011"})};
  return v;
}

inline const std::vector<Edge>& worked_example() {
  static const std::vector<Edge> e = {{1, 2, 3, 4}, {1, 2, 6, 7}, {1, 3, 7, 8}, {1, 2, 5, 8}, {3, 4, 5, 6}};
  return e;
}

inline const std::vector<Edge>& degree_zero_example() {
  static const std::vector<Edge> e = {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 5}, {3, 6, 7, 8}, {4, 6, 7, 8}};
  return e;
}

}  // namespace oracle
