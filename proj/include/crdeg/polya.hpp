#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace crdeg {

/// Cycle type: nonincreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int total() const;
  auto operator<=>(const Partition&) const = default;
};

/// Z(G) as a map from cycle type to its (exact) weight.
struct CycleIndex {
  std::map<Partition, mpq_class> terms;
};

/// s_{p,0}, s_{p,1}, ... for (n+1)-uniform hypergraphs on p vertices.
struct CountingPolynomial {
  std::vector<mpz_class> coefficients;

  mpz_class coefficient(int k) const {
    return (k >= 0 && k < static_cast<int>(coefficients.size())) ? coefficients[static_cast<std::size_t>(k)]
                                                                 : mpz_class(0);
  }
};

/// Conjugacy classes of S_p with their sizes p!/prod(j^m_j m_j!). 0 <= p <= 12.
std::vector<std::pair<Partition, std::uint64_t>> cycle_types(int p);

/// Cycle type of the action on k-subsets of a permutation with cycle type
/// `pt`, found by tracing the orbits of all C(p, k) subsets under one
/// representative permutation.
Partition induced_cycle_type(const Partition& pt, int k);

CycleIndex cycle_index_symmetric(int p);
/// Z(S_p^{(k)}): the cycle index of S_p acting on k-subsets.
CycleIndex induced_cycle_index(int p, int k);

/// Z(S_p^{(n+1)}, 1 + x). Requires p <= 12; p < n+1 gives the constant 1.
CountingPolynomial counting_polynomial(int p, int n);

/// s_{p,k}^n - s_{p-1,k}^n: classes with no isolated vertex.
mpz_class count_no_isolated(int p, int k, int n);

std::uint64_t binomial(int n, int k);

}  // namespace crdeg
