#pragma once

#include <random>
#include <vector>

#include "crdeg/upoly.hpp"

namespace crdeg {

/// Factors a squarefree polynomial over the current prime field into monic
/// irreducibles (distinct-degree split followed by Cantor-Zassenhaus).
/// Requires an odd modulus.
std::vector<UPoly<Fp>> factor_squarefree(const UPoly<Fp>& f, std::mt19937_64& rng);

/// Pairs (g, d) where g is the product of all degree-d irreducible factors of f.
std::vector<std::pair<UPoly<Fp>, int>> distinct_degree_factors(const UPoly<Fp>& f);

bool is_irreducible(const UPoly<Fp>& f);

}  // namespace crdeg
