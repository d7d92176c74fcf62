#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "crdeg/factor.hpp"
#include "crdeg/hypergraph.hpp"
#include "crdeg/mpoly.hpp"
#include "crdeg/quotient_ring.hpp"
#include "crdeg/resultant.hpp"

namespace crdeg {

enum class FieldBackend { Prime, Rational };

std::string to_string(FieldBackend b);
FieldBackend parse_backend(const std::string& s);

/// A random parameter draw hit a non-generic configuration; redraw.
struct UnluckyDraw : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The elimination strategy does not apply (for instance three or more
/// unknowns with no linear equation left).
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Point of P^1 over F: either infinity or a finite value.
template <class F>
class ProjectivePoint {
 public:
  static ProjectivePoint infinity() { return ProjectivePoint(); }
  static ProjectivePoint finite(F v) {
    ProjectivePoint p;
    p.v_ = std::move(v);
    return p;
  }
  bool is_infinity() const { return !v_.has_value(); }
  const F& value() const { return *v_; }
  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return *a.v_ == *b.v_;
  }

 private:
  std::optional<F> v_;
};

/// (z3 - z1)(z4 - z2) / ((z3 - z2)(z4 - z1)). A point at infinity occurs in
/// exactly one numerator and one denominator factor; both are dropped.
/// Throws std::domain_error unless the points are pairwise distinct.
template <class F>
F cross_ratio(const ProjectivePoint<F>& z1, const ProjectivePoint<F>& z2, const ProjectivePoint<F>& z3,
              const ProjectivePoint<F>& z4) {
  const ProjectivePoint<F>* z[4] = {&z1, &z2, &z3, &z4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (*z[i] == *z[j]) throw std::domain_error("cross_ratio: points must be pairwise distinct");
  auto factor = [&](int i, int j) -> std::optional<F> {
    if (z[i]->is_infinity() || z[j]->is_infinity()) return std::nullopt;
    return F(z[i]->value() - z[j]->value());
  };
  F num(1), den(1);
  if (auto f = factor(2, 0)) num *= *f;
  if (auto f = factor(3, 1)) num *= *f;
  if (auto f = factor(2, 1)) den *= *f;
  if (auto f = factor(3, 0)) den *= *f;
  return F(num / den);
}

/// Generic targets a_1..a_m: each outside {0, 1}, pairwise distinct.
template <class F>
struct ParameterDraw {
  std::vector<F> a;
  std::uint64_t seed = 0;
};

/// Uniform nonzero scalar for Fp; small nonzero integer ratio for Rational.
template <class F>
F random_scalar(std::mt19937_64& rng);
template <>
Fp random_scalar<Fp>(std::mt19937_64& rng);
template <>
Rational random_scalar<Rational>(std::mt19937_64& rng);

template <class F>
ParameterDraw<F> draw_parameters(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ParameterDraw<F> d;
  d.seed = seed;
  while (static_cast<int>(d.a.size()) < count) {
    F v = random_scalar<F>(rng);
    if (is_zero(v) || v == F(1)) continue;
    if (std::find(d.a.begin(), d.a.end(), v) != d.a.end()) continue;
    d.a.push_back(v);
  }
  return d;
}

inline int var_of(int vertex) { return vertex - 1; }

/// Gauge-fixed cross-ratio equations: p1 = infinity, p2 = 0, p3 = 1 and the
/// unknowns p4..pn. Variable index v-1 holds p_v.
template <class F>
struct CrossRatioSystem {
  static constexpr int kInfinityVertex = 1;
  static constexpr int kZeroVertex = 2;
  static constexpr int kOneVertex = 3;

  int n_vertices = 0;
  std::vector<Edge> edges;  // vertex order inside each edge as given
  std::vector<F> targets;
  std::vector<int> unknowns;
  std::vector<MPoly<F>> equations;
  /// p_i, p_i - 1 and p_i - p_j; a solution must keep all of them nonzero.
  std::vector<MPoly<F>> degeneracy;

  bool multilinear() const {
    for (const auto& e : equations)
      for (int v : unknowns)
        if (e.degree_in(var_of(v)) > 1) return false;
    return true;
  }
};

template <class F>
CrossRatioSystem<F> gauge_and_build(int n_vertices, std::span<const Edge> edges, const ParameterDraw<F>& draw) {
  if (n_vertices < 4 || n_vertices > kMaxVars) throw std::invalid_argument("gauge_and_build: unsupported vertex count");
  if (draw.a.size() != edges.size()) throw std::invalid_argument("gauge_and_build: one target per edge required");
  CrossRatioSystem<F> sys;
  sys.n_vertices = n_vertices;
  sys.edges.assign(edges.begin(), edges.end());
  sys.targets = draw.a;
  for (int v = 4; v <= n_vertices; ++v) sys.unknowns.push_back(v);

  // nullopt stands for the point at infinity.
  auto point = [](int v) -> std::optional<MPoly<F>> {
    switch (v) {
      case CrossRatioSystem<F>::kInfinityVertex:
        return std::nullopt;
      case CrossRatioSystem<F>::kZeroVertex:
        return MPoly<F>();
      case CrossRatioSystem<F>::kOneVertex:
        return MPoly<F>::constant(F(1));
      default:
        return MPoly<F>::variable(var_of(v));
    }
  };
  auto factor = [&](int vi, int vj) {
    auto a = point(vi), b = point(vj);
    if (!a || !b) return MPoly<F>::constant(F(1));
    return *a - *b;
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    for (int v : e)
      if (v < 1 || v > n_vertices) throw std::invalid_argument("gauge_and_build: vertex out of range");
    MPoly<F> num = factor(e[2], e[0]) * factor(e[3], e[1]);
    MPoly<F> den = factor(e[2], e[1]) * factor(e[3], e[0]);
    sys.equations.push_back(num - den * draw.a[i]);
  }
  for (std::size_t i = 0; i < sys.unknowns.size(); ++i) {
    auto pi = MPoly<F>::variable(var_of(sys.unknowns[i]));
    sys.degeneracy.push_back(pi);
    sys.degeneracy.push_back(pi - MPoly<F>::constant(F(1)));
    for (std::size_t j = i + 1; j < sys.unknowns.size(); ++j) {
      sys.degeneracy.push_back(pi - MPoly<F>::variable(var_of(sys.unknowns[j])));
    }
  }
  return sys;
}

template <class F>
CrossRatioSystem<F> gauge_and_build(const Hypergraph& h, const ParameterDraw<F>& draw) {
  return gauge_and_build<F>(h.n_vertices(), h.edges(), draw);
}

template <class F>
struct EliminationStep {
  enum class Kind {
    Linear,     // var = numerator / denominator, in later variables
    Shear,      // var_old = numerator, written in the new var and one other
    Resultant,  // var is a common root of `equations` once the rest is known
  };
  Kind kind = Kind::Linear;
  int var = 0;
  MPoly<F> numerator;
  MPoly<F> denominator;
  std::vector<MPoly<F>> equations;
};

/// A polynomial that must vanish (or must not) at a solution, written in the
/// coordinates in force after the first `stage` steps.
template <class F>
struct ChainConstraint {
  MPoly<F> poly;
  std::size_t stage = 0;
};

template <class F>
struct TriangularChain {
  enum class Status {
    Eliminant,        // roots of `eliminant` are the candidates
    Inconsistent,     // no solution for these parameters
    Degenerate,       // every solution has coincident points
    Underdetermined,  // a free unknown remains; generically only degenerate solutions
  };
  Status status = Status::Eliminant;
  std::vector<EliminationStep<F>> steps;
  std::optional<int> eliminant_var;  // unset when every unknown was solved linearly
  UPoly<F> eliminant;
  std::vector<ChainConstraint<F>> vanishing;
  std::vector<ChainConstraint<F>> nonvanishing;
  /// Systems split off where a pivot coefficient may vanish; disjoint from
  /// this chain, which requires that coefficient to be nonzero.
  std::vector<TriangularChain> branches;
  std::string note;
};

namespace detail {

template <class F>
struct WorkState {
  std::vector<MPoly<F>> equations;
  std::vector<MPoly<F>> degeneracy;
  std::vector<MPoly<F>> guards;
  std::uint32_t unknowns = 0;
  TriangularChain<F> chain;
};

template <class F>
void substitute_all(WorkState<F>& s, int var, const MPoly<F>& num, const MPoly<F>& den) {
  auto apply = [&](std::vector<MPoly<F>>& polys) {
    for (auto& p : polys) {
      if (!p.contains(var)) continue;
      p = den.is_constant() ? p.substitute(var, num * inverse(den.constant_value()))
                            : p.substitute_fraction(var, num, den);
    }
  };
  apply(s.equations);
  apply(s.degeneracy);
  apply(s.guards);
  s.unknowns &= ~(1u << var);
}

/// Drops constant side polynomials, strips their factors from equations and
/// detects terminal states. Returns true when the chain is finished.
template <class F>
bool normalize(WorkState<F>& s) {
  auto finish = [&](typename TriangularChain<F>::Status st, std::string note) {
    s.chain.status = st;
    s.chain.note = std::move(note);
    return true;
  };
  std::vector<MPoly<F>> divisors;
  for (auto* side : {&s.degeneracy, &s.guards}) {
    std::vector<MPoly<F>> kept;
    for (auto& p : *side) {
      if (p.is_zero()) {
        return side == &s.degeneracy ? finish(TriangularChain<F>::Status::Degenerate, "points forced to coincide")
                                     : finish(TriangularChain<F>::Status::Inconsistent, "side condition fails");
      }
      if (p.is_constant()) continue;
      kept.push_back(p.monic());
    }
    *side = std::move(kept);
    divisors.insert(divisors.end(), side->begin(), side->end());
  }
  std::vector<MPoly<F>> eqs;
  for (auto e : s.equations) {
    if (e.is_zero()) continue;
    bool changed = true;
    while (changed && !e.is_constant()) {
      changed = false;
      for (const auto& d : divisors) {
        if (d.total_degree() > e.total_degree()) continue;
        if (auto q = divide_exact(e, d)) {
          e = std::move(*q);
          changed = true;
        }
      }
    }
    if (e.is_constant()) return finish(TriangularChain<F>::Status::Inconsistent, "equation reduces to a nonzero constant");
    e = e.monic();
    if (std::find(eqs.begin(), eqs.end(), e) == eqs.end()) eqs.push_back(std::move(e));
  }
  s.equations = std::move(eqs);
  std::uint32_t used = 0;
  for (const auto& e : s.equations) used |= e.variables();
  if ((s.unknowns & ~used) != 0) return finish(TriangularChain<F>::Status::Underdetermined, "free unknown");
  return false;
}

struct PivotKey {
  int nonconstant = 0;
  int coeff_degree = 0;
  int coeff_terms = 0;
  int nonlinear_neighbours = 0;
  int var = 0;
  int eq = 0;
  auto operator<=>(const PivotKey&) const = default;
};

// Prefers constant pivot coefficients, then pivots whose variable occurs in
// the fewest nonlinear equations, then the lowest label.
template <class F>
std::optional<PivotKey> choose_pivot(const WorkState<F>& s) {
  std::optional<PivotKey> best;
  for (std::size_t i = 0; i < s.equations.size(); ++i) {
    const auto& e = s.equations[i];
    for (int x = 0; x < kMaxVars; ++x) {
      if (!((s.unknowns >> x) & 1u) || e.degree_in(x) != 1) continue;
      const auto c1 = e.coefficients_in(x)[1];
      PivotKey k;
      k.nonconstant = c1.is_constant() ? 0 : 1;
      k.coeff_degree = c1.is_constant() ? 0 : c1.total_degree();
      k.coeff_terms = c1.is_constant() ? 0 : static_cast<int>(c1.size());
      for (std::size_t j = 0; j < s.equations.size(); ++j) {
        if (j != i && s.equations[j].contains(x) && s.equations[j].total_degree() > 1) ++k.nonlinear_neighbours;
      }
      k.var = x;
      k.eq = static_cast<int>(i);
      if (!best || k < *best) best = k;
    }
  }
  return best;
}

template <class F>
TriangularChain<F> run(WorkState<F> s, std::mt19937_64& rng, int depth) {
  using Status = typename TriangularChain<F>::Status;
  using Step = EliminationStep<F>;
  if (depth > 64) throw SolverError("triangularize: branch depth exceeded");
  for (;;) {
    if (normalize(s)) return std::move(s.chain);
    const int remaining = std::popcount(s.unknowns);
    if (remaining == 0) {
      s.chain.status = Status::Eliminant;
      s.chain.eliminant = UPoly<F>::x();
      return std::move(s.chain);
    }
    if (remaining == 1) {
      const int x = std::countr_zero(s.unknowns);
      UPoly<F> g;
      for (const auto& e : s.equations) g = gcd(g, e.to_univariate(x));
      if (g.degree() < 1) {
        s.chain.status = Status::Inconsistent;
        s.chain.note = "univariate equations have no common root";
        return std::move(s.chain);
      }
      s.chain.status = Status::Eliminant;
      s.chain.eliminant_var = x;
      s.chain.eliminant = g;
      return std::move(s.chain);
    }
    auto pivot = choose_pivot(s);
    if (pivot) {
      const int x = pivot->var;
      const MPoly<F> e = s.equations[static_cast<std::size_t>(pivot->eq)];
      s.equations.erase(s.equations.begin() + pivot->eq);
      auto cs = e.coefficients_in(x);
      const MPoly<F>& c0 = cs[0];
      const MPoly<F>& c1 = cs[1];
      if (pivot->nonconstant) {
        WorkState<F> branch = s;
        branch.equations.push_back(c1);
        branch.equations.push_back(c0);
        const std::size_t stage = s.chain.steps.size();
        branch.chain.vanishing.push_back({c1, stage});
        branch.chain.vanishing.push_back({c0, stage});
        branch.chain.branches.clear();
        branch.chain.note.clear();
        s.chain.branches.push_back(run(std::move(branch), rng, depth + 1));
        s.guards.push_back(c1);
        s.chain.nonvanishing.push_back({c1, stage});
      }
      MPoly<F> num = -c0;
      MPoly<F> den = c1;
      if (den.is_constant()) {
        num = num * inverse(den.constant_value());
        den = MPoly<F>::constant(F(1));
      }
      substitute_all(s, x, num, den);
      s.chain.steps.push_back(Step{Step::Kind::Linear, x, num, den, {}});
      continue;
    }
    if (remaining > 2) {
      throw SolverError("triangularize: " + std::to_string(remaining) + " unknowns left with no linear equation");
    }
    // Two unknowns, no linear equation: shear so the projection onto x
    // separates solutions, then eliminate y by a resultant.
    const int x = std::countr_zero(s.unknowns);
    const int y = 31 - std::countl_zero(s.unknowns);
    if (s.equations.size() < 2) {
      s.chain.status = Status::Underdetermined;
      s.chain.note = "one equation in two unknowns";
      return std::move(s.chain);
    }
    F lambda = random_scalar<F>(rng);
    MPoly<F> sheared = MPoly<F>::variable(x) - MPoly<F>::variable(y) * lambda;
    for (auto* polys : {&s.equations, &s.degeneracy, &s.guards})
      for (auto& p : *polys) p = p.substitute(x, sheared);
    s.chain.steps.push_back(Step{Step::Kind::Shear, x, sheared, MPoly<F>::constant(F(1)), {}});
    if (normalize(s)) return std::move(s.chain);
    UPoly<F> elim;
    for (std::size_t i = 0; i < s.equations.size() && elim.is_zero(); ++i) {
      for (std::size_t j = i + 1; j < s.equations.size() && elim.is_zero(); ++j) {
        elim = resultant_in(s.equations[i], s.equations[j], y, x);
      }
    }
    if (elim.is_zero()) throw UnluckyDraw("resultant vanished identically");
    for (const auto& e : s.equations) {
      if (!e.contains(y)) elim = gcd(elim, e.to_univariate(x));
    }
    s.chain.steps.push_back(Step{Step::Kind::Resultant, y, {}, {}, s.equations});
    if (elim.degree() < 1) {
      s.chain.status = Status::Inconsistent;
      s.chain.note = "resultant has no roots";
      return std::move(s.chain);
    }
    s.chain.status = Status::Eliminant;
    s.chain.eliminant_var = x;
    s.chain.eliminant = monic(elim);
    return std::move(s.chain);
  }
}

}  // namespace detail

/// Linear substitutions (branching where the pivot coefficient is not
/// constant), then a resultant when two unknowns with no linear equation
/// remain. `seed` drives the shear coefficient.
template <class F>
TriangularChain<F> triangularize(const CrossRatioSystem<F>& sys, std::uint64_t seed = 0) {
  detail::WorkState<F> s;
  s.equations = sys.equations;
  s.degeneracy = sys.degeneracy;
  for (int v : sys.unknowns) s.unknowns |= 1u << var_of(v);
  std::mt19937_64 rng(seed ^ 0x5bd1e995u);
  return detail::run(std::move(s), rng, 0);
}

/// Values of the unknowns (index var_of(v)) for the root t of the ring's
/// modulus, or nullopt when that root gives no valid solution. Throws
/// ZeroDivisorSplit when the answer differs between roots of the modulus.
template <class F>
std::optional<std::vector<UPoly<F>>> back_substitute(const TriangularChain<F>& chain, const CrossRatioSystem<F>& sys,
                                                     const QuotientRing<F>& ring) {
  using Elem = UPoly<F>;
  using Step = EliminationStep<F>;
  std::vector<Elem> vals(kMaxVars);
  if (chain.eliminant_var) vals[static_cast<std::size_t>(*chain.eliminant_var)] = ring.generator();
  for (std::size_t stage = chain.steps.size();; --stage) {
    for (const auto& c : chain.vanishing)
      if (c.stage == stage && !ring.is_zero(ring.evaluate(c.poly, vals))) return std::nullopt;
    for (const auto& c : chain.nonvanishing)
      if (c.stage == stage && ring.is_zero(ring.evaluate(c.poly, vals))) return std::nullopt;
    if (stage == 0) break;
    const Step& step = chain.steps[stage - 1];
    const auto var = static_cast<std::size_t>(step.var);
    if (step.kind == Step::Kind::Resultant) {
      std::vector<std::vector<Elem>> polys;
      for (const auto& e : step.equations) {
        std::vector<Elem> coeffs;
        for (const auto& c : e.coefficients_in(step.var)) coeffs.push_back(ring.evaluate(c, vals));
        polys.push_back(std::move(coeffs));
      }
      auto g = ring.poly_gcd(std::move(polys));
      if (g.empty()) throw UnluckyDraw("eliminated unknown is free over a root");
      if (g.size() == 1) return std::nullopt;
      if (g.size() > 2) throw UnluckyDraw("projection does not separate solutions");
      vals[var] = ring.neg(g[0]);
    } else {
      Elem den = ring.evaluate(step.denominator, vals);
      if (ring.is_zero(den)) return std::nullopt;
      vals[var] = ring.mul(ring.evaluate(step.numerator, vals), ring.inverse(den));
    }
  }
  for (const auto& e : sys.equations)
    if (!ring.is_zero(ring.evaluate(e, vals))) return std::nullopt;
  for (const auto& d : sys.degeneracy)
    if (ring.is_zero(ring.evaluate(d, vals))) return std::nullopt;
  return vals;
}

namespace detail {

template <class F>
int count_on(const TriangularChain<F>& chain, const CrossRatioSystem<F>& sys, const UPoly<F>& g) {
  try {
    QuotientRing<F> ring(g);
    return back_substitute(chain, sys, ring) ? g.degree() : 0;
  } catch (const ZeroDivisorSplit<F>& split) {
    return count_on(chain, sys, split.factor) + count_on(chain, sys, g / split.factor);
  }
}

template <class F>
int count_leaf(const TriangularChain<F>& chain, const CrossRatioSystem<F>& sys, std::mt19937_64& rng) {
  if (chain.status != TriangularChain<F>::Status::Eliminant) return 0;
  const UPoly<F> g = squarefree_part(chain.eliminant);
  if (g.degree() < 1) return 0;
  if constexpr (std::is_same_v<F, Fp>) {
    int total = 0;
    for (const auto& f : factor_squarefree(g, rng)) total += count_on(chain, sys, f);
    return total;
  } else {
    (void)rng;
    return count_on(chain, sys, g);
  }
}

template <class F>
int count_tree(const TriangularChain<F>& chain, const CrossRatioSystem<F>& sys, std::mt19937_64& rng) {
  int total = count_leaf(chain, sys, rng);
  for (const auto& b : chain.branches) total += count_tree(b, sys, rng);
  return total;
}

}  // namespace detail

/// Number of solutions over the algebraic closure that satisfy every
/// equation and keep all points distinct, summed over the chain and its
/// branches. Over Fp each eliminant is split into irreducible factors; a
/// factor of degree k contributes k when its generic root verifies.
template <class F>
int count_preimages(const TriangularChain<F>& chain, const CrossRatioSystem<F>& sys, std::uint64_t seed = 0) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  return detail::count_tree(chain, sys, rng);
}

/// The solution above a root of the eliminant that lies in F itself.
template <class F>
std::optional<std::vector<F>> solution_at_root(const TriangularChain<F>& chain, const CrossRatioSystem<F>& sys,
                                               const F& root) {
  QuotientRing<F> ring(UPoly<F>(std::vector<F>{F(-root), F(1)}));
  auto vals = back_substitute(chain, sys, ring);
  if (!vals) return std::nullopt;
  std::vector<F> out;
  for (const auto& v : *vals) out.push_back(v.coeff(0));
  return out;
}

template <class F>
std::string format_chain(const TriangularChain<F>& chain, int indent = 0);

struct TrialRecord {
  std::uint64_t seed = 0;
  int count = 0;
  auto operator<=>(const TrialRecord&) const = default;
};

struct DegreeResult {
  int degree = 0;
  std::string provenance = "solver";
  std::vector<TrialRecord> trials;
  /// Earlier batch, kept when a disagreement forced a rerun.
  std::vector<TrialRecord> rejected_trials;
  bool consensus = true;
  FieldBackend backend = FieldBackend::Prime;
};

/// One trial: builds the system for a fresh draw (and, over Fp, a fresh
/// random 62-bit prime) and counts its solutions. Unlucky draws are redrawn
/// a bounded number of times. Edges are used exactly as given.
int solve_once(int n_vertices, std::span<const Edge> edges, std::uint64_t seed, FieldBackend backend);

/// d_T for a valid hypergraph. Vertices are first relabeled by nonincreasing
/// degree so that p1 = infinity sits on a vertex of maximal degree.
DegreeResult cross_ratio_degree(const Hypergraph& h, int trials, std::uint64_t seed,
                                FieldBackend backend = FieldBackend::Prime);

/// Same, with vertex labels and the order inside each edge used as given.
DegreeResult cross_ratio_degree(int n_vertices, std::span<const Edge> edges, int trials, std::uint64_t seed,
                                FieldBackend backend = FieldBackend::Prime);

/// Plain-text dump of the chain built for one draw, for debugging.
std::string describe_chain(const Hypergraph& h, std::uint64_t seed, FieldBackend backend);

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace crdeg
