#include "crdeg/solver.hpp"

#include <sstream>

namespace crdeg {

std::string to_string(FieldBackend b) { return b == FieldBackend::Prime ? "prime" : "rational"; }

FieldBackend parse_backend(const std::string& s) {
  if (s == "prime") return FieldBackend::Prime;
  if (s == "rational") return FieldBackend::Rational;
  throw std::invalid_argument("unknown field backend: " + s);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

template <>
Fp random_scalar<Fp>(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(1, Fp::modulus() - 1);
  Fp v;
  do {
    v = Fp(static_cast<std::int64_t>(dist(rng)));
  } while (is_zero(v));
  return v;
}

template <>
Rational random_scalar<Rational>(std::mt19937_64& rng) {
  constexpr std::int64_t kRange = std::int64_t{1} << 20;
  std::uniform_int_distribution<std::int64_t> num(-kRange, kRange);
  std::uniform_int_distribution<std::int64_t> den(1, kRange);
  std::int64_t n = 0;
  while (n == 0) n = num(rng);
  Rational r(mpz_class(std::to_string(n)), mpz_class(std::to_string(den(rng))));
  r.canonicalize();
  return r;
}

namespace {

template <class F>
std::string status_name(typename TriangularChain<F>::Status s) {
  using Status = typename TriangularChain<F>::Status;
  switch (s) {
    case Status::Eliminant:
      return "eliminant";
    case Status::Inconsistent:
      return "inconsistent";
    case Status::Degenerate:
      return "degenerate";
    case Status::Underdetermined:
      return "underdetermined";
  }
  return "?";
}

template <class F>
int solve_in(int n_vertices, std::span<const Edge> edges, std::uint64_t seed) {
  auto draw = draw_parameters<F>(static_cast<int>(edges.size()), seed);
  auto sys = gauge_and_build<F>(n_vertices, edges, draw);
  auto chain = triangularize(sys, seed);
  return count_preimages(chain, sys, seed);
}

template <class F>
std::string describe_in(const Hypergraph& h, std::uint64_t seed) {
  auto g = h.degree_ordered();
  auto draw = draw_parameters<F>(g.n_edges(), seed);
  auto sys = gauge_and_build<F>(g, draw);
  std::ostringstream os;
  os << "edges:";
  for (const auto& e : g.edges()) os << " {" << e[0] << "," << e[1] << "," << e[2] << "," << e[3] << "}";
  os << "\nequations:\n";
  for (const auto& e : sys.equations) os << "  " << e.to_string() << "\n";
  os << format_chain(triangularize(sys, seed));
  return os.str();
}

std::vector<TrialRecord> run_batch(int n_vertices, std::span<const Edge> edges, int trials, std::uint64_t seed,
                                   std::uint64_t salt0, FieldBackend backend) {
  std::vector<TrialRecord> out;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = mix_seed(seed, salt0 + static_cast<std::uint64_t>(t));
    out.push_back({s, solve_once(n_vertices, edges, s, backend)});
  }
  return out;
}

bool all_equal(const std::vector<TrialRecord>& v) {
  return std::all_of(v.begin(), v.end(), [&](const TrialRecord& r) { return r.count == v.front().count; });
}

}  // namespace

template <class F>
std::string format_chain(const TriangularChain<F>& chain, int indent) {
  using Step = EliminationStep<F>;
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::ostringstream os;
  for (const auto& c : chain.vanishing) os << pad << "require " << c.poly.to_string() << " = 0\n";
  for (const auto& c : chain.nonvanishing) os << pad << "require " << c.poly.to_string() << " != 0\n";
  for (const auto& s : chain.steps) {
    const std::string v = "p" + std::to_string(s.var + 1);
    switch (s.kind) {
      case Step::Kind::Linear:
        os << pad << v << " = (" << s.numerator.to_string() << ")";
        if (!s.denominator.is_constant()) os << " / (" << s.denominator.to_string() << ")";
        os << "\n";
        break;
      case Step::Kind::Shear:
        os << pad << "shear " << v << " -> " << s.numerator.to_string() << "\n";
        break;
      case Step::Kind::Resultant:
        os << pad << "resultant eliminating " << v << " from " << s.equations.size() << " equations\n";
        break;
    }
  }
  os << pad << "status " << status_name<F>(chain.status);
  if (!chain.note.empty()) os << " (" << chain.note << ")";
  os << "\n";
  if (chain.status == TriangularChain<F>::Status::Eliminant) {
    const std::string v = chain.eliminant_var ? "p" + std::to_string(*chain.eliminant_var + 1) : "t";
    os << pad << "eliminant degree " << chain.eliminant.degree() << " in " << v << ": " << chain.eliminant.to_string(v)
       << "\n";
  }
  for (std::size_t i = 0; i < chain.branches.size(); ++i) {
    os << pad << "branch " << i + 1 << ":\n" << format_chain(chain.branches[i], indent + 2);
  }
  return os.str();
}

template std::string format_chain<Fp>(const TriangularChain<Fp>&, int);
template std::string format_chain<Rational>(const TriangularChain<Rational>&, int);

int solve_once(int n_vertices, std::span<const Edge> edges, std::uint64_t seed, FieldBackend backend) {
  constexpr int kMaxRedraws = 16;
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    const std::uint64_t s = attempt == 0 ? seed : mix_seed(seed, 1000 + static_cast<std::uint64_t>(attempt));
    try {
      if (backend == FieldBackend::Prime) {
        std::mt19937_64 rng(s);
        FpModulusGuard guard(random_prime(rng, 62));
        return solve_in<Fp>(n_vertices, edges, s);
      }
      return solve_in<Rational>(n_vertices, edges, s);
    } catch (const UnluckyDraw&) {
      continue;
    }
  }
  throw SolverError("solve_once: every redraw was unlucky");
}

DegreeResult cross_ratio_degree(int n_vertices, std::span<const Edge> edges, int trials, std::uint64_t seed,
                                FieldBackend backend) {
  if (trials < 1) throw std::invalid_argument("cross_ratio_degree: trials must be positive");
  DegreeResult r;
  r.backend = backend;
  r.trials = run_batch(n_vertices, edges, trials, seed, 0, backend);
  if (!all_equal(r.trials)) {
    r.rejected_trials = std::move(r.trials);
    r.trials = run_batch(n_vertices, edges, 2 * trials, seed, static_cast<std::uint64_t>(trials), backend);
  }
  r.consensus = all_equal(r.trials);
  r.degree = std::max_element(r.trials.begin(), r.trials.end(), [](const TrialRecord& a, const TrialRecord& b) {
               return a.count < b.count;
             })->count;
  return r;
}

DegreeResult cross_ratio_degree(const Hypergraph& h, int trials, std::uint64_t seed, FieldBackend backend) {
  if (!h.valid_for_cross_ratio()) throw std::invalid_argument("cross_ratio_degree: need |E| = n - 3 and no isolated vertex");
  const Hypergraph g = h.degree_ordered();
  return cross_ratio_degree(g.n_vertices(), g.edges(), trials, seed, backend);
}

std::string describe_chain(const Hypergraph& h, std::uint64_t seed, FieldBackend backend) {
  if (backend == FieldBackend::Prime) {
    std::mt19937_64 rng(seed);
    FpModulusGuard guard(random_prime(rng, 62));
    return describe_in<Fp>(h, seed);
  }
  return describe_in<Rational>(h, seed);
}

}  // namespace crdeg
