#include "crdeg/reduce.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace crdeg {

ReductionOutcome column_sum_bound(const Hypergraph& h) {
  const auto deg = h.degrees();
  const int max_deg = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  const int m = h.n_edges();
  if (m >= 1 && max_deg == m) return ReductionOutcome::upper_bound(1, kTagColumnSum5);
  if (m >= 2 && max_deg == m - 1) return ReductionOutcome::upper_bound(2, kTagColumnSum4);
  return ReductionOutcome::none();
}

ReductionOutcome repeated_degree_one_zero(const Hypergraph& h) {
  const auto deg = h.degrees();
  for (const auto& e : h.edges()) {
    int ones = 0;
    for (int v : e) ones += deg[static_cast<std::size_t>(v - 1)] == 1;
    if (ones >= 2) return ReductionOutcome::zero(kTagRepeatedDegreeOne);
  }
  return ReductionOutcome::none();
}

ReductionOutcome strip_degree_one(const Hypergraph& h) {
  const auto deg = h.degrees();
  for (int v = h.n_vertices(); v >= 1; --v) {
    if (deg[static_cast<std::size_t>(v - 1)] != 1) continue;
    const auto it = std::find_if(h.edges().begin(), h.edges().end(),
                                 [v](const Edge& e) { return std::find(e.begin(), e.end(), v) != e.end(); });
    const Edge& e = *it;
    bool alone = true;
    bool isolates = false;
    for (int u : e) {
      if (u == v) continue;
      if (deg[static_cast<std::size_t>(u - 1)] == 1) alone = false;
      if (deg[static_cast<std::size_t>(u - 1)] - 1 == 0) isolates = true;
    }
    if (!alone) continue;
    if (isolates) return ReductionOutcome::none("deletion would isolate a vertex");
    // Drop e, then close the gap left by v.
    std::vector<Edge> rest;
    for (const auto& f : h.edges()) {
      if (&f == &e) continue;
      Edge g = f;
      for (int& u : g) {
        if (u > v) --u;
      }
      rest.push_back(g);
    }
    return ReductionOutcome::reduced_to(Hypergraph(h.n_vertices() - 1, std::move(rest)), kTagReducedDegreeOne);
  }
  return ReductionOutcome::none("no degree-1 vertex alone in its edge");
}

// Ryser-free DP over column subsets: dp[S] counts matchings of the first
// popcount(S) rows onto the columns S.
std::int64_t permanent01(std::span<const std::uint32_t> rows, int n_cols) {
  const int n = static_cast<int>(rows.size());
  if (n != n_cols) throw std::invalid_argument("permanent01: matrix must be square");
  if (n > 20) throw std::invalid_argument("permanent01: matrix too large");
  std::vector<std::int64_t> dp(std::size_t{1} << n, 0);
  dp[0] = 1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (dp[s] == 0) continue;
    const int r = std::popcount(s);
    if (r == n) continue;
    for (int c = 0; c < n; ++c) {
      if ((s >> c) & 1u) continue;
      if ((rows[static_cast<std::size_t>(r)] >> c) & 1u) dp[s | (1u << c)] += dp[s];
    }
  }
  return dp[(std::size_t{1} << n) - 1];
}

std::int64_t matching_count(const Hypergraph& h, std::span<const int> deleted) {
  if (deleted.size() != 3) throw std::invalid_argument("matching_count: deleted set must have exactly 3 vertices");
  std::set<int> del(deleted.begin(), deleted.end());
  if (del.size() != 3) throw std::invalid_argument("matching_count: deleted vertices must be distinct");
  for (int v : del) {
    if (v < 1 || v > h.n_vertices()) throw std::invalid_argument("matching_count: vertex out of range");
  }
  if (h.n_edges() != h.n_vertices() - 3) throw std::invalid_argument("matching_count: need |E| = n - 3");
  std::vector<int> column_of(static_cast<std::size_t>(h.n_vertices()) + 1, -1);
  int next = 0;
  for (int v = 1; v <= h.n_vertices(); ++v) {
    if (!del.count(v)) column_of[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<std::uint32_t> rows;
  for (const auto& e : h.edges()) {
    std::uint32_t bits = 0;
    for (int v : e) {
      int c = column_of[static_cast<std::size_t>(v)];
      if (c >= 0) bits |= 1u << c;
    }
    rows.push_back(bits);
  }
  return permanent01(rows, next);
}

std::int64_t gauge_matching_count(const Hypergraph& h) {
  const int gauge[3] = {1, 2, 3};
  return matching_count(h.degree_ordered(), gauge);
}

std::vector<ReductionOutcome> apply_rules(const Hypergraph& h) {
  std::vector<ReductionOutcome> out;
  if (auto r = repeated_degree_one_zero(h); r.kind == ReductionOutcome::Kind::ZeroCertificate) {
    out.push_back(std::move(r));
    return out;
  }
  if (h.n_edges() == h.n_vertices() - 3 && gauge_matching_count(h) == 0) {
    out.push_back(ReductionOutcome::zero(kTagNoMatching));
    return out;
  }
  if (auto r = column_sum_bound(h); r.kind != ReductionOutcome::Kind::NoRule) out.push_back(std::move(r));
  if (auto r = strip_degree_one(h); r.kind != ReductionOutcome::Kind::NoRule) out.push_back(std::move(r));
  return out;
}

}  // namespace crdeg
