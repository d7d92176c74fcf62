#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crdeg/hypergraph.hpp"

namespace crdeg {

// Provenance tags shared with the classification reports.
inline constexpr const char* kTagRepeatedDegreeOne = "zero:repeated-deg1";
inline constexpr const char* kTagNoMatching = "zero:no-matching";
inline constexpr const char* kTagColumnSum5 = "bound:colsum5";
inline constexpr const char* kTagColumnSum4 = "bound:colsum4";
inline constexpr const char* kTagReducedDegreeOne = "reduced:deg1";
inline constexpr const char* kTagSolver = "solver";

struct ReductionOutcome {
  enum class Kind { ZeroCertificate, UpperBound, Reduced, NoRule };

  Kind kind = Kind::NoRule;
  std::optional<int> bound;              // UpperBound only, 1 or 2
  std::optional<Hypergraph> reduced;     // Reduced only
  std::string note;                      // provenance tag or reason

  static ReductionOutcome zero(std::string tag) { return {Kind::ZeroCertificate, std::nullopt, std::nullopt, std::move(tag)}; }
  static ReductionOutcome upper_bound(int b, std::string tag) { return {Kind::UpperBound, b, std::nullopt, std::move(tag)}; }
  static ReductionOutcome reduced_to(Hypergraph h, std::string tag) { return {Kind::Reduced, std::nullopt, std::move(h), std::move(tag)}; }
  static ReductionOutcome none(std::string why = {}) { return {Kind::NoRule, std::nullopt, std::nullopt, std::move(why)}; }
};

/// A vertex in every edge makes all equations linear (d <= 1); a vertex in
/// all but one leaves a single quadric (d <= 2).
ReductionOutcome column_sum_bound(const Hypergraph& h);

/// d = 0 when some edge holds two or more degree-1 vertices.
ReductionOutcome repeated_degree_one_zero(const Hypergraph& h);

/// Deletes a degree-1 vertex together with its edge; the degree is unchanged.
/// NoRule when no degree-1 vertex sits alone in its edge or when the deletion
/// would isolate a vertex.
ReductionOutcome strip_degree_one(const Hypergraph& h);

/// Permanent of a 0/1 square matrix given as row bitmasks over n columns.
std::int64_t permanent01(std::span<const std::uint32_t> rows, int n_cols);

/// Perfect matchings between the edges and the vertices outside `deleted`
/// (edge r matches vertex v iff v is in e_r). Throws std::invalid_argument
/// unless `deleted` is three distinct vertices and |E| = n - 3.
std::int64_t matching_count(const Hypergraph& h, std::span<const int> deleted);

/// Matchings after deleting the three highest-degree vertices of the
/// degree-ordered relabeling (the gauge points).
std::int64_t gauge_matching_count(const Hypergraph& h);

/// Rules in application order: repeated degree-1 zero, matching zero,
/// column-sum bound, degree-1 strip. Only rules that fire are returned; a
/// zero certificate ends the list.
std::vector<ReductionOutcome> apply_rules(const Hypergraph& h);

}  // namespace crdeg
