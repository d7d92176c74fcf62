#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crdeg/hypergraph.hpp"
#include "crdeg/solver.hpp"

namespace crdeg {

enum class OutputFormat { Text, Csv };

struct RunConfig {
  int n_vertices = 8;
  int n_edges = 5;
  std::uint64_t seed = 1;
  int trials = 5;
  FieldBackend field = FieldBackend::Prime;
  OutputFormat format = OutputFormat::Text;
  /// Directory for per-class records; empty disables caching.
  std::filesystem::path cache_dir;
  std::optional<ColumnSumProfile> filter;
  bool resume = false;
  int threads = 1;

  /// "vertices=8 edges=5 seed=1 trials=5 field=prime filter=-"
  std::string echo() const;
  /// Hash of the settings that determine a class record (not the filter).
  std::uint64_t hash() const;
};

/// RunConfig defaults, with CRDEG_CACHE_DIR as the cache directory when set.
RunConfig default_config();

struct ClassRecord {
  CanonicalKey key;
  ColumnSumProfile profile;
  int degree = 0;
  /// Tag of the first rule that fired, or "solver".
  std::string provenance;
  std::vector<TrialRecord> trials;
  bool consensus = true;
  std::int64_t matching_count = 0;
  /// Degree after deleting a degree-1 vertex with its edge, when that applies.
  std::optional<int> reduced_degree;

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

struct Report {
  RunConfig config;
  std::vector<ClassRecord> records;  // sorted by key
  std::map<ColumnSumProfile, int> table_colsum;
  std::map<int, int> table_degree;
  int max_degree = 0;
  /// Non-consensus classes and rule/degree disagreements, one line each.
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  /// Column-sum rows by decreasing count, ties by increasing profile.
  std::vector<std::pair<ColumnSumProfile, int>> colsum_rows() const;
};

/// Enumerates, applies the reduction rules, solves every class and assembles
/// the tables. Deterministic for a fixed (seed, trials, field).
Report run_classification(const RunConfig& cfg);

/// Record for a single class, as run_classification computes it.
ClassRecord classify_one(const Hypergraph& h, const RunConfig& cfg);

/// Rebuilds tables and max_degree from the records.
void rebuild_tables(Report& rep);

std::string format_record(const ClassRecord& r);
ClassRecord parse_record(const std::string& line);

/// Line-oriented text document; parse_report(serialize_report(r)) == r.
std::string serialize_report(const Report& rep);
Report parse_report(const std::string& text);
bool operator==(const Report& a, const Report& b);

std::filesystem::path cache_file(const RunConfig& cfg);

/// Writes report, column-sum table, degree table and one matrix listing per
/// requested degree into `dir`. Returns the paths written.
std::vector<std::filesystem::path> emit_tables(const Report& rep, const std::filesystem::path& dir,
                                               const std::vector<int>& listed_degrees = {3, 4});

/// Matrix listing for one degree: blocks in matrix text format separated by
/// blank lines.
std::string matrix_listing(const Report& rep, int degree);

struct GoldenData {
  std::optional<int> n_vertices;
  std::optional<int> n_edges;
  std::optional<int> classes;
  std::optional<int> max_degree;
  std::map<ColumnSumProfile, int> colsum;
  std::map<int, int> degree;
  std::map<int, std::vector<Hypergraph>> matrices;
};

/// Throws std::runtime_error naming the path when the file is missing or
/// malformed.
GoldenData load_golden(const std::filesystem::path& path);

/// One line per difference; empty when the report matches every section the
/// golden file provides. Matrix sets are compared by canonical key.
std::vector<std::string> verify_against_golden(const Report& rep, const GoldenData& golden);
std::vector<std::string> verify_against_golden(const Report& rep, const std::filesystem::path& path);

}  // namespace crdeg
