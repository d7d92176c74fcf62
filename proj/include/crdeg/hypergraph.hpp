#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace crdeg {

/// Four distinct 1-based vertex labels. Inside a Hypergraph they are
/// ascending; the solver also accepts arbitrary orders.
using Edge = std::array<int, 4>;

/// Vertex degrees sorted nonincreasing.
struct ColumnSumProfile {
  std::vector<int> sums;

  std::string to_string() const;  // "3,3,3,3,2,2,2,2"
  static ColumnSumProfile parse(const std::string& text);
  auto operator<=>(const ColumnSumProfile&) const = default;
};

/// Edge-by-vertex incidence matrix. Row r holds the edge r as a bit pattern
/// in which column 0 is the most significant of the n_cols bits, so comparing
/// rows as integers compares them as big-endian bit strings.
struct BiadjacencyMatrix {
  int n_cols = 0;
  std::vector<std::uint32_t> rows;

  bool at(int row, int col) const {
    return (rows[static_cast<std::size_t>(row)] >> (n_cols - 1 - col)) & 1u;
  }
  std::vector<int> column_sums() const;
};

/// Canonical biadjacency bit-string: the row-major flattening that is
/// lexicographically least over all row and column permutations.
struct CanonicalKey {
  int n_vertices = 0;
  std::vector<std::uint32_t> rows;

  std::string to_string() const;  // rows as 0/1 strings joined by '/'
  static CanonicalKey parse(const std::string& text);
  auto operator<=>(const CanonicalKey&) const = default;
};

/// 4-uniform hypergraph on vertices 1..n_vertices.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Sorts each edge; throws std::invalid_argument on out-of-range or
  /// repeated vertices and on repeated edges. The order of edges is kept.
  Hypergraph(int n_vertices, std::vector<Edge> edges);

  static Hypergraph from_matrix(const BiadjacencyMatrix& m);
  static Hypergraph from_key(const CanonicalKey& key);

  int n_vertices() const { return n_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// degrees()[v - 1] is the degree of vertex v.
  std::vector<int> degrees() const;
  bool has_isolated_vertex() const;
  /// No isolated vertex and |E| = n - 3.
  bool valid_for_cross_ratio() const;

  BiadjacencyMatrix matrix() const;

  /// Vertex v becomes perm[v - 1] (perm is a permutation of 1..n).
  Hypergraph relabel(std::span<const int> perm) const;
  Hypergraph permute_edges(std::span<const int> order) const;
  /// Relabels so that degrees are nonincreasing, ties kept in label order.
  Hypergraph degree_ordered() const;
  /// Edge list sorted; two hypergraphs are equal iff their sorted lists are.
  Hypergraph sorted() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

CanonicalKey canonical_form(const Hypergraph& h);
bool is_isomorphic(const Hypergraph& a, const Hypergraph& b);
ColumnSumProfile column_sums(const Hypergraph& h);

/// One representative per isomorphism class of 4-uniform hypergraphs with
/// n_vertices vertices, n_edges edges and no isolated vertex, sorted by
/// canonical key. Throws std::invalid_argument when 4*n_edges < n_vertices.
std::vector<Hypergraph> enumerate_classes(int n_vertices, int n_edges);

/// Canonical keys of all classes with exactly n_edges edges, isolated
/// vertices allowed (the n-plex count checked against the cycle index).
std::vector<CanonicalKey> enumerate_all_keys(int n_vertices, int n_edges);

// Matrix text format: a header line of column sums, then one line of
// space-separated 0/1 entries per edge.

/// Writes h with columns ordered by nonincreasing degree.
void write_matrix(std::ostream& os, const Hypergraph& h);
std::string matrix_text(const Hypergraph& h);
/// Reads one matrix block; throws std::runtime_error when the header does
/// not match the rows or the rows are not 4-uniform.
Hypergraph read_matrix(std::istream& is);
Hypergraph parse_matrix(const std::string& text);

}  // namespace crdeg
