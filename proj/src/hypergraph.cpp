#include "crdeg/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crdeg {

namespace {

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<Edge> all_four_subsets(int n) {
  std::vector<Edge> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) out.push_back({a, b, c, d});
  return out;
}

}  // namespace

std::string ColumnSumProfile::to_string() const { return join_ints(sums, ','); }

ColumnSumProfile ColumnSumProfile::parse(const std::string& text) {
  ColumnSumProfile p;
  std::string cleaned;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == ' ') continue;
    cleaned += ch;
  }
  std::stringstream ss(cleaned);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty entry in column-sum profile '" + text + "'");
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0) throw std::invalid_argument("bad column-sum profile '" + text + "'");
    p.sums.push_back(v);
  }
  if (!std::is_sorted(p.sums.rbegin(), p.sums.rend())) {
    throw std::invalid_argument("column-sum profile must be nonincreasing: '" + text + "'");
  }
  return p;
}

std::vector<int> BiadjacencyMatrix::column_sums() const {
  std::vector<int> s(static_cast<std::size_t>(n_cols), 0);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < n_cols; ++c) s[static_cast<std::size_t>(c)] += at(static_cast<int>(r), c);
  return s;
}

std::string CanonicalKey::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r != 0) out += '/';
    for (int c = n_vertices - 1; c >= 0; --c) out += ((rows[r] >> c) & 1u) ? '1' : '0';
  }
  return out;
}

CanonicalKey CanonicalKey::parse(const std::string& text) {
  CanonicalKey k;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, '/')) {
    if (row.empty() || row.size() > 31) throw std::invalid_argument("bad canonical key '" + text + "'");
    if (k.rows.empty()) k.n_vertices = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != k.n_vertices) throw std::invalid_argument("ragged canonical key '" + text + "'");
    std::uint32_t bits = 0;
    for (char ch : row) {
      if (ch != '0' && ch != '1') throw std::invalid_argument("bad canonical key '" + text + "'");
      bits = (bits << 1) | static_cast<std::uint32_t>(ch == '1');
    }
    k.rows.push_back(bits);
  }
  return k;
}

Hypergraph::Hypergraph(int n_vertices, std::vector<Edge> edges) : n_(n_vertices), edges_(std::move(edges)) {
  if (n_ < 4 || n_ > 31) throw std::invalid_argument("hypergraph needs 4..31 vertices");
  std::set<Edge> seen;
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    for (int v : e) {
      if (v < 1 || v > n_) throw std::invalid_argument("edge vertex out of range");
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw std::invalid_argument("edge repeats a vertex");
    if (!seen.insert(e).second) throw std::invalid_argument("repeated edge");
  }
}

Hypergraph Hypergraph::from_matrix(const BiadjacencyMatrix& m) {
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    std::vector<int> vs;
    for (int c = 0; c < m.n_cols; ++c) {
      if (m.at(static_cast<int>(r), c)) vs.push_back(c + 1);
    }
    if (vs.size() != 4) throw std::invalid_argument("matrix row does not have four ones");
    edges.push_back({vs[0], vs[1], vs[2], vs[3]});
  }
  return Hypergraph(m.n_cols, std::move(edges));
}

Hypergraph Hypergraph::from_key(const CanonicalKey& key) {
  return from_matrix(BiadjacencyMatrix{key.n_vertices, key.rows});
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_)
    for (int v : e) ++d[static_cast<std::size_t>(v - 1)];
  return d;
}

bool Hypergraph::has_isolated_vertex() const {
  auto d = degrees();
  return std::find(d.begin(), d.end(), 0) != d.end();
}

bool Hypergraph::valid_for_cross_ratio() const { return !has_isolated_vertex() && n_edges() == n_ - 3; }

BiadjacencyMatrix Hypergraph::matrix() const {
  BiadjacencyMatrix m{n_, {}};
  for (const auto& e : edges_) {
    std::uint32_t bits = 0;
    for (int v : e) bits |= 1u << (n_ - v);
    m.rows.push_back(bits);
  }
  return m;
}

Hypergraph Hypergraph::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<Edge> out = edges_;
  for (auto& e : out)
    for (int& v : e) v = perm[static_cast<std::size_t>(v - 1)];
  return Hypergraph(n_, std::move(out));
}

Hypergraph Hypergraph::permute_edges(std::span<const int> order) const {
  if (order.size() != edges_.size()) throw std::invalid_argument("permute_edges: size mismatch");
  std::vector<Edge> out;
  for (int i : order) out.push_back(edges_.at(static_cast<std::size_t>(i)));
  return Hypergraph(n_, std::move(out));
}

Hypergraph Hypergraph::degree_ordered() const {
  auto deg = degrees();
  std::vector<int> order(static_cast<std::size_t>(n_));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return deg[static_cast<std::size_t>(a - 1)] > deg[static_cast<std::size_t>(b - 1)];
  });
  std::vector<int> perm(static_cast<std::size_t>(n_));
  for (int pos = 0; pos < n_; ++pos) perm[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)] - 1)] = pos + 1;
  return relabel(perm);
}

Hypergraph Hypergraph::sorted() const {
  auto e = edges_;
  std::sort(e.begin(), e.end());
  return Hypergraph(n_, std::move(e));
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
  auto ea = a.edges_, eb = b.edges_;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

// For a fixed row order the least row-major flattening over column orders is
// obtained by sorting columns by their top-to-bottom bit pattern, so the
// global minimum only needs a sweep over the |E|! row orders.
CanonicalKey canonical_form(const Hypergraph& h) {
  const int n = h.n_vertices();
  const int k = h.n_edges();
  if (k > 10) throw std::invalid_argument("canonical_form: too many edges for exhaustive row search");
  const auto rows = h.matrix().rows;
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);

  CanonicalKey best{n, {}};
  std::vector<std::uint32_t> codes(static_cast<std::size_t>(n));
  std::vector<std::uint32_t> candidate(static_cast<std::size_t>(k));
  bool first = true;
  do {
    for (int c = 0; c < n; ++c) {
      std::uint32_t code = 0;
      for (int r = 0; r < k; ++r) {
        code = (code << 1) | ((rows[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] >> (n - 1 - c)) & 1u);
      }
      codes[static_cast<std::size_t>(c)] = code;
    }
    std::sort(codes.begin(), codes.end());
    for (int r = 0; r < k; ++r) {
      std::uint32_t bits = 0;
      for (int c = 0; c < n; ++c) bits = (bits << 1) | ((codes[static_cast<std::size_t>(c)] >> (k - 1 - r)) & 1u);
      candidate[static_cast<std::size_t>(r)] = bits;
    }
    if (first || candidate < best.rows) {
      best.rows = candidate;
      first = false;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.n_vertices() != b.n_vertices() || a.n_edges() != b.n_edges()) return false;
  return canonical_form(a) == canonical_form(b);
}

ColumnSumProfile column_sums(const Hypergraph& h) {
  ColumnSumProfile p{h.degrees()};
  std::sort(p.sums.begin(), p.sums.end(), std::greater<>());
  return p;
}

// Orderly level-by-level generation: every hypergraph with j edges arises
// from a class representative with j-1 edges plus one edge, so extending all
// representatives and deduplicating by canonical key is exhaustive.
std::vector<CanonicalKey> enumerate_all_keys(int n_vertices, int n_edges) {
  if (n_vertices < 4 || n_vertices > 31) throw std::invalid_argument("enumerate: n_vertices out of range");
  if (n_edges < 0) throw std::invalid_argument("enumerate: negative edge count");
  const auto pool = all_four_subsets(n_vertices);
  std::set<CanonicalKey> level{CanonicalKey{n_vertices, {}}};
  for (int j = 1; j <= n_edges; ++j) {
    std::set<CanonicalKey> next;
    for (const auto& key : level) {
      Hypergraph base = key.rows.empty() ? Hypergraph(n_vertices, {}) : Hypergraph::from_key(key);
      std::set<Edge> present(base.edges().begin(), base.edges().end());
      for (const auto& e : pool) {
        if (present.count(e)) continue;
        auto edges = base.edges();
        edges.push_back(e);
        next.insert(canonical_form(Hypergraph(n_vertices, std::move(edges))));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

std::vector<Hypergraph> enumerate_classes(int n_vertices, int n_edges) {
  if (n_vertices < 4) throw std::invalid_argument("enumerate_classes: need at least 4 vertices");
  if (n_edges < 1) throw std::invalid_argument("enumerate_classes: need at least one edge");
  if (4 * n_edges < n_vertices) {
    throw std::invalid_argument("enumerate_classes: " + std::to_string(n_edges) + " edges cannot cover " +
                                std::to_string(n_vertices) + " vertices");
  }
  std::vector<Hypergraph> out;
  for (const auto& key : enumerate_all_keys(n_vertices, n_edges)) {
    Hypergraph h = Hypergraph::from_key(key);
    if (!h.has_isolated_vertex()) out.push_back(std::move(h));
  }
  return out;
}

void write_matrix(std::ostream& os, const Hypergraph& h) {
  Hypergraph d = h.degree_ordered();
  os << join_ints(d.matrix().column_sums(), ' ') << '\n';
  const auto m = d.matrix();
  for (int r = 0; r < d.n_edges(); ++r) {
    for (int c = 0; c < d.n_vertices(); ++c) {
      if (c != 0) os << ' ';
      os << (m.at(r, c) ? '1' : '0');
    }
    os << '\n';
  }
}

std::string matrix_text(const Hypergraph& h) {
  std::ostringstream os;
  write_matrix(os, h);
  return os.str();
}

namespace {

std::vector<int> parse_int_line(const std::string& line) {
  std::istringstream ss(line);
  std::vector<int> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::runtime_error("matrix: non-integer token '" + tok + "'");
    }
    if (used != tok.size()) throw std::runtime_error("matrix: non-integer token '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

Hypergraph read_matrix(std::istream& is) {
  std::string line;
  while (std::getline(is, line) && blank(line)) {
  }
  if (!is) throw std::runtime_error("matrix: unexpected end of input");
  const auto header = parse_int_line(line);
  const int n = static_cast<int>(header.size());
  if (n < 4 || n > 31) throw std::runtime_error("matrix: header must list 4..31 column sums");
  BiadjacencyMatrix m{n, {}};
  while (std::getline(is, line) && !blank(line)) {
    auto row = parse_int_line(line);
    if (static_cast<int>(row.size()) != n) throw std::runtime_error("matrix: row length differs from header");
    std::uint32_t bits = 0;
    int ones = 0;
    for (int v : row) {
      if (v != 0 && v != 1) throw std::runtime_error("matrix: entries must be 0 or 1");
      bits = (bits << 1) | static_cast<std::uint32_t>(v);
      ones += v;
    }
    if (ones != 4) throw std::runtime_error("matrix: every row needs exactly four ones");
    m.rows.push_back(bits);
  }
  if (m.rows.empty()) throw std::runtime_error("matrix: no rows after header");
  if (m.column_sums() != header) throw std::runtime_error("matrix: header does not match column sums");
  return Hypergraph::from_matrix(m);
}

Hypergraph parse_matrix(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

}  // namespace crdeg
