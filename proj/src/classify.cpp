#include "crdeg/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "crdeg/reduce.hpp"

namespace crdeg {

namespace {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::map<std::string, std::string> parse_fields(std::istringstream& is) {
  std::map<std::string, std::string> out;
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::runtime_error("malformed field: " + tok);
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

const std::string& field_at(const std::map<std::string, std::string>& f, const std::string& name) {
  auto it = f.find(name);
  if (it == f.end()) throw std::runtime_error("missing field: " + name);
  return it->second;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  os << content;
  os.flush();
  if (!os) throw std::runtime_error("write failed: " + path.string());
}

std::vector<std::string> check_record(const ClassRecord& r) {
  std::vector<std::string> out;
  const std::string key = r.key.to_string();
  if (!r.consensus) out.push_back("non-consensus key=" + key);
  const auto rules = apply_rules(Hypergraph::from_key(r.key));
  const std::string expected = rules.empty() ? kTagSolver : rules.front().note;
  if (r.provenance != expected) out.push_back("provenance " + r.provenance + " != " + expected + " key=" + key);
  for (const auto& rule : rules) {
    switch (rule.kind) {
      case ReductionOutcome::Kind::ZeroCertificate:
        if (r.degree != 0) out.push_back(rule.note + " but degree " + std::to_string(r.degree) + " key=" + key);
        break;
      case ReductionOutcome::Kind::UpperBound:
        if (r.degree > *rule.bound) out.push_back(rule.note + " but degree " + std::to_string(r.degree) + " key=" + key);
        break;
      case ReductionOutcome::Kind::Reduced:
        if (!r.reduced_degree || *r.reduced_degree != r.degree) {
          out.push_back(rule.note + " changed the degree key=" + key);
        }
        break;
      case ReductionOutcome::Kind::NoRule:
        break;
    }
  }
  return out;
}

}  // namespace

std::string RunConfig::echo() const {
  std::ostringstream os;
  os << "vertices=" << n_vertices << " edges=" << n_edges << " seed=" << seed << " trials=" << trials
     << " field=" << to_string(field) << " filter=" << (filter ? filter->to_string() : "-");
  return os.str();
}

std::uint64_t RunConfig::hash() const {
  RunConfig c = *this;
  c.filter.reset();
  return fnv1a64(c.echo());
}

RunConfig default_config() {
  RunConfig c;
  if (const char* dir = std::getenv("CRDEG_CACHE_DIR"); dir && *dir) c.cache_dir = dir;
  return c;
}

std::vector<std::pair<ColumnSumProfile, int>> Report::colsum_rows() const {
  std::vector<std::pair<ColumnSumProfile, int>> rows(table_colsum.begin(), table_colsum.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return rows;
}

ClassRecord classify_one(const Hypergraph& h, const RunConfig& cfg) {
  ClassRecord r;
  r.key = canonical_form(h);
  const Hypergraph g = Hypergraph::from_key(r.key);
  r.profile = column_sums(g);
  const std::uint64_t seed = mix_seed(cfg.seed, fnv1a64(r.key.to_string()));
  auto res = cross_ratio_degree(g, cfg.trials, seed, cfg.field);
  r.degree = res.degree;
  r.trials = std::move(res.trials);
  r.consensus = res.consensus;
  r.matching_count = gauge_matching_count(g);
  const auto rules = apply_rules(g);
  r.provenance = rules.empty() ? kTagSolver : rules.front().note;
  for (const auto& rule : rules) {
    if (rule.kind == ReductionOutcome::Kind::Reduced) {
      r.reduced_degree = cross_ratio_degree(*rule.reduced, cfg.trials, seed, cfg.field).degree;
    }
  }
  return r;
}

void rebuild_tables(Report& rep) {
  rep.table_colsum.clear();
  rep.table_degree.clear();
  rep.max_degree = 0;
  for (const auto& r : rep.records) {
    ++rep.table_colsum[r.profile];
    ++rep.table_degree[r.degree];
    rep.max_degree = std::max(rep.max_degree, r.degree);
  }
}

std::filesystem::path cache_file(const RunConfig& cfg) {
  std::ostringstream name;
  name << "classes-" << std::hex << cfg.hash() << ".cache";
  return cfg.cache_dir / name.str();
}

Report run_classification(const RunConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("run_classification: trials must be positive");
  if (cfg.threads < 1) throw std::invalid_argument("run_classification: threads must be positive");
  std::vector<Hypergraph> classes = enumerate_classes(cfg.n_vertices, cfg.n_edges);
  if (cfg.filter) {
    std::erase_if(classes, [&](const Hypergraph& h) { return column_sums(h) != *cfg.filter; });
  }

  std::map<CanonicalKey, ClassRecord> cached;
  std::ofstream cache_out;
  std::mutex cache_mutex;
  if (!cfg.cache_dir.empty()) {
    std::filesystem::create_directories(cfg.cache_dir);
    const auto path = cache_file(cfg);
    if (cfg.resume) {
      std::ifstream in(path);
      std::string line;
      while (std::getline(in, line)) {
        try {
          auto r = parse_record(line);
          cached[r.key] = std::move(r);
        } catch (const std::exception&) {
          // A line cut short by an interrupted run; recompute that class.
        }
      }
    }
    cache_out.open(path, cfg.resume ? std::ios::app : std::ios::trunc);
    if (!cache_out) throw std::runtime_error("cannot open cache: " + path.string());
  }

  std::vector<std::optional<ClassRecord>> slots(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (auto it = cached.find(canonical_form(classes[i])); it != cached.end()) slots[i] = it->second;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= classes.size()) return;
      if (slots[i]) continue;
      try {
        ClassRecord r = classify_one(classes[i], cfg);
        std::lock_guard lock(cache_mutex);
        if (cache_out.is_open()) cache_out << format_record(r) << '\n' << std::flush;
        slots[i] = std::move(r);
      } catch (...) {
        std::lock_guard lock(cache_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (cfg.threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < cfg.threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  Report rep;
  rep.config = cfg;
  for (auto& s : slots) rep.records.push_back(std::move(*s));
  std::sort(rep.records.begin(), rep.records.end(),
            [](const ClassRecord& a, const ClassRecord& b) { return a.key < b.key; });
  rebuild_tables(rep);
  for (const auto& r : rep.records) {
    auto f = check_record(r);
    rep.failures.insert(rep.failures.end(), f.begin(), f.end());
  }
  return rep;
}

std::string format_record(const ClassRecord& r) {
  std::ostringstream os;
  os << "class key=" << r.key.to_string() << " profile=" << r.profile.to_string() << " degree=" << r.degree
     << " provenance=" << r.provenance << " matching=" << r.matching_count
     << " reduced=" << (r.reduced_degree ? std::to_string(*r.reduced_degree) : "-")
     << " consensus=" << (r.consensus ? 1 : 0) << " trials=";
  for (std::size_t i = 0; i < r.trials.size(); ++i) {
    os << (i ? "," : "") << r.trials[i].seed << ':' << r.trials[i].count;
  }
  return os.str();
}

ClassRecord parse_record(const std::string& line) {
  std::istringstream is(line);
  std::string head;
  if (!(is >> head) || head != "class") throw std::runtime_error("not a class record: " + line);
  auto f = parse_fields(is);
  ClassRecord r;
  r.key = CanonicalKey::parse(field_at(f, "key"));
  r.profile = ColumnSumProfile::parse(field_at(f, "profile"));
  r.degree = std::stoi(field_at(f, "degree"));
  r.provenance = field_at(f, "provenance");
  r.matching_count = std::stoll(field_at(f, "matching"));
  if (const auto& red = field_at(f, "reduced"); red != "-") r.reduced_degree = std::stoi(red);
  r.consensus = field_at(f, "consensus") == "1";
  std::istringstream ts(field_at(f, "trials"));
  std::string item;
  while (std::getline(ts, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw std::runtime_error("malformed trial: " + item);
    r.trials.push_back({std::stoull(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
  }
  if (r.trials.empty()) throw std::runtime_error("record without trials: " + line);
  if (r.profile.sums.size() != static_cast<std::size_t>(r.key.n_vertices)) {
    throw std::runtime_error("profile does not match key: " + line);
  }
  return r;
}

std::string serialize_report(const Report& rep) {
  std::ostringstream os;
  os << "config " << rep.config.echo() << "\n";
  for (const auto& r : rep.records) os << format_record(r) << "\n";
  for (const auto& [p, c] : rep.colsum_rows()) os << "table colsum " << p.to_string() << " " << c << "\n";
  for (const auto& [d, c] : rep.table_degree) os << "table degree " << d << " " << c << "\n";
  os << "max_degree " << rep.max_degree << "\n";
  for (const auto& f : rep.failures) os << "failure " << f << "\n";
  return os.str();
}

Report parse_report(const std::string& text) {
  Report rep;
  std::istringstream is(text);
  std::string line;
  bool saw_config = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "config") {
      auto f = parse_fields(ls);
      rep.config.n_vertices = std::stoi(field_at(f, "vertices"));
      rep.config.n_edges = std::stoi(field_at(f, "edges"));
      rep.config.seed = std::stoull(field_at(f, "seed"));
      rep.config.trials = std::stoi(field_at(f, "trials"));
      rep.config.field = parse_backend(field_at(f, "field"));
      if (const auto& flt = field_at(f, "filter"); flt != "-") rep.config.filter = ColumnSumProfile::parse(flt);
      saw_config = true;
    } else if (head == "class") {
      rep.records.push_back(parse_record(line));
    } else if (head == "table") {
      std::string kind, what;
      int count = 0;
      if (!(ls >> kind >> what >> count)) throw std::runtime_error("malformed table row: " + line);
      if (kind == "colsum") {
        rep.table_colsum[ColumnSumProfile::parse(what)] = count;
      } else if (kind == "degree") {
        rep.table_degree[std::stoi(what)] = count;
      } else {
        throw std::runtime_error("unknown table: " + kind);
      }
    } else if (head == "max_degree") {
      if (!(ls >> rep.max_degree)) throw std::runtime_error("malformed max_degree line");
    } else if (head == "failure") {
      rep.failures.push_back(line.substr(std::string("failure ").size()));
    } else {
      throw std::runtime_error("unknown report line: " + line);
    }
  }
  if (!saw_config) throw std::runtime_error("report has no config line");
  return rep;
}

bool operator==(const Report& a, const Report& b) {
  return a.config.echo() == b.config.echo() && a.records == b.records && a.table_colsum == b.table_colsum &&
         a.table_degree == b.table_degree && a.max_degree == b.max_degree && a.failures == b.failures;
}

std::string matrix_listing(const Report& rep, int degree) {
  std::ostringstream os;
  bool first = true;
  for (const auto& r : rep.records) {
    if (r.degree != degree) continue;
    if (!first) os << "\n";
    first = false;
    write_matrix(os, Hypergraph::from_key(r.key));
  }
  return os.str();
}

std::vector<std::filesystem::path> emit_tables(const Report& rep, const std::filesystem::path& dir,
                                               const std::vector<int>& listed_degrees) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& name, const std::string& content) {
    write_file(dir / name, content);
    written.push_back(dir / name);
  };
  emit("report.txt", serialize_report(rep));
  std::ostringstream colsum, degree;
  if (rep.config.format == OutputFormat::Csv) {
    colsum << "profile,count\n";
    for (const auto& [p, c] : rep.colsum_rows()) colsum << '"' << p.to_string() << "\"," << c << "\n";
    degree << "degree,count\n";
    for (const auto& [d, c] : rep.table_degree) degree << d << "," << c << "\n";
    std::ostringstream classes;
    classes << "key,profile,degree,provenance,matching_count,consensus\n";
    for (const auto& r : rep.records) {
      classes << r.key.to_string() << ",\"" << r.profile.to_string() << "\"," << r.degree << "," << r.provenance
              << "," << r.matching_count << "," << (r.consensus ? 1 : 0) << "\n";
    }
    emit("colsum_table.csv", colsum.str());
    emit("degree_table.csv", degree.str());
    emit("classes.csv", classes.str());
  } else {
    for (const auto& [p, c] : rep.colsum_rows()) colsum << "(" << p.to_string() << ") " << c << "\n";
    for (const auto& [d, c] : rep.table_degree) degree << d << " " << c << "\n";
    emit("colsum_table.txt", colsum.str());
    emit("degree_table.txt", degree.str());
  }
  for (int d : listed_degrees) emit("matrices_d" + std::to_string(d) + ".txt", matrix_listing(rep, d));
  return written;
}

GoldenData load_golden(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read golden file: " + path.string());
  GoldenData g;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    auto read_int = [&](std::optional<int>& dst) {
      int v = 0;
      if (!(ls >> v)) fail("expected an integer");
      dst = v;
    };
    if (head == "vertices") {
      read_int(g.n_vertices);
    } else if (head == "edges") {
      read_int(g.n_edges);
    } else if (head == "classes") {
      read_int(g.classes);
    } else if (head == "max_degree") {
      read_int(g.max_degree);
    } else if (head == "colsum" || head == "degree") {
      std::string what;
      int count = 0;
      if (!(ls >> what >> count)) fail("expected a key and a count");
      try {
        if (head == "colsum") {
          g.colsum[ColumnSumProfile::parse(what)] = count;
        } else {
          g.degree[std::stoi(what)] = count;
        }
      } catch (const std::exception& e) {
        fail(e.what());
      }
    } else if (head == "matrices") {
      int d = 0;
      if (!(ls >> d)) fail("expected a degree");
      std::string block;
      bool closed = false;
      auto flush = [&] {
        if (block.empty()) return;
        try {
          g.matrices[d].push_back(parse_matrix(block));
        } catch (const std::exception& e) {
          fail(e.what());
        }
        block.clear();
      };
      while (std::getline(is, line)) {
        ++line_no;
        if (line == "end") {
          closed = true;
          break;
        }
        if (line.empty()) {
          flush();
        } else {
          block += line + "\n";
        }
      }
      flush();
      if (!closed) fail("matrices block without end");
      g.matrices.try_emplace(d);
    } else {
      fail("unknown line: " + line);
    }
  }
  return g;
}

std::vector<std::string> verify_against_golden(const Report& rep, const GoldenData& g) {
  std::vector<std::string> diff;
  auto scalar = [&](const char* name, const std::optional<int>& want, int got) {
    if (want && *want != got) {
      diff.push_back(std::string(name) + ": golden " + std::to_string(*want) + ", report " + std::to_string(got));
    }
  };
  scalar("vertices", g.n_vertices, rep.config.n_vertices);
  scalar("edges", g.n_edges, rep.config.n_edges);
  scalar("classes", g.classes, static_cast<int>(rep.records.size()));
  scalar("max_degree", g.max_degree, rep.max_degree);
  auto table = [&](const char* name, const auto& want, const auto& got, auto label) {
    if (want.empty()) return;
    std::set<typename std::decay_t<decltype(want)>::key_type> keys;
    for (const auto& [k, v] : want) keys.insert(k);
    for (const auto& [k, v] : got) keys.insert(k);
    for (const auto& k : keys) {
      const int w = want.count(k) ? want.at(k) : 0;
      const int r = got.count(k) ? got.at(k) : 0;
      if (w != r) {
        diff.push_back(std::string(name) + " " + label(k) + ": golden " + std::to_string(w) + ", report " +
                       std::to_string(r));
      }
    }
  };
  table("colsum", g.colsum, rep.table_colsum, [](const ColumnSumProfile& p) { return p.to_string(); });
  table("degree", g.degree, rep.table_degree, [](int d) { return std::to_string(d); });
  for (const auto& [d, hs] : g.matrices) {
    std::set<CanonicalKey> want, got;
    for (const auto& h : hs) want.insert(canonical_form(h));
    for (const auto& r : rep.records)
      if (r.degree == d) got.insert(r.key);
    for (const auto& k : want)
      if (!got.count(k)) diff.push_back("degree " + std::to_string(d) + ": missing class " + k.to_string());
    for (const auto& k : got)
      if (!want.count(k)) diff.push_back("degree " + std::to_string(d) + ": unexpected class " + k.to_string());
  }
  return diff;
}

std::vector<std::string> verify_against_golden(const Report& rep, const std::filesystem::path& path) {
  return verify_against_golden(rep, load_golden(path));
}

}  // namespace crdeg
