#include <iostream>

#include <CLI11.hpp>

#include "crdeg/classify.hpp"

int main(int argc, char** argv) {
  using namespace crdeg;
  RunConfig cfg = default_config();
  CLI::App app{"Cross-ratio degrees of 4-uniform hypergraphs"};
  std::string field = "prime";
  std::string format = "text";
  std::string filter;
  std::string out_dir;
  std::string golden;
  std::string cache_dir = cfg.cache_dir.string();
  std::vector<int> listed = {3, 4};
  std::string dump_key;
  bool dump_chains = false;

  app.add_option("--vertices", cfg.n_vertices, "Number of vertices")->check(CLI::Range(4, 16));
  app.add_option("--edges", cfg.n_edges, "Number of edges")->check(CLI::Range(1, 10));
  app.add_option("--trials", cfg.trials, "Independent random draws per class")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Base seed");
  app.add_option("--field", field, "Field backend")->check(CLI::IsMember({"prime", "rational"}));
  app.add_option("--filter-colsum", filter, "Only classes with this column-sum profile, e.g. 3,3,3,3,2,2,2,2");
  app.add_option("--out", out_dir, "Directory for the report, tables and matrix listings");
  app.add_option("--format", format, "Table format")->check(CLI::IsMember({"text", "csv"}));
  app.add_option("--golden", golden, "Golden file to compare against")->check(CLI::ExistingFile);
  app.add_option("--cache", cache_dir, "Cache directory (default: $CRDEG_CACHE_DIR)");
  app.add_flag("--resume", cfg.resume, "Reuse cached class records");
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--list-degrees", listed, "Degrees whose matrices are listed")->delimiter(',');
  app.add_flag("--dump-chains", dump_chains, "Print the elimination chain of every class with degree >= 3");
  app.add_option("--dump-key", dump_key, "Print the elimination chain of one class and exit");
  CLI11_PARSE(app, argc, argv);

  try {
    cfg.field = parse_backend(field);
    cfg.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Text;
    cfg.cache_dir = cache_dir;
    if (!filter.empty()) cfg.filter = ColumnSumProfile::parse(filter);

    if (!dump_key.empty()) {
      std::cout << describe_chain(Hypergraph::from_key(CanonicalKey::parse(dump_key)), cfg.seed, cfg.field);
      return 0;
    }

    const Report rep = run_classification(cfg);
    std::cout << "config " << cfg.echo() << "\n";
    std::cout << "classes " << rep.records.size() << "\n";
    for (const auto& [d, c] : rep.table_degree) std::cout << "degree " << d << " " << c << "\n";
    std::cout << "max_degree " << rep.max_degree << "\n";
    if (dump_chains) {
      for (const auto& r : rep.records) {
        if (r.degree < 3) continue;
        std::cout << "\nclass " << r.key.to_string() << " degree " << r.degree << "\n"
                  << describe_chain(Hypergraph::from_key(r.key), cfg.seed, cfg.field);
      }
    }
    if (!out_dir.empty()) {
      for (const auto& p : emit_tables(rep, out_dir, listed)) std::cout << "wrote " << p.string() << "\n";
    }
    for (const auto& f : rep.failures) std::cerr << "failure " << f << "\n";
    bool ok = rep.ok();
    if (!golden.empty()) {
      const auto diff = verify_against_golden(rep, std::filesystem::path(golden));
      for (const auto& d : diff) std::cerr << "golden " << d << "\n";
      std::cout << "golden " << (diff.empty() ? "match" : "differs") << "\n";
      ok = ok && diff.empty();
    }
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
