// treematch: index a database of labeled trees and retrieve approximate
// matches within an edit-distance threshold.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "json.hpp"

#include "treematch/bench.hpp"
#include "treematch/database.hpp"
#include "treematch/search.hpp"
#include "treematch/synthgen.hpp"

using namespace treematch;
using nlohmann::json;

namespace {

std::uint64_t seed_fallback() {
  if (const char* env = std::getenv("TREEMATCH_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("TREEMATCH_SEED is not an integer");
    }
  }
  return 1;
}

// Writes to --out when given, stdout otherwise.
struct Output {
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file.open(path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

int cmd_gen(const GenParams& params, const std::string& out_path) {
  LabelPool pool;
  TreeDatabase db = gen_database(params, pool);
  {
    Output out(out_path);
    save_database(db, pool, out.stream());
  }
  std::size_t leaves = 0, max_depth = 0;
  for (const TreeRecord& rec : db.records) {
    leaves += leaf_count(rec.tree);
    max_depth = std::max(max_depth, tree_depth(rec.tree));
  }
  double avg = db.records.empty()
                   ? 0.0
                   : static_cast<double>(leaves) / db.records.size();
  std::cerr << "wrote " << (out_path.empty() ? "<stdout>" : out_path) << ": "
            << db.records.size() << " trees, avg-leaves " << std::fixed
            << std::setprecision(2) << avg << ", max-depth " << max_depth
            << ", seed " << params.seed << "\n";
  return 0;
}

int cmd_perturb(const std::string& db_path, std::size_t count,
                const PerturbParams& base, const CostParams& costs,
                const std::string& out_path) {
  LabelPool pool;
  TreeDatabase db = load_database_file(db_path, pool);
  if (db.records.empty())
    throw std::runtime_error("database is empty: " + db_path);
  Rng sampler(base.seed);
  Output out(out_path);
  for (std::size_t i = 0; i < count; ++i) {
    const TreeRecord& source =
        db.records[sampler.below(db.records.size())];
    PerturbParams p = base;
    p.seed = sampler.next();
    PerturbResult r = perturb(source.tree, p, costs, pool);
    out.stream() << "# source-id=" << source.id
                 << " applied-cost=" << r.applied_cost
                 << " edits=" << r.edits_applied << "\n"
                 << format_tree(r.tree, pool) << "\n";
  }
  std::cerr << "wrote " << count << " queries from " << db_path << "\n";
  return 0;
}

Tree read_query_tree(const std::string& query_path,
                         const std::string& inline_text, LabelPool& pool) {
  if (!inline_text.empty()) return parse_tree(inline_text, pool);
  if (query_path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_tree(buf.str(), pool);
  }
  std::ifstream in(query_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open query file: " + query_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // allow '#' comment lines around a single query tree
  std::string stripped;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i != std::string::npos && line[i] == '#') continue;
    stripped += line;
    stripped += '\n';
  }
  return parse_tree(stripped, pool);
}

int cmd_query(const std::string& db_path, const std::string& query_path,
              const std::string& inline_text, const SearchParams& params,
              const std::string& format, bool fail_empty,
              const std::string& out_path) {
  LabelPool pool;
  TreeDatabase db = load_database_file(db_path, pool);
  TreeTrie trie = TreeTrie::build(db, pool);
  Tree query = read_query_tree(query_path, inline_text, pool);
  SearchResult result =
      approx_search(trie, linearize(query), params, pool);

  std::unordered_map<TreeId, const Tree*> by_id;
  for (const TreeRecord& rec : db.records) by_id[rec.id] = &rec.tree;

  Output out(out_path);
  if (format == "json") {
    json arr = json::array();
    for (const Match& m : result.matches.matches)
      arr.push_back({{"id", m.id},
                     {"distance", m.distance},
                     {"tree", format_tree(*by_id.at(m.id), pool)}});
    out.stream() << arr.dump(2) << "\n";
  } else {
    for (const Match& m : result.matches.matches)
      out.stream() << m.distance << '\t' << m.id << '\t'
                   << format_tree(*by_id.at(m.id), pool) << "\n";
  }
  if (fail_empty && result.matches.empty()) {
    std::cerr << "no matches within threshold " << params.threshold << "\n";
    return 1;
  }
  return 0;
}

int cmd_bench(const std::string& db_path, const std::string& queries_path,
              std::vector<Cost> thresholds, const CostParams& costs,
              int repeat, const std::string& format,
              const std::string& out_path) {
  LabelPool pool;
  TreeDatabase db = load_database_file(db_path, pool);
  std::vector<Tree> queries = load_query_file(queries_path, pool);
  if (queries.empty())
    throw std::runtime_error("no queries in " + queries_path);
  TreeTrie trie = TreeTrie::build(db, pool);
  TrieStats st = trie.stats();

  std::vector<BenchReport> reports;
  for (Cost t : thresholds) {
    SearchParams params{t, costs};
    reports.push_back(run_bench(db, trie, queries, params, repeat, pool));
  }

  Output out(out_path);
  std::ostream& os = out.stream();
  if (format == "json") {
    json arr = json::array();
    for (const BenchReport& r : reports)
      arr.push_back({{"database", db_path},
                     {"records", db.records.size()},
                     {"trie_nodes", st.nodes},
                     {"trie_edges", st.edges},
                     {"threshold", r.threshold},
                     {"queries", r.query_count},
                     {"avg_leaves_per_query", r.avg_leaves_per_query},
                     {"avg_search_ms", r.avg_search_ms},
                     {"avg_trees_found", r.avg_trees_found},
                     {"avg_visited_fraction", r.avg_visited_fraction}});
    os << arr.dump(2) << "\n";
  } else {
    os << "# database " << db_path << ": records=" << db.records.size()
       << " trie-nodes=" << st.nodes << " trie-edges=" << st.edges << "\n";
    os << std::left << std::setw(11) << "threshold" << std::setw(9)
       << "queries" << std::setw(12) << "avg-leaves" << std::setw(12)
       << "avg-ms" << std::setw(11) << "avg-found" << "visited-frac\n";
    for (const BenchReport& r : reports) {
      os << std::left << std::setw(11) << r.threshold << std::setw(9)
         << r.query_count << std::setw(12) << std::fixed
         << std::setprecision(2) << r.avg_leaves_per_query << std::setw(12)
         << std::setprecision(3) << r.avg_search_ms << std::setw(11)
         << std::setprecision(2) << r.avg_trees_found << std::setprecision(4)
         << r.avg_visited_fraction << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"approximate retrieval over a trie of labeled trees"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a synthetic tree database");
  GenParams gen_params;
  std::string gen_out;
  gen->add_option("--count", gen_params.count, "number of trees");
  gen->add_option("--alp", gen_params.alp,
                  "leaf probability per level, in (0,1]");
  gen->add_option("--max-children", gen_params.max_children,
                  "max children of an internal node");
  gen->add_option("--max-depth", gen_params.max_depth, "max node depth");
  gen->add_option("--alphabet", gen_params.alphabet, "label alphabet size");
  auto* gen_seed = gen->add_option("--seed", gen_params.seed, "random seed");
  gen->add_option("--out", gen_out, "output database file");

  // perturb
  auto* pert = app.add_subcommand(
      "perturb", "sample database trees and apply random edits");
  std::string pert_db, pert_out;
  std::size_t pert_count = 100;
  int pert_edits = -1;
  Cost pert_budget = -1;
  PerturbParams pert_params;
  CostParams pert_costs;
  pert->add_option("--db", pert_db, "database file")
      ->required()
      ->check(CLI::ExistingFile);
  pert->add_option("--count", pert_count, "number of queries to emit");
  pert->add_option("--edits", pert_edits, "number of edits per query");
  pert->add_option("--budget", pert_budget, "cost budget per query");
  pert->add_option("--w-delete", pert_params.mix.del, "delete weight");
  pert->add_option("--w-insert", pert_params.mix.ins, "insert weight");
  pert->add_option("--w-relabel", pert_params.mix.relabel, "relabel weight");
  pert->add_option("--cost-change", pert_costs.change, "leaf relabel cost");
  pert->add_option("--cost-indel", pert_costs.indel, "leaf indel cost");
  auto* pert_seed =
      pert->add_option("--seed", pert_params.seed, "random seed");
  pert->add_option("--out", pert_out, "output query file");

  // query
  auto* qry = app.add_subcommand(
      "query", "retrieve database trees within a distance threshold");
  std::string qry_db, qry_path, qry_tree, qry_format = "text", qry_out;
  SearchParams qry_params;
  bool qry_fail_empty = false;
  qry->add_option("--db", qry_db, "database file")
      ->required()
      ->check(CLI::ExistingFile);
  qry->add_option("--query", qry_path, "query tree file, or - for stdin");
  qry->add_option("--tree", qry_tree, "query tree text inline");
  qry->add_option("-t,--threshold", qry_params.threshold,
                  "distance threshold");
  qry->add_option("--cost-change", qry_params.costs.change,
                  "leaf relabel cost");
  qry->add_option("--cost-indel", qry_params.costs.indel, "leaf indel cost");
  qry->add_option("--format", qry_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  qry->add_flag("--fail-empty", qry_fail_empty,
                "exit nonzero when nothing matches");
  qry->add_option("--out", qry_out, "output file (default stdout)");

  // bench
  auto* bench = app.add_subcommand(
      "bench", "time approximate search over a query set");
  std::string bench_db, bench_queries, bench_format = "text", bench_out;
  std::vector<Cost> bench_thresholds{2, 4};
  CostParams bench_costs;
  int bench_repeat = 3;
  bench->add_option("--db", bench_db, "database file")
      ->required()
      ->check(CLI::ExistingFile);
  bench->add_option("--queries", bench_queries, "query file")
      ->required()
      ->check(CLI::ExistingFile);
  bench->add_option("--thresholds", bench_thresholds,
                    "distance thresholds to report");
  bench->add_option("--cost-change", bench_costs.change, "leaf relabel cost");
  bench->add_option("--cost-indel", bench_costs.indel, "leaf indel cost");
  bench->add_option("--repeat", bench_repeat, "timing runs per query");
  bench->add_option("--format", bench_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  bench->add_option("--out", bench_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      if (!gen_seed->count()) gen_params.seed = seed_fallback();
      gen_params.validate();
      return cmd_gen(gen_params, gen_out);
    }
    if (pert->parsed()) {
      if (!pert_seed->count()) pert_params.seed = seed_fallback();
      if (pert_edits >= 0) pert_params.edit_count = pert_edits;
      if (pert_budget >= 0) pert_params.cost_budget = pert_budget;
      pert_params.validate();
      pert_costs.validate();
      return cmd_perturb(pert_db, pert_count, pert_params, pert_costs,
                         pert_out);
    }
    if (qry->parsed()) {
      if (qry_path.empty() == qry_tree.empty())
        throw std::invalid_argument(
            "provide exactly one of --query / --tree");
      qry_params.validate();
      return cmd_query(qry_db, qry_path, qry_tree, qry_params, qry_format,
                       qry_fail_empty, qry_out);
    }
    if (bench->parsed()) {
      if (bench_thresholds.empty())
        throw std::invalid_argument("at least one threshold required");
      bench_costs.validate();
      return cmd_bench(bench_db, bench_queries, bench_thresholds, bench_costs,
                       bench_repeat, bench_format, bench_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
