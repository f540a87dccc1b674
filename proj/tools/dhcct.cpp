// Command-line front end: graph6 in, line-oriented text out.  Exit codes:
// 0 success, 1 usage or input errors, 2 verification mismatch.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "dhcct/canonical.hpp"
#include "dhcct/cct.hpp"
#include "dhcct/dh.hpp"
#include "dhcct/graph.hpp"
#include "dhcct/graph6.hpp"
#include "dhcct/obstructions.hpp"
#include "dhcct/patterns.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct ToolError {
  int code;
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ToolError{kExitUsage, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<dhcct::Graph6Line> load_graphs(const std::string& path) {
  try {
    return dhcct::parse_graph6_file(read_input(path));
  } catch (const dhcct::Graph6Error& e) {
    throw ToolError{kExitUsage, std::string(e.what())};
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ToolError{kExitUsage, "cannot write " + path};
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

bool induced_embedding_ok(const dhcct::Graph& host, const dhcct::Graph& pat,
                          const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != pat.order()) return false;
  for (int a = 0; a < pat.order(); ++a)
    for (int b = a + 1; b < pat.order(); ++b) {
      if (f[static_cast<std::size_t>(a)] == f[static_cast<std::size_t>(b)])
        return false;
      if (pat.adjacent(a, b) != host.adjacent(f[static_cast<std::size_t>(a)],
                                              f[static_cast<std::size_t>(b)]))
        return false;
    }
  return true;
}

std::string sorted_vertices(const std::vector<int>& vs) {
  std::vector<int> s = vs;
  std::sort(s.begin(), s.end());
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

// Runs `work` over the graph records, comments passed through in place.
// Results come out in input order no matter how many workers ran.
void map_records(const std::vector<dhcct::Graph6Line>& records, int jobs,
                 const std::function<std::string(const dhcct::Graph6Line&)>& work,
                 std::ostream& out) {
  std::vector<std::string> results(records.size());
  std::vector<std::optional<ToolError>> errors(records.size());
  auto run = [&](std::size_t chunk, std::size_t stride) {
    for (std::size_t i = chunk; i < records.size(); i += stride) {
      if (records[i].is_comment) {
        results[i] = records[i].text + "\n";
        continue;
      }
      try {
        results[i] = work(records[i]);
      } catch (const ToolError& e) {
        errors[i] = e;
      }
    }
  };
  if (jobs <= 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int c = 0; c < jobs; ++c)
      pool.emplace_back(run, static_cast<std::size_t>(c),
                        static_cast<std::size_t>(jobs));
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) throw *e;
  for (const std::string& r : results) out << r;
}

std::string line_tag(const dhcct::Graph6Line& rec) {
  return "line " + std::to_string(rec.line_number);
}

int run_recognize(const std::string& input, int jobs) {
  auto records = load_graphs(input);
  map_records(records, jobs, [](const dhcct::Graph6Line& rec) {
    std::string out;
    if (auto seq = dhcct::pruning_sequence(rec.graph)) {
      out += "DH: yes\n";
      out += dhcct::serialize_sequence(*seq);
    } else {
      auto w = dhcct::find_dh_obstruction(rec.graph);
      if (!w)
        throw ToolError{kExitMismatch,
                        line_tag(rec) + ": no elimination order and no witness"};
      if (!induced_embedding_ok(rec.graph, dhcct::named_pattern(w->pattern),
                                w->embedding))
        throw ToolError{kExitMismatch,
                        line_tag(rec) + ": witness failed re-verification"};
      out += "DH: no\n";
      out += "witness: " + w->pattern + " at vertices " +
             sorted_vertices(w->embedding) + "\n";
      out += "embedding:";
      for (std::size_t i = 0; i < w->embedding.size(); ++i)
        out += " " + std::to_string(i) + "->" + std::to_string(w->embedding[i]);
      out += "\n";
    }
    return out;
  }, std::cout);
  return 0;
}

int run_cct(const std::string& input, const std::string& method, bool minimize,
            bool trace, int jobs) {
  auto records = load_graphs(input);
  map_records(records, jobs, [&](const dhcct::Graph6Line& rec) {
    std::optional<dhcct::VertexSet> witness;
    std::vector<std::string> steps;
    if (method == "oracle") {
      witness = dhcct::find_cct_oracle(rec.graph);
    } else {
      dhcct::BuildCctResult built;
      try {
        built = dhcct::build_cct(rec.graph);
      } catch (const std::invalid_argument& e) {
        throw ToolError{kExitUsage, line_tag(rec) + ": " + e.what()};
      }
      if (method == "both" &&
          built.witness.has_value() != dhcct::find_cct_oracle(rec.graph).has_value())
        throw ToolError{kExitMismatch,
                        line_tag(rec) + ": builder and oracle disagree"};
      witness = built.witness;
      steps = std::move(built.trace);
    }
    if (witness && minimize) witness = dhcct::minimize_cct(rec.graph, *witness);
    if (witness && !dhcct::is_cct(rec.graph, *witness))
      throw ToolError{kExitMismatch,
                      line_tag(rec) + ": witness failed re-verification"};
    std::string out;
    if (witness)
      out += *witness ? "CCT " + dhcct::format_vertex_set(*witness) + "\n"
                      : "CCT\n";
    else
      out += "NONE\n";
    if (trace && !steps.empty()) {
      out += "trace:";
      for (const std::string& s : steps) out += " " + s;
      out += "\n";
    }
    return out;
  }, std::cout);
  return 0;
}

int run_two_one(const std::string& input, int jobs) {
  auto records = load_graphs(input);
  map_records(records, jobs, [](const dhcct::Graph6Line& rec) {
    auto witness = dhcct::is_two_one(rec.graph);
    if (!witness) return std::string("NONE\n");
    if (!dhcct::is_clique(rec.graph, *witness) ||
        !dhcct::is_bipartite(rec.graph, rec.graph.vertices() & ~*witness))
      throw ToolError{kExitMismatch,
                      line_tag(rec) + ": witness failed re-verification"};
    return *witness ? "TWO-ONE " + dhcct::format_vertex_set(*witness) + "\n"
                    : std::string("TWO-ONE\n");
  }, std::cout);
  return 0;
}

int run_enumerate(int max_n, const std::string& out_path, int jobs) {
  Output out(out_path);
  dhcct::enumerate_dh(max_n, [&](const dhcct::EnumeratedGraph& eg) {
    out.stream() << eg.canonical << "\n";
  }, jobs);
  return 0;
}

int run_mine(int max_n, const std::string& out_path, int jobs) {
  dhcct::MiningReport report = dhcct::mine_obstructions(max_n, jobs);
  Output out(out_path);
  out.stream() << "# minimal obstructions to a clique cycle-transversal, bound "
               << report.max_n << "\n";
  for (const dhcct::Obstruction& o : report.family) {
    out.stream() << "# " << o.name << " order=" << o.graph.order()
                 << " cograph=" << (o.cograph ? "yes" : "no")
                 << " two-one=" << (o.two_one ? "yes" : "no") << "\n";
    out.stream() << o.canonical << "\n";
  }
  std::cerr << "scanned " << report.scanned << " classes, " << report.family.size()
            << " minimal obstructions\n";
  return 0;
}

int run_verify(int max_n, const std::string& family_path, int jobs) {
  std::vector<dhcct::Obstruction> family;
  for (const auto& rec : load_graphs(family_path)) {
    if (rec.is_comment) continue;
    dhcct::Obstruction o;
    o.graph = rec.graph;
    o.canonical = dhcct::canonical_form(rec.graph);
    o.name = "O" + std::to_string(family.size() + 1);
    family.push_back(std::move(o));
  }
  dhcct::TheoremReport report;
  try {
    report = dhcct::verify_theorem(max_n, family, jobs);
  } catch (const std::invalid_argument& e) {
    throw ToolError{kExitUsage, e.what()};
  }
  std::cout << "scanned: " << report.scanned << "\n"
            << "with cct: " << report.with_cct << "\n"
            << "without cct: " << report.without_cct << "\n"
            << "characterization mismatches: " << report.characterization_mismatches
            << "\n"
            << "builder disagreements: " << report.builder_disagreements << "\n";
  if (report.characterization_mismatches || report.builder_disagreements) {
    std::cerr << "verification failed\n";
    return kExitMismatch;
  }
  return 0;
}

int run_classify(int max_n, int jobs) {
  dhcct::MiningReport report = dhcct::mine_obstructions(max_n, jobs);
  dhcct::FamilyClassification c = dhcct::classify_family(report, jobs);
  auto join = [](const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out += ",";
      out += names[i];
    }
    return out;
  };
  std::cout << "total: " << c.total << "\n"
            << "cographs: " << c.cographs << " (" << join(c.cograph_names) << ")\n"
            << "not two-one: " << c.not_two_one << " ("
            << join(c.not_two_one_names) << ")\n"
            << "cograph re-mining: "
            << (c.cograph_mining_matches ? "match" : "MISMATCH") << "\n";
  return c.cograph_mining_matches ? 0 : kExitMismatch;
}

int run_patterns(const std::string& name, const std::string& out_path) {
  dhcct::Graph g;
  try {
    g = dhcct::named_pattern(name);
  } catch (const std::invalid_argument& e) {
    throw ToolError{kExitUsage, e.what()};
  }
  Output out(out_path);
  out.stream() << dhcct::emit_graph6(g) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance-hereditary graphs and clique cycle-transversals"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads across input graphs")
      ->check(CLI::Range(1, 64));
  unsigned seed = 20250824;
  app.add_option("--seed", seed,
                 "rng seed; fixed default, reserved for future subcommands");

  std::string input = "-";
  std::string out_path;
  std::string method = "oracle";
  bool minimize = false;
  bool trace = false;
  int max_n = 10;
  std::string family_path;
  std::string pattern_name;

  CLI::App* recognize = app.add_subcommand(
      "recognize", "elimination order, or a forbidden-pattern witness");
  recognize->add_option("input", input, "graph6 file, - for stdin");

  CLI::App* cct = app.add_subcommand(
      "cct", "find a clique whose removal leaves a forest");
  cct->add_option("input", input, "graph6 file, - for stdin");
  cct->add_option("--method", method, "oracle, builder, or both")
      ->check(CLI::IsMember({"oracle", "builder", "both"}));
  cct->add_flag("--minimize", minimize, "greedily shrink a found witness");
  cct->add_flag("--trace", trace, "print builder rule trace");

  CLI::App* two_one = app.add_subcommand(
      "two-one", "find a clique whose removal leaves a bipartite graph");
  two_one->add_option("input", input, "graph6 file, - for stdin");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "stream one graph6 line per distance-hereditary class");
  enumerate->add_option("--max-n", max_n, "largest order to reach")->required();
  enumerate->add_option("--out", out_path, "output file, stdout by default");

  CLI::App* mine = app.add_subcommand(
      "mine", "search the class for minimal graphs without a transversal");
  mine->add_option("--max-n", max_n, "search bound, default 10");
  mine->add_option("--out", out_path, "output file, stdout by default");

  CLI::App* verify = app.add_subcommand(
      "verify", "check a mined family against the whole class");
  verify->add_option("--max-n", max_n, "verification bound")->required();
  verify->add_option("--family", family_path, "graph6 family file")->required();

  CLI::App* classify = app.add_subcommand(
      "classify", "mine, then split the family by cograph and two-one");
  classify->add_option("--max-n", max_n, "search bound, default 10");

  CLI::App* patterns = app.add_subcommand(
      "patterns", "emit a named pattern as graph6");
  patterns->add_option("name", pattern_name, "house, gem, domino, C5, K4, ...")
      ->required();
  patterns->add_option("--out", out_path, "output file, stdout by default");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (recognize->parsed()) return run_recognize(input, jobs);
    if (cct->parsed()) return run_cct(input, method, minimize, trace, jobs);
    if (two_one->parsed()) return run_two_one(input, jobs);
    if (enumerate->parsed()) return run_enumerate(max_n, out_path, jobs);
    if (mine->parsed()) return run_mine(max_n, out_path, jobs);
    if (verify->parsed()) return run_verify(max_n, family_path, jobs);
    if (classify->parsed()) return run_classify(max_n, jobs);
    if (patterns->parsed()) return run_patterns(pattern_name, out_path);
  } catch (const ToolError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
