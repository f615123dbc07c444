#include "cli/cli.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/cache.hpp"
#include "edgereg/canonical.hpp"
#include "edgereg/errors.hpp"
#include "edgereg/graph6.hpp"
#include "edgereg/json_io.hpp"
#include "edgereg/parallel.hpp"
#include "edgereg/scan.hpp"
#include "edgereg/verify.hpp"

namespace edgereg::cli {

using nlohmann::json;
using algebra::Monomial;
using algebra::MonomialIdeal;
using graph::Graph;
using graph::VertexSet;
using verify::Report;

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

struct Options {
  std::optional<std::string> graph6, builder, input;
  std::optional<int> max_n;
  int min_n = 1;

  std::string field = "Q";
  std::string method = "crosscut";
  res::EngineCaps caps;
  long long lq_budget_ms = caps.linear_quotient_budget.count();
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  unsigned threads = 0;
  std::optional<std::string> output;
  std::optional<std::string> summary;

  int power = 1;
  bool oracle = false;
  bool multi = false;
  std::optional<std::string> ideal, j_ideal, k_ideal, monomial, ordering;
  std::optional<int> vars;

  std::optional<std::string> set, cover;
  bool all = false;
  bool verify = false;
  std::optional<std::string> sidecar;
  bool invariant_only = false;

  std::string statement;
  int k = 1;
  std::optional<int> kmax;

  std::string conjecture;
  std::optional<int> cg, reg;
  bool probe = false;
  bool compare_fields = false;
};

void add_input_options(CLI::App* sub, Options& o) {
  auto* g6 = sub->add_option("--graph6", o.graph6, "graph in graph6 format");
  auto* b = sub->add_option("--builder", o.builder, "cycle:n, anticycle:n, path:n or complete:n");
  auto* in = sub->add_option("--input", o.input, "file with one graph6 string per line ('-' for stdin)");
  auto* mx = sub->add_option("--max-n", o.max_n, "all isomorphism classes with an edge on at most this many vertices");
  sub->add_option("--min-n", o.min_n, "smallest vertex count for --max-n")->needs(mx);
  g6->excludes(b, in, mx);
  b->excludes(in, mx);
  in->excludes(mx);
}

void add_engine_options(CLI::App* sub, Options& o) {
  sub->add_option("--field", o.field, "Q or GF(p)")->capture_default_str();
  sub->add_option("--method", o.method, "interval complex: crosscut or order")
      ->check(CLI::IsMember({"crosscut", "order"}))
      ->capture_default_str();
  sub->add_option("--max-lattice", o.caps.lattice_elements, "lcm lattice size cap")->capture_default_str();
  sub->add_option("--max-faces", o.caps.order_complex_faces, "order complex face cap")->capture_default_str();
  sub->add_option("--max-taylor", o.caps.taylor_generators, "Taylor oracle generator cap")->capture_default_str();
  sub->add_option("--max-lq-gens", o.caps.linear_quotient_generators, "linear quotient search generator cap")
      ->capture_default_str();
  sub->add_option("--lq-budget-ms", o.lq_budget_ms, "linear quotient search time budget")->capture_default_str();
  sub->add_option("--cache-dir", o.cache_dir, std::string("result cache directory (default $") + kCacheDirEnv + ")");
  sub->add_flag("--no-cache", o.no_cache, "do not read or write the result cache");
  sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  sub->add_option("-o,--output", o.output, "write machine output here instead of stdout");
}

verify::Context make_context(const Options& o, std::ostream& err) {
  verify::Context ctx;
  ctx.options.field = res::Field::parse(o.field);
  ctx.options.method = o.method == "order" ? res::IntervalMethod::order_complex : res::IntervalMethod::coatom_crosscut;
  ctx.options.caps = o.caps;
  ctx.options.caps.linear_quotient_budget = std::chrono::milliseconds(o.lq_budget_ms);
  if (o.caps.lattice_elements == 0 || o.caps.order_complex_faces == 0 || o.caps.taylor_generators == 0 ||
      o.caps.linear_quotient_generators == 0 || o.lq_budget_ms <= 0) {
    throw ParseError("caps must be positive");
  }
  if (!o.no_cache) {
    try {
      ctx.store = std::make_shared<FileStore>(default_cache_dir(o.cache_dir));
    } catch (const std::filesystem::filesystem_error& e) {
      err << "warning: cache disabled: " << e.what() << '\n';
    }
  }
  return ctx;
}

std::vector<Graph> load_family(const Options& o) {
  if (o.graph6) return {graph::from_graph6(*o.graph6)};
  if (o.builder) return {parse_builder(*o.builder)};
  if (o.input) {
    if (*o.input == "-") return graph::read_graph6_stream(std::cin);
    std::ifstream in(*o.input);
    if (!in) throw ParseError("cannot read input file '" + *o.input + "'");
    return graph::read_graph6_stream(in);
  }
  if (o.max_n) return graph::enumerate_graphs(o.min_n, *o.max_n, true);
  throw ParseError("no input: give --graph6, --builder, --input or --max-n");
}

int ideal_variables(const Options& o, std::initializer_list<const std::optional<std::string>*> texts) {
  if (o.vars) return *o.vars;
  int vars = 0;
  for (const auto* t : texts) {
    if (*t) vars = std::max(vars, algebra::max_variable_index_plus_one(**t));
  }
  if (o.monomial) vars = std::max(vars, algebra::max_variable_index_plus_one(*o.monomial));
  if (o.ordering) vars = std::max(vars, algebra::max_variable_index_plus_one(*o.ordering));
  return vars;
}

std::vector<Monomial> parse_ordering(const std::optional<std::string>& text, int vars) {
  std::vector<Monomial> out;
  if (!text) return out;
  for (const auto& part : split(*text, ',')) out.push_back(algebra::parse_monomial(part, vars));
  return out;
}

// Sorted JSON lines, an optional summary CSV, and the verdict-based exit code.
int emit_reports(std::vector<Report> reports, const Options& o, std::ostream& out) {
  verify::sort_reports(reports);
  for (const auto& r : reports) out << verify::to_json_line(r) << '\n';
  if (o.summary) {
    std::ofstream csv(*o.summary);
    if (!csv) throw ParseError("cannot write summary file '" + *o.summary + "'");
    const auto rows = verify::summarize(reports);
    verify::write_summary_csv(csv, rows);
  }
  bool any_fail = std::any_of(reports.begin(), reports.end(), [](const Report& r) { return r.failed(); });
  return any_fail ? kFailures : kOk;
}

int cmd_betti(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.power < 1) throw ParseError("--power must be at least 1");
  const auto ctx = make_context(o, err);
  auto options = ctx.options;
  options.multigraded = o.multi;

  struct Job {
    MonomialIdeal ideal;
    std::optional<Graph> graph;
  };
  std::vector<Job> jobs;
  if (o.ideal) {
    const int vars = ideal_variables(o, {&o.ideal});
    jobs.push_back({algebra::power(algebra::parse_ideal(*o.ideal, vars), o.power), std::nullopt});
  } else {
    for (auto& g : load_family(o)) {
      if (g.edge_count() == 0) throw ParseError("graph " + graph::to_graph6(g) + " has no edges");
      jobs.push_back({algebra::power(algebra::edge_ideal(g), o.power), g});
    }
  }

  int code = kOk;
  for (const auto& job : jobs) {
    if (job.ideal.is_unit()) throw ParseError("the unit ideal has no Betti table here");
    const auto table = job.graph && !o.multi ? ctx.edge_power_table(*job.graph, o.power)
                                             : res::betti_table(job.ideal, options);
    json line = to_json(table);
    if (jobs.size() > 1 && job.graph) line["graph6"] = graph::to_graph6(*job.graph);
    out << line.dump() << '\n';
    if (o.oracle) {
      const auto oracle = res::taylor_betti_oracle(job.ideal, options);
      if (!(oracle == table)) {
        err << "oracle mismatch for " << job.ideal.to_string() << ": Taylor complex gives " << to_json(oracle).dump()
            << '\n';
        code = kOracleMismatch;
      }
    }
  }
  return code;
}

int cmd_suspend(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.all && !o.set) throw ParseError("give --independent-set or --all");
  const auto ctx = make_context(o, err);
  std::vector<Report> reports;
  for (const auto& g : load_family(o)) {
    std::vector<VertexSet> sets;
    if (o.all) {
      for (auto s : graph::independent_sets(g)) {
        if (s != g.vertices()) sets.push_back(s);
      }
    } else {
      sets.push_back(parse_vertex_set(*o.set));
    }
    for (auto s : sets) {
      if (!s.is_subset_of(g.vertices())) throw ParseError("independent set mentions a vertex outside the graph");
      out << graph::to_graph6(graph::s_suspension(g, s)) << '\n';
      if (o.verify) reports.push_back(verify::check_s_suspension_invariance(g, s, ctx));
    }
  }
  if (!o.verify) return kOk;

  std::string path = o.sidecar ? *o.sidecar : o.output ? *o.output + ".verify.json" : "suspend.verify.json";
  verify::sort_reports(reports);
  json doc = json::array();
  for (const auto& r : reports) doc.push_back(verify::to_json(r));
  std::ofstream side(path);
  if (!side) throw ParseError("cannot write sidecar '" + path + "'");
  side << doc.dump(2) << '\n';
  err << "invariance checks written to " << path << '\n';
  bool any_fail = std::any_of(reports.begin(), reports.end(), [](const Report& r) { return r.failed(); });
  return any_fail ? kFailures : kOk;
}

int cmd_extend(const Options& o, std::ostream& out, std::ostream& err) {
  const auto ctx = make_context(o, err);
  for (const auto& g : load_family(o)) {
    if (g.edge_count() == 0) throw ParseError("graph " + graph::to_graph6(g) + " has no edges");
    const int im = graph::induced_matching_number(g);
    const int reg = ctx.edge_power_regularity(g, 1);
    const auto extensions = graph::one_vertex_extensions(g);
    auto rows = parallel_map(
        extensions,
        [&](const Graph& ext) {
          const int im_ext = graph::induced_matching_number(ext);
          const int reg_ext = ctx.edge_power_regularity(ext, 1);
          return json{{"graph6", graph::to_graph6(g)},
                      {"extension", graph::to_graph6(ext)},
                      {"neighbors", to_json(ext.neighbors(g.vertex_count()))},
                      {"im", im_ext},
                      {"reg", reg_ext},
                      {"invariant", im_ext == im && reg_ext == reg}};
        },
        o.threads);
    for (const auto& row : rows) {
      if (!o.invariant_only || row["invariant"].get<bool>()) out << row.dump() << '\n';
    }
  }
  return kOk;
}

std::vector<VertexSet> suspension_sets(const Options& o, const Graph& g) {
  if (o.set) return {parse_vertex_set(*o.set)};
  std::vector<VertexSet> sets;
  for (auto s : graph::independent_sets(g)) {
    if (s != g.vertices()) sets.push_back(s);
  }
  return sets;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  namespace st = verify::statement;
  const auto ids = verify::statement_ids();
  if (std::find(ids.begin(), ids.end(), o.statement) == ids.end()) {
    throw ParseError("unknown statement '" + o.statement + "'");
  }
  const auto ctx = make_context(o, err);
  const std::string& s = o.statement;
  const int kmax = o.kmax.value_or(3);
  std::vector<std::function<Report()>> tasks;

  if (s == st::betti_splitting || s == st::doublelinear) {
    if (!o.j_ideal || !o.k_ideal) throw ParseError("--J and --K are required");
    const int vars = ideal_variables(o, {&o.j_ideal, &o.k_ideal});
    const auto j = algebra::parse_ideal(*o.j_ideal, vars);
    const auto k = algebra::parse_ideal(*o.k_ideal, vars);
    const auto i = algebra::sum(j, k);
    if (s == st::betti_splitting) {
      tasks.emplace_back([=, &ctx, multi = o.multi] { return verify::check_betti_splitting(i, j, k, ctx, multi); });
    } else {
      tasks.emplace_back([=, &ctx] { return verify::check_doublelinear(i, j, k, ctx); });
    }
  } else if (s == st::abc) {
    if (!o.ideal || !o.j_ideal) throw ParseError("--ideal (I) and --J are required");
    const int vars = ideal_variables(o, {&o.ideal, &o.j_ideal});
    const auto i = algebra::parse_ideal(*o.ideal, vars);
    const auto j = algebra::parse_ideal(*o.j_ideal, vars);
    const auto ordering = parse_ordering(o.ordering, vars);
    tasks.emplace_back([=, &ctx] { return verify::check_abc_bound(j, i, ordering, ctx); });
  } else if (s == st::colon_reg && o.ideal) {
    const int vars = ideal_variables(o, {&o.ideal});
    const auto i = algebra::parse_ideal(*o.ideal, vars);
    std::vector<Monomial> ms;
    if (o.monomial) {
      ms.push_back(algebra::parse_monomial(*o.monomial, vars));
    } else {
      for (int v = 0; v < vars; ++v) ms.push_back(Monomial::variable(vars, v));
    }
    for (const auto& m : ms) tasks.emplace_back([=, &ctx] { return verify::check_colon_reg_bound(i, m, ctx); });
  } else {
    for (const auto& g : load_family(o)) {
      if (s == st::froberg) {
        tasks.emplace_back([=, &ctx] { return verify::check_froberg(g, ctx); });
      } else if (s == st::matching_bounds) {
        tasks.emplace_back([=, &ctx] { return verify::check_matching_bounds(g, ctx); });
      } else if (s == st::bht) {
        tasks.emplace_back([=, &ctx] { return verify::check_bht(g, kmax, ctx); });
      } else if (s == st::hhz) {
        tasks.emplace_back([=, &ctx] { return verify::check_hhz(g, kmax, ctx); });
      } else if (s == st::banerjee) {
        tasks.emplace_back([=, &ctx] { return verify::check_banerjee(g, kmax, ctx); });
      } else if (s == st::colon_reg) {
        if (g.edge_count() == 0) continue;
        const auto i = algebra::edge_ideal(g);
        const int vars = g.vertex_count();
        std::vector<Monomial> ms;
        if (o.monomial) {
          ms.push_back(algebra::parse_monomial(*o.monomial, vars));
        } else {
          for (int v = 0; v < vars; ++v) ms.push_back(Monomial::variable(vars, v));
        }
        for (const auto& m : ms) {
          tasks.emplace_back([=, &ctx] {
            auto r = verify::check_colon_reg_bound(i, m, ctx);
            r.instance["graph6"] = graph::to_graph6(g);
            return r;
          });
        }
      } else if (s == st::blemma) {
        const auto ordering = parse_ordering(o.ordering, g.vertex_count());
        tasks.emplace_back([=, &ctx, n = o.power] { return verify::check_blemma_colon_structure(g, n, ordering, ctx); });
      } else if (s == st::keylemma) {
        std::vector<VertexSet> covers;
        if (o.cover) {
          covers.push_back(parse_vertex_set(*o.cover));
        } else {
          covers = graph::minimal_vertex_covers(g);
        }
        for (auto u : covers) {
          if (!u.is_subset_of(g.vertices())) throw ParseError("cover mentions a vertex outside the graph");
          tasks.emplace_back([=, &ctx, k = o.k] { return verify::check_keylemma(g, u, k, ctx); });
        }
      } else if (s == st::s_cc || s == st::main1 || s == st::main2) {
        for (auto set : suspension_sets(o, g)) {
          if (!set.is_subset_of(g.vertices())) throw ParseError("set mentions a vertex outside the graph");
          if (s == st::s_cc) {
            tasks.emplace_back([=, &ctx] { return verify::check_s_suspension_invariance(g, set, ctx); });
          } else if (s == st::main1) {
            tasks.emplace_back([=, &ctx, k = std::max(o.k, 1)] { return verify::check_main1(g, set, k, ctx); });
          } else {
            tasks.emplace_back([=, &ctx] { return verify::check_main2(g, set, kmax, ctx); });
          }
        }
      }
    }
  }

  auto reports = parallel_map(tasks, [](const std::function<Report()>& t) { return t(); }, o.threads);
  return emit_reports(std::move(reports), o, out);
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  verify::ScanConfig config;
  config.conjecture = verify::conjecture_from_string(o.conjecture);
  config.k_max = o.kmax.value_or(2);
  config.reg_filter = o.reg;
  config.c_g = o.cg;
  config.probe_deletions = o.probe;
  config.compare_fields = o.compare_fields;
  config.threads = o.threads;
  const auto ctx = make_context(o, err);
  const auto family = load_family(o);
  auto result = verify::scan_conjecture(config, family, ctx);
  err << "scanned " << result.considered << " graphs: " << result.reports.size() << " reports, " << result.filtered
      << " outside the family\n";
  return emit_reports(std::move(result.reports), o, out);
}

}  // namespace

Graph parse_builder(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("builder spec must look like cycle:5");
  const std::string kind(spec.substr(0, colon));
  const int n = parse_int(spec.substr(colon + 1), "vertex count");
  try {
    if (kind == "cycle") return graph::cycle(n);
    if (kind == "anticycle") return graph::anticycle(n);
    if (kind == "path") return graph::path(n);
    if (kind == "complete") return graph::complete(n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(spec) + ": " + e.what());
  }
  throw ParseError("unknown builder '" + kind + "'");
}

VertexSet parse_vertex_set(std::string_view text) {
  VertexSet s;
  if (text.empty()) return s;
  for (const auto& part : split(text, ',')) {
    const int v = parse_int(part, "vertex");
    if (v < 0 || v >= graph::kMaxVertices) throw ParseError("vertex " + part + " out of range");
    s = s.with(v);
  }
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Betti numbers, regularity and statement checks for edge ideals", "edgereg"};
  app.require_subcommand(1);

  auto* betti = app.add_subcommand("betti", "graded Betti table of I(G)^k or a monomial ideal");
  add_input_options(betti, o);
  add_engine_options(betti, o);
  betti->add_option("--power", o.power, "power k of the ideal")->capture_default_str();
  betti->add_option("--ideal", o.ideal, "monomial ideal, e.g. 'x0^2, x0*x1'");
  betti->add_option("--vars", o.vars, "number of variables for --ideal");
  betti->add_flag("--oracle", o.oracle, "cross-check against the Taylor complex");
  betti->add_flag("--multi", o.multi, "include the multigraded refinement");

  auto* suspend = app.add_subcommand("suspend", "S-suspensions G^S in graph6");
  add_input_options(suspend, o);
  add_engine_options(suspend, o);
  auto* set_opt = suspend->add_option("--independent-set", o.set, "comma separated vertices of S");
  suspend->add_flag("--all", o.all, "every independent set S != V(G)")->excludes(set_opt);
  suspend->add_flag("--verify", o.verify, "check im/reg invariance into a sidecar JSON file");
  suspend->add_option("--sidecar", o.sidecar, "sidecar path for --verify");

  auto* extend = app.add_subcommand("extend", "one-vertex extensions with im/reg invariance");
  add_input_options(extend, o);
  add_engine_options(extend, o);
  extend->add_flag("--invariant-only", o.invariant_only, "only (im, reg)-invariant extensions");

  auto* ver = app.add_subcommand("verify", "check a statement on instances");
  add_input_options(ver, o);
  add_engine_options(ver, o);
  std::string ids;
  for (const auto& id : verify::statement_ids()) ids += (ids.empty() ? "" : ", ") + id;
  ver->add_option("--statement", o.statement, ids)->required();
  ver->add_option("--set", o.set, "independent set S (default: all S != V(G))");
  ver->add_option("--cover", o.cover, "vertex cover U (default: all minimal covers)");
  ver->add_option("--k", o.k, "power k")->capture_default_str();
  ver->add_option("--kmax", o.kmax, "largest power checked (default 3)");
  ver->add_option("--power", o.power, "power n for blemma")->capture_default_str();
  ver->add_option("--ideal", o.ideal, "ideal I");
  ver->add_option("--J", o.j_ideal, "ideal J");
  ver->add_option("--K", o.k_ideal, "ideal K");
  ver->add_option("--monomial", o.monomial, "monomial m for colon_reg (default: every variable)");
  ver->add_option("--ordering", o.ordering, "comma separated generator order");
  ver->add_option("--vars", o.vars, "number of variables for ideal inputs");
  ver->add_flag("--multi", o.multi, "compare Betti numbers by multidegree as well");
  ver->add_option("--summary", o.summary, "write a summary CSV here");

  auto* scan = app.add_subcommand("scan", "search a graph family for counterexamples to a conjecture");
  add_input_options(scan, o);
  add_engine_options(scan, o);
  scan->add_option("--conjecture", o.conjecture, "np, general_np or newconj2")->required();
  scan->add_option("--kmax", o.kmax, "largest power checked (default 2)");
  scan->add_option("--cg", o.cg, "threshold c_G for newconj2");
  scan->add_option("--reg", o.reg, "only graphs with this reg(I(G))");
  scan->add_flag("--probe-deletions", o.probe, "record reg of one-vertex-deleted subgraphs");
  scan->add_flag("--compare-fields", o.compare_fields, "flag tables that differ between Q and GF(2)");
  scan->add_option("--summary", o.summary, "write a summary CSV here");

  std::vector<const char*> argv{"edgereg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (betti->parsed()) code = cmd_betti(o, buffer, err);
    else if (suspend->parsed()) code = cmd_suspend(o, buffer, err);
    else if (extend->parsed()) code = cmd_extend(o, buffer, err);
    else if (ver->parsed()) code = cmd_verify(o, buffer, err);
    else if (scan->parsed()) code = cmd_scan(o, buffer, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const CapExceeded& e) {
    err << "error: cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailures;
  }

  if (o.output) {
    std::ofstream file(*o.output);
    if (!file) {
      err << "error: cannot write '" << *o.output << "'\n";
      return kParseError;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace edgereg::cli
