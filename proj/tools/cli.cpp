#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "homconf/configs.hpp"
#include "homconf/io.hpp"
#include "homconf/mutation.hpp"
#include "homconf/noncrossing.hpp"
#include "homconf/orbit.hpp"
#include "homconf/type_a.hpp"

namespace homconf::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string quiver;
  unsigned threads = 1;
  bool allow_long = false;
};

DynkinQuiver load_quiver(const Options& opt) {
  auto q = parse_quiver(opt.quiver);
  if (q.type() == DiagramType::E && q.rank() >= 7 && !opt.allow_long)
    throw UsageError(q.name() + " is long-running; pass --allow-long");
  return q;
}

fs::path cache_path(const DynkinQuiver& q) {
  std::string name = q.spec();
  for (char& ch : name)
    if (ch == ':' || ch == '>' || ch == ',') ch = '_';
  return fs::path(std::getenv("HOMCONF_CACHE_DIR")) / (name + ".json");
}

OrbitCategory load_category(const DynkinQuiver& q, unsigned threads) {
  if (const char* dir = std::getenv("HOMCONF_CACHE_DIR"); dir && *dir) {
    const auto path = cache_path(q);
    if (fs::exists(path)) return OrbitCategory(q, load_hom_table(path, q));
    auto cat = OrbitCategory::build(q, threads);
    fs::create_directories(path.parent_path());
    save_hom_table(cat.table(), path);
    return cat;
  }
  return OrbitCategory::build(q, threads);
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  file << text;
  if (!file) throw InputError("write failed for " + path);
}

json check_json(const std::string& name, const CheckReport& r) {
  json v = json::array();
  for (std::size_t i = 0; i < r.violations.size() && i < 10; ++i) v.push_back(r.violations[i]);
  return {{"name", name},
          {"pass", r.ok()},
          {"checked", r.checked},
          {"violation_count", r.violations.size()},
          {"violations", v}};
}

CheckReport ringel_uniqueness(const OrbitCategory& cat,
                              const std::vector<Configuration>& configs) {
  CheckReport r;
  std::vector<OrbitObject> simples;
  for (int v = 1; v <= cat.rank(); ++v) simples.push_back({simple_root(cat.rank(), v), 0});
  std::size_t all_modules = 0;
  for (const auto& c : configs) {
    ++r.checked;
    if (module_part(c).size() != c.size()) continue;
    ++all_modules;
    if (c != Configuration(simples)) r.fail("all-module configuration other than the simples");
  }
  if (all_modules != 1) r.fail(std::to_string(all_modules) + " all-module configurations");
  return r;
}

CheckReport covering_suite(const OrbitCategory& cat) {
  CheckReport r;
  for (const auto& set : enumerate_hom_free_sets(cat)) {
    ++r.checked;
    std::vector<OrbitObject> objects;
    for (auto i : set) objects.push_back(cat.object(i));
    const bool full = set.size() == static_cast<std::size_t>(cat.rank());
    if (covering_check(cat, objects) != full)
      r.fail("covering check disagrees with size for a set of " + std::to_string(set.size()));
  }
  return r;
}

CheckReport excseq_suite(const OrbitCategory& cat, const std::vector<Configuration>& configs) {
  CheckReport r;
  const auto& q = cat.quiver();
  for (const auto& c : configs) {
    ++r.checked;
    const auto order = exceptional_order(cat, c.members);
    std::vector<Root> shadows;
    for (const auto& o : order) shadows.push_back(o.root);
    if (!is_exceptional_sequence(cat, shadows))
      r.fail("exceptional order of " + configuration_label(q, c) + " is not exceptional");
  }
  if (q.rank() <= 4) {
    const auto complete = complete_exceptional_sequences(cat);
    for (const auto& s : complete)
      for (int i = 1; i < q.rank(); ++i) {
        ++r.checked;
        const auto fwd = braid_mutate(cat, s, i, BraidDirection::Forward);
        if (braid_mutate(cat, fwd, i, BraidDirection::Inverse) != s)
          r.fail("sigma^-1 sigma is not the identity");
      }
    std::vector<Root> simples;
    for (const auto& v : sink_order(q)) simples.push_back(simple_root(q.rank(), v));
    if (braid_orbit(cat, simples) != complete)
      r.fail("braid orbit of the simples is not every complete exceptional sequence");
  }
  return r;
}

CheckReport mutation_suite(const OrbitCategory& cat, const MutationGraph& g) {
  CheckReport r = cat.rank() <= 4 ? verify_mutation(cat) : CheckReport{};
  ++r.checked;
  if (!is_connected(g)) r.fail("mutation graph is disconnected");
  if (g.nodes.size() != positive_fuss_catalan(cat.quiver().type(), cat.rank()))
    r.fail("mutation graph node count differs from the positive Fuss-Catalan number");
  return r;
}

int cmd_enumerate(const Options& opt, const std::string& path, const std::string& format,
                  std::ostream& out) {
  const auto q = load_quiver(opt);
  const auto cat = load_category(q, opt.threads);
  const auto configs = enumerate_hom_configurations(cat);
  std::string text;
  if (format == "tsv") {
    for (const auto& c : configs) {
      for (std::size_t i = 0; i < c.members.size(); ++i) {
        if (i) text += '\t';
        text += object_label(q, c.members[i]);
      }
      text += '\n';
    }
  } else {
    json arr = json::array();
    for (const auto& c : configs) arr.push_back(to_json(c));
    text = arr.dump() + "\n";
  }
  write_output(text, path, out);
  return kOk;
}

int cmd_count(const Options& opt, const std::string& what, std::ostream& out) {
  const auto q = load_quiver(opt);
  std::uint64_t count = 0, closed = 0;
  if (what == "homconf") {
    count = enumerate_hom_configurations(load_category(q, opt.threads)).size();
    closed = positive_fuss_catalan(q.type(), q.rank());
  } else {
    const auto nc = enumerate_nc(q);
    if (what == "nc") {
      count = nc.size();
      closed = catalan(q.type(), q.rank());
    } else {
      for (const auto& u : nc) count += is_positive(u, q.rank());
      closed = positive_fuss_catalan(q.type(), q.rank());
    }
  }
  out << json{{"quiver", q.spec()},
              {"what", what},
              {"count", count},
              {"closed_form", closed},
              {"match", count == closed}}
             .dump()
      << "\n";
  return count == closed ? kOk : kVerificationFailed;
}

int cmd_verify(const Options& opt, const std::string& suite, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto q = load_quiver(opt);
  const auto cat = load_category(q, opt.threads);
  const auto configs = enumerate_hom_configurations(cat);
  auto wants = [&](const char* name) { return suite == "all" || suite == name; };

  json checks = json::array();
  bool pass = true;
  auto record = [&](const std::string& name, const CheckReport& r) {
    pass = pass && r.ok();
    checks.push_back(check_json(name, r));
  };
  auto skipped = [&](const std::string& name, const std::string& why) {
    checks.push_back({{"name", name}, {"pass", true}, {"skipped", why}});
  };

  CheckReport counting;
  ++counting.checked;
  if (configs.size() != positive_fuss_catalan(q.type(), q.rank()))
    counting.fail("Hom-configuration count differs from the positive Fuss-Catalan number");
  record("count", counting);
  record("ringel_uniqueness", ringel_uniqueness(cat, configs));

  if (wants("beta")) record("beta", verify_beta_bijection(cat));
  if (wants("psi")) {
    record("nc_lattice", verify_nc_lattice(q));
    record("psi", verify_psi_bijection(cat));
    if (q.rank() <= 4) record("psi_order_independence", verify_psi_order_independence(cat));
    else skipped("psi_order_independence", "rank above 4");
  }
  if (wants("covering")) record("covering", covering_suite(cat));
  if (wants("excseq")) record("excseq", excseq_suite(cat, configs));
  if (wants("thm55")) {
    if (q.rank() <= 4) record("thm55", check_reflection_product(cat));
    else skipped("thm55", "brute force limited to rank 4");
  }
  if (wants("mutation")) record("mutation", mutation_suite(cat, mutation_graph(cat)));

  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  out << json{{"command", "verify"},
              {"quiver", q.spec()},
              {"suite", suite},
              {"counts",
               {{"fundamental_domain", cat.size()},
                {"hom_configurations", configs.size()},
                {"positive_fuss_catalan", positive_fuss_catalan(q.type(), q.rank())}}},
              {"checks", checks},
              {"pass", pass},
              {"wall_time_ms", ms}}
             .dump(2)
      << "\n";
  return pass ? kOk : kVerificationFailed;
}

int cmd_mutation_graph(const Options& opt, const std::string& dot, const std::string& json_path,
                       bool check_connected, std::ostream& out) {
  const auto q = load_quiver(opt);
  const auto cat = load_category(q, opt.threads);
  const auto g = mutation_graph(cat);
  if (!dot.empty()) write_output(export_dot(g, q), dot, out);
  if (!json_path.empty()) write_output(to_json(g).dump() + "\n", json_path, out);
  const bool connected = is_connected(g);
  out << json{{"quiver", q.spec()},
              {"nodes", g.nodes.size()},
              {"edges", g.edges.size()},
              {"connected", connected}}
             .dump()
      << "\n";
  return check_connected && !connected ? kVerificationFailed : kOk;
}

int cmd_nc(const Options& opt, bool list, bool positive_only, std::ostream& out) {
  const auto q = load_quiver(opt);
  const auto nc = enumerate_nc(q);
  json items = json::array();
  std::size_t count = 0;
  for (const auto& u : nc) {
    if (positive_only && !is_positive(u, q.rank())) continue;
    ++count;
    if (list) items.push_back(to_json(u));
  }
  if (list) out << items.dump() << "\n";
  else out << count << "\n";
  return kOk;
}

int cmd_typea(int n, const std::string& action, const std::string& partition_text,
              std::ostream& out) {
  if (n < 1) throw InputError("--n must be positive");
  if (action == "check") {
    const auto r = check_riedtmann_compat(n);
    out << json{{"n", n}, {"partitions", r.checked}, {"pass", r.ok()},
                {"violations", r.violations}}
               .dump()
        << "\n";
    return r.ok() ? kOk : kVerificationFailed;
  }
  if (partition_text.empty()) throw UsageError(action + " needs --partition");
  const auto p = parse_partition(partition_text, n);
  if (!is_noncrossing_partition(p)) throw InputError("partition " + partition_text + " is crossing");
  if (action == "gamma") {
    const auto q = DynkinQuiver::standard(DiagramType::A, n);
    const auto g = gamma(p);
    json coords = json::array(), labels = json::array();
    for (auto [i, j] : riedtmann_coordinates(p)) coords.push_back({i, j});
    for (const auto& o : g.members) labels.push_back(object_label(q, o));
    out << json{{"partition", format_partition(p)},
                {"coordinates", coords},
                {"objects", to_json(g)},
                {"labels", labels}}
               .dump()
        << "\n";
    return kOk;
  }
  const auto image = f_map(p);
  out << json{{"partition", format_partition(p)},
              {"image", format_partition(image)},
              {"positive", is_positive_classical(image)}}
             .dump()
      << "\n";
  return kOk;
}

int cmd_hom_table(const Options& opt, const std::string& path, std::ostream& out) {
  const auto q = load_quiver(opt);
  const auto cat = OrbitCategory::build(q, opt.threads);
  save_hom_table(cat.table(), path);
  out << json{{"quiver", q.spec()}, {"objects", cat.size()}, {"path", path}}.dump() << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hom-configurations of orbit categories of Dynkin quivers"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--threads", opt.threads, "worker threads for Hom table construction")
      ->check(CLI::Range(1u, 256u));
  app.add_flag("--allow-long", opt.allow_long, "permit E7/E8");

  auto quiver_option = [&](CLI::App* sub) {
    sub->add_option("--quiver", opt.quiver, "quiver spec, e.g. A4:4>3,2>3,2>1")->required();
    sub->add_flag("--allow-long", opt.allow_long, "permit E7/E8");
    sub->add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1u, 256u));
  };

  std::string out_path, format = "json", what, suite = "all", dot, graph_json, partition;
  bool check_connected = false, list = false, count = false, positive = false;
  int n = 0;

  auto* enumerate = app.add_subcommand("enumerate", "list all Hom-configurations");
  quiver_option(enumerate);
  enumerate->add_option("--out", out_path, "output file (default stdout)");
  enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

  auto* count_cmd = app.add_subcommand("count", "count and compare with the closed form");
  quiver_option(count_cmd);
  count_cmd->add_option("--what", what)->required()->check(CLI::IsMember({"homconf", "nc", "ncpos"}));

  auto* verify = app.add_subcommand("verify", "run verification suites");
  quiver_option(verify);
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "beta", "psi", "covering", "excseq", "thm55", "mutation"}));

  auto* graph = app.add_subcommand("mutation-graph", "build the mutation graph");
  quiver_option(graph);
  graph->add_option("--dot", dot, "write DOT to this file");
  graph->add_option("--json", graph_json, "write graph JSON to this file");
  graph->add_flag("--check-connected", check_connected);

  auto* nc = app.add_subcommand("nc", "noncrossing partitions of the Weyl group");
  quiver_option(nc);
  auto* list_flag = nc->add_flag("--list", list);
  auto* count_flag = nc->add_flag("--count", count);
  list_flag->excludes(count_flag);
  nc->add_flag("--positive", positive);

  auto* typea = app.add_subcommand("typea", "classical noncrossing partitions, linear A_n");
  typea->add_option("--n", n)->required();
  typea->require_subcommand(1);
  auto* gamma_cmd = typea->add_subcommand("gamma", "Riedtmann's configuration of a partition");
  gamma_cmd->add_option("--partition", partition)->required();
  auto* f_cmd = typea->add_subcommand("f", "the map NC(n) -> NC+(n+1)");
  f_cmd->add_option("--partition", partition)->required();
  typea->add_subcommand("check", "rho^-1 gamma = f over all of NC(n)");

  auto* table = app.add_subcommand("hom-table", "write the Hom table cache file");
  quiver_option(table);
  table->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(opt, out_path, format, out);
    if (*count_cmd) return cmd_count(opt, what, out);
    if (*verify) return cmd_verify(opt, suite, out);
    if (*graph) return cmd_mutation_graph(opt, dot, graph_json, check_connected, out);
    if (*nc) {
      if (!list && !count) throw UsageError("nc needs --list or --count");
      return cmd_nc(opt, list, positive, out);
    }
    if (*typea) {
      const std::string action = *gamma_cmd ? "gamma" : *f_cmd ? "f" : "check";
      return cmd_typea(n, action, partition, out);
    }
    if (*table) return cmd_hom_table(opt, out_path, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << "\n";
    return kInput;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace homconf::cli
