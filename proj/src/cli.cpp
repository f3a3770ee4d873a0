#include "cq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cq/explorer.hpp"
#include "cq/fp_matrix.hpp"
#include "cq/grassmannian.hpp"
#include "cq/verifier.hpp"

namespace cq {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw UsageError("expected an integer, got '" + s + "'");
  return v;
}

DimVector parse_dims(const std::string& s) {
  DimVector d;
  for (const auto& x : split(s, ',')) d.push_back(to_int(x));
  return d;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// --graph / --graph-file / --parts
struct GraphArgs {
  std::string name = "a3";
  std::string file;
  std::string parts;

  void attach(CLI::App* app) {
    app->add_option("--graph", name, "built-in graph: a2 a3 a4 d4 d5 e6 kronecker")->capture_default_str();
    app->add_option("--graph-file", file, "graph JSON {vertices, edges, parts}");
    app->add_option("--parts", parts, "comma-separated I0 vertices");
  }

  BipartiteGraph build() const {
    std::optional<std::vector<std::string>> part0;
    if (!parts.empty()) part0 = split(parts, ',');
    try {
      if (file.empty()) return builtin_graph(name, part0);
      BipartiteGraph g = BipartiteGraph::from_json(read_json_file(file));
      if (!part0) return g;
      std::vector<std::pair<std::string, std::string>> edges;
      for (auto [i, j] : g.edges()) edges.emplace_back(g.id(i), g.id(j));
      return BipartiteGraph(g.vertices(), edges, part0);
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad graph: ") + e.what());
    }
  }
};

const std::vector<std::string> kinds = {"decorated", "principal", "x", "z", "plain", "part"};

Quiver quiver_of_kind(const BipartiteGraph& g, const std::string& kind) {
  if (kind == "decorated") return build_decorated(g);
  if (kind == "principal") return build_principal_decoration(g);
  if (kind == "x") return build_x_quiver(g);
  if (kind == "z") return build_z_quiver(g);
  if (kind == "plain") return plain_quiver(g);
  if (kind == "part") return principal_decorated_part(g);
  throw UsageError("unknown quiver kind " + kind);
}

std::string quiver_table(const Quiver& q) {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& v : q.vertices()) {
    os << " " << v.id;
    if (v.parity) os << "[" << *v.parity << "]";
  }
  os << "\narrows:";
  for (const auto& [a, b] : q.arrow_list()) os << " " << q.vertices()[a].id << "->" << q.vertices()[b].id;
  os << "\n";
  return os.str();
}

std::string matrix_table(const ExchangeMatrix& b) {
  std::ostringstream os;
  os << "     ";
  for (const auto& c : b.columns()) os << std::setw(4) << c;
  os << "\n";
  for (std::size_t r = 0; r < b.row_count(); ++r) {
    os << std::setw(4) << b.rows()[r].id << " ";
    for (std::size_t c = 0; c < b.column_count(); ++c) os << std::setw(4) << b.at(r, c);
    os << "\n";
  }
  return os.str();
}

std::string seed_table(const Seed& s) {
  std::ostringstream os;
  os << matrix_table(s.matrix);
  for (const auto& row : s.matrix.rows()) os << row.id << ": " << s.variable(row.id).to_string() << "\n";
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cluster algebras, quiver Grassmannians and truncated q,t-characters", "cq"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // quiver
  auto* quiver_cmd = app.add_subcommand("quiver", "build a quiver from a bipartite graph");
  GraphArgs quiver_graph;
  quiver_graph.attach(quiver_cmd);
  std::string quiver_kind = "x";
  quiver_cmd->add_option("--kind", quiver_kind, "decorated principal x z plain part")
      ->check(CLI::IsMember(kinds))
      ->capture_default_str();
  quiver_cmd->add_flag("--json", as_json);

  // mutate
  auto* mutate_cmd = app.add_subcommand("mutate", "mutate a seed along a path");
  std::string seed_file;
  GraphArgs mutate_graph;
  std::string mutate_kind = "x";
  std::vector<std::string> at;
  mutate_cmd->add_option("--seed", seed_file, "seed JSON file (default: initial seed of --graph/--kind)");
  mutate_graph.attach(mutate_cmd);
  mutate_cmd->add_option("--kind", mutate_kind)->check(CLI::IsMember(kinds))->capture_default_str();
  mutate_cmd->add_option("--at", at, "vertex to mutate at, repeatable, applied in order");
  mutate_cmd->add_flag("--json", as_json);

  // clusters
  auto* clusters_cmd = app.add_subcommand("clusters", "enumerate the exchange graph");
  GraphArgs clusters_graph;
  clusters_graph.attach(clusters_cmd);
  std::string clusters_kind = "plain";
  std::size_t max_seeds = 5000;
  bool principal = false;
  clusters_cmd->add_option("--kind", clusters_kind)->check(CLI::IsMember(kinds))->capture_default_str();
  clusters_cmd->add_option("--max-seeds", max_seeds)->capture_default_str();
  clusters_cmd->add_flag("--principal", principal, "use principal coefficients on the principal part");
  clusters_cmd->add_flag("--json", as_json);

  // grcount
  auto* grcount_cmd = app.add_subcommand("grcount", "counting polynomials of quiver Grassmannians");
  GraphArgs grcount_graph;
  grcount_graph.attach(grcount_cmd);
  std::string grcount_kind = "part";
  std::string quiver_file;
  std::string dim_text;
  std::string sub_text;
  std::string primes_text = "2,3,5,7,11,13";
  std::uint64_t rng_seed = 1;
  grcount_cmd->add_option("--kind", grcount_kind)->check(CLI::IsMember(kinds))->capture_default_str();
  grcount_cmd->add_option("--quiver-file", quiver_file, "quiver JSON instead of a graph");
  grcount_cmd->add_option("--dim", dim_text, "dimension vector, comma-separated")->required();
  grcount_cmd->add_option("--sub", sub_text, "one subdimension (default: all)");
  grcount_cmd->add_option("--primes", primes_text)->capture_default_str();
  grcount_cmd->add_option("--seed", rng_seed)->capture_default_str();
  grcount_cmd->add_flag("--json", as_json);

  // qchar
  auto* qchar_cmd = app.add_subcommand("qchar", "truncated q,t-character of an almost simple module");
  GraphArgs qchar_graph;
  qchar_graph.attach(qchar_cmd);
  std::vector<std::string> w_kr, w_slots;
  std::vector<std::string> w_x, w_xp;
  std::string mode = "t1";
  bool pretty = false;
  std::uint64_t qchar_seed = 7;
  qchar_cmd->add_option("--w", w_kr, "i:k adds k copies of the KR module f_i");
  qchar_cmd->add_option("--x", w_x, "adds the frozen simple x_i");
  qchar_cmd->add_option("--xp", w_xp, "adds the principal simple x_i'");
  qchar_cmd->add_option("--slot", w_slots, "i:n:d sets W at vertex i, degree n, to d");
  qchar_cmd->add_option("--mode", mode, "t1 (Euler numbers), t (normalized), raw (unshifted)")
      ->check(CLI::IsMember({"t1", "t", "raw"}))
      ->capture_default_str();
  qchar_cmd->add_flag("--pretty", pretty, "Y_{i,q^n} notation");
  qchar_cmd->add_option("--seed", qchar_seed)->capture_default_str();
  qchar_cmd->add_flag("--json", as_json);

  // decomp
  auto* decomp_cmd = app.add_subcommand("decomp", "canonical decomposition of a dimension vector");
  GraphArgs decomp_graph;
  decomp_graph.attach(decomp_cmd);
  std::string decomp_kind = "part";
  std::string decomp_dim;
  std::string decomp_quiver_file;
  std::uint32_t field = 101;
  int samples = 5;
  std::uint64_t decomp_seed = 11;
  decomp_cmd->add_option("--kind", decomp_kind)->check(CLI::IsMember(kinds))->capture_default_str();
  decomp_cmd->add_option("--quiver-file", decomp_quiver_file);
  decomp_cmd->add_option("--dim", decomp_dim)->required();
  decomp_cmd->add_option("--p", field, "prime field")->capture_default_str();
  decomp_cmd->add_option("--samples", samples)->capture_default_str();
  decomp_cmd->add_option("--seed", decomp_seed)->capture_default_str();
  decomp_cmd->add_flag("--json", as_json);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  const std::vector<std::string> suites = {"t-system",      "hl",         "common-cluster",
                                           "odd-vanishing", "positivity", "factorization"};
  std::string suite;
  GraphArgs verify_graph;
  VerifyOptions vopts;
  int cases = 50;
  int max_entry = 2;
  std::string verify_kind = "part";
  std::string verify_primes = "2,3,5,7,11,13";
  bool no_timing = false;
  verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(suites));
  verify_graph.attach(verify_cmd);
  verify_cmd->add_option("--seed", vopts.seed)->capture_default_str();
  verify_cmd->add_option("--max-seeds", vopts.max_seeds)->capture_default_str();
  verify_cmd->add_option("--pairs", vopts.pair_budget)->capture_default_str();
  verify_cmd->add_option("--cases", cases, "factorization: random W")->capture_default_str();
  verify_cmd->add_option("--max-entry", max_entry, "factorization / odd-vanishing: largest entry")
      ->capture_default_str();
  verify_cmd->add_option("--kind", verify_kind, "odd-vanishing: quiver built from the graph")
      ->check(CLI::IsMember(kinds))
      ->capture_default_str();
  verify_cmd->add_option("--primes", verify_primes)->capture_default_str();
  verify_cmd->add_flag("--no-timing", no_timing);
  verify_cmd->add_flag("--json", as_json);

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "run the explorer HTTP service");
  std::string host = "127.0.0.1";
  int port = 8472;
  std::string state_dir;
  serve_cmd->add_option("--host", host)->capture_default_str();
  serve_cmd->add_option("--port", port)->capture_default_str();
  serve_cmd->add_option("--state-dir", state_dir, "persist sessions as JSON snapshots");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto primes_of = [](const std::string& text) {
    std::vector<std::uint32_t> ps;
    for (const auto& s : split(text, ',')) {
      const int p = to_int(s);
      if (p < 2 || !is_prime(static_cast<std::uint32_t>(p))) throw UsageError(s + " is not a prime");
      ps.push_back(static_cast<std::uint32_t>(p));
    }
    return ps;
  };

  try {
    if (*quiver_cmd) {
      const Quiver q = quiver_of_kind(quiver_graph.build(), quiver_kind);
      if (as_json)
        out << json{{"quiver", q.to_json()}, {"matrix", to_matrix(q).to_json()}}.dump(2) << "\n";
      else
        out << quiver_table(q) << matrix_table(to_matrix(q));
      return 0;
    }

    if (*mutate_cmd) {
      Seed s = seed_file.empty() ? initial_seed(quiver_of_kind(mutate_graph.build(), mutate_kind))
                                 : Seed::from_json(read_json_file(seed_file));
      for (const auto& k : at) {
        if (!s.matrix.is_column(k)) throw UsageError("cannot mutate at '" + k + "': not a mutable vertex");
        s = mutate_seed(s, k);
      }
      // always JSON so the output can be fed back in
      out << s.to_json().dump(2) << "\n";
      if (!as_json) err << seed_table(s);
      return 0;
    }

    if (*clusters_cmd) {
      const Quiver q = quiver_of_kind(clusters_graph.build(), clusters_kind);
      const Seed start = principal ? principal_seed(to_matrix(q)) : initial_seed(q);
      const auto en = enumerate_clusters(start, max_seeds);
      if (as_json) {
        json vars = json::array();
        for (const auto& [text, loc] : en.variables) vars.push_back({{"variable", text}, {"path", loc.path}});
        out << json{{"closed", en.closed},       {"cluster_count", en.clusters.size()},
                    {"variable_count", en.variables.size()}, {"clusters", en.clusters},
                    {"variables", vars},         {"frozen", en.frozen_variables}}
                   .dump(2)
            << "\n";
      } else {
        out << "clusters: " << en.clusters.size() << "\nvariables: " << en.variables.size()
            << "\nclosed: " << (en.closed ? "yes" : "no") << "\n";
        for (const auto& [text, loc] : en.variables) out << "  " << text << "\n";
      }
      return en.closed ? 0 : 1;
    }

    if (*grcount_cmd) {
      const Quiver q = quiver_file.empty() ? quiver_of_kind(grcount_graph.build(), grcount_kind)
                                           : Quiver::from_json(read_json_file(quiver_file));
      const DimVector d = parse_dims(dim_text);
      if (d.size() != q.size()) throw UsageError("--dim needs " + std::to_string(q.size()) + " entries");
      CountingOptions copts;
      copts.primes = primes_of(primes_text);
      copts.seed = rng_seed;
      const SubdimensionRange range = sub_text.empty() ? full_range(d) : single(parse_dims(sub_text));
      const auto polys = counting_polynomials(q, d, range, copts);
      if (as_json) {
        json j = json::array();
        for (const auto& [v, c] : polys) j.push_back({{"sub", v}, {"polynomial", c.to_json()}});
        out << j.dump(2) << "\n";
      } else {
        for (const auto& [v, c] : polys)
          out << dim_to_string(v) << "  " << c.to_string() << "  euler=" << c.euler_number() << "\n";
      }
      return 0;
    }

    if (*qchar_cmd) {
      const BipartiteGraph g = qchar_graph.build();
      GradedDim w;
      for (const auto& item : w_kr) {
        const auto parts = split(item, ':');
        if (parts.size() != 2) throw UsageError("--w expects i:k, got " + item);
        const std::size_t i = g.index_of(parts[0]);
        const int k = to_int(parts[1]);
        const GradedDim kr = kr_module(g, i);
        for (const auto& [key, d] : kr.entries()) w.add(key.first, key.second, k * d);
      }
      for (const auto& id : w_x) w = w + frozen_simple(g, g.index_of(id));
      for (const auto& id : w_xp) w = w + principal_simple(g, g.index_of(id));
      for (const auto& item : w_slots) {
        const auto parts = split(item, ':');
        if (parts.size() != 3) throw UsageError("--slot expects i:n:d, got " + item);
        w.set(parts[0], to_int(parts[1]), to_int(parts[2]));
      }
      const CharacterMode m = mode == "t1" ? CharacterMode::t_equals_1
                              : mode == "t" ? CharacterMode::normalized_t
                                            : CharacterMode::raw_t;
      CharacterOptions copts;
      copts.seed = qchar_seed;
      const QCharacter chi = truncated_character(g, w, m, copts);
      if (as_json)
        out << json{{"w", w.to_json()}, {"mode", mode}, {"character", chi.to_json()}}.dump(2) << "\n";
      else
        out << (pretty ? chi.pretty() : chi.to_string()) << "\n";
      return 0;
    }

    if (*decomp_cmd) {
      const Quiver q = decomp_quiver_file.empty() ? quiver_of_kind(decomp_graph.build(), decomp_kind)
                                                  : Quiver::from_json(read_json_file(decomp_quiver_file));
      const DimVector d = parse_dims(decomp_dim);
      if (d.size() != q.size()) throw UsageError("--dim needs " + std::to_string(q.size()) + " entries");
      if (!is_prime(field)) throw UsageError("--p must be prime");
      Rng rng(decomp_seed);
      const auto parts = canonical_decomposition(q, d, field, samples, rng);
      if (as_json) {
        json j = json::array();
        for (const auto& part : parts) {
          Rng r2(decomp_seed);
          j.push_back({{"dim", part},
                       {"euler_form", euler_form(q, part, part)},
                       {"real_schur", is_real_schur(q, part, field, samples, r2)}});
        }
        out << j.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? " + " : "") << dim_to_string(parts[i]);
        out << "\n";
      }
      return 0;
    }

    if (*verify_cmd) {
      const BipartiteGraph g = verify_graph.build();
      Report r;
      if (suite == "t-system") r = verify_t_system(g, vopts);
      if (suite == "hl") r = verify_hl_correspondence(g, vopts);
      if (suite == "common-cluster") r = verify_common_cluster(g, vopts);
      if (suite == "positivity") r = verify_positivity(g, vopts);
      if (suite == "factorization") r = verify_factorizations(g, cases, max_entry, vopts);
      if (suite == "odd-vanishing")
        r = verify_odd_vanishing(quiver_of_kind(g, verify_kind), max_entry, primes_of(verify_primes), vopts);
      r.subject = verify_graph.file.empty() ? verify_graph.name : verify_graph.file;
      if (as_json)
        out << r.to_json(!no_timing).dump(2) << "\n";
      else
        out << r.to_table(!no_timing);
      return r.passed() ? 0 : 1;
    }

    if (*serve_cmd) {
      ExplorerService service(state_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(state_dir));
      err << "listening on http://" << host << ":" << port << "\n";
      return serve_explorer(service, host, port);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace cq
