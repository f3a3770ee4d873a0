#include "cq/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace cq {

namespace {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::info: return "INFO";
  }
  return "?";
}

class Timer {
 public:
  explicit Timer(Report& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  Report& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

bool Report::passed() const { return count(Status::fail) == 0; }

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [s](const auto& c) { return c.status == s; }));
}

void Report::add(std::string name, bool ok, std::string detail, nlohmann::json witness) {
  cases.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(detail), std::move(witness)});
}

void Report::info(std::string name, std::string detail, nlohmann::json witness) {
  cases.push_back({std::move(name), Status::info, std::move(detail), std::move(witness)});
}

nlohmann::json Report::to_json(bool with_timing) const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : cases) {
    nlohmann::json jc = {{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}};
    if (!c.witness.is_null()) jc["witness"] = c.witness;
    cs.push_back(jc);
  }
  nlohmann::json out = {{"suite", suite},
                        {"subject", subject},
                        {"seed", seed},
                        {"status", passed() ? "PASS" : "FAIL"},
                        {"pass", count(Status::pass)},
                        {"fail", count(Status::fail)},
                        {"info", count(Status::info)},
                        {"cases", cs}};
  if (with_timing) out["seconds"] = seconds;
  return out;
}

std::string Report::to_table(bool with_timing) const {
  std::ostringstream os;
  os << suite << " [" << subject << "] seed=" << seed << "\n";
  for (const auto& c : cases) {
    os << "  " << status_name(c.status) << "  " << c.name;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  os << "  " << (passed() ? "PASS" : "FAIL") << ": " << count(Status::pass) << " passed, "
     << count(Status::fail) << " failed, " << count(Status::info) << " info";
  if (with_timing) os << ", " << seconds << " s";
  os << "\n";
  return os.str();
}

// --------------------------------------------------------------- T-system

Report verify_t_system_with(const BipartiteGraph& g, const CharacterFn& character) {
  Report r;
  r.suite = "t-system";
  Timer timer(r);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const QCharacter xi = character(frozen_simple(g, i));
    const QCharacter xpi = character(principal_simple(g, i));
    const QCharacter fi = character(kr_module(g, i));
    LaurentPoly rhs = fi.poly;
    LaurentPoly neighbours(1);
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g.adjacency(i, j) > 0) neighbours *= character(frozen_simple(g, j)).poly.pow(g.adjacency(i, j));
    rhs += neighbours;
    const LaurentPoly lhs = xi.poly * xpi.poly;
    nlohmann::json witness;
    if (lhs != rhs) witness = {{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
    r.add("vertex " + g.id(i), lhs == rhs, {}, witness);
  }
  return r;
}

Report verify_t_system(const BipartiteGraph& g, const VerifyOptions& opts) {
  Report r = verify_t_system_with(g, [&](const GradedDim& w) {
    return truncated_character(g, w, CharacterMode::t_equals_1, opts.character);
  });
  r.seed = opts.character.seed;
  return r;
}

// ------------------------------------------------------------------ seeds

Seed z_seed(const BipartiteGraph& g) {
  Seed s = initial_seed(build_z_quiver(g));
  for (std::size_t i = 0; i < g.size(); ++i) s.variables[g.id(i)] = LaurentPoly::variable("z" + g.id(i));
  return s;
}

std::map<std::string, LaurentPoly> z_seed_characters(const BipartiteGraph& g) {
  std::map<std::string, LaurentPoly> images;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& id = g.id(i);
    const int xi = g.parity(i);
    images["z" + id] = LaurentPoly::variable(y_name(id, xi == 0 ? 2 : 3));
    images["f" + id] = LaurentPoly::variable(y_name(id, xi)) * LaurentPoly::variable(y_name(id, xi + 2));
  }
  return images;
}

std::optional<GradedDim> module_for_g_vector(const BipartiteGraph& g, const std::vector<int>& gvec) {
  DimVector w(g.size(), 0);
  bool nonnegative = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    w[i] = -g.sign(i) * gvec[i];
    if (w[i] < 0) nonnegative = false;
  }
  if (nonnegative && std::any_of(w.begin(), w.end(), [](int x) { return x > 0; }))
    return from_principal_dims(g, w);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.parity(i) != 1) continue;
    std::vector<int> e(g.size(), 0);
    e[i] = -1;
    if (gvec == e) return frozen_simple(g, i);
  }
  return std::nullopt;
}

namespace {

std::vector<int> g_vector_from_sigma(const BipartiteGraph& g, const GradedDim& sigma) {
  const DimVector s = principal_dims(g, sigma);
  std::vector<int> out(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.parity(i) == 0) {
      out[i] = -s[i];
    } else {
      int v = s[i];
      for (std::size_t j = 0; j < g.size(); ++j) v -= g.adjacency(i, j) * s[j];
      out[i] = -v;
    }
  }
  return out;
}

std::string vec_to_string(const std::vector<int>& v) { return dim_to_string(v); }

}  // namespace

// ---------------------------------------------------------- HL dictionary

Report verify_hl_correspondence(const BipartiteGraph& g, const VerifyOptions& opts) {
  Report r;
  r.suite = "hl-correspondence";
  r.seed = opts.character.seed;
  Timer timer(r);

  const Seed target = z_seed(g);
  const Seed principal = principal_seed(target.matrix);
  const auto images = z_seed_characters(g);
  const Quiver principal_part = principal_decorated_part(g);
  Rng rng(opts.seed);

  const ClusterEnumeration en = enumerate_clusters(principal, opts.max_seeds);
  r.add("exchange graph closed", en.closed, std::to_string(en.clusters.size()) + " clusters");

  std::set<std::string> initial;
  for (const auto& c : principal.matrix.columns()) initial.insert(principal.variables.at(c).to_string());

  for (const auto& [text, loc] : en.variables) {
    if (initial.count(text)) continue;
    const LaurentPoly alpha = LaurentPoly::parse(text);
    const std::string name = "variable " + text;
    LaurentPoly fpoly;
    std::vector<int> gvec;
    try {
      fpoly = f_polynomial(principal, alpha);
      gvec = g_vector(principal, alpha);
    } catch (const std::exception& e) {
      r.add(name, false, e.what());
      continue;
    }
    const auto w = module_for_g_vector(g, gvec);
    if (!w) {
      r.add(name, false, "no module matches g = " + vec_to_string(gvec), {{"g", gvec}});
      continue;
    }
    nlohmann::json witness = {{"W", w->to_json()}, {"g", gvec}, {"F", fpoly.to_string()}};
    std::vector<std::string> problems;

    if (is_principal(g, *w) &&
        !is_real_schur(principal_part, principal_dims(g, *w), opts.field, opts.samples, rng))
      problems.push_back("W is not a real Schur root");

    GrassmannianData data;
    try {
      data = grassmannian_data(g, *w, opts.character);
    } catch (const std::exception& e) {
      r.add(name, false, e.what(), witness);
      continue;
    }
    const LaurentPoly euler = euler_generating_function(g, data);
    if (euler != fpoly) {
      problems.push_back("F-polynomial differs from the Euler generating function");
      witness["euler"] = euler.to_string();
    }
    const auto expected_g = g_vector_from_sigma(g, data.sigma);
    if (expected_g != gvec) {
      problems.push_back("g-vector differs from the sigma W prediction " + vec_to_string(expected_g));
    }

    const LaurentPoly rebuilt = reconstruct_variable(fpoly, gvec, target, principal);
    const LaurentPoly direct = mutate_along(target, loc.path).variable(loc.vertex);
    if (rebuilt != direct) {
      problems.push_back("reconstruction differs from direct mutation");
      witness["rebuilt"] = rebuilt.to_string();
      witness["direct"] = direct.to_string();
    }
    const LaurentPoly via_y = substitute(direct, images);
    const QCharacter chi = character_from_data(g, data, CharacterMode::t_equals_1);
    if (via_y != chi.poly) {
      problems.push_back("character differs after substitution");
      witness["substituted"] = via_y.to_string();
      witness["character"] = chi.to_string();
    }
    std::string detail = "W=" + w->to_string();
    for (const auto& p : problems) detail += "; " + p;
    r.add(name, problems.empty(), detail, witness);
  }
  return r;
}

// ------------------------------------------------------- common clusters

namespace {

// x_i for the frozen simple S_{i'}, otherwise the principal module
struct ModuleTag {
  std::optional<std::size_t> frozen_vertex;
  DimVector principal;
};

ModuleTag tag_for(const BipartiteGraph& g, const GradedDim& w) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (w == frozen_simple(g, i)) return {i, {}};
  if (!is_principal(g, w)) throw std::logic_error("unexpected module " + w.to_string());
  return {std::nullopt, principal_dims(g, w)};
}

}  // namespace

Report verify_common_cluster(const BipartiteGraph& g, const VerifyOptions& opts) {
  Report r;
  r.suite = "common-cluster";
  r.seed = opts.seed;
  Timer timer(r);

  const Seed target = z_seed(g);
  const Seed principal = principal_seed(target.matrix);
  const Quiver principal_part = principal_decorated_part(g);
  Rng rng(opts.seed);

  const ClusterEnumeration en = enumerate_clusters(target, opts.max_seeds);
  r.add("exchange graph closed", en.closed, std::to_string(en.clusters.size()) + " clusters");

  std::vector<std::string> texts;
  std::vector<ModuleTag> tags;
  for (const auto& [text, loc] : en.variables) {
    std::optional<GradedDim> w;
    bool is_initial = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (text == target.variables.at(g.id(i)).to_string()) {
        w = g.parity(i) == 0 ? frozen_simple(g, i) : principal_simple(g, i);
        is_initial = true;
      }
    }
    if (!is_initial) {
      const LaurentPoly alpha = mutate_along(principal, loc.path).variable(loc.vertex);
      w = module_for_g_vector(g, g_vector(principal, alpha));
    }
    if (!w) {
      r.add("variable " + text, false, "no matching module");
      continue;
    }
    texts.push_back(text);
    tags.push_back(tag_for(g, *w));
  }

  std::vector<std::set<std::string>> clusters;
  for (const auto& key : en.clusters) clusters.emplace_back(key.begin(), key.end());
  auto common = [&](const std::string& a, const std::string& b) {
    return std::any_of(clusters.begin(), clusters.end(),
                       [&](const auto& c) { return c.count(a) && c.count(b); });
  };

  std::map<std::pair<DimVector, DimVector>, int> ext_cache;
  auto ext = [&](const DimVector& a, const DimVector& b) {
    auto key = std::make_pair(a, b);
    auto it = ext_cache.find(key);
    if (it == ext_cache.end())
      it = ext_cache.emplace(key, generic_ext(principal_part, a, b, opts.field, opts.samples, rng)).first;
    return it->second;
  };
  auto predicted = [&](const ModuleTag& a, const ModuleTag& b) {
    if (a.frozen_vertex && b.frozen_vertex) return true;
    if (a.frozen_vertex) return b.principal[*a.frozen_vertex] == 0;
    if (b.frozen_vertex) return a.principal[*b.frozen_vertex] == 0;
    return ext(a.principal, b.principal) == 0 && ext(b.principal, a.principal) == 0;
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < texts.size(); ++a)
    for (std::size_t b = a + 1; b < texts.size(); ++b) pairs.emplace_back(a, b);
  if (pairs.size() > opts.pair_budget) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(opts.pair_budget);
    std::sort(pairs.begin(), pairs.end());
  }
  std::size_t agree = 0, compatible = 0;
  for (auto [a, b] : pairs) {
    const bool seen = common(texts[a], texts[b]);
    const bool expect = predicted(tags[a], tags[b]);
    compatible += seen;
    if (seen == expect) {
      ++agree;
      continue;
    }
    r.add("pair " + texts[a] + " | " + texts[b], false,
          std::string("exchange graph says ") + (seen ? "compatible" : "incompatible"));
  }
  r.add("pairs agree", agree == pairs.size(),
        std::to_string(agree) + "/" + std::to_string(pairs.size()) + " pairs, " + std::to_string(compatible) +
            " compatible");

  const std::size_t frozen_ok = static_cast<std::size_t>(std::count_if(
      en.frozen_variables.begin(), en.frozen_variables.end(), [&](const std::string& f) {
        return std::all_of(en.cluster_paths.begin(), en.cluster_paths.end(), [&](const MutationPath& p) {
          const Seed s = mutate_along(target, p);
          return std::any_of(s.variables.begin(), s.variables.end(),
                             [&](const auto& kv) { return kv.second.to_string() == f; });
        });
      }));
  r.add("frozen variables lie in every cluster", frozen_ok == en.frozen_variables.size());
  return r;
}

// ------------------------------------------------------------ odd vanishing

Report verify_odd_vanishing(const Quiver& q, const std::vector<DimVector>& dims,
                            const std::vector<std::uint32_t>& primes, const VerifyOptions& opts) {
  Report r;
  r.suite = "odd-vanishing";
  r.seed = opts.seed;
  Timer timer(r);
  CountingOptions copts;
  copts.primes = primes;
  copts.seed = opts.seed;
  for (const auto& d : dims) {
    const std::string name = "dimension " + dim_to_string(d);
    try {
      const auto polys = counting_polynomials(q, d, full_range(d), copts);
      std::vector<std::string> bad;
      nlohmann::json witness = nlohmann::json::object();
      for (const auto& [v, c] : polys) {
        witness[dim_to_string(v)] = c.to_string();
        if (!c.nonnegative()) bad.push_back(dim_to_string(v));
      }
      r.add(name, bad.empty(), std::to_string(polys.size()) + " subdimensions", witness);
    } catch (const std::exception& e) {
      r.add(name, false, e.what());
    }
  }
  return r;
}

Report verify_odd_vanishing(const Quiver& q, int max_entry, const std::vector<std::uint32_t>& primes,
                            const VerifyOptions& opts) {
  Rng rng(opts.seed);
  std::vector<DimVector> rigid;
  std::vector<std::string> skipped;
  DimVector d(q.size(), 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < d.size() && ++d[pos] > max_entry) d[pos++] = 0;
    if (pos == d.size()) break;
    if (generic_self_ext(q, d, opts.field, opts.samples, rng) == 0)
      rigid.push_back(d);
    else
      skipped.push_back(dim_to_string(d));
  }
  Report r = verify_odd_vanishing(q, rigid, primes, opts);
  if (!skipped.empty()) {
    std::string list;
    for (const auto& s : skipped) list += (list.empty() ? "" : " ") + s;
    r.info("non-rigid dimensions skipped", list);
  }
  return r;
}

// --------------------------------------------------------------- positivity

Report verify_positivity(const BipartiteGraph& g, const VerifyOptions& opts) {
  Report r;
  r.suite = "positivity";
  r.seed = opts.seed;
  Timer timer(r);
  const std::vector<std::pair<std::string, Seed>> frames = {
      {"plain", initial_seed(plain_quiver(g))},
      {"x-quiver", initial_seed(build_x_quiver(g))},
      {"principal", principal_seed(to_matrix(plain_quiver(g)))},
  };
  for (const auto& [label, seed] : frames) {
    const auto en = enumerate_clusters(seed, opts.max_seeds);
    std::vector<std::string> negative;
    for (const auto& [text, loc] : en.variables)
      if (!LaurentPoly::parse(text).has_nonnegative_coefficients()) negative.push_back(text);
    r.add(label + " frame", negative.empty() && en.closed,
          std::to_string(en.variables.size()) + " variables" + (en.closed ? "" : ", enumeration not closed"),
          negative.empty() ? nlohmann::json(nullptr) : nlohmann::json(negative));
  }
  return r;
}

// ----------------------------------------------------------- factorizations

Report verify_factorizations(const BipartiteGraph& g, int cases, int max_entry, const VerifyOptions& opts) {
  Report r;
  r.suite = "factorization";
  r.seed = opts.seed;
  Timer timer(r);
  Rng rng(opts.seed);
  std::uniform_int_distribution<int> dist(0, max_entry);
  for (int c = 0; c < cases; ++c) {
    GradedDim w;
    for (std::size_t i = 0; i < g.size(); ++i) {
      w.set(g.id(i), principal_slot(g, i), dist(rng));
      w.set(g.id(i), frozen_slot(g, i), dist(rng));
    }
    const std::string name = "W=" + w.to_string();
    try {
      const KrCheck kr1 = verify_kr_factorization(g, w, CharacterMode::t_equals_1, opts.character);
      const KrCheck krt = verify_kr_factorization(g, w, CharacterMode::raw_t, opts.character);
      const FactorizationCheck fac = verify_tensor_factorization(g, w, opts.character);
      std::string detail = std::to_string(fac.factorization.factors.size()) + " factors";
      if (!kr1.holds) detail += "; KR identity fails at t=1";
      if (!krt.holds) detail += "; KR identity fails in t";
      if (!fac.holds) detail += "; tensor factorization fails";
      nlohmann::json witness;
      if (!(kr1.holds && krt.holds && fac.holds))
        witness = {{"kr_lhs", kr1.lhs.to_string()}, {"kr_rhs", kr1.rhs.to_string()},
                   {"fac_lhs", fac.lhs.to_string()}, {"fac_rhs", fac.rhs.to_string()}};
      r.add(name, kr1.holds && krt.holds && fac.holds, detail, witness);
    } catch (const std::exception& e) {
      r.add(name, false, e.what());
    }
  }
  return r;
}

}  // namespace cq
