#include "invar/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "invar/additive.hpp"
#include "invar/checks.hpp"
#include "invar/cycmu.hpp"
#include "invar/lattice.hpp"
#include "invar/perm.hpp"
#include "invar/presented.hpp"
#include "json.hpp"

namespace invar {

namespace fs = std::filesystem;
using nlohmann::json;

std::string cache_directory(const RunOptions& opts) {
  if (!opts.cache_dir.empty()) return opts.cache_dir;
  if (const char* env = std::getenv("INVAR_CACHE_DIR")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME")) return std::string(xdg) + "/invar";
  if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/invar";
  return ".invar-cache";
}

namespace {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_odd_prime(int64_t p) {
  if (!is_odd_prime(p))
    throw DomainError("p must be an odd prime, got " + std::to_string(p));
}

// Atomic write-temp-then-rename.
void cache_store(const std::string& dir, const std::string& key, const json& payload) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return;  // caching is best-effort
  json entry{{"key", key},
             {"engine", kEngineVersion},
             {"created_at", std::chrono::duration_cast<std::chrono::seconds>(
                                std::chrono::system_clock::now().time_since_epoch())
                                .count()},
             {"value", payload}};
  std::string tmp = dir + "/." + key + ".tmp";
  std::string final = dir + "/" + key + ".json";
  {
    std::ofstream f(tmp);
    f << entry.dump(2) << "\n";
  }
  fs::rename(tmp, final, ec);
}

bool cache_load(const std::string& dir, const std::string& key, json& payload) {
  std::ifstream f(dir + "/" + key + ".json");
  if (!f) return false;
  json entry;
  try {
    f >> entry;
  } catch (...) {
    return false;
  }
  if (entry.value("engine", "") != kEngineVersion) return false;
  payload = entry.at("value");
  return true;
}

void emit(std::ostream& out, const RunOptions& opts, const json& doc,
          const std::string& text_form) {
  if (opts.format == "text")
    out << text_form << "\n";
  else
    out << doc.dump() << "\n";
}

json generator_table_json(int64_t p, const std::string& torus, int max_degree,
                          const RunOptions& opts) {
  TorusKind tk = torus == "GL" ? TorusKind::GL : torus == "SL" ? TorusKind::SL : TorusKind::PGL;
  GroupSpec group{GroupSpec::FullSymmetric, static_cast<int>(p)};
  std::string key = "invariant-gens_p" + std::to_string(p) + "_" + torus + "_d" +
                    std::to_string(max_degree) + "_v" + kEngineVersion;
  std::string dir = cache_directory(opts);
  json payload;
  if (!opts.no_cache && cache_load(dir, key, payload)) return payload;
  auto table = minimal_generators(p, tk, group, max_degree);
  payload = table.to_json();
  json degs = json::array();
  for (int d : table.degrees()) degs.push_back(d);
  payload["degrees"] = degs;
  if (!opts.no_cache) cache_store(dir, key, payload);
  return payload;
}

int cmd_verify_all(int64_t p, int budget, const RunOptions& opts, std::ostream& out) {
  struct Check {
    std::string name;
    int cost;  // rough seconds
    std::function<bool()> run;
    bool applicable;
  };
  int pp = static_cast<int>(p);
  std::vector<Check> checks_list = {
      {"dickson-product", 1, [&] { return checks::dickson_product_identity(p); }, true},
      {"dickson-q-forms", 1, [&] { return checks::dickson_q_two_forms(p); }, true},
      {"adjoint-chern", p == 7 ? 30 : 3, [&] { return checks::adjoint_chern_table(p); }, p <= 5},
      {"sl2-invariants", 20, [&] { return checks::sl2_invariant_dims(p, p == 3 ? 24 : 30); }, p <= 5},
      {"generators", p == 5 ? 60 : 10,
       [&] {
         if (p == 3) return checks::pgl_generator_degrees(3, 8) == std::vector<int>{2, 3, 6};
         return checks::pgl5_generator_table(20);
       },
       p <= 5},
      {"relations", 20, [&] { return checks::pgl3_relations_principal(12); }, p == 3},
      {"rank-closed-form", 10, [&] { return checks::invariant_rank_closed_form(p, p == 3 ? 30 : 20); }, p <= 5},
      {"mu-restriction", 10, [&] { return checks::mu_restriction_subring(3, 18); }, p == 3},
      {"double-cosets", p == 7 ? 25 : 2, [&] { return checks::double_coset_formula(p); }, true},
      {"mackey", 60, [&] { return checks::mackey_random(p, 50, 20240901) && checks::mackey_cyclic_decomposition(p); }, p <= 5},
      {"pgl3-ring", 5, [&] { return checks::bpgl_pgl3_relations(); }, p == 3},
      {"rho-top-chern", p == 5 ? 30 : 3, [&] { return checks::rho_power_matches_top_chern(p); }, p <= 5},
      {"additive-structure", p == 5 ? 120 : 20, [&] { return checks::additive_structure_match(p, p == 3 ? 40 : 30); }, p <= 5},
      {"cycgl-injectivity", 5, [&] { return checks::cycgl_injectivity_range(p, p == 3 ? 20 : 12) && checks::cycgl_phi_relations(p); }, p <= 5},
      {"partition-identities", 2, [] { return checks::partition_identities(); }, true},
  };
  json report = json::array();
  bool all_ok = true;
  int spent = 0;
  for (auto& c : checks_list) {
    if (!c.applicable) {
      report.push_back({{"name", c.name}, {"status", "skipped"}, {"reason", "not applicable at p=" + std::to_string(p)}});
      continue;
    }
    if (budget > 0 && spent + c.cost > budget) {
      report.push_back({{"name", c.name}, {"status", "skipped"}, {"reason", "budget"}});
      continue;
    }
    spent += c.cost;
    bool ok = c.run();
    all_ok = all_ok && ok;
    report.push_back({{"name", c.name}, {"status", ok ? "pass" : "fail"}});
  }
  json doc{{"p", p}, {"engine", kEngineVersion}, {"checks", report}, {"ok", all_ok}};
  std::ostringstream text;
  for (const auto& c : doc["checks"])
    text << c["name"].get<std::string>() << ": " << c["status"].get<std::string>() << "\n";
  text << (all_ok ? "ok" : "FAILED");
  emit(out, opts, doc, text.str());
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariant-theory toolkit for torus character lattices"};
  app.require_subcommand(1);
  RunOptions opts;
  app.add_option("--cache-dir", opts.cache_dir, "cache directory");
  app.add_flag("--no-cache", opts.no_cache, "bypass the on-disk cache");
  app.add_option("--format", opts.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  int64_t p = 3;
  int64_t m = 0;
  bool cohomology = false;
  auto* additive = app.add_subcommand("additive", "additive structure of a graded piece");
  additive->add_option("--p", p)->required();
  additive->add_option("--m", m)->required();
  additive->add_flag("--cohomology", cohomology);

  int max_degree = 8;
  std::string torus = "PGL";
  auto* gens = app.add_subcommand("invariant-gens", "minimal generators of the invariant ring");
  gens->add_option("--p", p)->required();
  gens->add_option("--max-degree", max_degree)->required();
  gens->add_option("--torus", torus)->check(CLI::IsMember({"GL", "SL", "PGL"}));

  auto* rels = app.add_subcommand("relations", "relations among the minimal generators");
  rels->add_option("--p", p)->required();
  rels->add_option("--max-degree", max_degree)->required();

  bool verify = false;
  auto* dickson = app.add_subcommand("dickson", "Dickson-type invariants q and r");
  dickson->add_option("--p", p)->required();
  dickson->add_flag("--verify", verify, "check the orbit product identity");

  int64_t chern_i = 1;
  auto* chern = app.add_subcommand("chern-restrict", "adjoint Chern class restriction");
  chern->add_option("--p", p)->required();
  chern->add_option("--i", chern_i)->required();

  std::string elem_a, elem_b;
  auto* mul = app.add_subcommand("ring-mul", "multiply two normal-form ring elements");
  mul->add_option("--p", p)->required();
  mul->add_option("--a", elem_a, "element JSON")->required();
  mul->add_option("--b", elem_b, "element JSON")->required();

  std::string elem;
  auto* restr = app.add_subcommand("restrict", "restriction of a normal-form element");
  restr->add_option("--p", p)->required();
  restr->add_option("--elem", elem, "element JSON")->required();

  std::string kname = "cyclic", hname = "cyclic";
  uint64_t seed = 0;
  int instances = 20;
  auto* mackey = app.add_subcommand("mackey", "double cosets and Mackey verification");
  mackey->add_option("--p", p)->required();
  mackey->add_option("--K", kname)->check(CLI::IsMember({"cyclic", "symmetric", "normalizer", "point-stabilizer"}));
  mackey->add_option("--H", hname)->check(CLI::IsMember({"cyclic", "symmetric", "normalizer", "point-stabilizer"}));
  mackey->add_option("--seed", seed);
  mackey->add_option("--instances", instances);

  int budget = 0;
  auto* verify_all = app.add_subcommand("verify-all", "run the verification suite");
  verify_all->add_option("--p", p)->required();
  verify_all->add_option("--budget", budget, "rough time budget in seconds (0: unlimited)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 64;
  }

  try {
    require_odd_prime(p);
    if (additive->parsed()) {
      if (m < 0) throw DomainError("m must be nonnegative");
      PartitionCounter pc(p);
      AbelianGroupDesc g = cohomology ? pc.cohomology_group(m) : pc.chow_group(m);
      std::ostringstream text;
      text << (cohomology ? "H^" : "CH^") << m << ": Z^" << g.free_rank << " + (Z/" << p << ")^"
           << g.torsion.size();
      emit(out, opts, g.to_json(), text.str());
    } else if (gens->parsed()) {
      if (max_degree > DegreeLimits::default_cap(p))
        throw LimitError("max-degree exceeds the cap " + std::to_string(DegreeLimits::default_cap(p)) +
                         " for p=" + std::to_string(p));
      json payload = generator_table_json(p, torus, max_degree, opts);
      std::ostringstream text;
      text << "generator degrees:";
      for (const auto& d : payload["degrees"]) text << " " << d;
      emit(out, opts, payload, text.str());
    } else if (rels->parsed()) {
      if (max_degree > DegreeLimits::default_cap(p)) throw LimitError("max-degree exceeds cap");
      auto table = minimal_generators(p, TorusKind::PGL,
                                      {GroupSpec::FullSymmetric, static_cast<int>(p)}, max_degree);
      auto rt = find_relations(table, max_degree);
      json arr = json::array();
      std::ostringstream text;
      for (const auto& [d, rel] : rt.relations) {
        arr.push_back({{"degree", d}, {"relation", rel.str()}});
        text << "deg " << d << ": " << rel.str() << "\n";
      }
      emit(out, opts, {{"relations", arr}}, text.str());
    } else if (dickson->parsed()) {
      FpBivar q = dickson_q(p), r = dickson_r(p);
      json doc{{"p", p}, {"q", q.str()}, {"r", r.str()}};
      std::ostringstream text;
      text << "q = " << q.str() << "\nr = " << r.str();
      if (verify) {
        bool ok = checks::dickson_product_identity(p) && checks::dickson_q_two_forms(p);
        doc["verify"] = ok ? "ok" : "failed";
        text << "\nverify: " << (ok ? "ok: product identity holds" : "FAILED");
        if (!ok) {
          emit(out, opts, doc, text.str());
          return 1;
        }
      }
      emit(out, opts, doc, text.str());
    } else if (chern->parsed()) {
      if (chern_i < 1) throw DomainError("i must be >= 1");
      FpBivar c = adjoint_chern_restriction(p, static_cast<int>(chern_i));
      emit(out, opts, {{"p", p}, {"i", chern_i}, {"value", c.str()}}, c.str());
    } else if (mul->parsed()) {
      BPGLElement a = BPGLElement::from_json(json::parse(elem_a));
      BPGLElement b = BPGLElement::from_json(json::parse(elem_b));
      if (a.p != p || b.p != p) throw DomainError("element p does not match --p");
      BPGLElement c = bpgl_multiply(a, b);
      emit(out, opts, c.to_json(), c.inv.str());
    } else if (restr->parsed()) {
      BPGLElement a = BPGLElement::from_json(json::parse(elem));
      if (a.p != p) throw DomainError("element p does not match --p");
      auto img = bpgl_restrict(a);
      json doc{{"torus", img.torus_part.str()}, {"cycmu", img.cycmu_part.str()}};
      emit(out, opts, doc, "torus: " + img.torus_part.str() + "\ncycmu: " + img.cycmu_part.str());
    } else if (mackey->parsed()) {
      if (p > 7) throw LimitError("group enumeration limited to p <= 7");
      auto group_of = [&](const std::string& n) {
        GroupSpec::Kind k = n == "cyclic"            ? GroupSpec::CyclicP
                            : n == "symmetric"       ? GroupSpec::FullSymmetric
                            : n == "normalizer"      ? GroupSpec::NormalizerOfCyclic
                                                     : GroupSpec::SymmetricFixLast;
        return GroupSpec{k, static_cast<int>(p)};
      };
      auto g_all = group_elements(GroupSpec{GroupSpec::FullSymmetric, static_cast<int>(p)});
      auto k_el = group_elements(group_of(kname));
      auto h_el = group_elements(group_of(hname));
      auto dc = double_cosets(g_all, k_el, h_el);
      std::mt19937_64 rng(seed ? seed : 424242);
      bool ok = true;
      for (int i = 0; i < instances && ok; ++i) {
        Poly f;
        std::uniform_int_distribution<int> pick(1, static_cast<int>(p)), coeff(-3, 3);
        Poly g0 = Poly::term(coeff(rng) ? coeff(rng) : 1,
                             Monomial({{xvar(pick(rng)), 1 + static_cast<int>(rng() % 3)}}));
        for (const auto& h : h_el) f = f + apply_perm(h, g0);
        ok = mackey_verify(g_all, k_el, h_el, f);
      }
      json doc{{"p", p},
               {"K", kname},
               {"H", hname},
               {"double_cosets", dc.reps.size()},
               {"mackey_verified", ok},
               {"instances", instances}};
      std::ostringstream text;
      text << "double cosets: " << dc.reps.size() << "\nmackey: " << (ok ? "ok" : "FAILED");
      emit(out, opts, doc, text.str());
      if (!ok) return 1;
    } else if (verify_all->parsed()) {
      if (p > 7) throw DomainError("verify-all supports p in {3, 5, 7}");
      return cmd_verify_all(p, budget, opts, out);
    }
  } catch (const LimitError& e) {
    err << json{{"error", {{"kind", "resource-limit"}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << json{{"error", {{"kind", "domain"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << json{{"error", {{"kind", "domain"}, {"message", e.what()}}}}.dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace invar
