// Command-line front end. Prints one JSON document (or text) per run.
// Exit codes: 0 success, 2 input error, 3 resource guard, 4 internal error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wm/algebraic.hpp"
#include "wm/error.hpp"
#include "wm/report.hpp"
#include "wm/stable.hpp"

using nlohmann::json;
using namespace wm;

namespace {

struct Config {
  int rank = 0;
  std::uint64_t seed = 20240611;
  std::string cache;
  std::string format = "json";
  Guards guards;
};

// An explicit --rank is enforced; otherwise the letters used decide, at least 2.
int rank_for(const Config& cfg, const std::string& text) {
  return cfg.rank > 0 ? cfg.rank : std::max(2, rank_needed(text));
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::logic_error&) {
      throw ParseError("bad integer list '" + s + "'");
    }
  }
  return out;
}

void emit(const Config& cfg, json body, const std::string& command) {
  json out;
  out["schema"] = "v1";
  out["command"] = command;
  out["seed"] = cfg.seed;
  for (auto& [k, v] : body.items()) out[k] = v;
  if (cfg.format == "text") {
    for (auto& [k, v] : out.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word measures, Mobius inversions and stable character coefficients"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--rank", cfg.rank, "Rank of the free group (default: letters used, at least 2)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for sampling");
  app.add_option("--cache", cfg.cache, "Mobius memo file (default: $WM_CACHE)");
  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--vertex-limit", cfg.guards.vertex_limit, "Largest domain for quotient enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--lattice-limit", cfg.guards.lattice_limit, "Largest congruence lattice")->check(CLI::PositiveNumber);
  app.add_option("--labeling-limit", cfg.guards.labeling_limit, "Largest label enumeration")
      ->check(CLI::PositiveNumber);

  std::string word, words, mu, group = "1", arrm, route = "alg", phi, suite = "quick", only, variant;
  long eval_n = 0;
  int dmax = 1, mod = 0;
  bool mutate = false, timings = false;
  long samples = 100000;

  auto* core = app.add_subcommand("core-graph", "Stallings core graph of a list of words");
  core->add_option("--words,--word", words, "Comma separated words")->required();

  auto* quot = app.add_subcommand("quotients", "Surjective immersions out of a core graph");
  quot->add_option("--words,--word", words, "Comma separated words")->required();

  auto* pi = app.add_subcommand("pi", "Primitivity rank and number of critical subgroups");
  pi->add_option("--word", word)->required();

  auto* chi = app.add_subcommand("chi-alg", "chi_alg, critical extensions and E[prod(fix-1)]");
  chi->add_option("--words,--word", words)->required();
  chi->add_option("--eval", eval_n, "Evaluate at N");

  auto* ssn = app.add_subcommand("stable-sn", "E_w[chi^{mu[N]}] on S_N");
  ssn->add_option("--word", word)->required();
  ssn->add_option("--mu", mu, "Partition, e.g. 2,1 (0 for empty)")->required();
  ssn->add_option("--eval", eval_n, "Evaluate at N");
  ssn->add_option("--variant", variant, "Force non_power_no_cycles or proper_power_proper_algebraic");

  auto* swr = app.add_subcommand("stable-wreath", "E_w[chi^{->mu[N]}] on G wr S_N");
  swr->add_option("--group", group, "S1..S5 or C2")->required();
  swr->add_option("--word", word)->required();
  swr->add_option("--arrm", arrm, "label:p1,p2;label:p1")->required();
  swr->add_option("--eval", eval_n, "Evaluate at N");

  auto* ind = app.add_subcommand("induction", "E_w[Ind(chi x triv)] on G wr S_N");
  ind->add_option("--group", group, "S1..S5 or C2");
  ind->add_option("--word", word)->required();
  ind->add_option("--arrm", arrm, "label:p1,p2;label:p1 (on the trivial group: triv:mu)")->required();
  ind->add_option("--route", route, "alg or surj")->check(CLI::IsMember({"alg", "surj"}));
  ind->add_option("--eval", eval_n, "Evaluate at N");

  auto* bet = app.add_subcommand("beta", "Decay exponent of a stable coefficient");
  bet->add_option("--word", word)->required();
  bet->add_option("--mu", mu, "Partition for S_N");
  bet->add_option("--group", group, "S1..S5 or C2");
  bet->add_option("--arrm", arrm, "Partition map for G wr S_N");

  auto* spi = app.add_subcommand("spi-bound", "Upper bounds on stable primitivity ranks");
  spi->add_option("--word", word)->required();
  spi->add_option("--dmax", dmax)->check(CLI::PositiveNumber);
  auto* mod_opt = spi->add_option("--mod", mod, "Winding numbers divisible by m (0: zero)");
  spi->add_option("--phi", phi, "Group and irreducible, e.g. S3:std")->excludes(mod_opt);

  auto* ver = app.add_subcommand("verify", "Run the acceptance checks");
  ver->add_option("--suite", suite)->check(CLI::IsMember({"quick", "full"}));
  ver->add_option("--only", only, "Comma separated criterion ids");
  ver->add_flag("--mutate", mutate, "Route proper powers to the cycle-free formula");
  ver->add_option("--samples", samples)->check(CLI::PositiveNumber);
  ver->add_flag("--timings", timings, "Include timings (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  if (cfg.cache.empty())
    if (const char* env = std::getenv("WM_CACHE")) cfg.cache = env;

  try {
    Engine engine(cfg.guards);
    if (!cfg.cache.empty()) engine.load_cache(cfg.cache);
    json body;
    std::string command = app.get_subcommands().front()->get_name();

    auto stable_sn = [&]() {
      std::optional<Variant> v;
      if (variant == "non_power_no_cycles") v = Variant::NON_POWER_NO_CYCLES;
      else if (variant == "proper_power_proper_algebraic") v = Variant::PROPER_POWER_PROPER_ALGEBRAIC;
      else if (!variant.empty()) throw InputError("unknown variant '" + variant + "'");
      return stable_coefficient_sn(engine, parse_word(word, rank_for(cfg, word)), parse_partition(mu), v);
    };

    if (command == "core-graph" || command == "quotients") {
      auto ws = parse_word_list(words, rank_for(cfg, words));
      StallingsGraph sg = stallings_graph(ws);
      body["graph"] = graph_json(sg.graph);
      if (command == "quotients") {
        auto qs = quotients(sg.graph, cfg.guards);
        std::set<std::string> keys;
        json list = json::array();
        for (const auto& q : qs) {
          if (!keys.insert(canonical_key(q.cod)).second) continue;
          json x;
          x["vertices"] = q.cod.num_vertices();
          x["edges"] = q.cod.num_edges();
          x["euler_characteristic"] = q.cod.euler_characteristic();
          x["algebraic"] = engine.algebraic(q);
          x["kernel"] = kernel_partition(q);
          list.push_back(std::move(x));
        }
        body["count"] = qs.size();
        body["distinct_codomains"] = keys.size();
        body["quotients"] = std::move(list);
      }
    } else if (command == "pi") {
      auto pr = primitivity_rank(parse_word(word, rank_for(cfg, word)), cfg.guards);
      body["pi"] = pr.infinite ? json("inf") : json(pr.pi);
      body["c_w"] = pr.c_w;
    } else if (command == "chi-alg") {
      auto ws = parse_word_list(words, rank_for(cfg, words));
      auto ca = chi_alg(ws, cfg.guards);
      body["chi_alg"] = ca.minus_infinity ? json("-inf") : json(ca.value);
      body["crit_count"] = ca.crit.size();
      json crit = json::array();
      for (const auto& rec : ca.crit) crit.push_back(graph_json(rec.morphism.cod));
      body["crit"] = std::move(crit);
      LinComb f = engine.product_fix_minus_one(ws);
      body["product_fix_minus_one"] = ratfun_json(f.to_ratfun());
      if (eval_n > 0) body["value"] = f.eval(eval_n).get_str();
    } else if (command == "stable-sn") {
      auto c = stable_sn();
      body = stable_json(c);
      if (eval_n > 0) body["value"] = c.eval(eval_n).get_str();
    } else if (command == "stable-wreath") {
      FiniteGroupTable g = parse_group(group);
      auto c = stable_coefficient_wreath(engine, g, parse_word(word, rank_for(cfg, word)), parse_partition_map(g, arrm));
      body = stable_json(c);
      body["group"] = g.name;
      if (eval_n > 0) body["value"] = c.eval(eval_n).get_str();
    } else if (command == "induction") {
      FiniteGroupTable g = parse_group(group);
      LinComb f = induction_coefficient(engine, g, parse_word(word, rank_for(cfg, word)), parse_partition_map(g, arrm),
                                        route == "alg" ? InductionRoute::ALGEBRAIC : InductionRoute::SURJECTIVE);
      body["group"] = g.name;
      body["route"] = route;
      body["ratfun"] = ratfun_json(f.to_ratfun());
      if (eval_n > 0) body["value"] = f.eval(eval_n).get_str();
    } else if (command == "beta") {
      if (!mu.empty() == !arrm.empty()) throw InputError("beta needs exactly one of --mu and --arrm");
      StableCoefficient c;
      if (!mu.empty()) {
        c = stable_sn();
      } else {
        FiniteGroupTable g = parse_group(group);
        c = stable_coefficient_wreath(engine, g, parse_word(word, rank_for(cfg, word)), parse_partition_map(g, arrm));
      }
      body = stable_json(c);
    } else if (command == "spi-bound") {
      SpiConstraint con;
      if (!phi.empty()) {
        auto colon = phi.find(':');
        if (colon == std::string::npos) throw ParseError("--phi expects GROUP:LABEL");
        con.kind = SpiConstraint::PHI;
        con.group = parse_group(phi.substr(0, colon));
        con.irr = con.group->irr_index(phi.substr(colon + 1));
      } else if (spi->count("--mod")) {
        if (mod == 1 || mod < 0) throw InputError("--mod needs m = 0 or m >= 2");
        con.kind = SpiConstraint::MOD_M;
        con.m = mod;
      }
      body = spi_json(spi_search(engine, parse_word(word, rank_for(cfg, word)), dmax, con));
      body["word"] = word;
    } else if (command == "verify") {
      VerifyOptions opt;
      opt.full = suite == "full";
      opt.mutate = mutate;
      opt.seed = cfg.seed;
      opt.samples = samples;
      opt.guards = cfg.guards;
      if (!only.empty()) opt.only = parse_int_list(only);
      auto results = run_verify(opt);
      body = verify_json(results, timings);
      body["suite"] = suite;
      body["mutated"] = mutate;
      emit(cfg, std::move(body), command);
      if (!cfg.cache.empty()) engine.save_cache(cfg.cache);
      return 0;
    }
    if (!cfg.cache.empty()) engine.save_cache(cfg.cache);
    emit(cfg, std::move(body), command);
    return 0;
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
