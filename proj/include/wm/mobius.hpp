#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "wm/config.hpp"
#include "wm/enumerate.hpp"
#include "wm/graph.hpp"
#include "wm/ratfun.hpp"

namespace wm {

enum class MobiusKind { PHI, L_SURJ, C_SURJ, R_SURJ, L_ALG, C_ALG, R_ALG };
const char* kind_name(MobiusKind k);
MobiusKind parse_kind(const std::string& s);

// Average number of injective lifts of eta to a random N-cover of its
// codomain: prod_v (N)_{|fiber v|} / prod_e (N)_{|fiber e|}.
LinComb lb(const Morphism& eta);
// Same for g/p -> target, where `target` maps each vertex of g to a
// codomain vertex and codomain has `target_rank` labels.
LinComb lb_quotient(const CoreGraph& g, const VertexPartition& p, const std::vector<int>& target, int num_targets);

// Memoizing engine for the Mobius inversions of Phi. Thread-safe.
class Engine {
 public:
  explicit Engine(Guards guards = {});
  ~Engine();
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const Guards& guards() const { return guards_; }

  // Congruence lattice of g in g's own vertex labelling.
  std::vector<VertexPartition> lattice(const CoreGraph& g);
  bool algebraic(const Morphism& eta);
  // Congruences P of g with g -> g/P algebraic.
  std::vector<VertexPartition> algebraic_congruences(const CoreGraph& g);

  // Values computed per domain from L_SURJ and the free-first-part sum.
  LinComb mobius(const Morphism& eta, MobiusKind kind);
  // Values computed from the defining sums over Decomp and AlgDecomp,
  // recursing through intermediate domains.
  LinComb mobius_by_definition(const Morphism& eta, MobiusKind kind);

  // Every algebraic congruence Q of g, in g's labelling, with the value of
  // `kind` at g -> g/Q.
  std::vector<std::pair<VertexPartition, LinComb>> algebraic_targets(const CoreGraph& g, MobiusKind kind);

  // E[prod (fix(w_i) - 1)] as the sum of C^alg over AlgDecomp^3 of
  // eta_{words} with proper algebraic composite of the first two parts.
  LinComb product_fix_minus_one(const std::vector<Word>& words);

  // Optional persistent memo of mobius() values keyed by canonical keys.
  // A file with a bad checksum is ignored. Returns entries loaded.
  std::size_t load_cache(const std::string& path);
  void save_cache(const std::string& path) const;
  std::size_t cache_size() const;

  struct Domain;

 private:
  struct Located;
  std::shared_ptr<Domain> domain_of(const CoreGraph& g, std::vector<int>* perm);
  Located locate(const Morphism& eta);
  LinComb fast(Domain& d, int q, MobiusKind kind);
  LinComb definition(const Morphism& eta, MobiusKind kind);

  Guards guards_;
  mutable std::recursive_mutex mu_;
  std::map<std::string, std::shared_ptr<Domain>> domains_;
  std::map<std::string, bool> alg_cache_;
  std::map<std::string, LinComb> memo_;
  std::map<std::string, LinComb> def_memo_;
};

}  // namespace wm
