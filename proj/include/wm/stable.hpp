#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wm/characters.hpp"
#include "wm/groups.hpp"
#include "wm/mobius.hpp"
#include "wm/words.hpp"

namespace wm {

enum class Variant { NON_POWER_NO_CYCLES, PROPER_POWER_PROPER_ALGEBRAIC };
const char* variant_name(Variant v);

struct StableCoefficient {
  LinComb exact;       // equals the expectation at every N >= threshold
  RatFun ratfun;       // valid_from >= threshold
  long threshold = 0;  // d + mu_1, or d + ->mu(triv)_1
  std::string character_label;
  int label_size = 0;
  Word word;
  Variant variant = Variant::NON_POWER_NO_CYCLES;

  // DomainError below the threshold.
  mpq_class eval(long n) const;
};

// E_w[chi^{mu[N]}]. The variant defaults to the one valid for w. A forced
// variant is used as given; the cycle-free one is wrong for proper powers.
StableCoefficient stable_coefficient_sn(Engine& engine, const Word& w, const Partition& mu,
                                        std::optional<Variant> variant = std::nullopt);
// E_w[chi^{->mu[N]}] over G wr S_N.
StableCoefficient stable_coefficient_wreath(Engine& engine, const FiniteGroupTable& g, const Word& w,
                                            const PartitionMap& arrm, std::optional<Variant> variant = std::nullopt);

enum class InductionRoute { ALGEBRAIC, SURJECTIVE };
// E_w[Ind_{G_d x G_{N-d}}^{G_N}(chi^{->mu} x triv)] with d = |->mu|.
LinComb induction_coefficient(Engine& engine, const FiniteGroupTable& g, const Word& w, const PartitionMap& chi,
                              InductionRoute route = InductionRoute::ALGEBRAIC);

struct Beta {
  bool infinite = false;
  mpq_class value = 0;
  std::string to_string() const;
};
Beta beta(const RatFun& f, int label_size);
Beta beta(const StableCoefficient& c);

struct SpiConstraint {
  enum Kind { NONE, MOD_M, PHI } kind = NONE;
  int m = 0;
  std::optional<FiniteGroupTable> group;
  int irr = 0;
};

struct DiagramRecord {
  int degree = 0;
  Partition sigma_type;
  Morphism b;
  CoreGraph sigma;
  long chi = 0;
  std::vector<long> winding;
  std::optional<mpq_class> e_b;
  mpq_class value;  // -chi / degree
};

struct SpiSearchResult {
  std::map<int, std::optional<mpq_class>> per_degree_minima;
  bool bounded = false;
  mpq_class overall_upper_bound;
  std::vector<DiagramRecord> witnesses;  // one minimizer per degree
  // Cycle types whose efficient congruences exceeded the search guard; their
  // degree minima cover the remaining cycle types only.
  std::vector<Partition> skipped;
};

// Upper bounds from efficient proper algebraic diagrams of degree <= d_max.
SpiSearchResult spi_search(Engine& engine, const Word& w, int d_max, const SpiConstraint& constraint = {});

}  // namespace wm
