#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wm/characters.hpp"
#include "wm/config.hpp"
#include "wm/graph.hpp"
#include "wm/groups.hpp"
#include "wm/words.hpp"

namespace wm {

// mt19937_64 with bounded integers by rejection (x < 2^64 mod n is redrawn,
// then x mod n) and Fisher-Yates shuffles from the top index down. The
// stream depends only on the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);
  std::vector<int> permutation(int n);
  // Seed of the k-th independent substream.
  static std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t k);

 private:
  std::mt19937_64 gen_;
};

struct ClassFunction {
  enum Kind { FIX, FIX_MINUS_ONE_PRODUCT, STABLE_CHARACTER, ZETA } kind = FIX;
  Partition mu;  // STABLE_CHARACTER
  Partition nu;  // ZETA: prod_i fix(sigma^{nu_i})

  static ClassFunction fix() { return {FIX, {}, {}}; }
  static ClassFunction fix_minus_one_product() { return {FIX_MINUS_ONE_PRODUCT, {}, {}}; }
  static ClassFunction stable_character(Partition mu) { return {STABLE_CHARACTER, std::move(mu), {}}; }
  static ClassFunction zeta(Partition nu) { return {ZETA, {}, std::move(nu)}; }
};

// Images of the words under a tuple of permutations; x1 x2 ... acts as
// x1(x2(...(i))).
std::vector<int> evaluate_word(const Word& w, const std::vector<std::vector<int>>& tuple, int n);

// FIX and FIX_MINUS_ONE_PRODUCT take the product over all words; the other
// kinds use the single word given.
mpq_class exact_expectation_sn(const std::vector<Word>& words, const ClassFunction& f, int n,
                               const Guards& guards = {});

struct McEstimate {
  double mean = 0;
  double standard_error = 0;
  long samples = 0;
  std::uint64_t seed = 0;
};

McEstimate monte_carlo_sn(const std::vector<Word>& words, const ClassFunction& f, int n, long samples,
                          std::uint64_t seed);

// Average of chi^{->mu[N]} at w(g_1, ..., g_r) over (G wr S_N)^r.
mpq_class exact_expectation_wreath(const FiniteGroupTable& g, const Word& w, const PartitionMap& arrm, int n,
                                   const Guards& guards = {});

// Lifts of eta to uniformly random N-covers of its codomain.
McEstimate random_cover_lift_counts(const Morphism& eta, int n, long samples, std::uint64_t seed,
                                    bool injective_only);

}  // namespace wm
