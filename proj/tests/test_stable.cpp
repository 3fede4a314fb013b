#include <gtest/gtest.h>

#include "brute.hpp"
#include "wm/algebraic.hpp"
#include "wm/characters.hpp"
#include "wm/error.hpp"
#include "wm/stable.hpp"
#include "wm/verify.hpp"

using namespace wm;

namespace {

Word w2(const char* s) { return parse_word(s, 2); }

std::function<long(const brute::Perm&)> brute_character(const Partition& mu) {
  if (mu == Partition{1}) return brute::chi_std;
  if (mu == Partition{2}) return brute::chi_two_row;
  return brute::chi_wedge;
}

// Average of chi(g^2) over C2 wr S2, with chi induced from the sign of the
// first coordinate: chi(v, s) = sum over fixed points i of s of v_i.
mpq_class c2_square_sign() {
  mpz_class total = 0;
  for (int s = 0; s < 2; ++s)
    for (int v0 : {1, -1})
      for (int v1 : {1, -1}) {
        // (v, s)^2 = ((v_i v_{s^-1(i)}), s^2) and s^2 = id.
        int u0 = s ? v0 * v1 : v0 * v0, u1 = s ? v1 * v0 : v1 * v1;
        total += u0 + u1;
      }
  mpq_class q(total, 8);
  q.canonicalize();
  return q;
}

}  // namespace

TEST(Stable, SnExamples) {
  Engine engine;
  for (const char* s : {"abAB", "aa", "ab", "aabb"}) {
    auto c = stable_coefficient_sn(engine, w2(s), {});
    EXPECT_EQ(c.ratfun, RatFun::constant(1)) << s;
  }
  EXPECT_TRUE(stable_coefficient_sn(engine, w2("ab"), {1}).ratfun.is_zero());
  auto c = stable_coefficient_sn(engine, w2("abAB"), {1});
  EXPECT_EQ(c.eval(3), brute::expectation(w2("abAB"), 2, 3, brute::chi_std));
  EXPECT_EQ(c.eval(3), mpq_class(1, 2));
  EXPECT_THROW(stable_coefficient_sn(engine, w2(""), {1}), DomainError);
  EXPECT_THROW(c.eval(1), DomainError);
}

TEST(Stable, SnMatchesPermutationModuleOracle) {
  Engine engine;
  for (const char* s : {"abAB", "aa", "abab", "aabb", "aab", "abaB"})
    for (const Partition& mu : std::vector<Partition>{{1}, {2}, {1, 1}}) {
      auto c = stable_coefficient_sn(engine, w2(s), mu);
      for (int n = static_cast<int>(c.threshold); n <= 5; ++n)
        EXPECT_EQ(c.eval(n), brute::expectation(w2(s), 2, n, brute_character(mu)))
            << s << " mu=" << partition_string(mu) << " N=" << n;
    }
}

TEST(Stable, ForcedCycleFreeVariantFailsOnPowers) {
  Engine engine;
  auto right = stable_coefficient_sn(engine, w2("aa"), {1});
  auto wrong = stable_coefficient_sn(engine, w2("aa"), {1}, Variant::NON_POWER_NO_CYCLES);
  EXPECT_EQ(right.variant, Variant::PROPER_POWER_PROPER_ALGEBRAIC);
  EXPECT_FALSE(same_function(right.exact, wrong.exact));
  // For non-powers both variants describe the same rational function.
  auto a = stable_coefficient_sn(engine, w2("abAB"), {1});
  auto b = stable_coefficient_sn(engine, w2("abAB"), {1}, Variant::PROPER_POWER_PROPER_ALGEBRAIC);
  EXPECT_EQ(a.ratfun, b.ratfun);
}

TEST(Stable, InductionExamples) {
  Engine engine;
  FiniteGroupTable one = trivial_group();
  EXPECT_EQ(induction_coefficient(engine, one, w2("abAB"), PartitionMap{}).to_ratfun(), RatFun::constant(1));
  LinComb fix_aa = induction_coefficient(engine, one, w2("aa"), parse_partition_map(one, "triv:1"));
  EXPECT_EQ(brute::expectation(w2("aa"), 2, 3, brute::fix), 2);
  for (long n = 2; n <= 6; ++n) EXPECT_EQ(fix_aa.eval(n), 2);
  for (const char* s : {"abAB", "aa", "aabb"})
    for (int d = 1; d <= 3; ++d)
      for (const auto& mu : partitions_of(d)) {
        PartitionMap m = parse_partition_map(one, "triv:" + partition_string(mu));
        LinComb alg = induction_coefficient(engine, one, w2(s), m, InductionRoute::ALGEBRAIC);
        LinComb surj = induction_coefficient(engine, one, w2(s), m, InductionRoute::SURJECTIVE);
        EXPECT_TRUE(same_function(alg, surj)) << s << " " << partition_string(mu);
        RatFun sum;
        for (const auto& nu : p_minus(mu)) sum = sum + stable_coefficient_sn(engine, w2(s), nu).ratfun;
        EXPECT_EQ(alg.to_ratfun(), sum) << s << " " << partition_string(mu);
      }
}

TEST(Stable, WreathExamples) {
  Engine engine;
  FiniteGroupTable one = trivial_group();
  for (const char* s : {"abAB", "aa", "aabb"})
    for (const Partition& mu : std::vector<Partition>{{1}, {2}, {1, 1}}) {
      auto sn = stable_coefficient_sn(engine, w2(s), mu);
      auto wr = stable_coefficient_wreath(engine, one, w2(s), parse_partition_map(one, "triv:" + partition_string(mu)));
      EXPECT_EQ(sn.ratfun, wr.ratfun) << s;
    }
  FiniteGroupTable c2 = parse_group("C2");
  auto c = stable_coefficient_wreath(engine, c2, w2("aa"), parse_partition_map(c2, "sign:1"));
  EXPECT_EQ(c2_square_sign(), 1);
  EXPECT_EQ(c.eval(2), c2_square_sign());
  EXPECT_TRUE(stable_coefficient_wreath(engine, c2, w2("ab"), parse_partition_map(c2, "sign:1")).ratfun.is_zero());
  // The fast path for maps without a trivial part.
  for (const char* s : {"abAB", "aabb"}) {
    PartitionMap m = parse_partition_map(c2, "sign:1,1");
    EXPECT_EQ(stable_coefficient_wreath(engine, c2, w2(s), m).ratfun, induction_coefficient(engine, c2, w2(s), m).to_ratfun());
  }
}

TEST(Stable, BetaExamples) {
  Engine engine;
  Beta b = beta(stable_coefficient_sn(engine, w2("abAB"), {1}));
  EXPECT_FALSE(b.infinite);
  EXPECT_EQ(b.value, 1);
  EXPECT_TRUE(beta(stable_coefficient_sn(engine, w2("ab"), {1})).infinite);
  EXPECT_EQ(beta(stable_coefficient_sn(engine, w2("ab"), {1})).to_string(), "inf");
  for (const char* s : {"abAB", "aa", "aabb", "abaB"}) {
    auto pr = primitivity_rank(w2(s));
    EXPECT_EQ(beta(stable_coefficient_sn(engine, w2(s), {1})).value, pr.pi - 1) << s;
  }
}

TEST(Stable, SpiExamples) {
  Engine engine;
  auto r = spi_search(engine, w2("aa"), 1);
  ASSERT_TRUE(r.per_degree_minima.at(1).has_value());
  EXPECT_EQ(*r.per_degree_minima.at(1), 0);
  EXPECT_TRUE(r.bounded);
  EXPECT_EQ(r.overall_upper_bound, 0);
  r = spi_search(engine, w2("abAB"), 2);
  EXPECT_EQ(r.overall_upper_bound, 1);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses[0].degree, 1);
  SpiConstraint mod2;
  mod2.kind = SpiConstraint::MOD_M;
  mod2.m = 2;
  r = spi_search(engine, w2("aa"), 1, mod2);
  EXPECT_EQ(r.overall_upper_bound, 0);
  for (const char* s : {"abAB", "aabb"}) {
    auto res = spi_search(engine, w2(s), 2);
    for (const auto& [d, v] : res.per_degree_minima)
      if (v) {
        EXPECT_GE(*v, 1) << s << " d=" << d;
      }
  }
}

// The degree of a wreath coefficient without trivial part is at most the
// largest chi(Sigma) among efficient proper algebraic diagrams of that degree.
TEST(Stable, WreathDegreeBound) {
  Engine engine;
  FiniteGroupTable c2 = parse_group("C2");
  for (const char* s : {"abAB", "aabb", "abaB"}) {
    auto search = spi_search(engine, w2(s), 2);
    for (const char* m : {"sign:1", "sign:2", "sign:1,1"}) {
      PartitionMap arrm = parse_partition_map(c2, m);
      RatFun f = stable_coefficient_wreath(engine, c2, w2(s), arrm).ratfun;
      const int d = arrm.size();
      if (f.is_zero()) continue;
      ASSERT_TRUE(search.per_degree_minima.at(d).has_value());
      mpq_class bound = -*search.per_degree_minima.at(d) * d;
      EXPECT_LE(f.degree(), bound) << s << " " << m;
    }
  }
}

TEST(Stable, S3Witness) {
  Engine engine;
  FiniteGroupTable s3 = parse_group("S3");
  auto c = stable_coefficient_wreath(engine, s3, w2("abAB"), parse_partition_map(s3, "std:1"));
  Beta b = beta(c);
  auto search = spi_search(engine, w2("abAB"), 1);
  ASSERT_FALSE(b.infinite);
  EXPECT_EQ(b.value, *search.per_degree_minima.at(1));
  EXPECT_EQ(b.value, 1);
}

TEST(Verify, MutationIsDetected) {
  VerifyOptions opt;
  opt.only = {1};
  opt.mutate = true;
  auto results = run_verify(opt);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_FALSE(results[0].passed);
  EXPECT_FALSE(results[0].reproduce.empty());
}

TEST(Verify, QuickCriteriaPass) {
  VerifyOptions opt;
  opt.only = {2, 3, 4, 5, 7, 8, 10};
  for (const auto& r : run_verify(opt)) EXPECT_TRUE(r.passed) << r.id << ": " << r.detail;
}
