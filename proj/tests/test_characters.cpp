#include <gtest/gtest.h>

#include <map>
#include <set>

#include "brute.hpp"
#include "wm/characters.hpp"
#include "wm/error.hpp"

using namespace wm;

namespace {

// Ind_{S_d x S_{N-d}}^{S_N}(chi^mu x triv) at a class: sum over sets of cycles
// of total length d of chi^mu on the chosen cycles.
mpq_class induced(const Partition& mu, const Partition& cls) {
  const int d = size_of(mu);
  mpq_class total = 0;
  const std::size_t k = cls.size();
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    std::vector<int> chosen;
    int len = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) chosen.push_back(cls[i]), len += cls[i];
    if (len == d) total += mn_character(mu, sorted_partition(chosen));
  }
  return total;
}

}  // namespace

TEST(Characters, MnExamples) {
  for (const auto& c : class_data(4)) EXPECT_EQ(mn_character({4}, c.type), 1);
  for (const auto& c : class_data(4)) {
    int sign = 1;
    for (int part : c.type) sign *= part % 2 ? 1 : -1;
    EXPECT_EQ(mn_character({1, 1, 1, 1}, c.type), sign);
  }
  EXPECT_EQ(mn_character({2, 1}, {1, 1, 1}), 2);
  EXPECT_EQ(mn_character({2, 1}, {3}), -1);
  EXPECT_EQ(mn_character({2, 1}, {2, 1}), 0);
  EXPECT_THROW(mn_character({2, 1}, {2}), InputError);
  EXPECT_THROW(stable_partition({2, 1}, 4), DomainError);
}

TEST(Characters, ClassData) {
  auto c3 = class_data(3);
  std::map<Partition, mpz_class> sizes;
  for (const auto& c : c3) sizes[c.type] = c.size;
  EXPECT_EQ(sizes, (std::map<Partition, mpz_class>{{{1, 1, 1}, 1}, {{2, 1}, 3}, {{3}, 2}}));
  auto c0 = class_data(0);
  ASSERT_EQ(c0.size(), 1u);
  EXPECT_TRUE(c0[0].type.empty());
  EXPECT_EQ(c0[0].size, 1);
  // S_5 by direct enumeration.
  std::map<Partition, mpz_class> counted;
  for (const auto& p : brute::all_perms(5)) counted[brute::cycle_type(p)] += 1;
  auto c5 = class_data(5);
  EXPECT_EQ(c5.size(), 7u);
  mpz_class total = 0;
  for (const auto& c : c5) {
    total += c.size;
    EXPECT_EQ(counted[c.type], c.size);
  }
  EXPECT_EQ(total, 120);
}

TEST(Characters, Orthogonality) {
  for (int d = 0; d <= 6; ++d) {
    auto classes = class_data(d);
    auto parts = partitions_of(d);
    mpz_class dims = 0;
    for (const auto& mu : parts) {
      dims += dimension(mu) * dimension(mu);
      for (const auto& nu : parts) {
        mpz_class s = 0;
        for (const auto& c : classes) s += c.size * mn_character(mu, c.type) * mn_character(nu, c.type);
        EXPECT_EQ(s, mu == nu ? factorial(d) : mpz_class(0)) << d;
      }
      EXPECT_EQ(dimension(mu), mn_character(mu, Partition(d, 1)));
    }
    EXPECT_EQ(dims, factorial(d));
    for (const auto& a : classes)
      for (const auto& b : classes) {
        mpz_class s = 0;
        for (const auto& mu : parts) s += mn_character(mu, a.type) * mn_character(mu, b.type);
        EXPECT_EQ(s, a.type == b.type ? factorial(d) / a.size : mpz_class(0));
      }
  }
}

// Characters from permutation modules agree with the rim-hook rule.
TEST(Characters, PermutationModuleOracle) {
  for (int n = 4; n <= 6; ++n)
    for (const auto& p : brute::all_perms(n)) {
      auto type = brute::cycle_type(p);
      EXPECT_EQ(mn_character_stable({1}, n, type), brute::chi_std(p));
      EXPECT_EQ(mn_character_stable({2}, n, type), brute::chi_two_row(p));
      EXPECT_EQ(mn_character_stable({1, 1}, n, type), brute::chi_wedge(p));
    }
}

TEST(Characters, StableDimension) {
  for (int d = 0; d <= 4; ++d)
    for (const auto& mu : partitions_of(d)) {
      Poly f = stable_dimension(mu);
      EXPECT_EQ(f.degree(), d);
      for (long n = d + first_part(mu); n <= d + first_part(mu) + 4; ++n)
        EXPECT_EQ(f.eval(n), mpq_class(dimension(stable_partition(mu, n))));
    }
}

TEST(Characters, PMinusExamples) {
  auto as_set = [](const std::vector<Partition>& v) { return std::set<Partition>(v.begin(), v.end()); };
  EXPECT_EQ(as_set(p_minus({3, 2})), (std::set<Partition>{{3, 2}, {2, 2}, {3, 1}, {2, 1}, {3}, {2}}));
  EXPECT_EQ(p_minus({3, 2}).front(), (Partition{3, 2}));
  EXPECT_EQ(p_minus({2, 1}), (std::vector<Partition>{{2, 1}, {2}, {1, 1}, {1}}));
  EXPECT_EQ(p_minus({}), (std::vector<Partition>{{}}));
  EXPECT_EQ(pieri_decompose({2, 1}, 7), (std::vector<Partition>{{2, 1}, {2}, {1, 1}, {1}}));
  EXPECT_EQ(pieri_decompose({}, 5), (std::vector<Partition>{{}}));
  EXPECT_EQ(pieri_decompose({1}, 2), (std::vector<Partition>{{1}, {}}));
  EXPECT_THROW(pieri_decompose({2, 1}, 4), DomainError);
}

TEST(Characters, PieriPointwise) {
  for (int d = 0; d <= 4; ++d)
    for (const auto& mu : partitions_of(d))
      for (long n = d + first_part(mu); n <= d + first_part(mu) + 2; ++n)
        for (const auto& c : class_data(static_cast<int>(n))) {
          mpq_class rhs = 0;
          for (const auto& nu : pieri_decompose(mu, n)) rhs += mn_character_stable(nu, n, c.type);
          EXPECT_EQ(induced(mu, c.type), rhs) << partition_string(mu) << " N=" << n;
        }
}

TEST(Characters, InversePieri) {
  EXPECT_EQ(inverse_pieri_lhs({2, 1}, 1, {1}), 1);
  for (int d = 1; d <= 5; ++d)
    for (const auto& mu : partitions_of(d))
      for (int k = 0; k <= d; ++k)
        for (const auto& tau : partitions_of(k)) {
          mpq_class lhs = inverse_pieri_lhs(mu, k, tau);
          EXPECT_EQ(lhs, inverse_pieri_rhs(mu, k, tau)) << partition_string(mu) << " k=" << k;
          if (k == d) {
            EXPECT_EQ(lhs, mn_character(mu, tau));
          }
          if (mu == Partition{d}) {
            EXPECT_EQ(lhs, 1);
          }
        }
}
