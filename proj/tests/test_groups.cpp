#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "brute.hpp"
#include "wm/enumerate.hpp"
#include "wm/error.hpp"
#include "wm/groups.hpp"

using namespace wm;

namespace {

Word w2(const char* s) { return parse_word(s, 2); }

// Every partition map of total size n over the irreducibles of g.
std::vector<PartitionMap> maps_of_size(const FiniteGroupTable& g, int n) {
  std::vector<PartitionMap> out;
  PartitionMap cur;
  std::function<void(int, int)> rec = [&](int irr, int left) {
    if (irr == g.num_irr()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    rec(irr + 1, left);
    for (int s = 1; s <= left; ++s)
      for (const auto& p : partitions_of(s)) {
        cur.parts.emplace_back(irr, p);
        rec(irr + 1, left - s);
        cur.parts.pop_back();
      }
  };
  rec(0, n);
  return out;
}

// Visits every element (v, sigma) of G wr S_n.
void for_each_element(const FiniteGroupTable& g, int n, const std::function<void(const std::vector<int>&, const std::vector<int>&)>& f) {
  for (const auto& sigma : brute::all_perms(n)) {
    std::vector<int> v(n, 0);
    while (true) {
      f(v, sigma);
      int k = 0;
      while (k < n && ++v[k] == g.order) v[k++] = 0;
      if (k == n) break;
    }
  }
}

}  // namespace

TEST(Groups, SymmetricGroupTables) {
  for (int m = 1; m <= 5; ++m) {
    FiniteGroupTable g = symmetric_group(m);
    EXPECT_EQ(g.order, factorial(m));
    for (int a = 0; a < g.order; ++a) {
      EXPECT_EQ(g.mul[a][g.inv[a]], g.identity);
      EXPECT_EQ(g.mul[g.identity][a], a);
    }
    for (int i = 0; i < g.num_irr(); ++i)
      for (int j = 0; j < g.num_irr(); ++j) {
        long s = 0;
        for (int c = 0; c < g.num_classes(); ++c) s += g.class_sizes[c] * g.chi[i][c] * g.chi[j][c];
        EXPECT_EQ(s, i == j ? g.order : 0);
      }
  }
  FiniteGroupTable s3 = parse_group("S3");
  EXPECT_EQ(s3.dim(s3.irr_index("std")), 2);
  EXPECT_EQ(s3.dim(s3.irr_index("sign")), 1);
  EXPECT_EQ(parse_group("C2").order, 2);
  EXPECT_THROW(parse_group("C3"), UnsupportedGroupError);
  EXPECT_THROW(parse_group("S7"), UnsupportedGroupError);
  EXPECT_THROW(parse_partition_map(s3, "foo:1"), InputError);
}

TEST(Groups, WreathCharacterExamples) {
  FiniteGroupTable c2 = parse_group("C2");
  const int one = c2.identity, minus = 1 - c2.identity;
  PartitionMap m = parse_partition_map(c2, "sign:1;triv:1");
  EXPECT_EQ(wreath_character_eval(c2, m, {one, one}, {1, 0}), 0);
  EXPECT_EQ(wreath_character_eval(c2, m, {minus, one}, {0, 1}), 0);
  EXPECT_EQ(wreath_character_eval(c2, m, {one, one}, {0, 1}), 2);
  PartitionMap all_triv = parse_partition_map(c2, "triv:2");
  for_each_element(c2, 2, [&](const auto& v, const auto& s) { EXPECT_EQ(wreath_character_eval(c2, all_triv, v, s), 1); });
}

TEST(Groups, WreathDimensionExamples) {
  FiniteGroupTable one = trivial_group();
  Poly std_dim = wreath_dim_poly(one, parse_partition_map(one, "triv:1"));
  for (long n = 2; n <= 6; ++n) EXPECT_EQ(std_dim.eval(n), n - 1);
  EXPECT_EQ(wreath_dim_poly(one, PartitionMap{}), Poly::constant(1));
  FiniteGroupTable c2 = parse_group("C2");
  Poly sign_dim = wreath_dim_poly(c2, parse_partition_map(c2, "sign:1"));
  for (long n = 1; n <= 6; ++n) EXPECT_EQ(sign_dim.eval(n), n);
}

// Irreducibility, completeness and the dimension polynomial, by summing over
// every element of G wr S_n.
TEST(Groups, WreathOrthogonality) {
  for (auto [name, n] : {std::pair{"C2", 2}, {"C2", 3}, {"S3", 2}, {"S1", 3}}) {
    FiniteGroupTable g = parse_group(name);
    long order = 1;
    for (int i = 1; i <= n; ++i) order *= i * g.order;
    auto maps = maps_of_size(g, n);
    long dims = 0;
    for (const auto& m : maps) {
      long norm = 0;
      for_each_element(g, n, [&](const auto& v, const auto& s) {
        long x = wreath_character_eval(g, m, v, s);
        norm += x * x;
      });
      EXPECT_EQ(norm, order) << name << " " << partition_map_string(g, m);
      std::vector<int> id(n);
      std::iota(id.begin(), id.end(), 0);
      long dim = wreath_character_eval(g, m, std::vector<int>(n, g.identity), id);
      dims += dim * dim;
    }
    EXPECT_EQ(dims, order) << name;
  }
  for (const char* name : {"C2", "S3"}) {
    FiniteGroupTable g = parse_group(name);
    for (int d = 0; d <= 2; ++d)
      for (const auto& m : maps_of_size(g, d)) {
        Poly f = wreath_dim_poly(g, m);
        for (long n = stable_map_threshold(g, m); n <= 4; ++n) {
          std::vector<int> id(n);
          std::iota(id.begin(), id.end(), 0);
          EXPECT_EQ(f.eval(n), wreath_character_eval(g, stable_map(g, m, n), std::vector<int>(n, g.identity), id));
        }
      }
  }
}

TEST(Groups, DiagramExpectations) {
  FiniteGroupTable s3 = parse_group("S3");
  const int std3 = s3.irr_index("std");
  GammaPower gp = gamma_power(w2("abAB"), {1});
  // The critical diagram onto the bouquet: E[std(xyx^-1y^-1)] over all 36 pairs.
  CycleDiagram crit = cycle_diagram(gp, to_bouquet(gp.graph));
  mpq_class brute_value = brute::expectation(w2("abAB"), 2, 3, brute::chi_std);
  EXPECT_EQ(brute_value, mpq_class(1, 2));
  EXPECT_EQ(e_b_irreducible(s3, crit, std3), brute_value);
  EXPECT_EQ(e_b_irreducible(s3, crit, s3.trivial), 1);
  // Isomorphism onto a component kills every nontrivial irreducible.
  CycleDiagram iso = cycle_diagram(gp, identity_morphism(gp.graph));
  EXPECT_EQ(e_b_irreducible(s3, iso, std3), 0);
  EXPECT_EQ(e_b_irreducible(s3, iso, s3.irr_index("sign")), 0);
  EXPECT_EQ(e_b_irreducible(s3, iso, s3.trivial), 1);
}

TEST(Groups, CmEnumerationMatchesWinding) {
  long compared = 0;
  for (const char* s : {"aa", "abAB", "aabb", "abab", "aab"})
    for (const auto& nu : std::vector<Partition>{{1}, {2}, {1, 1}}) {
      GammaPower gp = gamma_power(w2(s), nu);
      auto eff = congruences(gp.graph, {}, [&](const VertexPartition& p) { return is_efficient_partition(p, gp.cover); });
      for (const auto& p : eff) {
        CycleDiagram diag = cycle_diagram(gp, quotient_morphism(gp.graph, p));
        for (int m : {2, 3, 4})
          for (int j = 1; j < m; ++j) {
            CmSpec cm{m, j};
            EXPECT_EQ(e_b_cm_enumerate(cm, diag), e_b_cm_winding(cm, diag)) << s << " m=" << m << " j=" << j;
            ++compared;
          }
      }
    }
  EXPECT_GT(compared, 100);
  // aa onto the rank-2 bouquet winds twice around the a loop.
  GammaPower gp = gamma_power(w2("aa"), {1});
  CycleDiagram onto_loop = cycle_diagram(gp, to_bouquet(gp.graph));
  EXPECT_EQ(winding_vector(onto_loop), (std::vector<long>{2, 0}));
  EXPECT_EQ(e_b_cm_winding({0, 1}, onto_loop), 0);
  EXPECT_EQ(e_b_cm_winding({2, 1}, onto_loop), 1);
  EXPECT_EQ(parse_cm("C3:2").j, 2);
}
