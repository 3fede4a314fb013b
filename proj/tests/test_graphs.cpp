#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "wm/decompositions.hpp"
#include "wm/enumerate.hpp"
#include "wm/error.hpp"
#include "wm/graph.hpp"

using namespace wm;

namespace {

Word w2(const char* s) { return parse_word(s, 2); }

// Naive folding by repeated merging of equal-label neighbours. Returns the
// vertex kernel as a restricted-growth string.
std::vector<int> hand_fold(int nv, const std::vector<CoreGraph::Edge>& edges, const std::vector<int>& blocks) {
  std::vector<int> label(nv);
  std::map<int, int> first;
  for (int v = 0; v < nv; ++v) label[v] = first.emplace(blocks[v], v).first->second;
  auto find = [&](int v) {
    while (label[v] != v) v = label[v];
    return v;
  };
  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::tuple<int, int, int>, int> seen;  // (vertex, label, direction) -> neighbour
    for (const auto& e : edges) {
      int s = find(e.src), d = find(e.dst);
      for (auto [key, other] : {std::pair{std::tuple{s, e.label, 0}, d}, std::pair{std::tuple{d, e.label, 1}, s}}) {
        auto [it, fresh] = seen.emplace(key, other);
        if (fresh) continue;
        int a = find(it->second), b = find(other);
        if (a != b) {
          label[std::max(a, b)] = std::min(a, b);
          changed = true;
        }
      }
      if (changed) break;
    }
  }
  std::vector<int> out(nv);
  for (int v = 0; v < nv; ++v) out[v] = find(v);
  return normalize_partition(out);
}

std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      cur[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) return {{}};
  rec(0, 0);
  return out;
}

CoreGraph relabel(const CoreGraph& g, const std::vector<int>& perm) {
  CoreGraph h(g.rank(), g.num_vertices());
  auto es = g.edges();
  std::shuffle(es.begin(), es.end(), std::mt19937(perm.size()));
  for (const auto& e : es) h.add_edge(perm[e.src], e.label, perm[e.dst]);
  return h;
}

}  // namespace

TEST(Graphs, Bouquet) {
  EXPECT_EQ(bouquet(2).num_vertices(), 1);
  EXPECT_EQ(bouquet(2).euler_characteristic(), -1);
  EXPECT_EQ(bouquet(1).euler_characteristic(), 0);
  EXPECT_EQ(bouquet(3).euler_characteristic(), -2);
  EXPECT_THROW(bouquet(0), InputError);
}

TEST(Graphs, GammaPowerShapes) {
  GammaPower g1 = gamma_power(w2("abAB"), {1});
  EXPECT_EQ(g1.graph.num_vertices(), 4);
  EXPECT_EQ(g1.graph.euler_characteristic(), 0);
  GammaPower g21 = gamma_power(w2("abAB"), {2, 1});
  std::multiset<std::size_t> sizes;
  for (const auto& c : g21.graph.components()) sizes.insert(c.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{4, 8}));
  EXPECT_EQ(g21.cover.degree, 3);
  GammaPower a3 = gamma_power(parse_word("a", 1), {3});
  EXPECT_EQ(a3.graph.num_vertices(), 3);
  for (const auto& e : a3.graph.edges()) EXPECT_EQ(e.label, 0);
  EXPECT_EQ(gamma_power(w2(""), {1}).graph.num_vertices(), 0);
}

TEST(Graphs, FoldExamples) {
  RawGraph ab_twice{2, 3, {{0, 0, 1}, {1, 1, 0}, {0, 0, 2}, {2, 1, 0}}};
  FoldResult f = fold(ab_twice);
  EXPECT_EQ(f.graph.num_vertices(), 2);
  EXPECT_EQ(f.graph.num_edges(), 2);
  RawGraph loops{1, 1, {{0, 0, 0}, {0, 0, 0}}};
  EXPECT_EQ(fold(loops).graph.num_edges(), 1);
  CoreGraph g = gamma_power(w2("abAB"), {1}).graph;
  RawGraph raw{2, g.num_vertices(), g.edges()};
  EXPECT_EQ(fold(raw).graph, g);
}

TEST(Graphs, StallingsExamples) {
  EXPECT_EQ(canonical_key(stallings_graph({w2("a"), w2("b")}).graph), canonical_key(bouquet(2)));
  CoreGraph c = stallings_graph({w2("abAB")}).graph;
  EXPECT_EQ(c.num_vertices(), 4);
  EXPECT_EQ(c.num_edges(), 4);
  EXPECT_THROW(stallings_graph({w2(""), w2("")}), DomainError);
}

// Wedge of the aa and ab cycles folded by hand: vertices 0 (base), 1 (aa), 2 (ab).
TEST(Graphs, StallingsSquareAndAbByHand) {
  std::vector<CoreGraph::Edge> edges{{0, 0, 1}, {1, 0, 0}, {0, 0, 2}, {2, 1, 0}};
  auto kernel = hand_fold(3, edges, {0, 1, 2});
  std::set<std::tuple<int, int, int>> folded;
  for (const auto& e : edges) folded.insert({kernel[e.src], e.label, kernel[e.dst]});
  CoreGraph g = stallings_graph({w2("aa"), w2("ab")}).graph;
  EXPECT_EQ(g.num_vertices(), num_blocks(kernel));
  EXPECT_EQ(g.num_edges(), static_cast<int>(folded.size()));
  EXPECT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.euler_characteristic(), -1);
}

TEST(Graphs, EfficiencyExamples) {
  GammaPower g1 = gamma_power(w2("abAB"), {1});
  EXPECT_TRUE(is_efficient(to_bouquet(g1.graph), g1.cover));
  GammaPower g11 = gamma_power(w2("abAB"), {1, 1});
  EXPECT_FALSE(is_efficient(g11.cover.rho, g11.cover));
  GammaPower g2 = gamma_power(w2("abAB"), {2});
  EXPECT_FALSE(is_efficient(g2.cover.rho, g2.cover));
  EXPECT_TRUE(is_efficient(identity_morphism(g2.graph), g2.cover));
}

TEST(Graphs, CanonicalKeys) {
  CoreGraph c4 = gamma_power(w2("abAB"), {1}).graph;
  CoreGraph c8 = gamma_power(w2("abAB"), {2}).graph;
  EXPECT_NE(canonical_key(c4), canonical_key(c8));
  std::mt19937 gen(11);
  for (const CoreGraph& g : {c4, c8, stallings_graph({w2("aa"), w2("ab")}).graph,
                             gamma_power(w2("aabb"), {2, 1}).graph}) {
    for (int t = 0; t < 20; ++t) {
      std::vector<int> perm(g.num_vertices());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), gen);
      EXPECT_EQ(canonical_key(relabel(g, perm)), canonical_key(g));
    }
  }
}

TEST(Graphs, Invariants) {
  for (const char* s : {"aa", "abAB", "aabb", "abab"})
    for (const std::vector<int>& nu : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {2, 1}, {3}}) {
      GammaPower gp = gamma_power(w2(s), nu);
      EXPECT_EQ(gp.graph.euler_characteristic(), 0);
      EXPECT_TRUE(is_valid_morphism(gp.cover.rho));
      EXPECT_TRUE(gp.graph.is_core());
      RawGraph raw{2, gp.graph.num_vertices(), gp.graph.edges()};
      EXPECT_EQ(fold(raw).graph, gp.graph);
    }
  // Covers compose with multiplied degree: (2) over (1) of aa is the (4) cover of a.
  GammaPower a2 = gamma_power(parse_word("aa", 1), {2});
  GammaPower a1 = gamma_power(parse_word("aa", 1), {1});
  GammaPower base = gamma_power(parse_word("a", 1), {2});
  ASSERT_EQ(a1.graph, base.graph);  // Gamma_{aa} is the 2-cycle Gamma_{a^(2)}
  Morphism comp = compose(base.cover.rho, a2.cover.rho);
  EXPECT_TRUE(is_valid_morphism(comp));
  EXPECT_EQ(comp.dom.num_vertices(), 4 * comp.cod.num_vertices());
}

TEST(Enumerate, QuotientExamples) {
  EXPECT_EQ(quotients(gamma_power(parse_word("a", 1), {1}).graph).size(), 1u);
  EXPECT_EQ(quotients(CoreGraph(2, 0)).size(), 1u);
  CoreGraph c = gamma_power(w2("abAB"), {1}).graph;
  std::set<std::vector<int>> kernels;
  for (const auto& p : set_partitions(4)) kernels.insert(hand_fold(4, c.edges(), p));
  auto qs = quotients(c);
  EXPECT_EQ(qs.size(), kernels.size());
  EXPECT_EQ(qs.size(), 7u);
  bool has_identity = false, has_bouquet = false;
  for (const auto& q : qs) {
    has_identity |= is_isomorphism(q);
    has_bouquet |= canonical_key(q.cod) == canonical_key(bouquet(2));
    EXPECT_TRUE(kernels.count(kernel_partition(q)));
  }
  EXPECT_TRUE(has_identity);
  EXPECT_TRUE(has_bouquet);
  // Distinct non-isomorphic codomains get distinct keys.
  std::set<std::string> keys;
  for (const auto& q : qs) keys.insert(canonical_key(q.cod));
  EXPECT_EQ(keys.size(), qs.size());
}

TEST(Enumerate, ResourceGuard) {
  Guards g;
  g.vertex_limit = 3;
  try {
    quotients(gamma_power(w2("abAB"), {1}).graph, g);
    FAIL() << "guard not enforced";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.bound, 3);
  }
}

TEST(Decompositions, Examples) {
  CoreGraph c = gamma_power(w2("abAB"), {1}).graph;
  auto id = decompositions(identity_morphism(c), 2, DecompMode::SURJECTIVE);
  ASSERT_EQ(id.size(), 1u);
  EXPECT_TRUE(is_isomorphism(id[0].parts[0].morphism));
  Morphism eta = to_bouquet(c);
  EXPECT_EQ(decompositions(eta, 2, DecompMode::SURJECTIVE).size(), quotients(c).size());
  Morphism eta_a = to_bouquet(gamma_power(parse_word("a", 1), {1}).graph);
  auto a3 = decompositions(eta_a, 3, DecompMode::ALGEBRAIC);
  ASSERT_EQ(a3.size(), 1u);
  EXPECT_TRUE(is_isomorphism(a3[0].parts[0].morphism));
  EXPECT_TRUE(is_isomorphism(a3[0].parts[1].morphism));
}

TEST(Decompositions, Properties) {
  for (const char* s : {"abAB", "aabb", "aa"}) {
    GammaPower gp = gamma_power(w2(s), {1});
    Morphism eta = to_bouquet(gp.graph);
    for (auto mode : {DecompMode::SURJECTIVE, DecompMode::ALGEBRAIC}) {
      auto d2 = decompositions(eta, 2, mode);
      auto d3 = decompositions(eta, 3, mode);
      for (const auto& rec : d3) {
        Morphism m = compose(rec.parts[2].morphism, compose(rec.parts[1].morphism, rec.parts[0].morphism));
        EXPECT_EQ(canonical_key(m), canonical_key(eta));
      }
      for (const auto& rec : d2)
        EXPECT_EQ(canonical_key(compose(rec.parts[1].morphism, rec.parts[0].morphism)), canonical_key(eta));
      long with_identity_first = 0;
      for (const auto& rec : d3) with_identity_first += is_isomorphism(rec.parts[0].morphism);
      long d2_identity_first = 0;
      for (const auto& rec : d2) d2_identity_first += is_isomorphism(rec.parts[0].morphism);
      EXPECT_EQ(with_identity_first, static_cast<long>(d2.size()));
      EXPECT_EQ(d2_identity_first, 1);
    }
  }
  // Algebraic decompositions do not depend on the basis: swap a with B.
  auto count = [](const char* s) {
    return decompositions(to_bouquet(gamma_power(w2(s), {1}).graph), 3, DecompMode::ALGEBRAIC).size();
  };
  EXPECT_EQ(count("abAB"), count("Baba"));
  EXPECT_EQ(count("aabb"), count("BBaa"));
}
