#include <gtest/gtest.h>

#include <random>

#include "wm/error.hpp"
#include "wm/words.hpp"

using namespace wm;

namespace {

Word random_word(std::mt19937& gen, int rank, int len) {
  std::uniform_int_distribution<int> pick(1, 2 * rank);
  Word w;
  w.rank = rank;
  for (int i = 0; i < len; ++i) {
    int x = pick(gen);
    w.letters.push_back(x > rank ? -(x - rank) : x);
  }
  return w;
}

}  // namespace

TEST(Words, ParseExamples) {
  Word w = parse_word("abAB", 2);
  EXPECT_EQ(w.letters, (std::vector<Letter>{1, 2, -1, -2}));
  EXPECT_TRUE(parse_word("aA", 1).is_identity());
  EXPECT_TRUE(parse_word("abBA", 2).is_identity());
  EXPECT_EQ(to_string(w), "abAB");
}

TEST(Words, ParseErrors) {
  EXPECT_THROW(parse_word("abc", 2), InputError);
  EXPECT_THROW(parse_word("a1", 2), ParseError);
  EXPECT_EQ(rank_needed("abAC"), 3);
  EXPECT_EQ(parse_word_list("abAB,abAB", 2).size(), 2u);
}

TEST(Words, CyclicReduceExamples) {
  auto c = cyclic_reduce(parse_word("abAB", 2));
  EXPECT_EQ(to_string(c.core), "abAB");
  EXPECT_TRUE(c.conjugator.is_identity());
  c = cyclic_reduce(parse_word("baB", 2));
  EXPECT_EQ(to_string(c.core), "a");
  EXPECT_EQ(to_string(c.conjugator), "b");
  c = cyclic_reduce(parse_word("", 2));
  EXPECT_TRUE(c.core.is_identity());
  EXPECT_TRUE(c.conjugator.is_identity());
}

TEST(Words, PowerDecompositionExamples) {
  auto p = power_decomposition(parse_word("aa", 1));
  EXPECT_EQ(to_string(p.root), "a");
  EXPECT_EQ(p.exponent, 2);
  p = power_decomposition(parse_word("abab", 2));
  EXPECT_EQ(to_string(p.root), "ab");
  EXPECT_EQ(p.exponent, 2);
  p = power_decomposition(parse_word("abAB", 2));
  EXPECT_EQ(p.exponent, 1);
  EXPECT_THROW(power_decomposition(parse_word("", 2)), DomainError);
}

// No nontrivial rotation of abAB reproduces it.
TEST(Words, CommutatorRotationOracle) {
  std::vector<Letter> w = parse_word("abAB", 2).letters;
  for (std::size_t s = 1; s < w.size(); ++s) {
    std::vector<Letter> r(w.begin() + s, w.end());
    r.insert(r.end(), w.begin(), w.begin() + s);
    EXPECT_NE(r, w);
  }
}

TEST(Words, Properties) {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = reduce(random_word(gen, 3, trial % 12));
    EXPECT_EQ(reduce(w), w);
    EXPECT_EQ(parse_word(to_string(w), 3), w);
    auto c = cyclic_reduce(w);
    EXPECT_LE(c.core.length(), w.length());
    EXPECT_EQ(c.core.length() == w.length(), is_cyclically_reduced(w));
    EXPECT_EQ(reduce(concat(concat(c.conjugator, c.core), inverse(c.conjugator))), w);
    if (w.is_identity()) continue;
    for (int k = 1; k <= 3; ++k) {
      auto p = power_decomposition(power(w, k));
      EXPECT_EQ(p.exponent % k, 0) << to_string(w) << "^" << k;
    }
  }
}
