#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wm {

// A letter is +i for the i-th basis element (1-based) and -i for its inverse.
using Letter = int;

struct Word {
  std::vector<Letter> letters;
  int rank = 1;

  bool is_identity() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }
  bool operator==(const Word&) const = default;
};

Word parse_word(std::string_view text, int rank);
// Comma separated multiset, e.g. "abAB,abAB".
std::vector<Word> parse_word_list(std::string_view text, int rank);
// Highest basis index used in the text (0 for the empty word).
int rank_needed(std::string_view text);

std::string to_string(const Word& w);
char letter_char(Letter x);

Word reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word power(const Word& w, int k);
bool is_cyclically_reduced(const Word& w);

struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& w);

struct PowerDecomposition {
  Word root;  // cyclically reduced
  int exponent = 1;
  Word conjugator;
};
PowerDecomposition power_decomposition(const Word& w);

inline bool is_proper_power(const Word& w) { return power_decomposition(w).exponent > 1; }

}  // namespace wm
