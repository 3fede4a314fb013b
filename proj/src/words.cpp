#include "wm/words.hpp"

#include <cstdlib>

#include "wm/error.hpp"

namespace wm {

Word parse_word(std::string_view text, int rank) {
  if (rank < 1 || rank > 26) throw InputError("rank must lie in [1,26]");
  Word w;
  w.rank = rank;
  if (text == "1") return w;
  for (char c : text) {
    int idx;
    Letter x;
    if (c >= 'a' && c <= 'z') {
      idx = c - 'a' + 1;
      x = idx;
    } else if (c >= 'A' && c <= 'Z') {
      idx = c - 'A' + 1;
      x = -idx;
    } else {
      throw ParseError(std::string("illegal character '") + c + "' in word");
    }
    if (idx > rank) throw InputError(std::string("letter '") + c + "' outside rank " + std::to_string(rank));
    w.letters.push_back(x);
  }
  return reduce(std::move(w));
}

std::vector<Word> parse_word_list(std::string_view text, int rank) {
  std::vector<Word> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(parse_word(text.substr(start, end - start), rank));
    start = end + 1;
  }
  return out;
}

int rank_needed(std::string_view text) {
  int r = 0;
  for (char c : text) {
    if (c >= 'a' && c <= 'z') r = std::max(r, c - 'a' + 1);
    if (c >= 'A' && c <= 'Z') r = std::max(r, c - 'A' + 1);
  }
  return r;
}

char letter_char(Letter x) {
  return x > 0 ? static_cast<char>('a' + x - 1) : static_cast<char>('A' - x - 1);
}

std::string to_string(const Word& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (Letter x : w.letters) s.push_back(letter_char(x));
  return s;
}

Word reduce(Word w) {
  std::vector<Letter> st;
  st.reserve(w.letters.size());
  for (Letter x : w.letters) {
    if (!st.empty() && st.back() == -x)
      st.pop_back();
    else
      st.push_back(x);
  }
  w.letters = std::move(st);
  return w;
}

Word inverse(const Word& w) {
  Word r;
  r.rank = w.rank;
  r.letters.assign(w.letters.rbegin(), w.letters.rend());
  for (Letter& x : r.letters) x = -x;
  return r;
}

Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.rank = std::max(u.rank, v.rank);
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return reduce(std::move(r));
}

Word power(const Word& w, int k) {
  Word base = k < 0 ? inverse(w) : w;
  Word r;
  r.rank = w.rank;
  for (int i = 0; i < std::abs(k); ++i) r.letters.insert(r.letters.end(), base.letters.begin(), base.letters.end());
  return reduce(std::move(r));
}

bool is_cyclically_reduced(const Word& w) {
  return w.letters.size() < 2 || w.letters.front() != -w.letters.back();
}

CyclicReduction cyclic_reduce(const Word& w0) {
  Word w = reduce(w0);
  std::size_t i = 0, j = w.letters.size();
  while (j - i >= 2 && w.letters[i] == -w.letters[j - 1]) {
    ++i;
    --j;
  }
  CyclicReduction cr;
  cr.core.rank = cr.conjugator.rank = w.rank;
  cr.core.letters.assign(w.letters.begin() + i, w.letters.begin() + j);
  cr.conjugator.letters.assign(w.letters.begin(), w.letters.begin() + i);
  return cr;
}

PowerDecomposition power_decomposition(const Word& w) {
  if (reduce(w).is_identity()) throw DomainError("power decomposition of the identity");
  auto cr = cyclic_reduce(w);
  const auto& c = cr.core.letters;
  const std::size_t n = c.size();
  // Smallest period p dividing n with c rotation-invariant by p.
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (std::size_t t = 0; t < n && ok; ++t) ok = c[t] == c[(t + p) % n];
    if (ok) {
      PowerDecomposition pd;
      pd.root.rank = w.rank;
      pd.root.letters.assign(c.begin(), c.begin() + p);
      pd.exponent = static_cast<int>(n / p);
      pd.conjugator = cr.conjugator;
      return pd;
    }
  }
  throw InvariantError("unreachable: period search");
}

}  // namespace wm
