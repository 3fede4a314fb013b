#pragma once

#include <vector>

#include "wm/config.hpp"

namespace wm {

// Cyclic word in a free group of rank n, letters +-(1..n).
using CyclicWord = std::vector<int>;

// Whitehead automorphism (A, a): a in A, a^-1 not in A. A letter y other
// than a^{+-1} maps to [a^-1 if y^-1 in A] y [a if y in A].
struct WhiteheadMove {
  std::vector<int> A;
  int a = 0;
};

struct SplittingCertificate {
  enum class Verdict { splits, does_not_split };
  Verdict verdict = Verdict::does_not_split;
  int rank = 0;
  std::vector<CyclicWord> input;
  std::vector<WhiteheadMove> trail;
  std::vector<CyclicWord> final_words;
  // For splits: side[i] in {0,1} for basis letter i+1; every final word uses
  // letters of a single side and both sides are nonempty.
  std::vector<int> side;

  bool splits() const { return verdict == Verdict::splits; }
};

CyclicWord cyclically_reduce_letters(std::vector<int> w);
CyclicWord apply_whitehead(const WhiteheadMove& m, const CyclicWord& w);
long total_length(const std::vector<CyclicWord>& ws);

// Whitehead graph multiplicities on 2n vertices, one edge {x, y^-1} per
// cyclic subword xy; letter x sits at
// 2(|x|-1) + (x < 0).
std::vector<std::vector<int>> whitehead_graph(const std::vector<CyclicWord>& ws, int rank);

// Decides whether some nontrivial free splitting of F_rank has every word
// conjugate into a factor. Words must be nontrivial.
SplittingCertificate whitehead_separability(std::vector<CyclicWord> words, int rank, const Guards& guards = {});

bool verify_certificate(const SplittingCertificate& cert);

}  // namespace wm
