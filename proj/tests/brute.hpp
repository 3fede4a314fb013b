// Small independent oracles for tests: direct enumeration over S_n^r with
// permutations stored as image vectors. Nothing here calls into the library
// beyond the Word type.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "wm/words.hpp"

namespace brute {

using Perm = std::vector<int>;

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

// Right-to-left action: the last letter acts first.
inline Perm word_image(const wm::Word& w, const std::vector<Perm>& gens) {
  const int n = gens.empty() ? 0 : static_cast<int>(gens[0].size());
  Perm out(n);
  for (int i = 0; i < n; ++i) {
    int x = i;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      const Perm& g = gens[std::abs(*it) - 1];
      if (*it > 0) {
        x = g[x];
      } else {
        x = static_cast<int>(std::find(g.begin(), g.end(), x) - g.begin());
      }
    }
    out[i] = x;
  }
  return out;
}

inline int fix(const Perm& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) c += p[i] == static_cast<int>(i);
  return c;
}

inline int two_cycles(const Perm& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i) c += p[i] != static_cast<int>(i) && p[p[i]] == static_cast<int>(i);
  return c / 2;
}

inline std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> seen(p.size(), 0), out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int x = static_cast<int>(i); !seen[x]; x = p[x]) seen[x] = 1, ++len;
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Characters of S_N from permutation modules:
// (N-1,1) = fix - 1, (N-2,2) = fixed 2-sets - fix, (N-2,1,1) = exterior square of (N-1,1).
inline long chi_std(const Perm& p) { return fix(p) - 1; }
inline long chi_two_row(const Perm& p) {
  const long f = fix(p);
  return f * (f - 1) / 2 + two_cycles(p) - f;
}
inline long chi_wedge(const Perm& p) {
  const long f = fix(p);
  return f * (f - 1) / 2 - two_cycles(p) - f + 1;
}

// Average of f(w(g_1..g_r)) over S_n^r.
inline mpq_class expectation(const wm::Word& w, int rank, int n, const std::function<long(const Perm&)>& f) {
  auto perms = all_perms(n);
  std::vector<std::size_t> idx(rank, 0);
  mpz_class total = 0, count = 0;
  while (true) {
    std::vector<Perm> gens;
    for (int i = 0; i < rank; ++i) gens.push_back(perms[idx[i]]);
    total += f(word_image(w, gens));
    count += 1;
    int k = 0;
    while (k < rank && ++idx[k] == perms.size()) idx[k++] = 0;
    if (k == rank) break;
  }
  mpq_class q(total, count);
  q.canonicalize();
  return q;
}

}  // namespace brute
