#include "wm/whitehead.hpp"

#include <algorithm>
#include <cstdlib>

#include "wm/error.hpp"

namespace wm {

namespace {

int vid(int x) { return 2 * (std::abs(x) - 1) + (x < 0 ? 1 : 0); }
int letter_of(int v) { return (v % 2 == 0) ? v / 2 + 1 : -(v / 2 + 1); }

std::vector<int> reduce_letters(const std::vector<int>& w) {
  std::vector<int> st;
  for (int x : w) {
    if (!st.empty() && st.back() == -x)
      st.pop_back();
    else
      st.push_back(x);
  }
  return st;
}

std::vector<int> component_labels(const std::vector<std::vector<int>>& adj, int skip, int* count) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (s == skip || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int t = 0; t < n; ++t)
        if (t != skip && adj[v][t] > 0 && comp[t] < 0) {
          comp[t] = c;
          stack.push_back(t);
        }
    }
    ++c;
  }
  *count = c;
  return comp;
}

bool uses_single_side(const CyclicWord& w, const std::vector<int>& side) {
  for (int x : w)
    if (side[std::abs(x) - 1] != side[std::abs(w.front()) - 1]) return false;
  return true;
}

}  // namespace

CyclicWord cyclically_reduce_letters(std::vector<int> w) {
  w = reduce_letters(w);
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return CyclicWord(w.begin() + i, w.begin() + j);
}

CyclicWord apply_whitehead(const WhiteheadMove& m, const CyclicWord& w) {
  int top = std::abs(m.a);
  for (int y : m.A) top = std::max(top, std::abs(y));
  for (int y : w) top = std::max(top, std::abs(y));
  std::vector<char> inA(2 * top + 2, 0);
  for (int y : m.A) inA[vid(y)] = 1;
  std::vector<int> out;
  for (int y : w) {
    if (std::abs(y) == std::abs(m.a)) {
      out.push_back(y);
      continue;
    }
    if (inA[vid(-y)]) out.push_back(-m.a);
    out.push_back(y);
    if (inA[vid(y)]) out.push_back(m.a);
  }
  return cyclically_reduce_letters(out);
}

long total_length(const std::vector<CyclicWord>& ws) {
  long s = 0;
  for (const auto& w : ws) s += static_cast<long>(w.size());
  return s;
}

std::vector<std::vector<int>> whitehead_graph(const std::vector<CyclicWord>& ws, int rank) {
  std::vector<std::vector<int>> adj(2 * rank, std::vector<int>(2 * rank, 0));
  for (const auto& w : ws) {
    const std::size_t m = w.size();
    for (std::size_t i = 0; i < m; ++i) {
      int a = vid(w[i]), b = vid(-w[(i + 1) % m]);
      adj[a][b]++;
      if (a != b) adj[b][a]++;
    }
  }
  return adj;
}

namespace {

// Articulation point of the simple graph underlying adj, or -1.
int find_cut_vertex(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  for (int v = 0; v < n; ++v) {
    int c = 0;
    component_labels(adj, v, &c);
    if (c > 1) return v;
  }
  return -1;
}

}  // namespace

SplittingCertificate whitehead_separability(std::vector<CyclicWord> words, int rank, const Guards& guards) {
  SplittingCertificate cert;
  cert.rank = rank;
  for (auto& w : words) {
    w = cyclically_reduce_letters(w);
    if (w.empty()) throw InvariantError("whitehead_separability: trivial word");
    for (int x : w)
      if (x == 0 || std::abs(x) > rank) throw InvariantError("whitehead_separability: letter out of range");
  }
  cert.input = words;
  long steps = 0;
  while (true) {
    if (++steps > guards.whitehead_step_limit) throw ResourceError("Whitehead reduction steps", guards.whitehead_step_limit);
    const long before = total_length(words);
    auto adj = whitehead_graph(words, rank);
    const int nv = 2 * rank;
    std::vector<int> deg(nv, 0);
    for (int v = 0; v < nv; ++v)
      for (int t = 0; t < nv; ++t) deg[v] += adj[v][t] * (v == t ? 2 : 1);
    int ncomp = 0;
    auto comp = component_labels(adj, -1, &ncomp);
    WhiteheadMove move;
    if (ncomp > 1) {
      // A letter pair that never occurs gives a visible splitting.
      for (int i = 0; i < rank; ++i)
        if (deg[2 * i] == 0) {
          cert.verdict = SplittingCertificate::Verdict::splits;
          cert.side.assign(rank, 1);
          cert.side[i] = 0;
          cert.final_words = words;
          return cert;
        }
      for (int c = 0; c < ncomp; ++c) {
        bool closed = true;
        for (int v = 0; v < nv; ++v)
          if (comp[v] == c && comp[v ^ 1] != c) closed = false;
        if (closed) {
          cert.verdict = SplittingCertificate::Verdict::splits;
          cert.side.assign(rank, 1);
          for (int i = 0; i < rank; ++i)
            if (comp[2 * i] == c) cert.side[i] = 0;
          cert.final_words = words;
          return cert;
        }
      }
      // Otherwise the component of some x omits x^-1, and (comp(x), x)
      // shortens the system by deg(x).
      int v0 = 0;
      for (int v = 0; v < nv; ++v)
        if (deg[v] > 0 && comp[v ^ 1] != comp[v]) {
          v0 = v;
          break;
        }
      move.a = letter_of(v0);
      for (int v = 0; v < nv; ++v)
        if (comp[v] == comp[v0]) move.A.push_back(letter_of(v));
    } else {
      int cut = find_cut_vertex(adj);
      if (cut < 0) {
        cert.verdict = SplittingCertificate::Verdict::does_not_split;
        cert.final_words = words;
        return cert;
      }
      int c = 0;
      auto sub = component_labels(adj, cut, &c);
      int target = sub[cut ^ 1] == 0 ? 1 : 0;
      move.a = letter_of(cut);
      move.A.push_back(move.a);
      for (int v = 0; v < nv; ++v)
        if (v != cut && sub[v] == target) move.A.push_back(letter_of(v));
    }
    std::vector<CyclicWord> next;
    next.reserve(words.size());
    for (const auto& w : words) next.push_back(apply_whitehead(move, w));
    WM_CHECK(total_length(next) < before, "Whitehead move failed to shorten the system");
    cert.trail.push_back(std::move(move));
    words = std::move(next);
  }
}

bool verify_certificate(const SplittingCertificate& cert) {
  std::vector<CyclicWord> ws;
  for (const auto& w : cert.input) ws.push_back(cyclically_reduce_letters(w));
  for (const auto& m : cert.trail) {
    const long before = total_length(ws);
    for (auto& w : ws) w = apply_whitehead(m, w);
    if (total_length(ws) >= before) return false;
  }
  if (ws != cert.final_words) return false;
  if (cert.splits()) {
    if (static_cast<int>(cert.side.size()) != cert.rank) return false;
    bool has0 = false, has1 = false;
    for (int s : cert.side) (s == 0 ? has0 : has1) = true;
    if (!has0 || !has1) return false;
    for (const auto& w : ws)
      if (!uses_single_side(w, cert.side)) return false;
    return true;
  }
  auto adj = whitehead_graph(ws, cert.rank);
  int c = 0;
  component_labels(adj, -1, &c);
  return c == 1 && find_cut_vertex(adj) < 0;
}

}  // namespace wm
