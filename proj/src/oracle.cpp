#include "wm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "wm/error.hpp"

namespace wm {

Rng::Rng(std::uint64_t seed) : gen_(seed) {}

std::uint64_t Rng::next() { return gen_(); }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InputError("Rng::below: empty range");
  const std::uint64_t reject = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    std::uint64_t x = next();
    if (x >= reject) return x % n;
  }
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(static_cast<std::uint64_t>(i) + 1)]);
  return p;
}

std::uint64_t Rng::substream_seed(std::uint64_t seed, std::uint64_t k) {
  // splitmix64 of seed + k * golden ratio.
  std::uint64_t z = seed + (k + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<int> evaluate_word(const Word& w, const std::vector<std::vector<int>>& tuple, int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    int x = i;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      const auto& p = tuple[std::abs(*it) - 1];
      if (*it > 0) {
        x = p[x];
      } else {
        x = static_cast<int>(std::find(p.begin(), p.end(), x) - p.begin());
      }
    }
    out[i] = x;
  }
  return out;
}

namespace {

int fixed_points(const std::vector<int>& p) {
  int f = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == static_cast<int>(i)) ++f;
  return f;
}

Partition perm_cycle_type(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> lens;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  return sorted_partition(lens);
}

std::vector<int> perm_power(const std::vector<int>& p, int k) {
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    int x = static_cast<int>(i);
    for (int t = 0; t < k; ++t) x = p[x];
    out[i] = x;
  }
  return out;
}

int ambient_rank(const std::vector<Word>& words) {
  int r = 1;
  for (const auto& w : words) r = std::max(r, w.rank);
  return r;
}

long evaluate(const std::vector<Word>& words, const ClassFunction& f, const std::vector<std::vector<int>>& tuple,
              int n) {
  switch (f.kind) {
    case ClassFunction::FIX: {
      long v = 1;
      for (const auto& w : words) v *= fixed_points(evaluate_word(w, tuple, n));
      return v;
    }
    case ClassFunction::FIX_MINUS_ONE_PRODUCT: {
      long v = 1;
      for (const auto& w : words) v *= fixed_points(evaluate_word(w, tuple, n)) - 1;
      return v;
    }
    case ClassFunction::STABLE_CHARACTER:
      return mn_character_stable(f.mu, n, perm_cycle_type(evaluate_word(words.at(0), tuple, n)));
    case ClassFunction::ZETA: {
      auto p = evaluate_word(words.at(0), tuple, n);
      long v = 1;
      for (int k : f.nu) v *= fixed_points(perm_power(p, k));
      return v;
    }
  }
  return 0;
}

void check_words(const std::vector<Word>& words, const ClassFunction& f, int n) {
  if (words.empty()) throw InputError("no words given");
  if (n < 1) throw InputError("N must be positive");
  if ((f.kind == ClassFunction::STABLE_CHARACTER || f.kind == ClassFunction::ZETA) && words.size() != 1)
    throw InputError("this class function takes a single word");
  if (f.kind == ClassFunction::STABLE_CHARACTER) stable_partition(f.mu, n);
}

}  // namespace

mpq_class exact_expectation_sn(const std::vector<Word>& words, const ClassFunction& f, int n, const Guards& guards) {
  check_words(words, f, n);
  const int r = ambient_rank(words);
  mpz_class total_tuples = 1;
  const mpz_class nfact = factorial(n);
  for (int i = 0; i < r; ++i) total_tuples *= nfact;
  if (total_tuples > guards.exact_sn_limit) throw ResourceError("exact S_N enumeration too large", guards.exact_sn_limit);
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::size_t> idx(r, 0);
  std::vector<std::vector<int>> tuple(r, perms[0]);
  mpz_class sum = 0;
  for (;;) {
    sum += evaluate(words, f, tuple, n);
    int i = 0;
    while (i < r && ++idx[i] == perms.size()) {
      idx[i] = 0;
      tuple[i] = perms[0];
      ++i;
    }
    if (i == r) break;
    tuple[i] = perms[idx[i]];
  }
  return make_rational(sum, total_tuples);
}

McEstimate monte_carlo_sn(const std::vector<Word>& words, const ClassFunction& f, int n, long samples,
                          std::uint64_t seed) {
  check_words(words, f, n);
  if (samples < 1) throw InputError("samples must be positive");
  const int r = ambient_rank(words);
  Rng rng(seed);
  std::vector<std::vector<int>> tuple(r);
  double sum = 0, sum_sq = 0;
  for (long s = 0; s < samples; ++s) {
    for (int i = 0; i < r; ++i) tuple[i] = rng.permutation(n);
    double v = static_cast<double>(evaluate(words, f, tuple, n));
    sum += v;
    sum_sq += v * v;
  }
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.mean = sum / static_cast<double>(samples);
  if (samples > 1) {
    double var = (sum_sq - sum * est.mean) / static_cast<double>(samples - 1);
    est.standard_error = std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
  }
  return est;
}

namespace {

struct WreathElement {
  std::vector<int> v;
  std::vector<int> sigma;
};

WreathElement wreath_mul(const FiniteGroupTable& g, const WreathElement& a, const WreathElement& b) {
  const std::size_t n = a.sigma.size();
  std::vector<int> sinv(n);
  for (std::size_t i = 0; i < n; ++i) sinv[a.sigma[i]] = static_cast<int>(i);
  WreathElement c;
  c.v.resize(n);
  c.sigma.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.v[i] = g.mul[a.v[i]][b.v[sinv[i]]];
    c.sigma[i] = a.sigma[b.sigma[i]];
  }
  return c;
}

WreathElement wreath_inv(const FiniteGroupTable& g, const WreathElement& a) {
  const std::size_t n = a.sigma.size();
  WreathElement c;
  c.v.resize(n);
  c.sigma.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.sigma[a.sigma[i]] = static_cast<int>(i);
    c.v[i] = g.inv[a.v[a.sigma[i]]];
  }
  return c;
}

}  // namespace

mpq_class exact_expectation_wreath(const FiniteGroupTable& g, const Word& w, const PartitionMap& arrm, int n,
                                   const Guards& guards) {
  if (n < 1) throw InputError("N must be positive");
  const PartitionMap target = stable_map(g, arrm, n);
  mpz_class per = factorial(n);
  for (int i = 0; i < n; ++i) per *= g.order;
  if (per > guards.exact_wreath_limit) throw ResourceError("exact wreath enumeration too large", guards.exact_wreath_limit);
  std::vector<WreathElement> elems;
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 0);
  do {
    std::vector<int> v(n, 0);
    for (;;) {
      elems.push_back({v, s});
      int i = 0;
      while (i < n && ++v[i] == g.order) v[i++] = 0;
      if (i == n) break;
    }
  } while (std::next_permutation(s.begin(), s.end()));
  std::vector<WreathElement> inverses;
  for (const auto& e : elems) inverses.push_back(wreath_inv(g, e));
  const int r = w.rank;
  std::vector<std::size_t> idx(r, 0);
  mpz_class sum = 0, count = 0;
  WreathElement id{std::vector<int>(n, g.identity), {}};
  id.sigma.resize(n);
  std::iota(id.sigma.begin(), id.sigma.end(), 0);
  std::map<std::vector<std::pair<int, int>>, long> memo;
  for (;;) {
    WreathElement acc = id;
    for (Letter x : w.letters) {
      std::size_t k = idx[std::abs(x) - 1];
      acc = wreath_mul(g, acc, x > 0 ? elems[k] : inverses[k]);
    }
    auto cycles = wreath_cycles(g, acc.v, acc.sigma);
    std::vector<std::pair<int, int>> key;
    for (const auto& c : cycles) key.emplace_back(c.length, c.cls);
    std::sort(key.begin(), key.end());
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, wreath_value(g, target, cycles)).first;
    sum += it->second;
    count += 1;
    int i = 0;
    while (i < r && ++idx[i] == elems.size()) idx[i++] = 0;
    if (i == r) break;
  }
  return make_rational(sum, count);
}

McEstimate random_cover_lift_counts(const Morphism& eta, int n, long samples, std::uint64_t seed,
                                    bool injective_only) {
  if (!is_valid_morphism(eta)) throw InputError("not an immersion of core graphs");
  if (n < 1 || samples < 1) throw InputError("N and samples must be positive");
  const CoreGraph& dom = eta.dom;
  const CoreGraph& cod = eta.cod;
  const int r = cod.rank();
  auto comps = dom.components();
  auto cod_edges = cod.edges();
  std::vector<int> edge_id(static_cast<std::size_t>(cod.num_vertices()) * r, -1);
  for (std::size_t e = 0; e < cod_edges.size(); ++e)
    edge_id[static_cast<std::size_t>(cod_edges[e].src) * r + cod_edges[e].label] = static_cast<int>(e);
  Rng rng(seed);
  std::vector<std::vector<int>> perm(cod_edges.size());
  double sum = 0, sum_sq = 0;
  std::vector<int> level(dom.num_vertices());
  for (long s = 0; s < samples; ++s) {
    for (auto& p : perm) p = rng.permutation(n);
    // Valid sheet choices per component, as full vertex assignments.
    std::vector<std::vector<std::vector<int>>> options(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (int sheet = 0; sheet < n; ++sheet) {
        std::fill(level.begin(), level.end(), -1);
        std::vector<int> stack{comps[c][0]};
        level[comps[c][0]] = sheet;
        bool ok = true;
        while (!stack.empty() && ok) {
          int u = stack.back();
          stack.pop_back();
          for (int l = 0; l < r && ok; ++l) {
            int t = dom.out(u, l);
            if (t >= 0) {
              int want = perm[edge_id[static_cast<std::size_t>(eta.vmap[u]) * r + l]][level[u]];
              if (level[t] < 0) {
                level[t] = want;
                stack.push_back(t);
              } else if (level[t] != want) {
                ok = false;
              }
            }
            int f = dom.in(u, l);
            if (f >= 0) {
              const auto& p = perm[edge_id[static_cast<std::size_t>(eta.vmap[f]) * r + l]];
              int want = static_cast<int>(std::find(p.begin(), p.end(), level[u]) - p.begin());
              if (level[f] < 0) {
                level[f] = want;
                stack.push_back(f);
              } else if (level[f] != want) {
                ok = false;
              }
            }
          }
        }
        if (!ok) continue;
        std::vector<int> assign;
        for (int u : comps[c]) assign.push_back(level[u]);
        options[c].push_back(std::move(assign));
      }
    }
    double count = 0;
    if (!injective_only) {
      count = 1;
      for (const auto& o : options) count *= static_cast<double>(o.size());
    } else {
      std::vector<int> used(static_cast<std::size_t>(cod.num_vertices()) * n, 0);
      auto rec = [&](auto&& self, std::size_t c) -> void {
        if (c == comps.size()) {
          count += 1;
          return;
        }
        for (const auto& assign : options[c]) {
          bool ok = true;
          std::size_t k = 0;
          for (; k < assign.size(); ++k) {
            int& slot = used[static_cast<std::size_t>(eta.vmap[comps[c][k]]) * n + assign[k]];
            if (slot) {
              ok = false;
              break;
            }
            slot = 1;
          }
          if (ok) self(self, c + 1);
          for (std::size_t j = 0; j < k; ++j) used[static_cast<std::size_t>(eta.vmap[comps[c][j]]) * n + assign[j]] = 0;
        }
      };
      rec(rec, 0);
    }
    sum += count;
    sum_sq += count * count;
  }
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.mean = sum / static_cast<double>(samples);
  if (samples > 1) {
    double var = (sum_sq - sum * est.mean) / static_cast<double>(samples - 1);
    est.standard_error = std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
  }
  return est;
}

}  // namespace wm
