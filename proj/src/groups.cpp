#include "wm/groups.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>

#include "wm/error.hpp"

namespace wm {

std::string FiniteGroupTable::irr_label(int irr) const {
  const Partition& p = irr_partitions[irr];
  const int m = size_of(p);
  if (p == Partition{m}) return "triv";
  if (m >= 2 && p == Partition(m, 1)) return "sign";
  if (m >= 3 && p == Partition{m - 1, 1}) return "std";
  return partition_string(p);
}

int FiniteGroupTable::irr_index(const std::string& label) const {
  const int m = irr_partitions.empty() ? 0 : size_of(irr_partitions[0]);
  Partition want;
  if (label == "triv") {
    want = {m};
  } else if (label == "sign") {
    want = Partition(m, 1);
  } else if (label == "std") {
    if (m < 2) throw InputError("no standard character in " + name);
    want = {m - 1, 1};
  } else {
    want = parse_partition(label);
  }
  for (int i = 0; i < num_irr(); ++i)
    if (irr_partitions[i] == want) return i;
  throw InputError("no irreducible '" + label + "' in " + name);
}

namespace {

std::vector<std::vector<int>> all_perms(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Partition cycle_type(const std::vector<int>& p) {
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

}  // namespace

std::vector<int> FiniteGroupTable::element_perm(int g) const {
  return all_perms(static_cast<int>(size_of(irr_partitions[0])))[g];
}

FiniteGroupTable symmetric_group(int m) {
  if (m < 1 || m > 5) throw UnsupportedGroupError("symmetric group tables are built for 1 <= m <= 5");
  FiniteGroupTable g;
  g.name = "S" + std::to_string(m);
  auto perms = all_perms(m);
  g.order = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < g.order; ++i) index[perms[i]] = i;
  g.identity = 0;
  g.mul.assign(g.order, std::vector<int>(g.order));
  g.inv.assign(g.order, 0);
  for (int a = 0; a < g.order; ++a) {
    std::vector<int> inv(m);
    for (int i = 0; i < m; ++i) inv[perms[a][i]] = i;
    g.inv[a] = index.at(inv);
    for (int b = 0; b < g.order; ++b) {
      // (ab)(i) = a(b(i))
      std::vector<int> c(m);
      for (int i = 0; i < m; ++i) c[i] = perms[a][perms[b][i]];
      g.mul[a][b] = index.at(c);
    }
  }
  g.class_types = partitions_of(m);
  for (const auto& t : g.class_types) g.class_sizes.push_back(class_size(t).get_si());
  g.class_of.resize(g.order);
  for (int a = 0; a < g.order; ++a) {
    Partition t = cycle_type(perms[a]);
    g.class_of[a] = static_cast<int>(std::find(g.class_types.begin(), g.class_types.end(), t) - g.class_types.begin());
  }
  g.irr_partitions = partitions_of(m);
  for (const auto& mu : g.irr_partitions) {
    std::vector<long> row;
    for (const auto& t : g.class_types) row.push_back(mn_character(mu, t));
    g.chi.push_back(std::move(row));
  }
  g.trivial = 0;
  return g;
}

FiniteGroupTable trivial_group() {
  FiniteGroupTable g = symmetric_group(1);
  g.name = "1";
  return g;
}

FiniteGroupTable parse_group(const std::string& spec) {
  if (spec == "1" || spec == "S1" || spec == "C1") return trivial_group();
  if (spec.size() == 2 && (spec[0] == 'S' || spec[0] == 'C') && std::isdigit(static_cast<unsigned char>(spec[1]))) {
    int m = spec[1] - '0';
    if (spec[0] == 'S') return symmetric_group(m);
    if (m == 2) {
      FiniteGroupTable g = symmetric_group(2);
      g.name = "C2";
      return g;
    }
  }
  throw UnsupportedGroupError("unsupported group '" + spec + "' (S1..S5, C2; other C_m via the winding path)");
}

CmSpec parse_cm(const std::string& spec) {
  CmSpec cm;
  std::string s = spec;
  auto colon = s.find(':');
  try {
    if (colon != std::string::npos) {
      cm.j = std::stoi(s.substr(colon + 1));
      s = s.substr(0, colon);
    }
    if (s.size() < 2 || s[0] != 'C') throw ParseError("bad cyclic group spec '" + spec + "'");
    cm.m = std::stoi(s.substr(1));
  } catch (const std::logic_error&) {
    throw ParseError("bad cyclic group spec '" + spec + "'");
  }
  if (cm.m == 1 || cm.m < 0) throw InputError("C_m needs m = 0 or m >= 2");
  return cm;
}

int PartitionMap::size() const {
  int s = 0;
  for (const auto& [irr, p] : parts) s += size_of(p);
  return s;
}

Partition PartitionMap::at(int irr) const {
  for (const auto& [i, p] : parts)
    if (i == irr) return p;
  return {};
}

PartitionMap parse_partition_map(const FiniteGroupTable& g, const std::string& text) {
  PartitionMap out;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(';', pos);
    std::string item = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end + 1;
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("partition map item without ':' in '" + text + "'");
    int irr = g.irr_index(item.substr(0, colon));
    Partition p = parse_partition(item.substr(colon + 1));
    for (const auto& [i, q] : out.parts)
      if (i == irr) throw InputError("label repeated in partition map '" + text + "'");
    if (!p.empty()) out.parts.emplace_back(irr, std::move(p));
  }
  std::sort(out.parts.begin(), out.parts.end());
  return out;
}

std::string partition_map_string(const FiniteGroupTable& g, const PartitionMap& arrm) {
  std::string s;
  for (const auto& [irr, p] : arrm.parts) {
    if (!s.empty()) s += ";";
    std::string body = partition_string(p);
    s += g.irr_label(irr) + ":" + body.substr(1, body.size() - 2);
  }
  return s;
}

long stable_map_threshold(const FiniteGroupTable& g, const PartitionMap& arrm) {
  return arrm.size() + first_part(arrm.at(g.trivial));
}

PartitionMap stable_map(const FiniteGroupTable& g, const PartitionMap& arrm, long n) {
  if (n < stable_map_threshold(g, arrm))
    throw DomainError("->mu[N] undefined at N=" + std::to_string(n));
  const Partition triv = arrm.at(g.trivial);
  PartitionMap out;
  for (const auto& [irr, p] : arrm.parts)
    if (irr != g.trivial) out.parts.emplace_back(irr, p);
  Partition t = stable_partition(triv, n - arrm.size() + size_of(triv));
  if (!t.empty()) out.parts.emplace_back(g.trivial, std::move(t));
  std::sort(out.parts.begin(), out.parts.end());
  return out;
}

long wreath_value(const FiniteGroupTable& g, const PartitionMap& arrm, const std::vector<CycleClass>& cycles) {
  int total = 0;
  for (const auto& c : cycles) total += c.length;
  if (total != arrm.size()) throw InputError("wreath_value: |->mu| differs from the element size");
  const int k = static_cast<int>(arrm.parts.size());
  std::vector<int> room(k);
  for (int i = 0; i < k; ++i) room[i] = size_of(arrm.parts[i].second);
  std::vector<std::vector<int>> lens(k);
  long sum = 0;
  // Assign whole cycles to blocks; each block's product is chi^mu on its
  // cycle type times phi on its cycle products.
  auto rec = [&](auto&& self, std::size_t c, long weight) -> void {
    if (weight == 0) return;
    if (c == cycles.size()) {
      long v = weight;
      for (int i = 0; i < k; ++i) v *= mn_character(arrm.parts[i].second, sorted_partition(lens[i]));
      sum += v;
      return;
    }
    for (int i = 0; i < k; ++i) {
      if (room[i] < cycles[c].length) continue;
      room[i] -= cycles[c].length;
      lens[i].push_back(cycles[c].length);
      self(self, c + 1, weight * g.chi[arrm.parts[i].first][cycles[c].cls]);
      lens[i].pop_back();
      room[i] += cycles[c].length;
    }
  };
  rec(rec, 0, 1);
  return sum;
}

std::vector<CycleClass> wreath_cycles(const FiniteGroupTable& g, const std::vector<int>& v,
                                      const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  if (static_cast<int>(v.size()) != n) throw InputError("wreath element: size mismatch");
  std::vector<char> seen(n, 0);
  std::vector<CycleClass> out;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    // Product v_{x_l} ... v_{x_1} along x_1 = i, x_{t+1} = sigma(x_t).
    int prod = g.identity, len = 0;
    for (int x = i; !seen[x]; x = sigma[x]) {
      if (x < 0 || x >= n) throw InputError("wreath element: bad permutation");
      seen[x] = 1;
      prod = g.mul[v[x]][prod];
      ++len;
    }
    out.push_back({len, g.class_of[prod]});
  }
  return out;
}

long wreath_character_eval(const FiniteGroupTable& g, const PartitionMap& arrm, const std::vector<int>& v,
                           const std::vector<int>& sigma) {
  return wreath_value(g, arrm, wreath_cycles(g, v, sigma));
}

namespace {

Poly shift(const Poly& p, long d) {
  Poly r;
  for (int k = p.degree(); k >= 0; --k) r = r * Poly::root(d) + Poly::constant(p.c[k]);
  return r;
}

}  // namespace

Poly wreath_dim_poly(const FiniteGroupTable& g, const PartitionMap& arrm) {
  const Partition triv = arrm.at(g.trivial);
  long rest = 0;
  mpq_class scale = 1;
  for (const auto& [irr, p] : arrm.parts) {
    if (irr == g.trivial) continue;
    const long d = size_of(p);
    rest += d;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(g.dim(irr)), static_cast<unsigned long>(d));
    scale *= make_rational(dimension(p) * pw, factorial(static_cast<int>(d)));
  }
  Poly out = Poly::constant(scale);
  for (long i = 0; i < rest; ++i) out = out * Poly::root(i);
  return out * shift(stable_dimension(triv), rest);
}

CycleDiagram cycle_diagram(const GammaPower& gp, const Morphism& b) {
  CycleDiagram d;
  d.sigma = b.cod;
  for (std::size_t i = 0; i < gp.cycles.size(); ++i) {
    d.starts.push_back(b.vmap[gp.cycles[i].start]);
    d.paths.push_back(gp.cycles[i].letters);
    d.lengths.push_back(gp.cycles[i].part);
  }
  return d;
}

namespace {

struct Traversal {
  int edge;
  bool forward;
};

struct Walks {
  int num_edges = 0;
  std::vector<int> free_edges;  // edges off the spanning forest
  std::vector<std::vector<Traversal>> cycles;
};

Walks walk_diagram(const CycleDiagram& diag) {
  const CoreGraph& s = diag.sigma;
  const int r = s.rank();
  std::vector<int> id(static_cast<std::size_t>(s.num_vertices()) * r, -1);
  auto edges = s.edges();
  Walks w;
  w.num_edges = static_cast<int>(edges.size());
  for (int e = 0; e < w.num_edges; ++e) id[static_cast<std::size_t>(edges[e].src) * r + edges[e].label] = e;
  std::vector<char> tree(edges.size(), 0), seen(s.num_vertices(), 0);
  for (int root = 0; root < s.num_vertices(); ++root) {
    if (seen[root]) continue;
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int l = 0; l < r; ++l) {
        int t = s.out(u, l);
        if (t >= 0 && !seen[t]) {
          seen[t] = 1;
          tree[id[static_cast<std::size_t>(u) * r + l]] = 1;
          q.push(t);
        }
        int f = s.in(u, l);
        if (f >= 0 && !seen[f]) {
          seen[f] = 1;
          tree[id[static_cast<std::size_t>(f) * r + l]] = 1;
          q.push(f);
        }
      }
    }
  }
  for (int e = 0; e < w.num_edges; ++e)
    if (!tree[e]) w.free_edges.push_back(e);
  for (std::size_t c = 0; c < diag.paths.size(); ++c) {
    std::vector<Traversal> walk;
    int v = diag.starts[c];
    for (Letter x : diag.paths[c]) {
      int next = s.step(v, x);
      if (next < 0) throw InputError("cycle diagram: path leaves Sigma");
      if (x > 0)
        walk.push_back({id[static_cast<std::size_t>(v) * r + x - 1], true});
      else
        walk.push_back({id[static_cast<std::size_t>(next) * r + (-x - 1)], false});
      v = next;
    }
    if (v != diag.starts[c]) throw InputError("cycle diagram: path is not closed");
    w.cycles.push_back(std::move(walk));
  }
  return w;
}

long checked_power(long base, std::size_t k, long limit) {
  long total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= base;
    if (total > limit) throw ResourceError("label enumeration too large", limit);
  }
  return total;
}

// Calls f(cycle classes) for every labeling of the off-forest edges.
template <class F>
void for_each_labeling(const FiniteGroupTable& g, const Walks& w, const std::vector<int>& lengths, const Guards& guards,
                       F&& f) {
  checked_power(g.order, w.free_edges.size(), guards.labeling_limit);
  std::vector<int> label(w.num_edges, g.identity);
  std::vector<CycleClass> cls(w.cycles.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == w.free_edges.size()) {
      for (std::size_t c = 0; c < w.cycles.size(); ++c) {
        int prod = g.identity;
        for (const auto& t : w.cycles[c]) prod = g.mul[prod][t.forward ? label[t.edge] : g.inv[label[t.edge]]];
        cls[c] = {lengths[c], g.class_of[prod]};
      }
      f(cls);
      return;
    }
    for (int a = 0; a < g.order; ++a) {
      label[w.free_edges[i]] = a;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

mpq_class e_eta_wreath(const FiniteGroupTable& g, const CycleDiagram& diag, const PartitionMap& arrm,
                       const Guards& guards) {
  Walks w = walk_diagram(diag);
  std::map<std::vector<std::pair<int, int>>, long> memo;
  mpz_class sum = 0, count = 0;
  for_each_labeling(g, w, diag.lengths, guards, [&](const std::vector<CycleClass>& cls) {
    std::vector<std::pair<int, int>> key;
    for (const auto& c : cls) key.emplace_back(c.length, c.cls);
    std::sort(key.begin(), key.end());
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, wreath_value(g, arrm, cls)).first;
    sum += it->second;
    count += 1;
  });
  return make_rational(sum, count);
}

mpq_class e_b_irreducible(const FiniteGroupTable& g, const CycleDiagram& diag, int irr, const Guards& guards) {
  if (irr < 0 || irr >= g.num_irr()) throw InputError("e_b_irreducible: bad irreducible index");
  Walks w = walk_diagram(diag);
  mpz_class sum = 0, count = 0;
  for_each_labeling(g, w, diag.lengths, guards, [&](const std::vector<CycleClass>& cls) {
    long v = 1;
    for (const auto& c : cls) v *= g.chi[irr][c.cls];
    sum += v;
    count += 1;
  });
  return make_rational(sum, count);
}

std::vector<long> winding_vector(const CycleDiagram& diag) {
  Walks w = walk_diagram(diag);
  std::vector<long> n(w.num_edges, 0);
  for (const auto& walk : w.cycles)
    for (const auto& t : walk) n[t.edge] += t.forward ? 1 : -1;
  return n;
}

mpq_class e_b_cm_winding(const CmSpec& cm, const CycleDiagram& diag) {
  for (long n : winding_vector(diag)) {
    long x = static_cast<long>(cm.j) * n;
    if (cm.m == 0 ? x != 0 : x % cm.m != 0) return 0;
  }
  return 1;
}

namespace {

// Integer polynomial remainder modulo a monic divisor.
std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& monic) {
  const std::size_t dm = monic.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    long c = a[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= dm; ++k) a[i - dm + k] -= c * monic[k];
  }
  a.resize(std::min(a.size(), dm));
  return a;
}

std::vector<long> poly_div_exact(std::vector<long> a, const std::vector<long>& monic) {
  const std::size_t dm = monic.size() - 1;
  std::vector<long> q(a.size() - dm, 0);
  for (std::size_t i = a.size(); i-- > dm;) {
    long c = a[i];
    q[i - dm] = c;
    for (std::size_t k = 0; k <= dm; ++k) a[i - dm + k] -= c * monic[k];
  }
  return q;
}

std::vector<long> cyclotomic(int m) {
  std::vector<long> p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = poly_div_exact(p, cyclotomic(d));
  return p;
}

}  // namespace

mpq_class e_b_cm_enumerate(const CmSpec& cm, const CycleDiagram& diag, const Guards& guards) {
  if (cm.m < 2) throw UnsupportedGroupError("enumeration needs a finite cyclic group");
  Walks w = walk_diagram(diag);
  checked_power(cm.m, w.free_edges.size(), guards.labeling_limit);
  std::vector<long> coeff(cm.m, 0);
  std::vector<int> label(w.num_edges, 0);
  long count = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == w.free_edges.size()) {
      long t = 0;
      for (const auto& walk : w.cycles)
        for (const auto& s : walk) t += s.forward ? label[s.edge] : -label[s.edge];
      t = ((t * cm.j) % cm.m + cm.m) % cm.m;
      coeff[t] += 1;
      ++count;
      return;
    }
    for (int a = 0; a < cm.m; ++a) {
      label[w.free_edges[i]] = a;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::vector<long> rem = poly_mod(coeff, cyclotomic(cm.m));
  for (std::size_t k = 1; k < rem.size(); ++k)
    WM_CHECK(rem[k] == 0, "sum of roots of unity is not rational");
  return make_rational(rem.empty() ? 0 : rem[0], count);
}

}  // namespace wm
