#include "wm/graph.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>

#include "wm/error.hpp"

namespace wm {

CoreGraph::CoreGraph(int rank, int num_vertices)
    : rank_(rank),
      nv_(num_vertices),
      out_(static_cast<std::size_t>(num_vertices) * rank, -1),
      in_(static_cast<std::size_t>(num_vertices) * rank, -1) {
  if (rank < 1) throw InputError("graph rank must be positive");
}

int CoreGraph::add_vertex() {
  out_.resize(out_.size() + rank_, -1);
  in_.resize(in_.size() + rank_, -1);
  return nv_++;
}

void CoreGraph::add_edge(int src, int label, int dst) {
  WM_CHECK(src >= 0 && src < nv_ && dst >= 0 && dst < nv_ && label >= 0 && label < rank_, "edge out of range");
  int& o = out_[static_cast<std::size_t>(src) * rank_ + label];
  int& i = in_[static_cast<std::size_t>(dst) * rank_ + label];
  if (o == dst && i == src) return;
  WM_CHECK(o < 0 && i < 0, "edge would violate foldedness");
  o = dst;
  i = src;
  ++ne_;
}

int CoreGraph::degree(int v) const {
  int d = 0;
  for (int l = 0; l < rank_; ++l) d += (out(v, l) >= 0) + (in(v, l) >= 0);
  return d;
}

bool CoreGraph::is_core() const {
  for (int v = 0; v < nv_; ++v)
    if (degree(v) < 2) return false;
  return true;
}

std::vector<CoreGraph::Edge> CoreGraph::edges() const {
  std::vector<Edge> es;
  es.reserve(ne_);
  for (int v = 0; v < nv_; ++v)
    for (int l = 0; l < rank_; ++l)
      if (out(v, l) >= 0) es.push_back({v, l, out(v, l)});
  return es;
}

std::vector<int> CoreGraph::component_ids(int* count) const {
  std::vector<int> comp(nv_, -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < nv_; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int l = 0; l < rank_; ++l)
        for (int t : {out(v, l), in(v, l)})
          if (t >= 0 && comp[t] < 0) {
            comp[t] = c;
            stack.push_back(t);
          }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

std::vector<std::vector<int>> CoreGraph::components() const {
  int c = 0;
  auto ids = component_ids(&c);
  std::vector<std::vector<int>> comps(c);
  for (int v = 0; v < nv_; ++v) comps[ids[v]].push_back(v);
  return comps;
}

bool CoreGraph::component_is_cycle(const std::vector<int>& comp) const {
  if (comp.empty()) return false;
  for (int v : comp)
    if (degree(v) != 2) return false;
  return true;
}

CoreGraph CoreGraph::induced(const std::vector<int>& vertices, std::vector<int>* old_to_new) const {
  std::vector<int> map(nv_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) map[vertices[i]] = static_cast<int>(i);
  CoreGraph g(rank_, static_cast<int>(vertices.size()));
  for (int v : vertices)
    for (int l = 0; l < rank_; ++l) {
      int t = out(v, l);
      if (t >= 0 && map[t] >= 0) g.add_edge(map[v], l, map[t]);
    }
  if (old_to_new) *old_to_new = std::move(map);
  return g;
}

CoreGraph disjoint_union(const CoreGraph& a, const CoreGraph& b) {
  WM_CHECK(a.rank() == b.rank(), "rank mismatch in disjoint union");
  CoreGraph g(a.rank(), a.num_vertices() + b.num_vertices());
  for (auto e : a.edges()) g.add_edge(e.src, e.label, e.dst);
  for (auto e : b.edges()) g.add_edge(e.src + a.num_vertices(), e.label, e.dst + a.num_vertices());
  return g;
}

Morphism disjoint_union(const Morphism& a, const Morphism& b) {
  Morphism m{disjoint_union(a.dom, b.dom), disjoint_union(a.cod, b.cod), a.vmap};
  for (int v : b.vmap) m.vmap.push_back(v + a.cod.num_vertices());
  return m;
}

CoreGraph bouquet(int rank) {
  if (rank < 1) throw InputError("bouquet rank must be at least 1");
  CoreGraph g(rank, 1);
  for (int l = 0; l < rank; ++l) g.add_edge(0, l, 0);
  return g;
}

bool is_valid_morphism(const Morphism& m) {
  if (m.dom.rank() != m.cod.rank()) return false;
  if (static_cast<int>(m.vmap.size()) != m.dom.num_vertices()) return false;
  for (int x : m.vmap)
    if (x < 0 || x >= m.cod.num_vertices()) return false;
  for (auto e : m.dom.edges())
    if (m.cod.out(m.vmap[e.src], e.label) != m.vmap[e.dst]) return false;
  return true;
}

Morphism identity_morphism(const CoreGraph& g) {
  Morphism m{g, g, std::vector<int>(g.num_vertices())};
  std::iota(m.vmap.begin(), m.vmap.end(), 0);
  return m;
}

Morphism compose(const Morphism& second, const Morphism& first) {
  WM_CHECK(first.cod == second.dom, "composition of non-composable morphisms");
  Morphism m{first.dom, second.cod, std::vector<int>(first.vmap.size())};
  for (std::size_t i = 0; i < first.vmap.size(); ++i) m.vmap[i] = second.vmap[first.vmap[i]];
  return m;
}

Morphism to_bouquet(const CoreGraph& g) {
  return Morphism{g, bouquet(g.rank()), std::vector<int>(g.num_vertices(), 0)};
}

bool is_surjective(const Morphism& m) {
  std::vector<char> hitv(m.cod.num_vertices(), 0);
  std::vector<char> hite(static_cast<std::size_t>(m.cod.num_vertices()) * m.cod.rank(), 0);
  for (int x : m.vmap) hitv[x] = 1;
  for (auto e : m.dom.edges()) hite[static_cast<std::size_t>(m.vmap[e.src]) * m.cod.rank() + e.label] = 1;
  for (char h : hitv)
    if (!h) return false;
  for (auto e : m.cod.edges())
    if (!hite[static_cast<std::size_t>(e.src) * m.cod.rank() + e.label]) return false;
  return true;
}

bool is_isomorphism(const Morphism& m) {
  if (m.dom.num_vertices() != m.cod.num_vertices() || m.dom.num_edges() != m.cod.num_edges()) return false;
  std::vector<char> hit(m.cod.num_vertices(), 0);
  for (int x : m.vmap) {
    if (hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

Morphism restrict_to_codomain(const Morphism& m, const std::vector<int>& cod_vertices) {
  std::vector<char> in_set(m.cod.num_vertices(), 0);
  for (int x : cod_vertices) in_set[x] = 1;
  std::vector<int> dom_vertices;
  for (int u = 0; u < m.dom.num_vertices(); ++u)
    if (in_set[m.vmap[u]]) dom_vertices.push_back(u);
  std::vector<int> cmap, dmap;
  Morphism r;
  r.cod = m.cod.induced(cod_vertices, &cmap);
  r.dom = m.dom.induced(dom_vertices, &dmap);
  r.vmap.resize(dom_vertices.size());
  for (std::size_t i = 0; i < dom_vertices.size(); ++i) r.vmap[i] = cmap[m.vmap[dom_vertices[i]]];
  return r;
}

std::vector<int> kernel_partition(const Morphism& m) {
  std::vector<int> label(m.cod.num_vertices(), -1);
  std::vector<int> rgs(m.vmap.size());
  int next = 0;
  for (std::size_t u = 0; u < m.vmap.size(); ++u) {
    int& c = label[m.vmap[u]];
    if (c < 0) c = next++;
    rgs[u] = c;
  }
  return rgs;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    p[b] = a;
    return true;
  }
};

}  // namespace

FoldResult fold(const RawGraph& raw) {
  const int n = raw.num_vertices, r = raw.rank;
  UnionFind uf(n);
  bool changed = true;
  std::vector<int> outm, inm;
  while (changed) {
    changed = false;
    outm.assign(static_cast<std::size_t>(n) * r, -1);
    inm.assign(static_cast<std::size_t>(n) * r, -1);
    for (const auto& e : raw.edges) {
      int a = uf.find(e.src), b = uf.find(e.dst);
      int& o = outm[static_cast<std::size_t>(a) * r + e.label];
      if (o < 0)
        o = b;
      else if (uf.unite(o, b))
        changed = true;
      a = uf.find(e.src);
      b = uf.find(e.dst);
      int& i = inm[static_cast<std::size_t>(b) * r + e.label];
      if (i < 0)
        i = a;
      else if (uf.unite(i, a))
        changed = true;
    }
  }
  FoldResult res;
  std::vector<int> idx(n, -1);
  int count = 0;
  res.vmap.resize(n);
  for (int v = 0; v < n; ++v) {
    int root = uf.find(v);
    if (idx[root] < 0) idx[root] = count++;
    res.vmap[v] = idx[root];
  }
  res.graph = CoreGraph(r, count);
  for (const auto& e : raw.edges) res.graph.add_edge(res.vmap[e.src], e.label, res.vmap[e.dst]);
  return res;
}

CoreGraph prune_to_core(const CoreGraph& g, std::vector<int>* old_to_new) {
  const int n = g.num_vertices();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (removed[v]) continue;
    removed[v] = 1;
    for (int l = 0; l < g.rank(); ++l)
      for (int t : {g.out(v, l), g.in(v, l)})
        if (t >= 0 && !removed[t] && --deg[t] <= 1) queue.push_back(t);
  }
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) keep.push_back(v);
  return g.induced(keep, old_to_new);
}

StallingsGraph stallings_graph(const std::vector<Word>& generators) {
  if (generators.empty()) throw DomainError("no generators");
  RawGraph raw;
  raw.rank = generators.front().rank;
  raw.num_vertices = 1;
  bool any = false;
  for (const Word& g0 : generators) {
    Word g = reduce(g0);
    raw.rank = std::max(raw.rank, g.rank);
    if (g.is_identity()) continue;
    any = true;
    int cur = 0;
    for (std::size_t i = 0; i < g.letters.size(); ++i) {
      int next = i + 1 == g.letters.size() ? 0 : raw.num_vertices++;
      Letter x = g.letters[i];
      if (x > 0)
        raw.edges.push_back({cur, x - 1, next});
      else
        raw.edges.push_back({next, -x - 1, cur});
      cur = next;
    }
  }
  if (!any) throw DomainError("all generators are trivial");
  auto folded = fold(raw);
  StallingsGraph sg;
  sg.graph = prune_to_core(folded.graph);
  sg.eta = to_bouquet(sg.graph);
  return sg;
}

namespace {

void append_cycle(CoreGraph& g, const std::vector<Letter>& letters) {
  const int m = static_cast<int>(letters.size());
  int offset = g.num_vertices();
  for (int j = 0; j < m; ++j) g.add_vertex();
  for (int j = 0; j < m; ++j) {
    int a = offset + j, b = offset + (j + 1) % m;
    Letter x = letters[j];
    if (x > 0)
      g.add_edge(a, x - 1, b);
    else
      g.add_edge(b, -x - 1, a);
  }
}

}  // namespace

GammaPower gamma_power(const Word& w, const std::vector<int>& shape) {
  GammaPower gp;
  const Word cyc = cyclic_reduce(w).core;
  const int L = static_cast<int>(cyc.length());
  const int rank = w.rank;
  gp.graph = CoreGraph(rank, 0);
  CoreGraph base(rank, 0);
  int degree = 0;
  for (int p : shape) {
    if (p < 1) throw InputError("shape parts must be positive");
    degree += p;
  }
  if (L > 0) append_cycle(base, cyc.letters);
  gp.cover.degree = degree;
  gp.cover.vertex_fibers.assign(L, {});
  std::vector<int> rho;
  if (L > 0) {
    for (std::size_t i = 0; i < shape.size(); ++i) {
      int p = shape[i];
      std::vector<Letter> letters;
      for (int t = 0; t < p; ++t) letters.insert(letters.end(), cyc.letters.begin(), cyc.letters.end());
      int offset = gp.graph.num_vertices();
      append_cycle(gp.graph, letters);
      gp.cycles.push_back(CycleInfo{offset, letters, p});
      gp.component_of_cycle.push_back(static_cast<int>(i));
      for (int j = 0; j < p * L; ++j) {
        rho.push_back(j % L);
        gp.cover.vertex_fibers[j % L].push_back(offset + j);
      }
    }
  }
  gp.cover.rho = Morphism{gp.graph, base, rho};
  gp.eta = to_bouquet(gp.graph);
  return gp;
}

GammaWords gamma_words(const std::vector<Word>& words) {
  GammaWords gw;
  int rank = 1;
  for (const auto& w : words) rank = std::max(rank, w.rank);
  gw.graph = CoreGraph(rank, 0);
  for (const auto& w : words) {
    Word cyc = cyclic_reduce(w).core;
    if (cyc.is_identity()) continue;
    int offset = gw.graph.num_vertices();
    append_cycle(gw.graph, cyc.letters);
    gw.cycles.push_back(CycleInfo{offset, cyc.letters, 1});
  }
  gw.eta = to_bouquet(gw.graph);
  return gw;
}

bool is_efficient_partition(const std::vector<int>& partition, const CoveringData& cover) {
  std::vector<int> seen;
  for (const auto& fiber : cover.vertex_fibers) {
    seen.clear();
    for (int u : fiber) seen.push_back(partition[u]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

bool is_efficient(const Morphism& eta1, const CoveringData& cover) {
  if (!(eta1.dom == cover.rho.dom)) throw InputError("morphism domain differs from the covering domain");
  return is_efficient_partition(eta1.vmap, cover);
}

namespace {

using Code = std::vector<int>;

// Breadth-first code of the component of `start`; `order` receives the
// discovery order.
Code bfs_code(const CoreGraph& g, int start, std::vector<int>& idx, std::vector<int>* order = nullptr) {
  Code code;
  std::vector<int> ord{start};
  idx[start] = 0;
  for (std::size_t i = 0; i < ord.size(); ++i) {
    int v = ord[i];
    for (int l = 0; l < g.rank(); ++l) {
      for (int t : {g.out(v, l), g.in(v, l)}) {
        if (t < 0) {
          code.push_back(-1);
          continue;
        }
        if (idx[t] < 0) {
          idx[t] = static_cast<int>(ord.size());
          ord.push_back(t);
        }
        code.push_back(idx[t]);
      }
    }
  }
  for (int v : ord) idx[v] = -1;
  if (order) *order = std::move(ord);
  return code;
}

void append_block(Code& dst, const Code& block) {
  dst.push_back(static_cast<int>(block.size()));
  dst.insert(dst.end(), block.begin(), block.end());
}

std::string to_key(const Code& c) {
  std::string s(c.size() * sizeof(int), '\0');
  std::memcpy(s.data(), c.data(), s.size());
  return s;
}

}  // namespace

std::string canonical_key(const CoreGraph& g) {
  std::vector<int> idx(g.num_vertices(), -1);
  std::vector<Code> comps;
  for (const auto& comp : g.components()) {
    Code best;
    for (int s : comp) {
      Code c = bfs_code(g, s, idx);
      if (best.empty() || c < best) best = std::move(c);
    }
    comps.push_back(std::move(best));
  }
  std::sort(comps.begin(), comps.end());
  Code key{g.rank(), g.num_vertices()};
  for (const auto& c : comps) append_block(key, c);
  return to_key(key);
}

std::string canonical_key(const Morphism& m) {
  const CoreGraph& dom = m.dom;
  const CoreGraph& cod = m.cod;
  std::vector<int> idx_d(cod.num_vertices(), -1), idx_c(dom.num_vertices(), -1);
  auto dom_comps = dom.components();
  std::vector<int> cod_comp = cod.component_ids();
  auto cod_comps = cod.components();
  std::vector<std::vector<int>> pre(cod_comps.size());
  for (std::size_t i = 0; i < dom_comps.size(); ++i) pre[cod_comp[m.vmap[dom_comps[i].front()]]].push_back(static_cast<int>(i));

  std::vector<Code> entries;
  std::vector<int> num(cod.num_vertices(), -1);
  for (std::size_t ci = 0; ci < cod_comps.size(); ++ci) {
    Code best;
    for (int x : cod_comps[ci]) {
      std::vector<int> order;
      Code dcode = bfs_code(cod, x, idx_d, &order);
      for (std::size_t t = 0; t < order.size(); ++t) num[order[t]] = static_cast<int>(t);
      std::vector<Code> ccodes;
      for (int pc : pre[ci]) {
        Code cbest;
        for (int y : dom_comps[pc]) {
          Code c{num[m.vmap[y]]};
          Code body = bfs_code(dom, y, idx_c);
          c.insert(c.end(), body.begin(), body.end());
          if (cbest.empty() || c < cbest) cbest = std::move(c);
        }
        ccodes.push_back(std::move(cbest));
      }
      std::sort(ccodes.begin(), ccodes.end());
      Code entry;
      append_block(entry, dcode);
      entry.push_back(static_cast<int>(ccodes.size()));
      for (const auto& c : ccodes) append_block(entry, c);
      if (best.empty() || entry < best) best = std::move(entry);
    }
    entries.push_back(std::move(best));
  }
  std::sort(entries.begin(), entries.end());
  Code key{dom.rank(), dom.num_vertices(), cod.num_vertices()};
  for (const auto& e : entries) append_block(key, e);
  return to_key(key);
}

CanonicalForm canonical_form(const CoreGraph& g) {
  std::vector<int> idx(g.num_vertices(), -1);
  struct Comp {
    Code code;
    std::vector<int> order;
  };
  std::vector<Comp> comps;
  for (const auto& comp : g.components()) {
    Comp best;
    bool have = false;
    for (int s : comp) {
      std::vector<int> order;
      Code c = bfs_code(g, s, idx, &order);
      if (!have || c < best.code) {
        best = Comp{std::move(c), std::move(order)};
        have = true;
      }
    }
    comps.push_back(std::move(best));
  }
  std::stable_sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) { return a.code < b.code; });
  CanonicalForm cf;
  cf.perm.assign(g.num_vertices(), -1);
  int next = 0;
  for (const auto& c : comps)
    for (int v : c.order) cf.perm[v] = next++;
  cf.graph = CoreGraph(g.rank(), g.num_vertices());
  for (auto e : g.edges()) cf.graph.add_edge(cf.perm[e.src], e.label, cf.perm[e.dst]);
  return cf;
}

std::string dump(const CoreGraph& g) {
  auto cf = canonical_form(g);
  const CoreGraph& h = cf.graph;
  std::ostringstream os;
  auto comps = h.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) os << "--\n";
    for (int v : comps[i]) {
      os << v << ":";
      for (int l = 0; l < h.rank(); ++l)
        if (h.out(v, l) >= 0) os << ' ' << letter_char(l + 1) << "->" << h.out(v, l);
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace wm
