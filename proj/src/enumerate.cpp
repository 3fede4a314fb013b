#include "wm/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "wm/error.hpp"

namespace wm {

VertexPartition normalize_partition(const std::vector<int>& labels) {
  VertexPartition out(labels.size());
  std::vector<std::pair<int, int>> seen;
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int found = -1;
    for (auto& [lab, id] : seen)
      if (lab == labels[i]) {
        found = id;
        break;
      }
    if (found < 0) {
      found = next++;
      seen.emplace_back(labels[i], found);
    }
    out[i] = found;
  }
  return out;
}

VertexPartition discrete_partition(int n) {
  VertexPartition p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

int num_blocks(const VertexPartition& p) {
  int m = -1;
  for (int x : p) m = std::max(m, x);
  return m + 1;
}

bool refines(const VertexPartition& finer, const VertexPartition& coarser) {
  if (finer.size() != coarser.size()) return false;
  std::vector<int> img(finer.size(), -1);
  for (std::size_t u = 0; u < finer.size(); ++u) {
    int& t = img[finer[u]];
    if (t < 0)
      t = coarser[u];
    else if (t != coarser[u])
      return false;
  }
  return true;
}

VertexPartition congruence_closure(const CoreGraph& g, const VertexPartition& p, int u, int v) {
  const int n = g.num_vertices(), r = g.rank();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  };
  std::vector<int> first(n, -1);
  for (int x = 0; x < n; ++x) {
    if (first[p[x]] < 0)
      first[p[x]] = x;
    else
      unite(first[p[x]], x);
  }
  bool changed = true;
  if (u >= 0) unite(u, v);
  const auto edges = g.edges();
  std::vector<int> outm(static_cast<std::size_t>(n) * r), inm(static_cast<std::size_t>(n) * r);
  while (changed) {
    changed = false;
    std::fill(outm.begin(), outm.end(), -1);
    std::fill(inm.begin(), inm.end(), -1);
    for (const auto& e : edges) {
      int a = find(e.src), b = find(e.dst);
      int& o = outm[static_cast<std::size_t>(a) * r + e.label];
      if (o < 0)
        o = b;
      else if (unite(o, b))
        changed = true;
      a = find(e.src);
      b = find(e.dst);
      int& i = inm[static_cast<std::size_t>(b) * r + e.label];
      if (i < 0)
        i = a;
      else if (unite(i, a))
        changed = true;
    }
  }
  std::vector<int> roots(n);
  for (int x = 0; x < n; ++x) roots[x] = find(x);
  // Roots are class minima, so relabelling in vertex order yields an RGS.
  VertexPartition out(n);
  std::vector<int> id(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    int& c = id[roots[x]];
    if (c < 0) c = next++;
    out[x] = c;
  }
  return out;
}

CoreGraph quotient_graph(const CoreGraph& g, const VertexPartition& p) {
  CoreGraph q(g.rank(), num_blocks(p));
  for (auto e : g.edges()) q.add_edge(p[e.src], e.label, p[e.dst]);
  return q;
}

Morphism quotient_morphism(const CoreGraph& g, const VertexPartition& p) {
  return Morphism{g, quotient_graph(g, p), p};
}

Morphism between_quotients(const CoreGraph& g, const VertexPartition& p, const VertexPartition& q) {
  WM_CHECK(refines(p, q), "between_quotients: partitions not nested");
  Morphism m{quotient_graph(g, p), quotient_graph(g, q), std::vector<int>(num_blocks(p))};
  for (std::size_t u = 0; u < p.size(); ++u) m.vmap[p[u]] = q[u];
  return m;
}

namespace {

std::string pkey(const VertexPartition& p) {
  std::string s(p.size(), '\0');
  for (std::size_t i = 0; i < p.size(); ++i) s[i] = static_cast<char>(p[i]);
  return s;
}

}  // namespace

std::vector<VertexPartition> congruences(const CoreGraph& g, const Guards& guards,
                                         const std::function<bool(const VertexPartition&)>& keep) {
  const int n = g.num_vertices();
  if (!keep && n > guards.vertex_limit) throw ResourceError("quotient enumeration: too many vertices (" + std::to_string(n) + ")", guards.vertex_limit);
  std::vector<VertexPartition> found{discrete_partition(n)};
  std::unordered_set<std::string> seen{pkey(found[0])};
  std::vector<int> rep;
  for (std::size_t i = 0; i < found.size(); ++i) {
    const VertexPartition p = found[i];
    const int b = num_blocks(p);
    rep.assign(b, -1);
    for (int x = 0; x < n; ++x)
      if (rep[p[x]] < 0) rep[p[x]] = x;
    for (int c1 = 0; c1 < b; ++c1)
      for (int c2 = c1 + 1; c2 < b; ++c2) {
        VertexPartition q = congruence_closure(g, p, rep[c1], rep[c2]);
        if (keep && !keep(q)) continue;
        if (seen.insert(pkey(q)).second) {
          found.push_back(std::move(q));
          if (static_cast<long>(found.size()) > guards.lattice_limit)
            throw ResourceError("quotient enumeration: lattice too large", guards.lattice_limit);
        }
      }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Morphism> quotients(const CoreGraph& g, const Guards& guards) {
  std::vector<Morphism> out;
  for (const auto& p : congruences(g, guards)) out.push_back(quotient_morphism(g, p));
  return out;
}

}  // namespace wm
