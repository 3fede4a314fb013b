#include "wm/mobius.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wm/algebraic.hpp"
#include "wm/error.hpp"

namespace wm {

const char* kind_name(MobiusKind k) {
  switch (k) {
    case MobiusKind::PHI: return "PHI";
    case MobiusKind::L_SURJ: return "L_SURJ";
    case MobiusKind::C_SURJ: return "C_SURJ";
    case MobiusKind::R_SURJ: return "R_SURJ";
    case MobiusKind::L_ALG: return "L_ALG";
    case MobiusKind::C_ALG: return "C_ALG";
    case MobiusKind::R_ALG: return "R_ALG";
  }
  return "?";
}

MobiusKind parse_kind(const std::string& s) {
  for (auto k : {MobiusKind::PHI, MobiusKind::L_SURJ, MobiusKind::C_SURJ, MobiusKind::R_SURJ, MobiusKind::L_ALG,
                 MobiusKind::C_ALG, MobiusKind::R_ALG})
    if (s == kind_name(k)) return k;
  throw InputError("unknown Mobius kind: " + s);
}

LinComb lb_quotient(const CoreGraph& g, const VertexPartition& p, const std::vector<int>& target, int num_targets) {
  const int r = g.rank();
  const int nb = num_blocks(p);
  // Target vertex of each block, and fiber sizes.
  std::vector<int> block_target(nb, -1);
  for (int u = 0; u < g.num_vertices(); ++u) {
    int& t = block_target[p[u]];
    WM_CHECK(t < 0 || t == target[u], "lb_quotient: partition does not refine the target map");
    t = target[u];
  }
  std::vector<int> vfiber(num_targets, 0);
  for (int t : block_target) vfiber[t]++;
  // Quotient edges over (target vertex, label).
  std::vector<char> seen(static_cast<std::size_t>(nb) * r, 0);
  std::vector<int> efiber(static_cast<std::size_t>(num_targets) * r, 0);
  for (const auto& e : g.edges()) {
    std::size_t id = static_cast<std::size_t>(p[e.src]) * r + e.label;
    if (seen[id]) continue;
    seen[id] = 1;
    efiber[static_cast<std::size_t>(target[e.src]) * r + e.label]++;
  }
  std::map<int, int> exps;
  FallingSig sig;
  for (int f : vfiber) {
    if (f > 0) exps[f] += 1;
    sig.min_n = std::max<long>(sig.min_n, f);
  }
  for (int f : efiber)
    if (f > 0) exps[f] -= 1;
  for (const auto& [k, e] : exps)
    if (e != 0) sig.exps.emplace_back(k, e);
  return LinComb::term(std::move(sig), 1);
}

LinComb lb(const Morphism& eta) {
  if (!is_valid_morphism(eta)) throw InputError("lb: not an immersion of core graphs");
  return lb_quotient(eta.dom, discrete_partition(eta.dom.num_vertices()), eta.vmap, eta.cod.num_vertices());
}

struct Engine::Domain {
  CoreGraph graph;
  std::vector<VertexPartition> lattice;
  std::vector<char> alg;
  std::vector<char> free;
  bool alg_ready = false;
  bool free_ready = false;
  std::map<std::pair<int, int>, LinComb> memo;

  int index_of(const VertexPartition& p) const {
    auto it = std::lower_bound(lattice.begin(), lattice.end(), p);
    WM_CHECK(it != lattice.end() && *it == p, "partition is not a congruence");
    return static_cast<int>(it - lattice.begin());
  }
};

struct Engine::Located {
  std::shared_ptr<Domain> d;
  int k = 0;                // kernel index in the domain lattice
  std::vector<int> target;  // canonical vertex -> codomain vertex
  int num_targets = 0;
  bool surjective = false;
};

Engine::Engine(Guards guards) : guards_(guards) {}
Engine::~Engine() = default;

namespace {

VertexPartition relabel(const VertexPartition& p, const std::vector<int>& perm) {
  std::vector<int> q(p.size());
  for (std::size_t u = 0; u < p.size(); ++u) q[perm[u]] = p[u];
  return normalize_partition(q);
}

std::vector<int> invert_perm(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t u = 0; u < perm.size(); ++u) inv[perm[u]] = static_cast<int>(u);
  return inv;
}

Morphism quotient_to(const Morphism& eta, const VertexPartition& p) {
  Morphism m;
  m.dom = quotient_graph(eta.dom, p);
  m.cod = eta.cod;
  m.vmap.assign(m.dom.num_vertices(), -1);
  for (int u = 0; u < eta.dom.num_vertices(); ++u) m.vmap[p[u]] = eta.vmap[u];
  return m;
}

}  // namespace

std::shared_ptr<Engine::Domain> Engine::domain_of(const CoreGraph& g, std::vector<int>* perm) {
  std::lock_guard lock(mu_);
  CanonicalForm cf = canonical_form(g);
  if (perm) *perm = cf.perm;
  std::string key = canonical_key(cf.graph);
  auto it = domains_.find(key);
  if (it != domains_.end()) return it->second;
  auto d = std::make_shared<Domain>();
  d->graph = cf.graph;
  d->lattice = congruences(d->graph, guards_);
  domains_.emplace(key, d);
  return d;
}

std::vector<VertexPartition> Engine::lattice(const CoreGraph& g) {
  std::vector<int> perm;
  auto d = domain_of(g, &perm);
  auto inv = invert_perm(perm);
  std::vector<VertexPartition> out;
  out.reserve(d->lattice.size());
  for (const auto& p : d->lattice) out.push_back(relabel(p, inv));
  std::sort(out.begin(), out.end());
  return out;
}

bool Engine::algebraic(const Morphism& eta) {
  std::lock_guard lock(mu_);
  std::string key = canonical_key(eta);
  auto it = alg_cache_.find(key);
  if (it != alg_cache_.end()) return it->second;
  bool a = is_algebraic(eta, guards_);
  alg_cache_.emplace(key, a);
  return a;
}

namespace {

void ensure_alg(Engine::Domain& d, const Guards& guards) {
  if (d.alg_ready) return;
  d.alg.assign(d.lattice.size(), 0);
  for (std::size_t i = 0; i < d.lattice.size(); ++i)
    d.alg[i] = is_algebraic(quotient_morphism(d.graph, d.lattice[i]), guards) ? 1 : 0;
  d.alg_ready = true;
}

// g -> g/P is free iff the only algebraic congruence below P is discrete.
void ensure_free(Engine::Domain& d, const Guards& guards) {
  if (d.free_ready) return;
  ensure_alg(d, guards);
  const int n = d.graph.num_vertices();
  d.free.assign(d.lattice.size(), 1);
  for (std::size_t a = 0; a < d.lattice.size(); ++a) {
    if (!d.alg[a] || num_blocks(d.lattice[a]) == n) continue;
    for (std::size_t i = 0; i < d.lattice.size(); ++i)
      if (d.free[i] && refines(d.lattice[a], d.lattice[i])) d.free[i] = 0;
  }
  d.free_ready = true;
}

}  // namespace

std::vector<VertexPartition> Engine::algebraic_congruences(const CoreGraph& g) {
  std::lock_guard lock(mu_);
  std::vector<int> perm;
  auto d = domain_of(g, &perm);
  ensure_alg(*d, guards_);
  auto inv = invert_perm(perm);
  std::vector<VertexPartition> out;
  for (std::size_t i = 0; i < d->lattice.size(); ++i)
    if (d->alg[i]) out.push_back(relabel(d->lattice[i], inv));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<VertexPartition, LinComb>> Engine::algebraic_targets(const CoreGraph& g, MobiusKind kind) {
  std::lock_guard lock(mu_);
  std::vector<int> perm;
  auto d = domain_of(g, &perm);
  ensure_alg(*d, guards_);
  auto inv = invert_perm(perm);
  std::vector<std::pair<VertexPartition, LinComb>> out;
  for (std::size_t i = 0; i < d->lattice.size(); ++i)
    if (d->alg[i]) out.emplace_back(relabel(d->lattice[i], inv), fast(*d, static_cast<int>(i), kind));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Engine::Located Engine::locate(const Morphism& eta) {
  if (!is_valid_morphism(eta)) throw InputError("not an immersion of core graphs");
  Located loc;
  std::vector<int> perm;
  loc.d = domain_of(eta.dom, &perm);
  loc.k = loc.d->index_of(relabel(kernel_partition(eta), perm));
  loc.target.assign(eta.dom.num_vertices(), -1);
  for (int u = 0; u < eta.dom.num_vertices(); ++u) loc.target[perm[u]] = eta.vmap[u];
  loc.num_targets = eta.cod.num_vertices();
  loc.surjective = is_surjective(eta);
  return loc;
}

LinComb Engine::fast(Domain& d, int q, MobiusKind kind) {
  auto key = std::make_pair(static_cast<int>(kind), q);
  auto it = d.memo.find(key);
  if (it != d.memo.end()) return it->second;
  const VertexPartition& Q = d.lattice[q];
  const int nq = num_blocks(Q);
  auto below = [&](int r) { return refines(d.lattice[r], Q); };
  const int n = static_cast<int>(d.lattice.size());
  LinComb v;
  switch (kind) {
    case MobiusKind::PHI:
      for (int r = 0; r < n; ++r)
        if (below(r)) v += lb_quotient(d.graph, d.lattice[r], Q, nq);
      break;
    case MobiusKind::L_SURJ:
      v = lb_quotient(d.graph, discrete_partition(d.graph.num_vertices()), Q, nq);
      break;
    case MobiusKind::R_SURJ:
      v = fast(d, q, MobiusKind::PHI);
      for (int r = 0; r < n; ++r)
        if (r != q && below(r)) v -= fast(d, r, MobiusKind::R_SURJ);
      break;
    case MobiusKind::C_SURJ:
      v = fast(d, q, MobiusKind::L_SURJ);
      for (int r = 0; r < n; ++r)
        if (r != q && below(r)) v -= fast(d, r, MobiusKind::C_SURJ);
      break;
    case MobiusKind::L_ALG:
      ensure_free(d, guards_);
      for (int r = 0; r < n; ++r)
        if (d.free[r] && below(r)) v += lb_quotient(d.graph, d.lattice[r], Q, nq);
      break;
    case MobiusKind::R_ALG:
      ensure_alg(d, guards_);
      if (!d.alg[q]) throw InputError("R_ALG requires an algebraic morphism");
      v = fast(d, q, MobiusKind::PHI);
      for (int r = 0; r < n; ++r)
        if (r != q && d.alg[r] && below(r)) v -= fast(d, r, MobiusKind::R_ALG);
      break;
    case MobiusKind::C_ALG:
      ensure_alg(d, guards_);
      if (!d.alg[q]) throw InputError("C_ALG requires an algebraic morphism");
      v = fast(d, q, MobiusKind::L_ALG);
      for (int r = 0; r < n; ++r)
        if (r != q && d.alg[r] && below(r)) v -= fast(d, r, MobiusKind::C_ALG);
      break;
  }
  d.memo.emplace(key, v);
  return v;
}

LinComb Engine::mobius(const Morphism& eta, MobiusKind kind) {
  std::lock_guard lock(mu_);
  std::string key = std::string(kind_name(kind)) + ":" + canonical_key(eta);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Located loc = locate(eta);
  Domain& d = *loc.d;
  LinComb v;
  if (loc.surjective) {
    v = fast(d, loc.k, kind);
  } else {
    const VertexPartition& K = d.lattice[loc.k];
    const int n = static_cast<int>(d.lattice.size());
    switch (kind) {
      case MobiusKind::PHI:
        for (int r = 0; r < n; ++r)
          if (refines(d.lattice[r], K)) v += lb_quotient(d.graph, d.lattice[r], loc.target, loc.num_targets);
        break;
      case MobiusKind::L_SURJ:
        v = lb(eta);
        break;
      case MobiusKind::L_ALG:
        ensure_free(d, guards_);
        for (int r = 0; r < n; ++r)
          if (d.free[r] && refines(d.lattice[r], K))
            v += lb_quotient(d.graph, d.lattice[r], loc.target, loc.num_targets);
        break;
      case MobiusKind::C_SURJ:
      case MobiusKind::R_SURJ:
        throw InputError(std::string(kind_name(kind)) + " requires a surjective morphism");
      case MobiusKind::C_ALG:
      case MobiusKind::R_ALG:
        throw InputError(std::string(kind_name(kind)) + " requires an algebraic morphism");
    }
  }
  memo_.emplace(std::move(key), v);
  return v;
}

LinComb Engine::mobius_by_definition(const Morphism& eta, MobiusKind kind) {
  std::lock_guard lock(mu_);
  if (!is_valid_morphism(eta)) throw InputError("not an immersion of core graphs");
  return definition(eta, kind);
}

LinComb Engine::definition(const Morphism& eta, MobiusKind kind) {
  std::string key = std::string(kind_name(kind)) + ":" + canonical_key(eta);
  auto it = def_memo_.find(key);
  if (it != def_memo_.end()) return it->second;
  const CoreGraph& g = eta.dom;
  const VertexPartition K = kernel_partition(eta);
  const VertexPartition zero = discrete_partition(g.num_vertices());
  std::vector<VertexPartition> below;
  for (auto& p : lattice(g))
    if (refines(p, K)) below.push_back(std::move(p));
  auto alg0 = [&](const VertexPartition& p) { return algebraic(quotient_morphism(g, p)); };
  const bool surj = is_surjective(eta);
  const bool fam_alg = kind == MobiusKind::L_ALG || kind == MobiusKind::C_ALG || kind == MobiusKind::R_ALG;
  if ((kind == MobiusKind::C_SURJ || kind == MobiusKind::R_SURJ) && !surj)
    throw InputError(std::string(kind_name(kind)) + " requires a surjective morphism");
  if ((kind == MobiusKind::C_ALG || kind == MobiusKind::R_ALG) && !algebraic(eta))
    throw InputError(std::string(kind_name(kind)) + " requires an algebraic morphism");

  LinComb phi;
  for (const auto& p : below) phi += lb_quotient(g, p, eta.vmap, eta.cod.num_vertices());
  LinComb v = phi;
  switch (kind) {
    case MobiusKind::PHI:
      break;
    case MobiusKind::L_SURJ:
    case MobiusKind::L_ALG:
      for (const auto& p : below) {
        if (p == zero || (fam_alg && !alg0(p))) continue;
        v -= definition(quotient_to(eta, p), kind);
      }
      break;
    case MobiusKind::R_SURJ:
    case MobiusKind::R_ALG:
      for (const auto& p : below) {
        if (p == K || (fam_alg && !alg0(p))) continue;
        v -= definition(quotient_morphism(g, p), kind);
      }
      break;
    case MobiusKind::C_SURJ:
    case MobiusKind::C_ALG:
      for (const auto& p : below) {
        if (fam_alg && !alg0(p)) continue;
        for (const auto& q : below) {
          if (!refines(p, q) || (p == zero && q == K)) continue;
          Morphism mid = between_quotients(g, p, q);
          if (fam_alg && !algebraic(mid)) continue;
          v -= definition(mid, kind);
        }
      }
      break;
  }
  def_memo_.emplace(std::move(key), v);
  return v;
}

LinComb Engine::product_fix_minus_one(const std::vector<Word>& words) {
  std::lock_guard lock(mu_);
  for (const auto& w : words)
    if (w.letters.empty()) throw DomainError("product_fix_minus_one: trivial word");
  GammaWords gw = gamma_words(words);
  auto d = domain_of(gw.graph, nullptr);
  ensure_alg(*d, guards_);
  LinComb total;
  const int n = static_cast<int>(d->lattice.size());
  for (int q = 0; q < n; ++q) {
    if (!d->alg[q] || !is_proper_algebraic(quotient_morphism(d->graph, d->lattice[q]), guards_)) continue;
    for (int p = 0; p < n; ++p) {
      if (!d->alg[p] || !refines(d->lattice[p], d->lattice[q])) continue;
      Morphism mid = between_quotients(d->graph, d->lattice[p], d->lattice[q]);
      if (!algebraic(mid)) continue;
      total += mobius(mid, MobiusKind::C_ALG);
    }
  }
  return total;
}

namespace {

std::string to_hex(const std::string& s) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : s) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::string from_hex(const std::string& h) {
  auto val = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw InputError("bad hex digit");
  };
  if (h.size() % 2) throw InputError("bad hex length");
  std::string out;
  for (std::size_t i = 0; i < h.size(); i += 2) out.push_back(static_cast<char>(val(h[i]) * 16 + val(h[i + 1])));
  return out;
}

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

nlohmann::json lincomb_to_json(const LinComb& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [sig, c] : v.terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (const auto& [k, e] : sig.exps) exps.push_back({k, e});
    arr.push_back({sig.min_n, exps, c.get_str()});
  }
  return arr;
}

LinComb lincomb_from_json(const nlohmann::json& arr) {
  LinComb v;
  for (const auto& t : arr) {
    FallingSig sig;
    sig.min_n = t.at(0).get<long>();
    for (const auto& e : t.at(1)) sig.exps.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    mpq_class c(t.at(2).get<std::string>());
    c.canonicalize();
    v += LinComb::term(std::move(sig), c);
  }
  return v;
}

}  // namespace

std::size_t Engine::load_cache(const std::string& path) {
  std::lock_guard lock(mu_);
  std::ifstream in(path);
  if (!in) return 0;
  try {
    nlohmann::json doc = nlohmann::json::parse(in);
    if (doc.at("schema") != "v1") return 0;
    const nlohmann::json& entries = doc.at("entries");
    if (fnv1a(entries.dump()) != doc.at("checksum").get<std::string>()) return 0;
    std::map<std::string, LinComb> loaded;
    for (auto it = entries.begin(); it != entries.end(); ++it) {
      const std::string& k = it.key();
      auto colon = k.find(':');
      if (colon == std::string::npos) return 0;
      loaded.emplace(k.substr(0, colon + 1) + from_hex(k.substr(colon + 1)), lincomb_from_json(it.value()));
    }
    for (auto& [k, v] : loaded) memo_.emplace(k, std::move(v));
    return loaded.size();
  } catch (const std::exception&) {
    return 0;
  }
}

void Engine::save_cache(const std::string& path) const {
  std::lock_guard lock(mu_);
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [k, v] : memo_) {
    auto colon = k.find(':');
    entries[k.substr(0, colon + 1) + to_hex(k.substr(colon + 1))] = lincomb_to_json(v);
  }
  nlohmann::json doc = {{"schema", "v1"}, {"checksum", fnv1a(entries.dump())}, {"entries", entries}};
  std::ofstream out(path);
  if (!out) throw InputError("cannot write cache file " + path);
  out << doc.dump() << "\n";
}

std::size_t Engine::cache_size() const {
  std::lock_guard lock(mu_);
  return memo_.size();
}

}  // namespace wm
