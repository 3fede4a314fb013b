#include "wm/decompositions.hpp"

#include "wm/algebraic.hpp"
#include "wm/enumerate.hpp"
#include "wm/error.hpp"

namespace wm {

namespace {

Morphism quotient_to_target(const Morphism& eta, const VertexPartition& q) {
  Morphism m{quotient_graph(eta.dom, q), eta.cod, std::vector<int>(num_blocks(q), -1)};
  for (int u = 0; u < eta.dom.num_vertices(); ++u) m.vmap[q[u]] = eta.vmap[u];
  return m;
}

DecompPart part(Morphism m, const Guards& guards) {
  DecompPart p;
  p.surjective = is_surjective(m);
  p.algebraic = is_algebraic(m, guards);
  p.morphism = std::move(m);
  return p;
}

}  // namespace

std::vector<DecompRecord> decompositions(const Morphism& eta, int arity, DecompMode mode, const Guards& guards,
                                         const CoveringData* cover) {
  if (!is_valid_morphism(eta)) throw InputError("decompositions: not an immersion of core graphs");
  if (arity != 2 && arity != 3) throw InputError("decompositions: arity must be 2 or 3");
  const VertexPartition k = kernel_partition(eta);
  auto below = congruences(eta.dom, guards, [&](const VertexPartition& p) { return refines(p, k); });
  const bool alg = mode == DecompMode::ALGEBRAIC;
  std::vector<char> first_ok(below.size());
  for (std::size_t i = 0; i < below.size(); ++i)
    first_ok[i] = !alg || is_algebraic(quotient_morphism(eta.dom, below[i]), guards);
  std::vector<DecompRecord> out;
  for (std::size_t i = 0; i < below.size(); ++i) {
    if (!first_ok[i]) continue;
    DecompPart first = part(quotient_morphism(eta.dom, below[i]), guards);
    if (cover) first.efficient = is_efficient_partition(below[i], *cover);
    if (arity == 2) {
      out.push_back({{first, part(quotient_to_target(eta, below[i]), guards)}});
      continue;
    }
    for (std::size_t j = 0; j < below.size(); ++j) {
      if (!refines(below[i], below[j])) continue;
      DecompPart middle = part(between_quotients(eta.dom, below[i], below[j]), guards);
      if (alg && !middle.algebraic) continue;
      out.push_back({{first, middle, part(quotient_to_target(eta, below[j]), guards)}});
    }
  }
  return out;
}

}  // namespace wm
