#pragma once

#include <functional>
#include <vector>

#include "wm/config.hpp"
#include "wm/graph.hpp"

namespace wm {

// Vertex partition as a restricted-growth string.
using VertexPartition = std::vector<int>;

VertexPartition normalize_partition(const std::vector<int>& labels);
VertexPartition discrete_partition(int n);
int num_blocks(const VertexPartition& p);
bool refines(const VertexPartition& finer, const VertexPartition& coarser);

// Smallest congruence (partition whose quotient is folded) containing p,
// optionally with u and v merged first.
VertexPartition congruence_closure(const CoreGraph& g, const VertexPartition& p, int u = -1, int v = -1);

CoreGraph quotient_graph(const CoreGraph& g, const VertexPartition& p);
Morphism quotient_morphism(const CoreGraph& g, const VertexPartition& p);
// g/p -> g/q for p refining q.
Morphism between_quotients(const CoreGraph& g, const VertexPartition& p, const VertexPartition& q);

// Every congruence of g in lexicographic order. If `keep` is given, only the
// down-closed family of congruences satisfying it is explored (it must be
// closed under refinement, e.g. efficiency). The vertex limit applies only to
// the unrestricted enumeration; restricted ones are bounded by the lattice
// limit.
std::vector<VertexPartition> congruences(const CoreGraph& g, const Guards& guards = {},
                                         const std::function<bool(const VertexPartition&)>& keep = {});

// Surjective immersions out of g, one per equivalence class.
std::vector<Morphism> quotients(const CoreGraph& g, const Guards& guards = {});

}  // namespace wm
