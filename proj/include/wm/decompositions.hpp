#pragma once

#include <vector>

#include "wm/config.hpp"
#include "wm/graph.hpp"

namespace wm {

enum class DecompMode { SURJECTIVE, ALGEBRAIC };

struct DecompPart {
  Morphism morphism;
  bool surjective = false;
  bool algebraic = false;
  bool efficient = false;  // only set when a covering is supplied
};

// eta = parts.back() o ... o parts.front().
struct DecompRecord {
  std::vector<DecompPart> parts;
};

// Decompositions of eta into 2 or 3 parts, all but the last surjective
// (algebraic in ALGEBRAIC mode), one per pair/chain of nested congruences
// below the kernel of eta. Efficiency of the first part is recorded when
// `cover` is given.
std::vector<DecompRecord> decompositions(const Morphism& eta, int arity, DecompMode mode, const Guards& guards = {},
                                         const CoveringData* cover = nullptr);

}  // namespace wm
