#pragma once

#include <vector>

#include "wm/config.hpp"
#include "wm/enumerate.hpp"
#include "wm/graph.hpp"
#include "wm/whitehead.hpp"

namespace wm {

// Generators of the images of the domain components of m inside pi_1 of the
// connected codomain, written in the basis given by a spanning tree of the
// codomain. One inner list per domain component.
struct ImageSystem {
  int rank = 0;
  std::vector<std::vector<std::vector<int>>> generators;
};
ImageSystem image_system(const Morphism& m);

// Decides whether pi_1(delta) has a nontrivial free splitting with each
// image conjugate into a factor. delta must be connected.
SplittingCertificate relative_free_splitting(const CoreGraph& delta, const std::vector<Morphism>& images,
                                             const Guards& guards = {});

bool is_algebraic(const Morphism& eta, const Guards& guards = {});
bool is_proper_algebraic(const Morphism& eta, const Guards& guards = {});

struct AlgFreeDecomposition {
  Morphism eta_alg;
  CoreGraph middle;
  Morphism eta_free;
  VertexPartition kernel;  // of eta_alg
};
AlgFreeDecomposition algebraic_free_decomposition(const Morphism& eta, const Guards& guards = {});
bool is_free_morphism(const Morphism& eta, const Guards& guards = {});

struct ExtensionRecord {
  Morphism morphism;
  long chi = 0;
  bool proper = false;
  bool algebraic = false;
};
// Algebraic quotients of Gamma_{words}, in lattice order.
std::vector<ExtensionRecord> algebraic_extensions(const std::vector<Word>& words, const Guards& guards = {});

struct ChiAlg {
  bool minus_infinity = true;
  long value = 0;
  std::vector<ExtensionRecord> crit;
};
ChiAlg chi_alg(const std::vector<Word>& words, const Guards& guards = {});

struct PrimitivityRank {
  bool infinite = true;
  long pi = 0;
  long c_w = 0;
};
PrimitivityRank primitivity_rank(const Word& w, const Guards& guards = {});

}  // namespace wm
