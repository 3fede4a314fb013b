#pragma once

#include <string>
#include <vector>

#include "wm/words.hpp"

namespace wm {

// Folded graph labeled over the bouquet of the given rank. Labels are
// 0-based basis indices; each geometric edge is stored once, in its
// positive orientation, and is identified by (source, label).
class CoreGraph {
 public:
  struct Edge {
    int src;
    int label;
    int dst;
    bool operator==(const Edge&) const = default;
  };

  CoreGraph() = default;
  CoreGraph(int rank, int num_vertices);

  int rank() const { return rank_; }
  int num_vertices() const { return nv_; }
  int num_edges() const { return ne_; }
  long euler_characteristic() const { return static_cast<long>(nv_) - ne_; }

  int out(int v, int label) const { return out_[static_cast<std::size_t>(v) * rank_ + label]; }
  int in(int v, int label) const { return in_[static_cast<std::size_t>(v) * rank_ + label]; }
  // Follow a signed letter; -1 if the edge is missing.
  int step(int v, Letter x) const { return x > 0 ? out(v, x - 1) : in(v, -x - 1); }

  int add_vertex();
  // Throws InvariantError if the edge would break foldedness.
  void add_edge(int src, int label, int dst);

  int degree(int v) const;
  bool is_core() const;
  std::vector<Edge> edges() const;

  // Component id per vertex, numbered by smallest vertex.
  std::vector<int> component_ids(int* count = nullptr) const;
  std::vector<std::vector<int>> components() const;
  // Vertices induce a cycle graph (every vertex of degree 2, connected).
  bool component_is_cycle(const std::vector<int>& comp) const;
  CoreGraph induced(const std::vector<int>& vertices, std::vector<int>* old_to_new = nullptr) const;

  bool operator==(const CoreGraph&) const = default;

 private:
  int rank_ = 1;
  int nv_ = 0;
  int ne_ = 0;
  std::vector<int> out_;
  std::vector<int> in_;
};

CoreGraph disjoint_union(const CoreGraph& a, const CoreGraph& b);
CoreGraph bouquet(int rank);

// Label-preserving map between folded graphs, determined by its vertex map.
struct Morphism {
  CoreGraph dom;
  CoreGraph cod;
  std::vector<int> vmap;
};

bool is_valid_morphism(const Morphism& m);
Morphism identity_morphism(const CoreGraph& g);
Morphism compose(const Morphism& second, const Morphism& first);
Morphism to_bouquet(const CoreGraph& g);
Morphism disjoint_union(const Morphism& a, const Morphism& b);
bool is_surjective(const Morphism& m);
bool is_isomorphism(const Morphism& m);
// Restriction to the preimage of the codomain vertex set `cod_vertices`
// (a union of codomain components).
Morphism restrict_to_codomain(const Morphism& m, const std::vector<int>& cod_vertices);
// Vertex kernel as a restricted-growth string.
std::vector<int> kernel_partition(const Morphism& m);

struct RawGraph {
  int rank = 1;
  int num_vertices = 0;
  std::vector<CoreGraph::Edge> edges;
};

struct FoldResult {
  CoreGraph graph;
  std::vector<int> vmap;  // raw vertex -> folded vertex
};
FoldResult fold(const RawGraph& raw);

// Repeatedly deletes vertices of degree <= 1. old_to_new gets -1 for removed.
CoreGraph prune_to_core(const CoreGraph& g, std::vector<int>* old_to_new = nullptr);

struct StallingsGraph {
  CoreGraph graph;
  Morphism eta;
};
StallingsGraph stallings_graph(const std::vector<Word>& generators);

struct CycleInfo {
  int start = 0;               // vertex where the reading starts
  std::vector<Letter> letters;  // cyclic word read along the cycle
  int part = 1;                // length factor over the base cycle
};

struct CoveringData {
  Morphism rho;
  int degree = 0;
  std::vector<std::vector<int>> vertex_fibers;  // indexed by base vertex
};

struct GammaPower {
  CoreGraph graph;
  Morphism eta;  // to the bouquet
  CoveringData cover;
  std::vector<CycleInfo> cycles;
  std::vector<int> component_of_cycle;
};
// One cycle of length shape[i]*|cyc(w)| per part. Empty graph for w = 1 or
// empty shape.
GammaPower gamma_power(const Word& w, const std::vector<int>& shape);

struct GammaWords {
  CoreGraph graph;
  Morphism eta;
  std::vector<CycleInfo> cycles;
};
GammaWords gamma_words(const std::vector<Word>& words);

bool is_efficient(const Morphism& eta1, const CoveringData& cover);
bool is_efficient_partition(const std::vector<int>& partition, const CoveringData& cover);

std::string canonical_key(const CoreGraph& g);
std::string canonical_key(const Morphism& m);

struct CanonicalForm {
  CoreGraph graph;
  std::vector<int> perm;  // old vertex -> new vertex
};
CanonicalForm canonical_form(const CoreGraph& g);

// Adjacency dump, one block per component in canonical order.
std::string dump(const CoreGraph& g);

}  // namespace wm
