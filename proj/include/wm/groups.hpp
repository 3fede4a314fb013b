#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wm/characters.hpp"
#include "wm/config.hpp"
#include "wm/graph.hpp"
#include "wm/ratfun.hpp"

namespace wm {

// Finite group with an integer character table. Only S_m, m <= 5, is built.
struct FiniteGroupTable {
  std::string name;
  int order = 0;
  int identity = 0;
  std::vector<std::vector<int>> mul;  // mul[a][b] = ab
  std::vector<int> inv;
  std::vector<int> class_of;
  std::vector<Partition> class_types;  // cycle type per class
  std::vector<long> class_sizes;
  std::vector<std::vector<long>> chi;  // chi[irr][class]
  std::vector<Partition> irr_partitions;
  int trivial = 0;                     // index of the trivial character

  int num_classes() const { return static_cast<int>(class_sizes.size()); }
  int num_irr() const { return static_cast<int>(chi.size()); }
  long dim(int irr) const { return chi[irr][class_of[identity]]; }
  std::string irr_label(int irr) const;
  // "triv", "sign", "std" or an explicit partition such as "[2,1]".
  int irr_index(const std::string& label) const;
  // Element as the images of 0..m-1.
  std::vector<int> element_perm(int g) const;
};

FiniteGroupTable symmetric_group(int m);
FiniteGroupTable trivial_group();

// Cyclic group C_m (m >= 2) or the circle (m = 0) with character z -> z^j.
struct CmSpec {
  int m = 2;
  int j = 1;
};

// "S1".."S5"; "C2" is read as S2. Other "Cm" are rejected here.
FiniteGroupTable parse_group(const std::string& spec);
// "C0", "C3", ... with optional ":j" (default 1).
CmSpec parse_cm(const std::string& spec);

// Finitely supported map from irreducibles of G to nonempty partitions,
// sorted by irreducible index.
struct PartitionMap {
  std::vector<std::pair<int, Partition>> parts;

  int size() const;
  Partition at(int irr) const;  // empty if unsupported
};

// "label:p1,p2;label:p1".
PartitionMap parse_partition_map(const FiniteGroupTable& g, const std::string& text);
std::string partition_map_string(const FiniteGroupTable& g, const PartitionMap& arrm);

// ->mu[N]: the trivial label gets mu(triv)[N - |->mu| + |mu(triv)|].
PartitionMap stable_map(const FiniteGroupTable& g, const PartitionMap& arrm, long n);
long stable_map_threshold(const FiniteGroupTable& g, const PartitionMap& arrm);

// Cycle of an element of G wr S_n: its length and the class of its cycle
// product.
struct CycleClass {
  int length;
  int cls;
};
// chi^{->mu} at an element given by its cycles; |->mu| must equal the total
// length.
long wreath_value(const FiniteGroupTable& g, const PartitionMap& arrm, const std::vector<CycleClass>& cycles);
// Element (v, sigma) with (v,s)(u,t) = ((v_i u_{s^-1(i)}), st).
long wreath_character_eval(const FiniteGroupTable& g, const PartitionMap& arrm, const std::vector<int>& v,
                           const std::vector<int>& sigma);
std::vector<CycleClass> wreath_cycles(const FiniteGroupTable& g, const std::vector<int>& v,
                                      const std::vector<int>& sigma);
// dim chi^{->mu[N]} as a polynomial in N.
Poly wreath_dim_poly(const FiniteGroupTable& g, const PartitionMap& arrm);

// Images in Sigma of the cycles of a union-of-cycles domain.
struct CycleDiagram {
  CoreGraph sigma;
  std::vector<int> starts;
  std::vector<std::vector<Letter>> paths;
  std::vector<int> lengths;  // cycle length of the permutation
};
// b: Gamma_{w^nu} -> Sigma given by its vertex map.
CycleDiagram cycle_diagram(const GammaPower& gp, const Morphism& b);

// E over Haar-random G-labelings of Sigma of chi^{->mu} at the induced
// element of G wr S_d.
mpq_class e_eta_wreath(const FiniteGroupTable& g, const CycleDiagram& diag, const PartitionMap& arrm,
                       const Guards& guards = {});
// E_b[phi]: expectation of prod over cycles of phi at the cycle products.
mpq_class e_b_irreducible(const FiniteGroupTable& g, const CycleDiagram& diag, int irr, const Guards& guards = {});

// Signed number of traversals of each geometric edge of Sigma, in the order
// of Sigma.edges().
std::vector<long> winding_vector(const CycleDiagram& diag);
// 1 if m | j n_b(e) for every edge (n_b(e) = 0 when m = 0), else 0.
mpq_class e_b_cm_winding(const CmSpec& cm, const CycleDiagram& diag);
// Same value by enumerating C_m labelings (m >= 2) and reducing the sum of
// roots of unity modulo the m-th cyclotomic polynomial.
mpq_class e_b_cm_enumerate(const CmSpec& cm, const CycleDiagram& diag, const Guards& guards = {});

}  // namespace wm
