#include "wm/stable.hpp"

#include <functional>

#include "wm/algebraic.hpp"
#include "wm/error.hpp"

namespace wm {

const char* variant_name(Variant v) {
  return v == Variant::NON_POWER_NO_CYCLES ? "non_power_no_cycles" : "proper_power_proper_algebraic";
}

mpq_class StableCoefficient::eval(long n) const {
  if (n < threshold) throw DomainError("stable coefficient undefined below N=" + std::to_string(threshold));
  return exact.eval(n);
}

namespace {

void require_nontrivial(const Word& w) {
  if (reduce(w).letters.empty()) throw DomainError("the word must be nontrivial");
}

bool has_cycle_component(const CoreGraph& g) {
  for (const auto& comp : g.components())
    if (g.component_is_cycle(comp)) return true;
  return false;
}

// gamma -> gamma/P/Q is not bijective on the vertices over any component.
bool composite_proper(const CoreGraph& gamma, const VertexPartition& p, const CoreGraph& top,
                      const VertexPartition& q) {
  std::vector<int> pre(top.num_vertices(), 0);
  for (int u = 0; u < gamma.num_vertices(); ++u) pre[q[p[u]]]++;
  for (const auto& comp : top.components()) {
    long over = 0;
    for (int v : comp) over += pre[v];
    if (over == static_cast<long>(comp.size())) return false;
  }
  return true;
}

using Weight = std::function<mpq_class(const VertexPartition& p, const Morphism& b)>;

// Sum over efficient algebraic P of gamma and algebraic Q of gamma/P meeting
// the variant condition of weight(P) C^alg(gamma/P -> gamma/P/Q).
LinComb efficient_sum(Engine& engine, const GammaPower& gp, Variant variant, const Weight& weight) {
  const CoreGraph& gamma = gp.graph;
  auto eff = congruences(gamma, engine.guards(),
                         [&](const VertexPartition& p) { return is_efficient_partition(p, gp.cover); });
  LinComb total;
  for (const auto& p : eff) {
    Morphism b = quotient_morphism(gamma, p);
    if (!engine.algebraic(b)) continue;
    LinComb inner;
    for (const auto& [q, c] : engine.algebraic_targets(b.cod, MobiusKind::C_ALG)) {
      if (c.is_zero()) continue;
      CoreGraph top = quotient_graph(b.cod, q);
      bool ok = variant == Variant::NON_POWER_NO_CYCLES ? !has_cycle_component(top)
                                                        : composite_proper(gamma, p, top, q);
      if (ok) inner += c;
    }
    if (inner.is_zero()) continue;
    mpq_class wgt = weight(p, b);
    if (wgt != 0) total += inner.scaled(wgt);
  }
  return total;
}

StableCoefficient finish(LinComb exact, long threshold, std::string label, int size, const Word& w, Variant v) {
  StableCoefficient c;
  c.exact = std::move(exact);
  c.ratfun = c.exact.to_ratfun();
  c.ratfun.set_valid_from(std::max(c.ratfun.valid_from(), threshold));
  c.threshold = threshold;
  c.character_label = std::move(label);
  c.label_size = size;
  c.word = w;
  c.variant = v;
  return c;
}

Variant pick_variant(const Word& w, std::optional<Variant> forced) {
  if (forced) return *forced;
  return is_proper_power(w) ? Variant::PROPER_POWER_PROPER_ALGEBRAIC : Variant::NON_POWER_NO_CYCLES;
}

}  // namespace

StableCoefficient stable_coefficient_sn(Engine& engine, const Word& w, const Partition& mu,
                                        std::optional<Variant> variant) {
  require_nontrivial(w);
  if (!is_partition(mu)) throw InputError("malformed partition");
  const Variant v = pick_variant(w, variant);
  const int d = size_of(mu);
  LinComb total;
  if (d == 0) {
    total = LinComb::one();
  } else {
    for (const auto& [nu, count] : class_data(d)) {
      long chi = mn_character(mu, nu);
      if (chi == 0) continue;
      GammaPower gp = gamma_power(w, nu);
      LinComb f = efficient_sum(engine, gp, v, [](const VertexPartition&, const Morphism&) { return mpq_class(1); });
      total += f.scaled(mpq_class(count * chi));
    }
    total = total.scaled(mpq_class(1, factorial(d)));
  }
  return finish(std::move(total), d + first_part(mu), partition_string(mu), d, w, v);
}

StableCoefficient stable_coefficient_wreath(Engine& engine, const FiniteGroupTable& g, const Word& w,
                                            const PartitionMap& arrm, std::optional<Variant> variant) {
  require_nontrivial(w);
  const Variant v = pick_variant(w, variant);
  const int d = arrm.size();
  LinComb total;
  if (d == 0) {
    total = LinComb::one();
  } else {
    for (const auto& [nu, count] : class_data(d)) {
      GammaPower gp = gamma_power(w, nu);
      LinComb f = efficient_sum(engine, gp, v, [&](const VertexPartition&, const Morphism& b) {
        return e_eta_wreath(g, cycle_diagram(gp, b), arrm, engine.guards());
      });
      total += f.scaled(mpq_class(count));
    }
    total = total.scaled(mpq_class(1, factorial(d)));
  }
  return finish(std::move(total), stable_map_threshold(g, arrm), partition_map_string(g, arrm), d, w, v);
}

LinComb induction_coefficient(Engine& engine, const FiniteGroupTable& g, const Word& w, const PartitionMap& chi,
                              InductionRoute route) {
  require_nontrivial(w);
  const int d = chi.size();
  if (d == 0) return LinComb::one();
  LinComb total;
  for (const auto& [nu, count] : class_data(d)) {
    GammaPower gp = gamma_power(w, nu);
    auto eff = congruences(gp.graph, engine.guards(),
                           [&](const VertexPartition& p) { return is_efficient_partition(p, gp.cover); });
    for (const auto& p : eff) {
      Morphism b = quotient_morphism(gp.graph, p);
      LinComb c;
      if (route == InductionRoute::ALGEBRAIC) {
        if (!engine.algebraic(b)) continue;
        c = engine.mobius(to_bouquet(b.cod), MobiusKind::L_ALG);
      } else {
        c = engine.mobius(to_bouquet(b.cod), MobiusKind::L_SURJ);
      }
      if (c.is_zero()) continue;
      mpq_class e = e_eta_wreath(g, cycle_diagram(gp, b), chi, engine.guards());
      if (e != 0) total += c.scaled(e * mpq_class(count));
    }
  }
  return total.scaled(mpq_class(1, factorial(d)));
}

std::string Beta::to_string() const { return infinite ? "inf" : value.get_str(); }

Beta beta(const RatFun& f, int label_size) {
  Beta b;
  if (f.is_zero()) {
    b.infinite = true;
    return b;
  }
  if (label_size <= 0) throw DomainError("beta needs a nonempty character label");
  b.value = make_rational(-f.degree(), label_size);
  return b;
}

Beta beta(const StableCoefficient& c) { return beta(c.ratfun, c.label_size); }

SpiSearchResult spi_search(Engine& engine, const Word& w, int d_max, const SpiConstraint& constraint) {
  require_nontrivial(w);
  if (d_max < 1) throw InputError("spi_search: d_max must be at least 1");
  if (constraint.kind == SpiConstraint::PHI && !constraint.group) throw InputError("spi_search: phi needs a group");
  SpiSearchResult out;
  for (int d = 1; d <= d_max; ++d) {
    std::optional<mpq_class> best;
    DiagramRecord best_rec;
    for (const auto& nu : partitions_of(d)) {
      GammaPower gp = gamma_power(w, nu);
      Guards search = engine.guards();
      search.lattice_limit = std::min(search.lattice_limit, search.search_lattice_limit);
      std::vector<VertexPartition> eff;
      try {
        eff = congruences(gp.graph, search,
                          [&](const VertexPartition& p) { return is_efficient_partition(p, gp.cover); });
      } catch (const ResourceError&) {
        out.skipped.push_back(nu);
        continue;
      }
      for (const auto& p : eff) {
        Morphism b = quotient_morphism(gp.graph, p);
        mpq_class value = make_rational(static_cast<long>(-b.cod.euler_characteristic()), d);
        if (best && value >= *best) continue;
        if (!engine.algebraic(b) || !is_proper_algebraic(b, engine.guards())) continue;
        DiagramRecord rec;
        CycleDiagram diag = cycle_diagram(gp, b);
        rec.winding = winding_vector(diag);
        if (constraint.kind == SpiConstraint::MOD_M) {
          bool ok = true;
          for (long n : rec.winding)
            if (constraint.m == 0 ? n != 0 : n % constraint.m != 0) ok = false;
          if (!ok) continue;
        } else if (constraint.kind == SpiConstraint::PHI) {
          rec.e_b = e_b_irreducible(*constraint.group, diag, constraint.irr, engine.guards());
          if (*rec.e_b == 0) continue;
        }
        rec.degree = d;
        rec.sigma_type = nu;
        rec.sigma = b.cod;
        rec.chi = static_cast<long>(b.cod.euler_characteristic());
        rec.value = value;
        rec.b = std::move(b);
        best = value;
        best_rec = std::move(rec);
      }
    }
    out.per_degree_minima[d] = best;
    if (best) {
      if (!out.bounded || *best < out.overall_upper_bound) out.overall_upper_bound = *best;
      out.bounded = true;
      out.witnesses.push_back(std::move(best_rec));
    }
  }
  return out;
}

}  // namespace wm
