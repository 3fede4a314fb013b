#include "wm/report.hpp"

namespace wm {

using nlohmann::json;

json ratfun_json(const RatFun& f) {
  auto [num, den] = f.integer_form();
  json j;
  j["num"] = json::array();
  for (const auto& c : num) j["num"].push_back(c.get_str());
  j["den"] = json::array();
  for (const auto& c : den) j["den"].push_back(c.get_str());
  j["valid_from"] = f.valid_from();
  j["text"] = f.to_string();
  return j;
}

json graph_json(const CoreGraph& g) {
  json j;
  j["rank"] = g.rank();
  j["vertices"] = g.num_vertices();
  j["edges"] = json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({e.src, std::string(1, letter_char(e.label + 1)), e.dst});
  j["components"] = g.components().size();
  j["euler_characteristic"] = g.euler_characteristic();
  return j;
}

json morphism_json(const Morphism& m) {
  json j;
  j["domain"] = graph_json(m.dom);
  j["codomain"] = graph_json(m.cod);
  j["vertex_map"] = m.vmap;
  return j;
}

json beta_json(const Beta& b) {
  if (b.infinite) return "inf";
  return b.value.get_str();
}

json stable_json(const StableCoefficient& c) {
  json j;
  j["word"] = to_string(c.word);
  j["character"] = c.character_label;
  j["ratfun"] = ratfun_json(c.ratfun);
  j["threshold"] = c.threshold;
  j["variant"] = variant_name(c.variant);
  j["beta"] = beta_json(beta(c));
  return j;
}

json spi_json(const SpiSearchResult& r) {
  json j;
  j["per_degree_minima"] = json::object();
  for (const auto& [d, m] : r.per_degree_minima) j["per_degree_minima"][std::to_string(d)] = m ? json(m->get_str()) : json(nullptr);
  j["overall_upper_bound"] = r.bounded ? json(r.overall_upper_bound.get_str()) : json("inf");
  j["upper_bound_only"] = true;
  j["skipped_cycle_types"] = json::array();
  for (const auto& nu : r.skipped) j["skipped_cycle_types"].push_back(nu);
  j["witnesses"] = json::array();
  for (const auto& w : r.witnesses) {
    json x;
    x["degree"] = w.degree;
    x["sigma_type"] = w.sigma_type;
    x["chi"] = w.chi;
    x["value"] = w.value.get_str();
    x["Sigma"] = graph_json(w.sigma);
    x["b_vertex_map"] = w.b.vmap;
    x["winding"] = w.winding;
    if (w.e_b) x["E_b"] = w.e_b->get_str();
    j["witnesses"].push_back(std::move(x));
  }
  return j;
}

json verify_json(const std::vector<CriterionResult>& results, bool timings) {
  json j;
  bool all = true;
  j["criteria"] = json::array();
  for (const auto& r : results) {
    json x;
    x["id"] = r.id;
    x["title"] = r.title;
    x["passed"] = r.passed;
    x["checks"] = r.checks;
    x["detail"] = r.detail;
    if (!r.reproduce.empty()) x["reproduce"] = r.reproduce;
    if (timings) {
      x["seconds"] = r.seconds;
      x["limit_seconds"] = r.limit_seconds;
    }
    all = all && r.passed;
    j["criteria"].push_back(std::move(x));
  }
  j["passed"] = all;
  return j;
}

}  // namespace wm
