#pragma once

#include <json.hpp>

#include "wm/graph.hpp"
#include "wm/ratfun.hpp"
#include "wm/stable.hpp"
#include "wm/verify.hpp"

namespace wm {

// {"num": [...], "den": [...], "valid_from": N0, "text": ...}; integer
// coefficients as decimal strings, little-endian.
nlohmann::json ratfun_json(const RatFun& f);
nlohmann::json graph_json(const CoreGraph& g);
nlohmann::json morphism_json(const Morphism& m);
nlohmann::json beta_json(const Beta& b);
nlohmann::json stable_json(const StableCoefficient& c);
nlohmann::json spi_json(const SpiSearchResult& r);
nlohmann::json verify_json(const std::vector<CriterionResult>& results, bool timings);

}  // namespace wm
