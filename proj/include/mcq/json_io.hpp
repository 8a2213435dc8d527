#pragma once

#include <string>

#include "mcq/blackwell.hpp"
#include "mcq/dist.hpp"
#include "mcq/veegan.hpp"

#include <nlohmann/json.hpp>

namespace mcq {

// Wire formats:
//   discrete:  {"atoms":[{"label":"...","prob":0.2},...]}
//   piecewise: {"segments":[{"lo":0.0,"hi":0.5,"mass":0.3},...]}
//   matrix:    {"rows":[[...],[...]]} or a bare array of rows
//   veegan:    {"p0":discrete,"p_x":discrete,"gen_cond":matrix,
//               "rec_cond":matrix,"z_embeddings":[[...],...]} (optional)

nlohmann::json to_json(const DiscreteDist& d);
nlohmann::json to_json(const PiecewiseUniformDist& d);
nlohmann::json to_json(const MarkovMatrix& m);

DiscreteDist discrete_from_json(const nlohmann::json& doc);
PiecewiseUniformDist piecewise_from_json(const nlohmann::json& doc);
MarkovMatrix markov_from_json(const nlohmann::json& doc);
FiniteVeeganConfig veegan_from_json(const nlohmann::json& doc);

// Load a distribution file and discretize if it is piecewise. When two
// piecewise inputs must share a label set, use load_distribution_pair.
nlohmann::json load_json(const std::string& path);
std::pair<DiscreteDist, DiscreteDist> load_distribution_pair(
    const std::string& path_p, const std::string& path_q);

}  // namespace mcq
