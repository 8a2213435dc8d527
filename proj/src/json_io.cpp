#include "mcq/json_io.hpp"

#include <fstream>

namespace mcq {

nlohmann::json to_json(const DiscreteDist& d) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const auto& a : d.atoms()) {
    atoms.push_back({{"label", a.label}, {"prob", a.prob}});
  }
  return {{"atoms", std::move(atoms)}};
}

nlohmann::json to_json(const PiecewiseUniformDist& d) {
  nlohmann::json segments = nlohmann::json::array();
  for (const auto& s : d.segments()) {
    segments.push_back({{"lo", s.lo}, {"hi", s.hi}, {"mass", s.mass}});
  }
  return {{"segments", std::move(segments)}};
}

nlohmann::json to_json(const MarkovMatrix& m) {
  return {{"rows", m.rows()}};
}

DiscreteDist discrete_from_json(const nlohmann::json& doc) {
  if (doc.is_array()) {
    // bare probability vector, labels assigned positionally
    return DiscreteDist::from_probs(doc.get<std::vector<double>>());
  }
  if (!doc.contains("atoms") || !doc["atoms"].is_array()) {
    throw validation_error("expected {\"atoms\":[...]}");
  }
  std::vector<Atom> atoms;
  for (const auto& item : doc["atoms"]) {
    atoms.push_back({item.at("label").get<std::string>(),
                     item.at("prob").get<double>()});
  }
  return DiscreteDist(std::move(atoms));
}

PiecewiseUniformDist piecewise_from_json(const nlohmann::json& doc) {
  if (!doc.contains("segments") || !doc["segments"].is_array()) {
    throw validation_error("expected {\"segments\":[...]}");
  }
  std::vector<Segment> segments;
  for (const auto& item : doc["segments"]) {
    segments.push_back({item.at("lo").get<double>(),
                        item.at("hi").get<double>(),
                        item.at("mass").get<double>()});
  }
  return PiecewiseUniformDist(std::move(segments));
}

MarkovMatrix markov_from_json(const nlohmann::json& doc) {
  const nlohmann::json& rows = doc.is_array() ? doc : doc.at("rows");
  return MarkovMatrix(rows.get<Matrix>());
}

FiniteVeeganConfig veegan_from_json(const nlohmann::json& doc) {
  std::vector<std::vector<double>> embeddings;
  if (doc.contains("z_embeddings")) {
    embeddings = doc["z_embeddings"].get<std::vector<std::vector<double>>>();
  }
  return FiniteVeeganConfig(discrete_from_json(doc.at("p0")),
                            discrete_from_json(doc.at("p_x")),
                            markov_from_json(doc.at("gen_cond")),
                            markov_from_json(doc.at("rec_cond")),
                            std::move(embeddings));
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw validation_error("cannot open '" + path + "'");
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(path + ": " + e.what());
  }
  return doc;
}

std::pair<DiscreteDist, DiscreteDist> load_distribution_pair(
    const std::string& path_p, const std::string& path_q) {
  const nlohmann::json doc_p = load_json(path_p);
  const nlohmann::json doc_q = load_json(path_q);
  const bool p_pw = doc_p.contains("segments");
  const bool q_pw = doc_q.contains("segments");
  if (p_pw && q_pw) {
    return common_refinement(piecewise_from_json(doc_p),
                             piecewise_from_json(doc_q));
  }
  if (p_pw != q_pw) {
    throw validation_error(
        "cannot mix a piecewise and a discrete distribution in one pair");
  }
  return {discrete_from_json(doc_p), discrete_from_json(doc_q)};
}

}  // namespace mcq
