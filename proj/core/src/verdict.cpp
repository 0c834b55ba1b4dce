#include "pronorm/verdict.hpp"

#include "pronorm/errors.hpp"

namespace pronorm {

const char* to_string(PronormalStatus s) {
  return s == PronormalStatus::pronormal ? "pronormal" : "not_pronormal";
}

const char* to_string(DecisionMethod m) {
  switch (m) {
    case DecisionMethod::definition: return "definition";
    case DecisionMethod::normsyl: return "normsyl";
    case DecisionMethod::abelian_criterion: return "abelian_criterion";
    case DecisionMethod::reduction: return "reduction";
  }
  return "?";
}

nlohmann::json perm_to_json(const Perm& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (Point x : p.images()) arr.push_back(x);
  return arr;
}

Perm perm_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("permutation must be an image array");
  std::vector<Point> img;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw ParseError("permutation images must be non-negative");
    img.push_back(v.get<Point>());
  }
  try {
    return Perm(std::move(img));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("bad permutation: ") + e.what());
  }
}

nlohmann::json PronormalityVerdict::to_json() const {
  nlohmann::json j;
  j["status"] = to_string(status);
  j["method"] = to_string(method);
  j["tested_set"] = tested_set;
  if (failing_g) j["failing_g"] = perm_to_json(*failing_g);
  if (certificate) {
    j["join_order"] = certificate->join_order.str();
    j["conjugates_enumerated"] = certificate->conjugates_enumerated;
  }
  if (status == PronormalStatus::pronormal && !witnesses.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& w : witnesses)
      arr.push_back({{"g", perm_to_json(w.g)}, {"c", perm_to_json(w.conjugator)}});
    j["conjugators"] = arr;
  }
  return j;
}

}  // namespace pronorm
