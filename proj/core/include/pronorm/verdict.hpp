#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pronorm/bigint.hpp"
#include "pronorm/perm.hpp"

namespace pronorm {

enum class PronormalStatus { pronormal, not_pronormal };
enum class DecisionMethod { definition, normsyl, abelian_criterion, reduction };

const char* to_string(PronormalStatus s);
const char* to_string(DecisionMethod m);

struct WitnessPair {
  Perm g;
  Perm conjugator;  // element of <H, H^g> with H^conjugator = H^g
};

// Exhausted-search certificate attached to negative verdicts: all
// conjugates of H inside the join were enumerated and H^g was not among
// them.
struct ExhaustCert {
  Integer join_order;
  std::size_t conjugates_enumerated = 0;
};

struct PronormalityVerdict {
  PronormalStatus status = PronormalStatus::pronormal;
  DecisionMethod method = DecisionMethod::definition;
  // Pronormal: one (g, conjugator) pair per tested witness.
  std::vector<WitnessPair> witnesses;
  // Not pronormal: the first failing g in the deterministic enumeration
  // order, with its certificate.
  std::optional<Perm> failing_g;
  std::optional<ExhaustCert> certificate;
  // Description of the reduced witness set that was tested.
  std::string tested_set;

  bool pronormal() const { return status == PronormalStatus::pronormal; }

  nlohmann::json to_json() const;
};

nlohmann::json perm_to_json(const Perm& p);
Perm perm_from_json(const nlohmann::json& j);

}  // namespace pronorm
