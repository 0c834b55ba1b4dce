#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pronorm/bigint.hpp"

namespace pronorm {

// 2-adic dominance: every binary digit of m is at most the corresponding
// digit of n; prec additionally requires m != n.
inline bool preceq(std::uint64_t m, std::uint64_t n) { return (m & n) == m; }
inline bool prec(std::uint64_t m, std::uint64_t n) { return m != n && preceq(m, n); }

inline std::uint64_t odd_part_u64(std::uint64_t n) {
  while (n && (n & 1) == 0) n >>= 1;
  return n;
}

struct PrimePower {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t q = 0;
};

// Factors q as p^k for a single prime p, or nullopt.
std::optional<PrimePower> factor_prime_power(std::uint64_t q);

// Identifier of a non-abelian simple group from one of the implemented
// families. Parameter domains are validated per family; the small
// non-simple degenerations (PSL2(2), PSL2(3), PSU3(2), PSp4(2)) are
// rejected.
struct SimpleGroupId {
  enum class Family { Alt, PSL2, PSLeps, PSp, E6eps, LieChar2, Sporadic, Ree };

  Family family = Family::Alt;
  std::uint64_t n = 0;   // Alt degree / PSLeps dimension / PSp half-rank
  std::uint64_t q = 0;   // field size (prime power, factorization carried)
  int eps = +1;          // +1 or -1 for the eps-families
  std::string sporadic;  // sporadic name

  static SimpleGroupId alt(std::uint64_t n);
  static SimpleGroupId psl2(std::uint64_t q);
  static SimpleGroupId psl_eps(std::uint64_t n, std::uint64_t q, int eps);
  static SimpleGroupId psp(std::uint64_t n, std::uint64_t q);
  static SimpleGroupId e6(std::uint64_t q, int eps);
  static SimpleGroupId lie_char2();
  static SimpleGroupId sporadic_group(std::string name);
  static SimpleGroupId ree(std::uint64_t q);

  void validate() const;
  PrimePower field() const;  // validated prime-power factorization of q

  nlohmann::json to_json() const;
  static SimpleGroupId from_json(const nlohmann::json& j);
  static SimpleGroupId parse(const std::string& text);
};

enum class SymplecticRankForm { power_of_two, fermat_times_power, neither };
const char* to_string(SymplecticRankForm f);

// Classification of n as 2^w, as 2^w (2^{2k} + 1) with k >= 1 (k = 0
// collapses into the power-of-two class), or neither.
SymplecticRankForm sympl_form_check(std::uint64_t n);

struct DigitRecipe {
  // The chosen m: two 1-digits of opposite parity positions when they
  // exist, else three same-parity 1-digits. Guarantees prec(m, n) and
  // 3 | m whenever a proper selection exists.
  std::optional<std::uint64_t> m;
  // Set when every qualifying selection equals n itself (no proper choice).
  bool flagged = false;
  std::vector<unsigned> positions;
};

// Precondition: sympl_form_check(n) == neither.
DigitRecipe simpl_nonpron_digits(std::uint64_t n);

// For every positive m with m prec n_i (strict) or m preceq n_i
// (non-strict) for some i: gcd(a_order, m) is a power of 2.
bool awrsn_condition(std::uint64_t a_order, const std::vector<std::uint64_t>& n_list,
                     bool strict);

struct NormalizerPrediction {
  Integer index;          // predicted |N_G(S) : S|
  std::string structure;  // human tag: "self-normalized", "Alt(4)", ...
};

// Arithmetic prediction of the Sylow 2-normalizer index in the given
// simple group; 1 (self-normalized) when no exceptional case applies.
NormalizerPrediction sylow2_normalizer_prediction(const SimpleGroupId& id);

enum class ClassificationStatus {
  all_pronormal,
  has_nonpronormal,
  conjectured_all,
  conjectured_nonpronormal,
  open,
};
const char* to_string(ClassificationStatus s);

// Stable citation tags naming the classification result that decides each
// case.
inline constexpr const char* kTagBaseFamilies = "base_families";
inline constexpr const char* kTagSymplClassification = "symplectic_classification";
inline constexpr const char* kTagSymplCounterexample = "symplectic_counterexample_6n";
inline constexpr const char* kTagSymplNonpronormal = "symplectic_nonpronormal";
inline constexpr const char* kTagE6 = "e6_classification";
inline constexpr const char* kTagPslConjecture = "psl_conjecture";

struct Classification {
  ClassificationStatus status = ClassificationStatus::open;
  std::string citation;

  nlohmann::json to_json() const;
};

// Decides whether every odd-index subgroup of the named simple group is
// pronormal, by the arithmetic of the implemented classification results.
// PSL_n^eps with odd q and n not a power of 2 returns a conjectured_*
// status; conjectured statuses are labeled output only and never feed
// acceptance assertions.
Classification classification_oracle(const SimpleGroupId& id);

// Predicted order of O(C_G(S)) for a Sylow 2-subgroup S; 1 when trivial.
Integer ocgs_prediction(const SimpleGroupId& id);

}  // namespace pronorm
