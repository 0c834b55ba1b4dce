#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pronorm/caps.hpp"
#include "pronorm/perm_group.hpp"
#include "pronorm/verdict.hpp"

namespace pronorm {

// N_G(H) acts transitively on the fixed points of H in the (transitive)
// natural action of G. The empty fixed-point set counts as transitively
// acted on, which makes the H = G case vacuous-true.
bool hall_fixpoint_criterion(const PermGroup& G, const PermGroup& H,
                             const Caps& caps = default_caps());

struct HallAuditRow {
  std::size_t subgroup_class;  // class representative index in all_subgroups
  Integer subgroup_order;
  bool pronormal = false;
  bool criterion_in_all_actions = false;
  // First coset-action class where the criterion failed, if any.
  std::optional<std::size_t> failing_action_class;
};

struct HallAuditReport {
  std::vector<HallAuditRow> rows;
  std::size_t mismatches = 0;
};

// For every subgroup class of G, compares pronormality (by definition)
// with the fixed-point criterion evaluated in every transitive G-action
// (one per subgroup class, acting on right cosets).
HallAuditReport hall_equivalence_audit(const PermGroup& G,
                                       std::uint64_t order_cap = default_caps().exhaustive_order_cap,
                                       const Caps& caps = default_caps());

struct AbelianCriterionResult {
  PronormalityVerdict verdict;
  std::optional<PermGroup> failing_U;  // first H-invariant U with U != N_U(H)[H,U]
  std::size_t invariant_subgroups_checked = 0;
};

// Supplement criterion for V abelian normal in G with G = HV: H is
// pronormal iff U = N_U(H)[H,U] for every H-invariant U <= V. Negative
// verdicts are completed with a definitional first-failing witness so the
// certificate contract holds for every method.
AbelianCriterionResult abelian_criterion(const PermGroup& G, const PermGroup& V,
                                         const PermGroup& H,
                                         const Caps& caps = default_caps());

struct DecomposeReport {
  PermGroup n_u_h;        // N_U(H)
  PermGroup commutator;   // [H, U]
  PermGroup product;      // N_U(H) [H,U] (a subgroup of U)
  bool equal = false;     // product == U
  // When gcd(|H|,|U|) = 1: whether N_U(H) = C_U(H) as the theory predicts.
  std::optional<bool> coprime_centralizer_match;
};

// The decomposition U = N_U(H)[H,U] evaluated exactly; U must be
// H-invariant.
DecomposeReport decompose_check(const PermGroup& H, const PermGroup& U,
                                const Caps& caps = default_caps());

struct FrattiniReport {
  bool s1 = false;  // H pronormal in G
  bool s2 = false;  // H pronormal in A and G = A N_G(H)
  bool s3 = false;  // H pronormal in A and H^A = H^G
  bool agree = false;
};

// The three equivalent statements for A normal in G and H <= A, evaluated
// independently on this instance.
FrattiniReport frattini_equivalence(const PermGroup& G, const PermGroup& A,
                                    const PermGroup& H,
                                    const Caps& caps = default_caps());

struct QuotTransferReport {
  bool pronormal_G = false;
  bool pronormal_image = false;        // image of H in G/N
  bool item1_holds = false;            // pronormal_G => pronormal_image
  bool hn_image_pronormal = false;     // image of HN pronormal in G/N
  bool pronormal_in_normalizer = false;  // H pronormal in N_G(HN)
  bool item2_holds = false;            // the if-and-only-if on this instance
  bool item3_applicable = false;       // N <= H
  bool item3_holds = false;            // image pronormal => H pronormal
};

QuotTransferReport quot_transfer(const PermGroup& G, const PermGroup& N,
                                 const PermGroup& H,
                                 const Caps& caps = default_caps());

struct PraegerReport {
  bool applicable = false;
  std::string reason;  // set when inapplicable (K trivial / not pronormal)
  std::size_t n = 0;
  std::size_t f = 0;
  bool bound_holds = false;          // f <= (n-1)/2
  bool equality = false;             // 2f == n-1
  bool contains_alt = false;         // G >= Alt(n)
  bool linear_case = false;          // |G| = |GL_d(2)|, n = 2^d - 1
  bool transitive_on_support = false;
};

// Fixed-point bound for a non-trivial pronormal subgroup K of a transitive
// group G, with the equality cases tagged.
PraegerReport praeger_audit(const PermGroup& G, const PermGroup& K,
                            const Caps& caps = default_caps());

struct CritExtenReport {
  bool applicable = false;
  std::string skipped_reason;
  bool lhs = false;   // all odd-index subgroups of G pronormal
  bool rhs = false;   // same in N_G(T)/T
  bool agree = false;
};

// Equivalence for A normal in G when the odd-index subgroups of A are
// pronormal and the Sylow 2-subgroup of G/A is self-normalized; T is a
// Sylow 2-subgroup of A. Hypothesis failures are reported as skipped.
CritExtenReport critexten_check(const PermGroup& G, const PermGroup& A,
                                std::uint64_t seed = kDefaultSeed,
                                const Caps& caps = default_caps());

struct CritExtenExtReport {
  bool applicable = false;
  std::string skipped_reason;
  bool lhs = false;             // H pronormal in G
  bool inner_pronormal = false;  // N_H(T)/Z pronormal in (N_H(T) N_Y(T))/Z
  bool normalizer_image_matches = false;  // image of N_G(H) = N_{G/A}(image H)
  bool rhs = false;
  bool agree = false;
};

// Statement (1) of the extension criterion, for A normal in G with
// odd-index subgroups pronormal in both A and G/A, and a Sylow 2-subgroup
// S of G contained in H with T = A n S. The containment S <= H is a
// precondition; the artifact does not attempt to arrange it by conjugation.
CritExtenExtReport critexten_ext_check(const PermGroup& G, const PermGroup& A,
                                       const PermGroup& H,
                                       std::uint64_t seed = kDefaultSeed,
                                       const Caps& caps = default_caps());

}  // namespace pronorm
