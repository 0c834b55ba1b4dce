#pragma once

#include "pronorm/caps.hpp"
#include "pronorm/perm_group.hpp"
#include "pronorm/verdict.hpp"

namespace pronorm {

// Outcome of testing one witness g: is H conjugate to H^g inside the join
// <H, H^g>?
struct WitnessOutcome {
  std::optional<Perm> conjugator;
  Integer join_order;
  std::size_t conjugates_enumerated = 0;
};

WitnessOutcome test_pronormality_witness(const PermGroup& G, const PermGroup& H,
                                         const Perm& g,
                                         const Caps& caps = default_caps());

// Decides pronormality of H in G from the definition, with the witness set
// reduced to (H,H)-double-coset representatives:
// for g' = h1 g h2 with h1, h2 in H,
//   <H, H^{g'}> = <H, (H^g)^{h2}> = <H^{h2}, (H^g)^{h2}> = <H, H^g>^{h2},
// and c -> c^{h2} carries conjugators of (H, H^g) in the left join onto
// conjugators of (H, H^{g'}) in the right one, so the per-witness outcome
// depends on g only through H g H. The reduction is validated against
// exhaustive enumeration in the test suites.
PronormalityVerdict is_pronormal(const PermGroup& G, const PermGroup& H,
                                 const Caps& caps = default_caps());

// Same decision for odd-index H, with the witness set reduced to
// representatives of (N_G(S) n H)-cosets in N_G(S) for a Sylow 2-subgroup
// S of H (Sylow in G because the index is odd): translating g on the left
// by an element of N_G(S) n H <= H leaves the tested pair unchanged.
// Precondition: |G : H| odd.
PronormalityVerdict is_pronormal_odd(const PermGroup& G, const PermGroup& H,
                                     std::uint64_t seed = kDefaultSeed,
                                     const Caps& caps = default_caps());

// Recursive decision along a minimal non-trivial normal subgroup A:
// A <= H reduces to G/A; H <= A reduces to A plus the Frattini
// factorization G = A N_G(H); in the mixed case the three split conditions
// are tested with recursion on HA. Falls back to the definition when G has
// no proper minimal normal subgroup (or to the abelian criterion when
// G = HA with A abelian). Negative verdicts always carry a failing witness
// valid in G itself.
PronormalityVerdict reduction_pronormal(const PermGroup& G, const PermGroup& H,
                                        std::uint64_t seed = kDefaultSeed,
                                        const Caps& caps = default_caps());

}  // namespace pronorm
