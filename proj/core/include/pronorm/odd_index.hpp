#pragma once

#include <vector>

#include "pronorm/caps.hpp"
#include "pronorm/perm_group.hpp"
#include "pronorm/verdict.hpp"

namespace pronorm {

// The odd-index subgroups of G: exactly the overgroups of a Sylow
// 2-subgroup. Enumerated by breadth-first closure <K, g> over coset
// representatives g outside K, starting from one fixed Sylow 2-subgroup;
// every odd-index subgroup of G is conjugate to at least one listed group,
// and the class tags identify conjugate duplicates within the list.
struct OddIndexSubgroups {
  PermGroup sylow2;
  std::vector<PermGroup> subgroups;   // BFS discovery order; last not nec. G
  std::vector<std::size_t> class_of;  // conjugacy tag: index of class rep

  std::vector<std::size_t> class_representatives() const;
};

OddIndexSubgroups odd_index_subgroups(const PermGroup& G,
                                      std::uint64_t seed = kDefaultSeed,
                                      const Caps& caps = default_caps());

struct OddIndexPronormality {
  bool all_pronormal = true;
  OddIndexSubgroups enumeration;
  // Per class representative, in enumeration order.
  std::vector<std::size_t> tested;
  std::vector<PronormalityVerdict> verdicts;
  std::vector<std::size_t> counterexamples;  // indices into `tested`
};

// Conjunction of is_pronormal_odd over the class representatives of
// odd_index_subgroups(G); sound because pronormality is invariant under
// conjugation of H.
OddIndexPronormality all_odd_index_pronormal(const PermGroup& G,
                                             std::uint64_t seed = kDefaultSeed,
                                             const Caps& caps = default_caps());

}  // namespace pronorm
