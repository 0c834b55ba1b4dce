#pragma once

#include <optional>

#include "pronorm/caps.hpp"
#include "pronorm/perm_group.hpp"

namespace pronorm {

// Does u normalize H (H^u = H)?
bool normalizes(const Perm& u, const PermGroup& H);

// Does u centralize H (commutes with every generator)?
bool centralizes(const Perm& u, const PermGroup& H);

// Exact normalizer of H in G. Two exact routes, chosen by shape:
// small-index subgroups are handled by scanning the right-coset
// representatives of H; otherwise the conjugation orbit of H is enumerated
// with Schreier generators spanning the stabilizer. Both are exhaustive
// under the caps; exceeding a cap raises CapExceeded rather than returning
// a truncated answer.
PermGroup normalizer(const PermGroup& G, const PermGroup& H,
                     const Caps& caps = default_caps());

// Exact centralizer of H (resp. of a single element) in G, by
// orbit-stabilizer on the tuple of generator images under conjugation.
PermGroup centralizer(const PermGroup& G, const PermGroup& H,
                      const Caps& caps = default_caps());
PermGroup centralizer(const PermGroup& G, const Perm& x,
                      const Caps& caps = default_caps());

PermGroup center(const PermGroup& G, const Caps& caps = default_caps());

// N_U(H) and C_U(H) for an enumerable U: filter the elements of U.
PermGroup normalizer_within(const PermGroup& U, const PermGroup& H,
                            std::uint64_t element_cap = default_caps().max_elements);
PermGroup centralizer_within(const PermGroup& U, const PermGroup& H,
                             std::uint64_t element_cap = default_caps().max_elements);

struct SubgroupConjugacy {
  // Some x in G with H^x = K, the first found in the deterministic
  // conjugation-orbit search; empty when the exhausted orbit excludes K.
  std::optional<Perm> conjugator;
  // Conjugates of H enumerated before deciding.
  std::size_t conjugates_enumerated = 0;
};

// Decides whether H and K are conjugate in G. Invariant screening (order,
// element-order histogram, orbit partition, fixed points) first, then the
// exhausted transversal search over N_G(H)-cosets realized as the
// conjugation orbit of H.
SubgroupConjugacy is_conjugate_subgroups(const PermGroup& G, const PermGroup& H,
                                         const PermGroup& K,
                                         const Caps& caps = default_caps());

}  // namespace pronorm
