#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pronorm/caps.hpp"
#include "pronorm/perm_group.hpp"
#include "pronorm/stab_chain.hpp"

namespace pronorm {

// A surjective homomorphism source -> target realized on permutation
// domains, with exact image and preimage of subgroups.
//
// Internally two shadow chains are kept: the forward chain factorizes a
// source element into transversal elements whose target shadows multiply to
// its image; the backward chain does the same in the target with source
// lifts as shadows. Well-definedness is certified during the forward build:
// any word that is trivial in the source but carries a non-trivial target
// shadow would flag a violation.
class Epimorphism {
 public:
  // Action of G on the right cosets of the normal subgroup N (verified).
  // The target is the faithful permutation action of G/N on those cosets,
  // in coset-table enumeration order.
  static Epimorphism quotient_map(const PermGroup& G, const PermGroup& N,
                                  std::uint64_t coset_cap = default_caps().max_coset_index);

  // Projection of a direct-product-style group onto the sub-domain
  // [lo, lo+width); every generator must preserve that window. The kernel
  // must be supplied by the caller (the complementary factors).
  static Epimorphism domain_restriction(const PermGroup& G, Point lo, std::size_t width,
                                        PermGroup kernel);

  // Map defined by generator images into a target domain. Validated: the
  // generator assignment must extend to a homomorphism, which the shadow
  // chain certifies. If the kernel is not supplied it is derived (trivial
  // when |source| = |target|, otherwise generated from random coset-trivial
  // elements plus normal closure until the order accounts match).
  static Epimorphism generator_map(const PermGroup& G, std::size_t target_degree,
                                   const std::vector<Perm>& images,
                                   std::optional<PermGroup> kernel = std::nullopt,
                                   std::uint64_t seed = kDefaultSeed);

  const PermGroup& source() const { return source_; }
  const PermGroup& target() const { return target_; }
  const PermGroup& kernel() const { return kernel_; }

  // Generator-image pairs defining the map.
  const std::vector<std::pair<Perm, Perm>>& generator_images() const {
    return gen_images_;
  }

  // Image of a source element.
  Perm apply(const Perm& g) const;

  // Some preimage of a target element (exact: apply(lift(k)) == k).
  Perm lift(const Perm& k) const;

  // Image of a subgroup H of the source.
  PermGroup image(const PermGroup& H) const;

  // Full preimage of a subgroup of the target; order is
  // |Kbar| * |kernel| (asserted).
  PermGroup preimage(const PermGroup& Kbar) const;

 private:
  Epimorphism(PermGroup source, PermGroup target, PermGroup kernel,
              std::vector<std::pair<Perm, Perm>> gen_images);

  PermGroup source_;
  PermGroup target_;
  PermGroup kernel_;
  std::vector<std::pair<Perm, Perm>> gen_images_;
  std::shared_ptr<const StabChain> forward_;   // source chain, target shadows
  std::shared_ptr<const StabChain> backward_;  // target chain, source shadows
};

// Verifies that N is normal in G (conjugates of N's generators by G's
// generators all sift through N).
bool is_normal_in(const PermGroup& G, const PermGroup& N);

// quotient(G, N): the epimorphism G -> G/N as a coset action.
Epimorphism quotient(const PermGroup& G, const PermGroup& N,
                     std::uint64_t coset_cap = default_caps().max_coset_index);

}  // namespace pronorm
