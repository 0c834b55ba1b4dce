#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "pronorm/bigint.hpp"
#include "pronorm/caps.hpp"
#include "pronorm/perm.hpp"
#include "pronorm/stab_chain.hpp"

namespace pronorm {

// A permutation group given by generators plus its stabilizer-chain
// certificate. Doubles as "subgroup" when sharing a parent's domain.
// Immutable after construction; cheap to copy (the chain is shared).
class PermGroup {
 public:
  struct Options {
    std::uint64_t seed = kDefaultSeed;
    std::shared_ptr<const PermGroup> parent;
    // Skip the membership check of generators in the parent (callers that
    // construct conjugates/images of verified subgroups already know).
    bool trust_parent_membership = false;
  };

  PermGroup() : PermGroup(0, {}) {}

  PermGroup(std::size_t degree, std::vector<Perm> generators, Options opts);
  PermGroup(std::size_t degree, std::vector<Perm> generators)
      : PermGroup(degree, std::move(generators), Options()) {}

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const StabChain& chain() const { return *chain_; }

  // Chain with the natural-base property (see StabChain::has_natural_base),
  // required by coset canonicalization. Reuses the default chain when it
  // already qualifies; otherwise built once, lazily, under a lock shared by
  // all copies of this group.
  const StabChain& natural_chain() const;
  const Integer& order() const { return chain_->order(); }
  bool is_trivial() const { return order() == 1; }
  const std::shared_ptr<const PermGroup>& parent() const { return parent_; }

  bool contains(const Perm& p) const { return chain_->contains(p); }

  // All generators of H sift through this group's chain.
  bool contains_group(const PermGroup& H) const;

  // Equal as subgroups of the symmetric group on the shared domain.
  bool same_group_as(const PermGroup& other) const;

  // order(G)/order(H) with exact divisibility (Lagrange) asserted.
  Integer index_of(const PermGroup& H) const;

  std::vector<Point> orbit_of(Point x) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  Perm random_element(Rng& rng) const { return chain_->random_element(rng).p; }

  // Deterministic enumeration order (chain odometer). Throws CapExceeded if
  // the order exceeds `cap`.
  std::vector<Perm> elements(std::uint64_t cap = default_caps().max_elements) const;
  bool for_each_element(const std::function<bool(const Perm&)>& fn) const;

  // Conjugate subgroup H^g sharing this group's parent.
  PermGroup conjugated_by(const Perm& g) const;

  std::uint64_t order_u64() const;

 private:
  struct NaturalCache {
    std::mutex m;
    std::shared_ptr<const StabChain> chain;
  };

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::shared_ptr<const StabChain> chain_;
  std::shared_ptr<const PermGroup> parent_;
  std::shared_ptr<NaturalCache> natural_;
};

// Multiset of element orders, as sorted (order, count) pairs. Conjugation
// invariant; used to screen subgroup-conjugacy searches.
std::vector<std::pair<std::uint64_t, std::uint64_t>> element_order_histogram(
    const PermGroup& G, std::uint64_t cap = default_caps().max_elements);

// Sorted multiset of orbit sizes; conjugation invariant.
std::vector<std::size_t> orbit_size_partition(const PermGroup& G);

}  // namespace pronorm
