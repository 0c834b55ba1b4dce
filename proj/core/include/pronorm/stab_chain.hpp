#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pronorm/bigint.hpp"
#include "pronorm/caps.hpp"
#include "pronorm/perm.hpp"
#include "pronorm/rng.hpp"

namespace pronorm {

// A group element together with an optional "shadow": the image of the same
// word under a generator-defined map into another permutation domain.
// Products and inverses act componentwise, so shadows stay consistent with
// the word structure of the element. A default-constructed (degree-0) shadow
// means "no shadow".
struct Elt {
  Perm p;
  Perm shadow;

  bool has_shadow() const { return shadow.degree() > 0; }

  friend Elt operator*(const Elt& a, const Elt& b) {
    if (a.has_shadow() || b.has_shadow()) return {a.p * b.p, a.shadow * b.shadow};
    return {a.p * b.p, Perm()};
  }

  Elt inverse() const {
    if (has_shadow()) return {p.inverse(), shadow.inverse()};
    return {p.inverse(), Perm()};
  }
};

// Base and strong generating set for a permutation group, built by a
// seeded random Schreier phase followed by a deterministic verification
// sweep over all Schreier generators. Base points are chosen as the
// smallest point moved by the element that forced the new level, so bases
// are strictly increasing; min_coset_rep relies on that rule.
//
// Immutable after build(); safe to share across threads for reading.
class StabChain {
 public:
  struct Options {
    std::uint64_t seed = kDefaultSeed;
    // Random subproducts inserted before the verification sweep.
    int random_rounds = 24;
  };

  struct Level {
    Point base_point = 0;
    std::vector<Point> orbit;              // discovery order
    std::vector<Point> orbit_sorted;       // ascending, used for enumeration
    std::vector<std::int32_t> pos;         // point -> index into orbit, -1 outside
    std::vector<Elt> transversal;          // transversal[i] maps base_point to orbit[i]
    std::vector<Elt> transversal_inv;
    std::vector<Elt> gens;                 // strong generators living at this level
  };

  StabChain() = default;

  static StabChain build(std::size_t degree, const std::vector<Elt>& generators,
                         const Options& opts);
  static StabChain build(std::size_t degree, const std::vector<Elt>& generators) {
    return build(degree, generators, Options());
  }

  std::size_t degree() const { return degree_; }
  const Integer& order() const { return order_; }
  std::size_t num_levels() const { return levels_.size(); }
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<Point> base() const;

  bool contains(const Perm& p) const;

  // Residue after stripping through the chain; identity iff member.
  Perm sift(const Perm& p) const;

  // Writes the element as a product of transversal elements and returns it
  // with its shadow, or nullopt if p is not a member.
  std::optional<Elt> factorize(const Perm& p) const;

  // Uniformly random element (product of random transversal picks).
  Elt random_element(Rng& rng) const;

  // Deterministic full enumeration; stops early if fn returns false.
  // Returns true if the enumeration ran to completion.
  bool for_each_element(const std::function<bool(const Elt&)>& fn) const;

  // True if some word that is trivial as a permutation carried a
  // non-trivial shadow: the generator map defining the shadows is not a
  // homomorphism out of this group.
  bool shadow_violation() const { return shadow_violation_; }

  // Structural fingerprint (base, orbits, transversal images) for
  // determinism checks.
  std::uint64_t fingerprint() const;

  // Every level's generators fix all points below the level's base point,
  // i.e. each base point is the smallest point moved by its level group.
  // min_coset_rep's greedy descent requires this.
  bool has_natural_base() const;

  // Chain built as iterated exact point stabilizers (Schreier generators,
  // deduplicated), so has_natural_base() holds by construction.
  static StabChain natural(std::size_t degree, const std::vector<Perm>& gens);

  std::size_t shadow_degree() const { return shadow_degree_; }

 private:
  std::size_t degree_ = 0;
  std::size_t shadow_degree_ = 0;
  std::vector<Level> levels_;
  Integer order_ = 1;
  bool shadow_violation_ = false;

  friend class ChainBuilder;
};

}  // namespace pronorm
