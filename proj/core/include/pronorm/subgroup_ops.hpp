#pragma once

#include <memory>
#include <vector>

#include "pronorm/caps.hpp"
#include "pronorm/perm_group.hpp"

namespace pronorm {

inline std::shared_ptr<const PermGroup> share(PermGroup g) {
  return std::make_shared<const PermGroup>(std::move(g));
}

// Accumulates generators while skipping elements already generated; keeps
// generating sets short when feeding long element streams.
class IncrementalGroup {
 public:
  explicit IncrementalGroup(std::size_t degree,
                            std::shared_ptr<const PermGroup> parent = nullptr)
      : degree_(degree), parent_(std::move(parent)), group_(PermGroup::trivial(degree)) {}

  explicit IncrementalGroup(PermGroup start)
      : degree_(start.degree()),
        parent_(start.parent()),
        gens_(start.generators()),
        group_(std::move(start)) {}

  // Returns true if p was new (the group grew).
  bool add(const Perm& p);

  const PermGroup& group() const { return group_; }
  PermGroup take() { return std::move(group_); }

 private:
  std::size_t degree_;
  std::shared_ptr<const PermGroup> parent_;
  std::vector<Perm> gens_;
  PermGroup group_;
};

// Smallest subgroup of G containing the given elements; parent set to G.
// Throws NotASubgroup if an element is not a member of G.
PermGroup subgroup_closure(const PermGroup& G, const std::vector<Perm>& elements);

// Subgroup generated by A and B together (common degree required). The
// parent is inherited from A if present, else from B.
PermGroup join(const PermGroup& A, const PermGroup& B);

// Exact intersection by enumerating the smaller group and filtering.
PermGroup intersection(const PermGroup& A, const PermGroup& B,
                       std::uint64_t cap = default_caps().max_elements);

// Smallest subgroup of G containing `seed` that is normal in G.
PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seed);

// Normal closure in <A, B> of the commutators of generator pairs; this is
// the commutator subgroup [A, B].
PermGroup commutator_subgroup(const PermGroup& A, const PermGroup& B);

// Stabilizer of a point / pointwise stabilizer of a point set, via orbit
// transversals and Schreier generators.
PermGroup point_stabilizer(const PermGroup& G, Point x);
PermGroup pointwise_stabilizer(const PermGroup& G, const std::vector<Point>& pts);

// Points fixed by every generator of H.
std::vector<Point> fixed_points(const PermGroup& H);

// Whether K's orbit closure within `set` reaches all of `set` from its
// first point. The empty set counts as transitively acted on.
bool is_transitive_on(const PermGroup& K, const std::vector<Point>& set);

}  // namespace pronorm
