#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pronorm/caps.hpp"
#include "pronorm/perm.hpp"
#include "pronorm/perm_group.hpp"

namespace pronorm {

struct PointVecHash {
  std::size_t operator()(const std::vector<Point>& v) const {
    std::size_t h = 0xcbf29ce484222325ULL ^ v.size();
    for (Point x : v) h = (h * 0x100000001b3ULL) ^ x;
    return h;
  }
};

// Throws NotASubgroup unless every generator of H sifts through G.
void verify_subgroup(const PermGroup& G, const PermGroup& H);

// The lexicographically least element of the right coset H*x (image tables
// compared pointwise). Computed by greedy descent through H's chain: at the
// level with base point b the candidates for the image of b are exactly the
// x-images of b's fundamental orbit, and points between base points are
// fixed by the corresponding stabilizer because bases increase under the
// smallest-moved-point rule. Each coset therefore has a unique canonical
// representative, which is what all coset tables key on.
Perm min_coset_rep(const PermGroup& H, const Perm& x);

// Right cosets of H in G, one canonical representative each, in BFS
// discovery order starting from H itself. This is the deterministic
// enumeration order used by all verdict reporting.
class CosetTable {
 public:
  CosetTable(const PermGroup& G, const PermGroup& H,
             std::uint64_t cap = default_caps().max_coset_index);

  std::size_t size() const { return reps_.size(); }
  const std::vector<Perm>& reps() const { return reps_; }
  const Perm& rep(std::size_t i) const { return reps_[i]; }

  // Index of the coset H*x.
  std::size_t index_of(const Perm& x) const;

 private:
  const PermGroup* H_;
  std::vector<Perm> reps_;
  std::unordered_map<std::vector<Point>, std::size_t, PointVecHash> index_;
};

std::vector<Perm> right_coset_reps(const PermGroup& G, const PermGroup& H,
                                   std::uint64_t cap = default_caps().max_coset_index);

// Representatives of the (H,H)-double cosets in G, each the canonical
// representative of its earliest right coset in enumeration order.
std::vector<Perm> double_coset_reps(const PermGroup& G, const PermGroup& H,
                                    std::uint64_t cap = default_caps().max_coset_index);

}  // namespace pronorm
