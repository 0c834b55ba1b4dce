#pragma once

#include <cstdint>
#include <vector>

#include "pronorm/caps.hpp"
#include "pronorm/perm_group.hpp"

namespace pronorm {

// Every subgroup of G exactly once, with conjugacy-class tags.
struct SubgroupList {
  std::vector<PermGroup> subgroups;   // discovery order; [0] is trivial
  std::vector<std::size_t> class_of;  // index of the class representative

  std::vector<std::size_t> class_representatives() const;
};

// Exhaustive subgroup enumeration by closure of joins with cyclic
// subgroups, deduplicated by element-set fingerprint with exact membership
// confirmation. Requires order(G) <= order_cap.
SubgroupList all_subgroups(const PermGroup& G,
                           std::uint64_t order_cap = default_caps().exhaustive_order_cap,
                           const Caps& caps = default_caps());

}  // namespace pronorm
