#pragma once

#include <vector>

#include "pronorm/caps.hpp"
#include "pronorm/perm_group.hpp"

namespace pronorm {

bool is_prime(std::uint64_t n);

// A Sylow p-subgroup of G, found by p-element seeding plus
// normalizer climbing. Deterministic given the seed.
PermGroup sylow(const PermGroup& G, std::uint64_t p,
                std::uint64_t seed = kDefaultSeed, const Caps& caps = default_caps());

// O_p(G): the core of a Sylow p-subgroup, contracted by repeated
// intersection with conjugates until normal.
PermGroup p_radical(const PermGroup& G, std::uint64_t p,
                    std::uint64_t seed = kDefaultSeed, const Caps& caps = default_caps());

// O(G) = O_{2'}(G): the largest normal subgroup of odd order, as the join
// of all odd-order normal closures of elements.
PermGroup odd_radical(const PermGroup& G, const Caps& caps = default_caps());

// All minimal non-trivial normal subgroups, each exactly once, ordered by
// (order, discovery). Every minimal normal subgroup is the normal closure
// of any of its non-trivial elements, so scanning closures of cyclic
// representatives is exhaustive.
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& G,
                                                const Caps& caps = default_caps());

}  // namespace pronorm
