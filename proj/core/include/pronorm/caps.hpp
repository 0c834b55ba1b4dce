#pragma once

#include <cstdint>

namespace pronorm {

// Search/enumeration budgets. Exceeding any of them raises CapExceeded;
// no operation degrades to a heuristic answer.
struct Caps {
  // Right-coset tables (quotient actions, witness enumeration).
  std::uint64_t max_coset_index = 1'000'000;
  // Full element enumeration of a group.
  std::uint64_t max_elements = 2'000'000;
  // Candidate tests in subgroup-conjugation searches (orbit size times
  // subgroup order).
  std::uint64_t max_conjugacy_tests = 10'000'000;
  // Subgroup count in lattice-style enumerations.
  std::uint64_t max_subgroups = 100'000;
  // Group order admitted to exhaustive audits and verdict replays.
  std::uint64_t exhaustive_order_cap = 100'000;
  // Order of an abelian normal subgroup whose H-invariant subgroups are
  // enumerated in full.
  std::uint64_t abelian_enum_cap = 4096;
  // Group order admitted to normal-subgroup-lattice computations.
  std::uint64_t normal_lattice_cap = 100'000;
  // Degree of any constructed permutation action.
  std::uint64_t max_degree = 2'000'000;
};

inline const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

// Seed for the randomized phase of stabilizer-chain construction and for
// seeded element sampling. Fixed so that identical inputs give identical
// chains, transversals and search orders across runs.
inline constexpr std::uint64_t kDefaultSeed = 20240917ULL;

}  // namespace pronorm
