#include "pronorm/odd_index.hpp"

#include "pronorm/cosets.hpp"
#include "pronorm/errors.hpp"
#include "pronorm/normalizer.hpp"
#include "pronorm/pronormality.hpp"
#include "pronorm/subgroup_ops.hpp"
#include "pronorm/sylow.hpp"

namespace pronorm {

std::vector<std::size_t> OddIndexSubgroups::class_representatives() const {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    if (class_of[i] == i) reps.push_back(i);
  return reps;
}

OddIndexSubgroups odd_index_subgroups(const PermGroup& G, std::uint64_t seed,
                                      const Caps& caps) {
  OddIndexSubgroups out;
  out.sylow2 = sylow(G, 2, seed, caps);
  out.subgroups.push_back(out.sylow2);

  auto known = [&](const PermGroup& J) {
    for (const PermGroup& K : out.subgroups)
      if (K.order() == J.order() && K.contains_group(J)) return true;
    return false;
  };

  // BFS closure: every overgroup M of S with K < M <= G arises as
  // <K, r> for a canonical coset representative r of K inside M, so the
  // sweep over all representatives reaches every overgroup.
  for (std::size_t i = 0; i < out.subgroups.size(); ++i) {
    if (out.subgroups.size() > caps.max_subgroups)
      throw CapExceeded("odd-index subgroup enumeration exceeds count cap");
    PermGroup K = out.subgroups[i];
    for (const Perm& r : right_coset_reps(G, K, caps.max_coset_index)) {
      if (K.contains(r)) continue;
      std::vector<Perm> gens = K.generators();
      gens.push_back(r);
      PermGroup J = subgroup_closure(G, gens);
      if (!known(J)) out.subgroups.push_back(std::move(J));
    }
  }

  // Conjugacy tags within the list.
  out.class_of.assign(out.subgroups.size(), SIZE_MAX);
  for (std::size_t i = 0; i < out.subgroups.size(); ++i) {
    if (out.class_of[i] != SIZE_MAX) continue;
    out.class_of[i] = i;
    for (std::size_t j = i + 1; j < out.subgroups.size(); ++j) {
      if (out.class_of[j] != SIZE_MAX) continue;
      if (out.subgroups[i].order() != out.subgroups[j].order()) continue;
      if (is_conjugate_subgroups(G, out.subgroups[i], out.subgroups[j], caps).conjugator)
        out.class_of[j] = i;
    }
  }
  return out;
}

OddIndexPronormality all_odd_index_pronormal(const PermGroup& G, std::uint64_t seed,
                                             const Caps& caps) {
  OddIndexPronormality out;
  out.enumeration = odd_index_subgroups(G, seed, caps);
  for (std::size_t rep : out.enumeration.class_representatives()) {
    out.tested.push_back(rep);
    out.verdicts.push_back(
        is_pronormal_odd(G, out.enumeration.subgroups[rep], seed, caps));
    if (!out.verdicts.back().pronormal()) {
      out.all_pronormal = false;
      out.counterexamples.push_back(out.tested.size() - 1);
    }
  }
  return out;
}

}  // namespace pronorm
