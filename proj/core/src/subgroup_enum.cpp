#include "pronorm/subgroup_enum.hpp"

#include <algorithm>
#include <unordered_map>

#include "pronorm/errors.hpp"
#include "pronorm/subgroup_ops.hpp"

namespace pronorm {

namespace {

std::uint64_t set_key(const PermGroup& H) {
  std::uint64_t key = 0;
  H.for_each_element([&](const Perm& p) {
    key += static_cast<std::uint64_t>(hash_value(p)) | 1;
    return true;
  });
  return key;
}

}  // namespace

std::vector<std::size_t> SubgroupList::class_representatives() const {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    if (class_of[i] == i) reps.push_back(i);
  return reps;
}

SubgroupList all_subgroups(const PermGroup& G, std::uint64_t order_cap,
                           const Caps& caps) {
  if (G.order() > order_cap) throw CapExceeded("all_subgroups exceeds order cap");

  SubgroupList out;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;

  auto lookup = [&](const PermGroup& H, std::uint64_t key) -> std::size_t {
    auto it = buckets.find(key);
    if (it != buckets.end())
      for (std::size_t j : it->second)
        if (out.subgroups[j].order() == H.order() && out.subgroups[j].contains_group(H))
          return j;
    return SIZE_MAX;
  };
  auto add = [&](PermGroup H) -> std::size_t {
    std::uint64_t key = set_key(H);
    std::size_t j = lookup(H, key);
    if (j != SIZE_MAX) return j;
    if (out.subgroups.size() >= caps.max_subgroups)
      throw CapExceeded("subgroup enumeration exceeds count cap");
    out.subgroups.push_back(std::move(H));
    buckets[key].push_back(out.subgroups.size() - 1);
    return out.subgroups.size() - 1;
  };

  add(PermGroup(G.degree(), {}, {.parent = share(G)}));

  // Cyclic subgroups seed the closure; every subgroup is a join of cyclics,
  // so repeatedly joining with cyclics reaches everything.
  std::vector<std::size_t> cyclic_ids;
  G.for_each_element([&](const Perm& x) {
    if (x.is_identity()) return true;
    std::size_t before = out.subgroups.size();
    std::size_t id = add(subgroup_closure(G, {x}));
    if (id >= before) cyclic_ids.push_back(id);
    return true;
  });

  for (std::size_t i = 0; i < out.subgroups.size(); ++i) {
    for (std::size_t cid : cyclic_ids) {
      const PermGroup& H = out.subgroups[i];
      const PermGroup& C = out.subgroups[cid];
      if (H.order() % C.order() == 0 && H.contains_group(C)) continue;
      std::vector<Perm> gens = H.generators();
      for (const Perm& c : C.generators()) gens.push_back(c);
      add(subgroup_closure(G, gens));
    }
  }

  // Conjugacy-class tags by conjugation orbits inside the complete list.
  out.class_of.assign(out.subgroups.size(), SIZE_MAX);
  for (std::size_t i = 0; i < out.subgroups.size(); ++i) {
    if (out.class_of[i] != SIZE_MAX) continue;
    out.class_of[i] = i;
    std::vector<std::size_t> work{i};
    while (!work.empty()) {
      std::size_t j = work.back();
      work.pop_back();
      for (const Perm& g : G.generators()) {
        PermGroup conj = out.subgroups[j].conjugated_by(g);
        std::size_t k = lookup(conj, set_key(conj));
        if (k == SIZE_MAX) throw Error("conjugate escaped the subgroup list");
        if (out.class_of[k] == SIZE_MAX) {
          out.class_of[k] = i;
          work.push_back(k);
        }
      }
    }
  }
  return out;
}

}  // namespace pronorm
