#include "pronorm/cosets.hpp"

#include <algorithm>

#include "pronorm/errors.hpp"

namespace pronorm {

void verify_subgroup(const PermGroup& G, const PermGroup& H) {
  if (G.degree() != H.degree())
    throw DegreeMismatch("subgroup acts on a different domain");
  if (!G.contains_group(H)) throw NotASubgroup("generators do not sift through the group");
}

Perm min_coset_rep(const PermGroup& H, const Perm& x) {
  if (H.degree() != x.degree())
    throw DegreeMismatch("coset representative of wrong degree");
  Perm y = x;
  for (const auto& lv : H.natural_chain().levels()) {
    Point best = lv.orbit[0];
    Point best_img = y[best];
    for (Point beta : lv.orbit) {
      if (y[beta] < best_img) {
        best = beta;
        best_img = y[beta];
      }
    }
    if (best != lv.base_point)
      y = lv.transversal[static_cast<std::size_t>(lv.pos[best])].p * y;
  }
  return y;
}

CosetTable::CosetTable(const PermGroup& G, const PermGroup& H, std::uint64_t cap)
    : H_(&H) {
  verify_subgroup(G, H);
  Integer want = G.index_of(H);
  if (want > cap) throw CapExceeded("coset index exceeds cap");

  Perm start = min_coset_rep(H, Perm(G.degree()));
  reps_.push_back(start);
  index_.emplace(start.images(), 0);
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    for (const Perm& g : G.generators()) {
      Perm c = min_coset_rep(H, reps_[i] * g);
      auto [it, inserted] = index_.emplace(c.images(), reps_.size());
      if (inserted) reps_.push_back(std::move(c));
    }
  }
  if (Integer(reps_.size()) != want)
    throw Error("coset enumeration mismatch against Lagrange index");
}

std::size_t CosetTable::index_of(const Perm& x) const {
  Perm c = min_coset_rep(*H_, x);
  auto it = index_.find(c.images());
  if (it == index_.end()) throw Error("element not in any enumerated coset");
  return it->second;
}

std::vector<Perm> right_coset_reps(const PermGroup& G, const PermGroup& H,
                                   std::uint64_t cap) {
  CosetTable table(G, H, cap);
  return table.reps();
}

std::vector<Perm> double_coset_reps(const PermGroup& G, const PermGroup& H,
                                    std::uint64_t cap) {
  CosetTable table(G, H, cap);
  std::vector<bool> seen(table.size(), false);
  std::vector<Perm> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (seen[i]) continue;
    out.push_back(table.rep(i));
    // Close the right H-orbit of coset i: these cosets form the double
    // coset H * rep(i) * H.
    std::vector<std::size_t> work{i};
    seen[i] = true;
    while (!work.empty()) {
      std::size_t j = work.back();
      work.pop_back();
      for (const Perm& h : H.generators()) {
        std::size_t k = table.index_of(table.rep(j) * h);
        if (!seen[k]) {
          seen[k] = true;
          work.push_back(k);
        }
      }
    }
  }
  return out;
}

}  // namespace pronorm
