#include "pronorm/perm_group.hpp"

#include <algorithm>
#include <map>

#include "pronorm/errors.hpp"

namespace pronorm {

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, Options opts)
    : degree_(degree), gens_(std::move(generators)), parent_(std::move(opts.parent)) {
  for (const Perm& g : gens_)
    if (g.degree() != degree_)
      throw DegreeMismatch("generator degree does not match group degree");
  if (parent_) {
    if (parent_->degree() != degree_)
      throw DegreeMismatch("parent group acts on a different domain");
    if (!opts.trust_parent_membership) {
      for (const Perm& g : gens_)
        if (!parent_->contains(g))
          throw NotASubgroup("generator is not a member of the parent group");
    }
  }
  std::vector<Elt> elts;
  elts.reserve(gens_.size());
  for (const Perm& g : gens_) elts.push_back(Elt{g, Perm()});
  StabChain::Options copts;
  copts.seed = opts.seed;
  chain_ = std::make_shared<const StabChain>(StabChain::build(degree_, elts, copts));
  natural_ = std::make_shared<NaturalCache>();
}

const StabChain& PermGroup::natural_chain() const {
  std::lock_guard<std::mutex> lock(natural_->m);
  if (!natural_->chain) {
    if (chain_->has_natural_base())
      natural_->chain = chain_;
    else
      natural_->chain = std::make_shared<const StabChain>(
          StabChain::natural(degree_, gens_));
  }
  return *natural_->chain;
}

bool PermGroup::contains_group(const PermGroup& H) const {
  if (H.degree() != degree_) return false;
  for (const Perm& g : H.generators())
    if (!contains(g)) return false;
  return true;
}

bool PermGroup::same_group_as(const PermGroup& other) const {
  return degree_ == other.degree_ && order() == other.order() && contains_group(other);
}

Integer PermGroup::index_of(const PermGroup& H) const {
  if (order() % H.order() != 0)
    throw NotASubgroup("order does not divide: not a subgroup (Lagrange)");
  return order() / H.order();
}

std::vector<Point> PermGroup::orbit_of(Point x) const {
  std::vector<Point> orbit{x};
  std::vector<bool> seen(degree_, false);
  seen[x] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Perm& g : gens_) {
      Point y = g[orbit[i]];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  }
  return orbit;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(degree_, false);
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto orb = orbit_of(x);
    for (Point y : orb) seen[y] = true;
    result.push_back(std::move(orb));
  }
  return result;
}

bool PermGroup::is_transitive() const {
  return degree_ > 0 && orbit_of(0).size() == degree_;
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  if (order() > cap) throw CapExceeded("element enumeration exceeds cap");
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(order_u64()));
  chain_->for_each_element([&](const Elt& e) {
    out.push_back(e.p);
    return true;
  });
  return out;
}

bool PermGroup::for_each_element(const std::function<bool(const Perm&)>& fn) const {
  return chain_->for_each_element([&](const Elt& e) { return fn(e.p); });
}

PermGroup PermGroup::conjugated_by(const Perm& g) const {
  std::vector<Perm> conj;
  conj.reserve(gens_.size());
  for (const Perm& h : gens_) conj.push_back(h.conjugated_by(g));
  Options opts;
  opts.parent = parent_;
  opts.trust_parent_membership = true;
  return PermGroup(degree_, std::move(conj), std::move(opts));
}

std::uint64_t PermGroup::order_u64() const {
  if (order() > Integer(UINT64_MAX))
    throw CapExceeded("group order does not fit in 64 bits");
  return order().convert_to<std::uint64_t>();
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> element_order_histogram(
    const PermGroup& G, std::uint64_t cap) {
  if (G.order() > cap) throw CapExceeded("order histogram exceeds element cap");
  std::map<std::uint64_t, std::uint64_t> hist;
  G.for_each_element([&](const Perm& p) {
    hist[p.order().convert_to<std::uint64_t>()]++;
    return true;
  });
  return {hist.begin(), hist.end()};
}

std::vector<std::size_t> orbit_size_partition(const PermGroup& G) {
  std::vector<std::size_t> sizes;
  for (const auto& orb : G.orbits()) sizes.push_back(orb.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace pronorm
