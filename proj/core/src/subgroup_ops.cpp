#include "pronorm/subgroup_ops.hpp"

#include <algorithm>
#include <unordered_set>

#include "pronorm/errors.hpp"

namespace pronorm {

bool IncrementalGroup::add(const Perm& p) {
  if (group_.contains(p)) return false;
  gens_.push_back(p);
  PermGroup::Options opts;
  opts.parent = parent_;
  opts.trust_parent_membership = true;
  group_ = PermGroup(degree_, gens_, std::move(opts));
  return true;
}

PermGroup subgroup_closure(const PermGroup& G, const std::vector<Perm>& elements) {
  for (const Perm& p : elements)
    if (!G.contains(p)) throw NotASubgroup("closure element is not a member");
  PermGroup::Options opts;
  opts.parent = share(G);
  opts.trust_parent_membership = true;
  return PermGroup(G.degree(), elements, std::move(opts));
}

PermGroup join(const PermGroup& A, const PermGroup& B) {
  if (A.degree() != B.degree()) throw DegreeMismatch("joining groups on different domains");
  std::vector<Perm> gens = A.generators();
  for (const Perm& g : B.generators()) gens.push_back(g);
  PermGroup::Options opts;
  opts.parent = A.parent() ? A.parent() : B.parent();
  // The join may escape the recorded parent; drop it unless both sides
  // share it.
  if (opts.parent && !(A.parent() && B.parent() && A.parent() == B.parent()))
    opts.parent = nullptr;
  opts.trust_parent_membership = true;
  return PermGroup(A.degree(), std::move(gens), std::move(opts));
}

PermGroup intersection(const PermGroup& A, const PermGroup& B, std::uint64_t cap) {
  if (A.degree() != B.degree())
    throw DegreeMismatch("intersecting groups on different domains");
  const PermGroup& small = A.order() <= B.order() ? A : B;
  const PermGroup& large = A.order() <= B.order() ? B : A;
  if (small.order() > cap) throw CapExceeded("intersection enumeration exceeds cap");
  IncrementalGroup acc(A.degree());
  small.for_each_element([&](const Perm& p) {
    if (large.contains(p)) acc.add(p);
    return true;
  });
  return acc.take();
}

PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seed) {
  IncrementalGroup acc(G.degree(), share(G));
  std::vector<Perm> work;
  for (const Perm& p : seed) {
    if (!G.contains(p)) throw NotASubgroup("normal closure seed is not a member");
    if (acc.add(p)) work.push_back(p);
  }
  while (!work.empty()) {
    Perm p = std::move(work.back());
    work.pop_back();
    for (const Perm& g : G.generators()) {
      Perm c = p.conjugated_by(g);
      if (acc.add(c)) work.push_back(std::move(c));
    }
  }
  return acc.take();
}

PermGroup commutator_subgroup(const PermGroup& A, const PermGroup& B) {
  PermGroup J = join(A, B);
  std::vector<Perm> comms;
  for (const Perm& a : A.generators())
    for (const Perm& b : B.generators()) {
      Perm c = Perm::commutator(a, b);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(J, comms);
}

PermGroup point_stabilizer(const PermGroup& G, Point x) {
  if (x >= G.degree()) throw PreconditionError("stabilized point out of range");
  // Orbit of x with transversal; Schreier generators span the stabilizer.
  std::vector<Point> orbit{x};
  std::vector<std::int32_t> pos(G.degree(), -1);
  pos[x] = 0;
  std::vector<Perm> transversal{Perm(G.degree())};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Perm& g : G.generators()) {
      Point y = g[orbit[i]];
      if (pos[y] < 0) {
        pos[y] = static_cast<std::int32_t>(orbit.size());
        orbit.push_back(y);
        transversal.push_back(transversal[i] * g);
      }
    }
  }
  IncrementalGroup acc(G.degree(), G.parent() ? G.parent() : nullptr);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Perm& g : G.generators()) {
      Point y = g[orbit[i]];
      Perm schreier = transversal[i] * g * transversal[static_cast<std::size_t>(pos[y])].inverse();
      acc.add(schreier);
    }
  }
  PermGroup S = acc.take();
  if (S.order() * Integer(orbit.size()) != G.order())
    throw Error("orbit-stabilizer accounting failed");
  return S;
}

PermGroup pointwise_stabilizer(const PermGroup& G, const std::vector<Point>& pts) {
  PermGroup S = G;
  for (Point x : pts) S = point_stabilizer(S, x);
  return S;
}

std::vector<Point> fixed_points(const PermGroup& H) {
  std::vector<Point> out;
  for (Point x = 0; x < H.degree(); ++x) {
    bool fixed = true;
    for (const Perm& g : H.generators())
      if (g[x] != x) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(x);
  }
  return out;
}

bool is_transitive_on(const PermGroup& K, const std::vector<Point>& set) {
  if (set.empty()) return true;
  std::unordered_set<Point> target(set.begin(), set.end());
  std::vector<Point> orbit{set[0]};
  std::unordered_set<Point> seen{set[0]};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Perm& g : K.generators()) {
      Point y = g[orbit[i]];
      if (seen.insert(y).second) orbit.push_back(y);
    }
  }
  for (Point x : set)
    if (!seen.count(x)) return false;
  return true;
}

}  // namespace pronorm
