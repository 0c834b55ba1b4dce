#include "pronorm/sylow.hpp"

#include <algorithm>
#include <unordered_map>

#include "pronorm/errors.hpp"
#include "pronorm/normalizer.hpp"
#include "pronorm/rng.hpp"
#include "pronorm/subgroup_ops.hpp"

namespace pronorm {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// x raised to the p'-part of its order: a p-element (possibly identity).
Perm p_power_part(const Perm& x, std::uint64_t p) {
  Integer ord = x.order();
  Integer rest = ord;
  while (rest % p == 0) rest /= p;
  return power(x, rest);
}

// A p-element of G outside P, or identity if none reachable. Random draws
// first (seeded), then a deterministic enumeration sweep.
Perm find_p_element_outside(const PermGroup& G, const PermGroup& P, std::uint64_t p,
                            Rng& rng, const Caps& caps) {
  for (int tries = 0; tries < 512; ++tries) {
    Perm z = p_power_part(G.random_element(rng), p);
    if (!z.is_identity() && !P.contains(z)) return z;
  }
  if (G.order() > caps.max_elements)
    throw CapExceeded("sylow: deterministic sweep exceeds element cap");
  Perm found;
  bool ok = false;
  G.for_each_element([&](const Perm& g) {
    Perm z = p_power_part(g, p);
    if (!z.is_identity() && !P.contains(z)) {
      found = z;
      ok = true;
      return false;
    }
    return true;
  });
  return ok ? found : Perm(G.degree());
}

}  // namespace

PermGroup sylow(const PermGroup& G, std::uint64_t p, std::uint64_t seed,
                const Caps& caps) {
  if (!is_prime(p)) throw PreconditionError("sylow: p must be prime");
  Integer target = p_part(G.order(), p);
  PermGroup P(G.degree(), {}, {.parent = share(G)});
  if (target == 1) return P;

  Rng rng(seed);
  Perm z = find_p_element_outside(G, P, p, rng, caps);
  if (z.is_identity()) throw Error("sylow: no p-element found despite p | |G|");
  P = subgroup_closure(G, {z});

  while (P.order() < target) {
    // P < S for a Sylow S forces P < N_S(P), so N_G(P) holds a p-element
    // outside P; adjoining it keeps a p-group since P is normal there.
    PermGroup N = normalizer(G, P, caps);
    Perm w = find_p_element_outside(N, P, p, rng, caps);
    if (w.is_identity()) throw Error("sylow: climbing stalled");
    std::vector<Perm> gens = P.generators();
    gens.push_back(w);
    P = subgroup_closure(G, gens);
    if (p_part(P.order(), p) != P.order()) throw Error("sylow: climb left p-group");
  }
  return P;
}

PermGroup p_radical(const PermGroup& G, std::uint64_t p, std::uint64_t seed,
                    const Caps& caps) {
  if (!is_prime(p)) throw PreconditionError("p_radical: p must be prime");
  PermGroup T = sylow(G, p, seed, caps);
  // Contract to the core: O_p(G) stays inside every intersection taken, and
  // a normal p-subgroup containing O_p(G) equals it.
  while (true) {
    const Perm* bad = nullptr;
    for (const Perm& g : G.generators())
      if (!normalizes(g, T)) {
        bad = &g;
        break;
      }
    if (!bad) break;
    T = intersection(T, T.conjugated_by(*bad), caps.max_elements);
  }
  PermGroup::Options opts;
  opts.parent = share(G);
  opts.trust_parent_membership = true;
  return PermGroup(G.degree(), T.generators(), std::move(opts));
}

namespace {

// Distinct cyclic subgroups of G, one generator each.
std::vector<Perm> cyclic_representatives(const PermGroup& G, const Caps& caps) {
  if (G.order() > caps.normal_lattice_cap)
    throw CapExceeded("cyclic subgroup scan exceeds the lattice cap");
  std::unordered_map<std::uint64_t, std::vector<Perm>> seen;  // key -> reps
  std::vector<Perm> reps;
  G.for_each_element([&](const Perm& x) {
    if (x.is_identity()) return true;
    // Fingerprint of <x> as a set.
    std::uint64_t key = 0;
    Perm y = x;
    while (!y.is_identity()) {
      key += static_cast<std::uint64_t>(hash_value(y)) | 1;
      y = y * x;
    }
    auto& bucket = seen[key];
    for (const Perm& r : bucket) {
      // Same cyclic group iff x is a power of r and orders match.
      if (r.order() == x.order()) {
        Perm q = r;
        bool member = false;
        while (!q.is_identity()) {
          if (q == x) {
            member = true;
            break;
          }
          q = q * r;
        }
        if (member) return true;
      }
    }
    bucket.push_back(x);
    reps.push_back(x);
    return true;
  });
  return reps;
}

}  // namespace

PermGroup odd_radical(const PermGroup& G, const Caps& caps) {
  if (G.order() > caps.normal_lattice_cap)
    throw CapExceeded("odd_radical exceeds the normal-lattice cap");
  PermGroup O(G.degree(), {}, {.parent = share(G)});
  for (const Perm& x : cyclic_representatives(G, caps)) {
    if (is_even(x.order())) continue;
    if (O.contains(x)) continue;
    PermGroup C = normal_closure(G, {x});
    if (is_odd(C.order())) {
      std::vector<Perm> gens = O.generators();
      for (const Perm& c : C.generators()) gens.push_back(c);
      PermGroup::Options opts;
      opts.parent = share(G);
      opts.trust_parent_membership = true;
      O = PermGroup(G.degree(), std::move(gens), std::move(opts));
    }
  }
  return O;
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& G, const Caps& caps) {
  std::vector<PermGroup> closures;
  for (const Perm& x : cyclic_representatives(G, caps)) {
    PermGroup C = normal_closure(G, {x});
    if (C.order() == G.order() && G.order() > 1) {
      // The whole group; only minimal if G itself has no smaller candidate,
      // handled below like any other closure.
    }
    bool dup = false;
    for (const PermGroup& K : closures)
      if (K.order() == C.order() && K.contains_group(C)) {
        dup = true;
        break;
      }
    if (!dup) closures.push_back(std::move(C));
  }
  std::vector<PermGroup> minimal;
  for (const PermGroup& C : closures) {
    if (C.order() == 1) continue;
    bool is_min = true;
    for (const PermGroup& D : closures) {
      if (D.order() == 1 || D.order() >= C.order()) continue;
      if (C.contains_group(D)) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(C);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
  return minimal;
}

}  // namespace pronorm
