#include "pronorm/normalizer.hpp"

#include <algorithm>
#include <unordered_map>

#include "pronorm/cosets.hpp"
#include "pronorm/errors.hpp"
#include "pronorm/subgroup_ops.hpp"

namespace pronorm {

namespace {

// Order-independent fingerprint of the element set of H^x, computed from
// H's own enumeration; no chain for the conjugate is needed.
std::uint64_t conjugate_set_key(const PermGroup& H, const Perm& x) {
  std::uint64_t key = 0;
  Perm xinv = x.inverse();
  H.for_each_element([&](const Perm& h) {
    // h^x computed via the precomputed inverse to save one inversion each.
    Perm c = (xinv * h) * x;
    key += static_cast<std::uint64_t>(hash_value(c)) | 1;
    return true;
  });
  return key;
}

// H^x == J, given |H| == |J|.
bool conjugate_equals(const PermGroup& H, const Perm& x, const PermGroup& J) {
  for (const Perm& h : H.generators())
    if (!J.contains(h.conjugated_by(x))) return false;
  return true;
}

constexpr std::uint64_t kSmallIndexRoute = 50'000;

}  // namespace

bool normalizes(const Perm& u, const PermGroup& H) {
  for (const Perm& h : H.generators())
    if (!H.contains(h.conjugated_by(u))) return false;
  return true;
}

bool centralizes(const Perm& u, const PermGroup& H) {
  for (const Perm& h : H.generators())
    if (!(h * u == u * h)) return false;
  return true;
}

PermGroup normalizer(const PermGroup& G, const PermGroup& H, const Caps& caps) {
  verify_subgroup(G, H);
  if (H.is_trivial() || H.same_group_as(G)) return G;

  Integer index = G.index_of(H);
  if (index <= kSmallIndexRoute) {
    // Scan right-coset representatives: N_G(H) is a union of H-cosets.
    IncrementalGroup acc(PermGroup(G.degree(), H.generators(),
                                   {.parent = share(G), .trust_parent_membership = true}));
    for (const Perm& r : right_coset_reps(G, H, caps.max_coset_index))
      if (normalizes(r, H)) acc.add(r);
    return acc.take();
  }

  // Conjugation orbit of H with Schreier generators for the stabilizer.
  if (H.order() > caps.max_elements)
    throw CapExceeded("normalizer: subgroup too large to fingerprint");
  std::uint64_t hsize = H.order_u64();

  std::vector<Perm> transversal{Perm(G.degree())};
  std::vector<std::uint64_t> keys{conjugate_set_key(H, transversal[0])};
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  buckets[keys[0]].push_back(0);

  IncrementalGroup acc(PermGroup(G.degree(), H.generators(),
                                 {.parent = share(G), .trust_parent_membership = true}));

  for (std::size_t i = 0; i < transversal.size(); ++i) {
    if ((transversal.size() + 1) * hsize > caps.max_conjugacy_tests)
      throw CapExceeded("normalizer: conjugation orbit exceeds search cap");
    for (const Perm& g : G.generators()) {
      Perm x = transversal[i] * g;
      std::uint64_t key = conjugate_set_key(H, x);
      std::size_t found = SIZE_MAX;
      auto it = buckets.find(key);
      if (it != buckets.end()) {
        for (std::size_t j : it->second) {
          // Exact check: H^x equals H^{t_j}  iff  H^{x t_j^-1} = H.
          if (normalizes(x * transversal[j].inverse(), H)) {
            found = j;
            break;
          }
        }
      }
      if (found != SIZE_MAX) {
        acc.add(x * transversal[found].inverse());
      } else {
        buckets[key].push_back(transversal.size());
        keys.push_back(key);
        transversal.push_back(std::move(x));
      }
    }
  }

  PermGroup N = acc.take();
  if (N.order() * Integer(transversal.size()) != G.order())
    throw Error("normalizer orbit-stabilizer accounting failed");
  return N;
}

namespace {

PermGroup centralizer_tuple(const PermGroup& G, const std::vector<Perm>& tuple,
                            const Caps& caps) {
  struct Node {
    std::vector<Perm> images;
    Perm transversal;
  };
  auto tuple_key = [](const std::vector<Perm>& t) {
    std::uint64_t h = 0x2545F4914F6CDD1DULL;
    for (const Perm& p : t) h = h * 0x100000001b3ULL + hash_value(p);
    return h;
  };
  auto conj_tuple = [&](const Perm& x) {
    std::vector<Perm> out;
    out.reserve(tuple.size());
    for (const Perm& t : tuple) out.push_back(t.conjugated_by(x));
    return out;
  };

  std::vector<Node> nodes;
  nodes.push_back({tuple, Perm(G.degree())});
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  buckets[tuple_key(tuple)].push_back(0);

  IncrementalGroup acc(G.degree(), share(G));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes.size() * std::max<std::size_t>(tuple.size(), 1) > caps.max_conjugacy_tests)
      throw CapExceeded("centralizer: conjugation orbit exceeds search cap");
    for (const Perm& g : G.generators()) {
      Perm x = nodes[i].transversal * g;
      std::vector<Perm> imgs = conj_tuple(x);
      std::uint64_t key = tuple_key(imgs);
      std::size_t found = SIZE_MAX;
      auto it = buckets.find(key);
      if (it != buckets.end())
        for (std::size_t j : it->second)
          if (nodes[j].images == imgs) {
            found = j;
            break;
          }
      if (found != SIZE_MAX) {
        acc.add(x * nodes[found].transversal.inverse());
      } else {
        buckets[key].push_back(nodes.size());
        nodes.push_back({std::move(imgs), std::move(x)});
      }
    }
  }
  PermGroup C = acc.take();
  if (C.order() * Integer(nodes.size()) != G.order())
    throw Error("centralizer orbit-stabilizer accounting failed");
  return C;
}

}  // namespace

PermGroup centralizer(const PermGroup& G, const PermGroup& H, const Caps& caps) {
  verify_subgroup(G, H);
  if (H.is_trivial()) return G;
  return centralizer_tuple(G, H.generators(), caps);
}

PermGroup centralizer(const PermGroup& G, const Perm& x, const Caps& caps) {
  if (!G.contains(x)) throw NotASubgroup("centralized element is not a member");
  if (x.is_identity()) return G;
  return centralizer_tuple(G, {x}, caps);
}

PermGroup center(const PermGroup& G, const Caps& caps) {
  return centralizer_tuple(G, G.generators(), caps);
}

PermGroup normalizer_within(const PermGroup& U, const PermGroup& H,
                            std::uint64_t element_cap) {
  if (U.order() > element_cap) throw CapExceeded("normalizer_within element cap");
  IncrementalGroup acc(U.degree(), U.parent());
  U.for_each_element([&](const Perm& u) {
    if (normalizes(u, H)) acc.add(u);
    return true;
  });
  return acc.take();
}

PermGroup centralizer_within(const PermGroup& U, const PermGroup& H,
                             std::uint64_t element_cap) {
  if (U.order() > element_cap) throw CapExceeded("centralizer_within element cap");
  IncrementalGroup acc(U.degree(), U.parent());
  U.for_each_element([&](const Perm& u) {
    if (centralizes(u, H)) acc.add(u);
    return true;
  });
  return acc.take();
}

SubgroupConjugacy is_conjugate_subgroups(const PermGroup& G, const PermGroup& H,
                                         const PermGroup& K, const Caps& caps) {
  verify_subgroup(G, H);
  verify_subgroup(G, K);

  SubgroupConjugacy result;
  // Invariant screening: conjugate subgroups agree on all of these.
  if (H.order() != K.order()) return result;
  if (fixed_points(H).size() != fixed_points(K).size()) return result;
  if (orbit_size_partition(H) != orbit_size_partition(K)) return result;
  if (H.order() <= 4096 &&
      element_order_histogram(H) != element_order_histogram(K))
    return result;

  if (H.order() > caps.max_elements)
    throw CapExceeded("conjugacy search: subgroup too large to fingerprint");
  std::uint64_t hsize = std::max<std::uint64_t>(H.order_u64(), 1);
  std::uint64_t target_key = conjugate_set_key(K, Perm(G.degree()));

  std::vector<Perm> transversal{Perm(G.degree())};
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::uint64_t key0 = conjugate_set_key(H, transversal[0]);
  buckets[key0].push_back(0);
  if (key0 == target_key && conjugate_equals(H, transversal[0], K)) {
    result.conjugator = transversal[0];
    result.conjugates_enumerated = 1;
    return result;
  }

  for (std::size_t i = 0; i < transversal.size(); ++i) {
    if ((transversal.size() + 1) * hsize > caps.max_conjugacy_tests)
      throw CapExceeded("conjugacy search exceeds cap");
    for (const Perm& g : G.generators()) {
      Perm x = transversal[i] * g;
      std::uint64_t key = conjugate_set_key(H, x);
      bool known = false;
      auto it = buckets.find(key);
      if (it != buckets.end())
        for (std::size_t j : it->second)
          if (normalizes(x * transversal[j].inverse(), H)) {
            known = true;
            break;
          }
      if (known) continue;
      if (key == target_key && conjugate_equals(H, x, K)) {
        result.conjugator = x;
        result.conjugates_enumerated = transversal.size() + 1;
        return result;
      }
      buckets[key].push_back(transversal.size());
      transversal.push_back(std::move(x));
    }
  }
  result.conjugates_enumerated = transversal.size();
  return result;
}

}  // namespace pronorm
