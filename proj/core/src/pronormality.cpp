#include "pronorm/pronormality.hpp"

#include "pronorm/cosets.hpp"
#include "pronorm/epimorphism.hpp"
#include "pronorm/criteria.hpp"
#include "pronorm/errors.hpp"
#include "pronorm/normalizer.hpp"
#include "pronorm/subgroup_ops.hpp"
#include "pronorm/sylow.hpp"

namespace pronorm {

WitnessOutcome test_pronormality_witness(const PermGroup& G, const PermGroup& H,
                                         const Perm& g, const Caps& caps) {
  if (!G.contains(g)) throw NotASubgroup("witness is not a member of the group");
  PermGroup Hg = H.conjugated_by(g);
  std::vector<Perm> jgens = H.generators();
  for (const Perm& x : Hg.generators()) jgens.push_back(x);
  PermGroup::Options jopts;
  jopts.parent = share(G);
  jopts.trust_parent_membership = true;
  PermGroup join_hg(G.degree(), std::move(jgens), std::move(jopts));

  WitnessOutcome out;
  out.join_order = join_hg.order();
  SubgroupConjugacy res = is_conjugate_subgroups(join_hg, H, Hg, caps);
  out.conjugator = res.conjugator;
  out.conjugates_enumerated = res.conjugates_enumerated;
  return out;
}

namespace {

PronormalityVerdict decide_over_witnesses(const PermGroup& G, const PermGroup& H,
                                          const std::vector<Perm>& witnesses,
                                          DecisionMethod method,
                                          std::string tested_set, const Caps& caps) {
  PronormalityVerdict verdict;
  verdict.method = method;
  verdict.tested_set = std::move(tested_set);
  for (const Perm& g : witnesses) {
    WitnessOutcome out = test_pronormality_witness(G, H, g, caps);
    if (out.conjugator) {
      verdict.witnesses.push_back({g, *out.conjugator});
    } else {
      verdict.status = PronormalStatus::not_pronormal;
      verdict.failing_g = g;
      verdict.certificate = ExhaustCert{out.join_order, out.conjugates_enumerated};
      verdict.witnesses.clear();
      return verdict;
    }
  }
  verdict.status = PronormalStatus::pronormal;
  return verdict;
}

}  // namespace

PronormalityVerdict is_pronormal(const PermGroup& G, const PermGroup& H,
                                 const Caps& caps) {
  verify_subgroup(G, H);
  std::vector<Perm> reps = double_coset_reps(G, H, caps.max_coset_index);
  std::string desc = "(H,H)-double-coset representatives: " +
                     std::to_string(reps.size()) + " of " +
                     G.index_of(H).str() + " right cosets";
  return decide_over_witnesses(G, H, reps, DecisionMethod::definition, std::move(desc),
                               caps);
}

PronormalityVerdict is_pronormal_odd(const PermGroup& G, const PermGroup& H,
                                     std::uint64_t seed, const Caps& caps) {
  verify_subgroup(G, H);
  Integer index = G.index_of(H);
  if (is_even(index))
    throw PreconditionError("is_pronormal_odd requires odd index, got " + index.str());
  PermGroup S = sylow(H, 2, seed, caps);
  if (S.order() != p_part(G.order(), 2))
    throw Error("Sylow 2-subgroup of odd-index subgroup is not Sylow in G");
  PermGroup N = normalizer(G, S, caps);
  PermGroup I = intersection(N, H, caps.max_elements);
  std::vector<Perm> reps = right_coset_reps(N, I, caps.max_coset_index);
  std::string desc = "N_G(S) over (N_G(S) n H)-cosets: " + std::to_string(reps.size()) +
                     " representatives, |N_G(S)| = " + N.order().str();
  return decide_over_witnesses(G, H, reps, DecisionMethod::normsyl, std::move(desc),
                               caps);
}

namespace {

// Finds the first failing witness in definition order; used to complete
// negative reduction verdicts whose failure was detected indirectly (a
// factorization condition): the theorem guarantees one exists.
PronormalityVerdict complete_negative(const PermGroup& G, const PermGroup& H,
                                      std::string tested_set, const Caps& caps) {
  PronormalityVerdict v = is_pronormal(G, H, caps);
  if (v.pronormal())
    throw Error("reduction predicted non-pronormality but the sweep found none");
  v.method = DecisionMethod::reduction;
  v.tested_set = std::move(tested_set) + "; certificate by definitional sweep";
  return v;
}

// Re-certifies a failing witness in G itself.
PronormalityVerdict certify_failure(const PermGroup& G, const PermGroup& H,
                                    const Perm& g, std::string tested_set,
                                    const Caps& caps) {
  WitnessOutcome out = test_pronormality_witness(G, H, g, caps);
  if (out.conjugator)
    throw Error("lifted reduction witness unexpectedly conjugates");
  PronormalityVerdict v;
  v.status = PronormalStatus::not_pronormal;
  v.method = DecisionMethod::reduction;
  v.failing_g = g;
  v.certificate = ExhaustCert{out.join_order, out.conjugates_enumerated};
  v.tested_set = std::move(tested_set);
  return v;
}

PronormalityVerdict reduction_impl(const PermGroup& G, const PermGroup& H,
                                   std::uint64_t seed, const Caps& caps, int depth) {
  if (depth > 64) throw Error("reduction recursion too deep");
  verify_subgroup(G, H);

  if (G.order() == 1 || H.same_group_as(G)) {
    PronormalityVerdict v;
    v.status = PronormalStatus::pronormal;
    v.method = DecisionMethod::reduction;
    v.tested_set = "trivial instance";
    return v;
  }

  std::vector<PermGroup> minimals;
  for (PermGroup& M : minimal_normal_subgroups(G, caps))
    if (M.order() < G.order()) minimals.push_back(std::move(M));
  if (minimals.empty()) {
    PronormalityVerdict v = is_pronormal(G, H, caps);
    v.tested_set += "; reduction base case (no proper minimal normal subgroup)";
    return v;
  }
  const PermGroup& A = minimals.front();

  if (H.contains_group(A)) {
    // A <= H: decide in G/A.
    Epimorphism epi = quotient(G, A, caps.max_coset_index);
    PronormalityVerdict sub =
        reduction_impl(epi.target(), epi.image(H), seed, caps, depth + 1);
    std::string desc = "reduction: A <= H, recursed in G/A (|A| = " + A.order().str() + ")";
    if (sub.pronormal()) {
      PronormalityVerdict v;
      v.status = PronormalStatus::pronormal;
      v.method = DecisionMethod::reduction;
      v.tested_set = desc + "; " + sub.tested_set;
      return v;
    }
    return certify_failure(G, H, epi.lift(*sub.failing_g), desc, caps);
  }

  if (A.contains_group(H)) {
    // H <= A: pronormal in G iff pronormal in A and G = A N_G(H).
    PronormalityVerdict sub = reduction_impl(A, H, seed, caps, depth + 1);
    std::string desc = "reduction: H <= A (|A| = " + A.order().str() + ")";
    if (!sub.pronormal())
      return certify_failure(G, H, *sub.failing_g, desc, caps);
    PermGroup N = normalizer(G, H, caps);
    if (join(A, N).order() == G.order()) {
      PronormalityVerdict v;
      v.status = PronormalStatus::pronormal;
      v.method = DecisionMethod::reduction;
      v.tested_set = desc + "; Frattini factorization G = A N_G(H)";
      return v;
    }
    return complete_negative(G, H, desc + "; G != A N_G(H)", caps);
  }

  // Mixed case.
  PermGroup HA = join(H, A);
  if (HA.order() == G.order()) {
    // G = HA: the recursion would not shrink. Decide directly, via the
    // abelian supplement criterion when it applies.
    bool abelian = true;
    for (const Perm& x : A.generators())
      for (const Perm& y : A.generators())
        if (!(x * y == y * x)) abelian = false;
    if (abelian && A.order() <= caps.abelian_enum_cap) {
      AbelianCriterionResult r = abelian_criterion(G, A, H, caps);
      r.verdict.tested_set += "; reached via reduction at G = HA";
      return r.verdict;
    }
    PronormalityVerdict v = is_pronormal(G, H, caps);
    v.tested_set += "; reduction base case at G = HA";
    return v;
  }

  std::string desc = "reduction: mixed case with |A| = " + A.order().str();
  // Condition (a): HA/A pronormal in G/A.
  Epimorphism epi = quotient(G, A, caps.max_coset_index);
  PronormalityVerdict qa =
      reduction_impl(epi.target(), epi.image(H), seed, caps, depth + 1);
  if (!qa.pronormal())
    return certify_failure(G, H, epi.lift(*qa.failing_g), desc + "; fails in G/A", caps);
  // Condition (b): N = A N_N(H) for N = N_G(HA).
  PermGroup N = normalizer(G, HA, caps);
  PermGroup NnH = normalizer(N, H, caps);
  if (join(A, NnH).order() != N.order())
    return complete_negative(G, H, desc + "; N_G(HA) != A N_N(H)", caps);
  // Condition (c): H pronormal in HA.
  PronormalityVerdict pc = reduction_impl(HA, H, seed, caps, depth + 1);
  if (!pc.pronormal())
    return certify_failure(G, H, *pc.failing_g, desc + "; fails in HA", caps);
  PronormalityVerdict v;
  v.status = PronormalStatus::pronormal;
  v.method = DecisionMethod::reduction;
  v.tested_set = desc + "; all three split conditions hold";
  return v;
}

}  // namespace

PronormalityVerdict reduction_pronormal(const PermGroup& G, const PermGroup& H,
                                        std::uint64_t seed, const Caps& caps) {
  return reduction_impl(G, H, seed, caps, 0);
}

}  // namespace pronorm
