#include "doctest.h"

#include "pronorm/constructions.hpp"
#include "pronorm/errors.hpp"
#include "pronorm/odd_index.hpp"
#include "pronorm/oracle.hpp"
#include "pronorm/subgroup_enum.hpp"
#include "pronorm/normalizer.hpp"
#include "pronorm/sylow.hpp"

using namespace pronorm;

TEST_CASE("2-adic dominance") {
  CHECK(preceq(5, 7));       // 101 <= 111 digitwise
  CHECK_FALSE(preceq(3, 5)); // bit 1 of 3 exceeds bit 1 of 5
  CHECK(prec(5, 7));
  for (std::uint64_t n = 0; n <= 10000; ++n) CHECK_FALSE(prec(n, n));
  CHECK(preceq(0, 0));
  CHECK(preceq(0, 12345));
}

TEST_CASE("odd parts") {
  CHECK(odd_part_u64(48) == 3);
  CHECK(odd_part_u64(7) == 7);
  for (unsigned k = 0; k < 20; ++k) CHECK(odd_part_u64(1ULL << k) == 1);
  CHECK(odd_part(Integer(48)) == 3);
}

TEST_CASE("prime power factorization") {
  auto pp = factor_prime_power(27);
  REQUIRE(pp.has_value());
  CHECK(pp->p == 3);
  CHECK(pp->k == 3);
  CHECK_FALSE(factor_prime_power(12).has_value());
  CHECK_FALSE(factor_prime_power(1).has_value());
  CHECK(factor_prime_power(19)->k == 1);
}

TEST_CASE("symplectic rank form classification") {
  CHECK(sympl_form_check(4) == SymplecticRankForm::power_of_two);
  CHECK(sympl_form_check(1) == SymplecticRankForm::power_of_two);
  CHECK(sympl_form_check(10) == SymplecticRankForm::fermat_times_power);  // 2 * 5
  CHECK(sympl_form_check(5) == SymplecticRankForm::fermat_times_power);
  CHECK(sympl_form_check(7) == SymplecticRankForm::neither);
  CHECK(sympl_form_check(3) == SymplecticRankForm::neither);
  CHECK(sympl_form_check(9) == SymplecticRankForm::neither);  // 8+1 has odd exponent

  // Exhaustive cross-check against a direct search over w and k.
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    bool pow2 = false, fermat = false;
    for (unsigned w = 0; (1ULL << w) <= n; ++w) {
      if ((1ULL << w) == n) pow2 = true;
      for (unsigned k = 1; k <= 8; ++k) {
        if (n % (1ULL << w)) continue;
        if (n / (1ULL << w) == (1ULL << (2 * k)) + 1) fermat = true;
      }
    }
    SymplecticRankForm want = pow2 ? SymplecticRankForm::power_of_two
                              : fermat ? SymplecticRankForm::fermat_times_power
                                       : SymplecticRankForm::neither;
    CHECK(sympl_form_check(n) == want);
  }
}

TEST_CASE("digit recipe") {
  DigitRecipe r7 = simpl_nonpron_digits(7);
  REQUIRE(r7.m.has_value());
  CHECK(*r7.m == 3);  // positions 0 and 1 have opposite parity

  // 21 = 10101_2: three same-parity digits summing to n itself.
  DigitRecipe r21 = simpl_nonpron_digits(21);
  CHECK(r21.flagged);
  CHECK_FALSE(r21.m.has_value());

  // 9 = 1001_2: a single opposite-parity pair equal to n itself.
  DigitRecipe r9 = simpl_nonpron_digits(9);
  CHECK(r9.flagged);

  CHECK_THROWS_AS(simpl_nonpron_digits(8), PreconditionError);

  // Exhaustive property: every valid selection satisfies prec(m, n) and 3 | m.
  std::size_t produced = 0, flagged = 0;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    if (sympl_form_check(n) != SymplecticRankForm::neither) continue;
    DigitRecipe r = simpl_nonpron_digits(n);
    if (r.flagged) {
      ++flagged;
      continue;
    }
    REQUIRE(r.m.has_value());
    ++produced;
    CHECK(prec(*r.m, n));
    CHECK(*r.m % 3 == 0);
  }
  CHECK(produced > 3000);
  CHECK(flagged > 0);
}

TEST_CASE("abelian wreath condition variants") {
  CHECK(awrsn_condition(3, {2}, true));
  CHECK(awrsn_condition(3, {2}, false));
  CHECK(awrsn_condition(3, {3}, true));        // proper submasks 1, 2 only
  CHECK_FALSE(awrsn_condition(3, {3}, false)); // m = 3 has gcd 3
  CHECK(awrsn_condition(6, {4}, false));       // gcd(6,4) = 2
  CHECK_FALSE(awrsn_condition(5, {7}, true));  // m = 5 strictly below 7
  CHECK_THROWS_AS(awrsn_condition(0, {1}, true), PreconditionError);
  CHECK_THROWS_AS(awrsn_condition(2, {}, true), PreconditionError);
}

TEST_CASE("sylow 2-normalizer predictions") {
  auto check = [](const SimpleGroupId& id, std::uint64_t want) {
    CHECK(sylow2_normalizer_prediction(id).index == want);
  };
  check(SimpleGroupId::psl2(5), 3);
  CHECK(sylow2_normalizer_prediction(SimpleGroupId::psl2(5)).structure == "Alt(4)");
  check(SimpleGroupId::psl2(7), 1);
  check(SimpleGroupId::psl2(11), 3);
  check(SimpleGroupId::psl2(13), 3);
  check(SimpleGroupId::psl2(9), 1);   // 9 = 1 mod 8
  check(SimpleGroupId::psl2(17), 1);
  check(SimpleGroupId::psl2(4), 3);   // Borel: q - 1
  check(SimpleGroupId::psp(2, 3), 3); // t = 1, elementary abelian 3^1
  check(SimpleGroupId::psp(3, 3), 9); // t = 2
  check(SimpleGroupId::psp(2, 7), 1); // 7 = -1 mod 8
  check(SimpleGroupId::alt(5), 3);
  check(SimpleGroupId::alt(6), 1);
  check(SimpleGroupId::alt(7), 1);
  check(SimpleGroupId::e6(19, +1), 3);  // odd part 9 over gcd 3
  check(SimpleGroupId::e6(3, +1), 1);
  check(SimpleGroupId::sporadic_group("J2"), 3);
  check(SimpleGroupId::sporadic_group("J1"), 21);
  check(SimpleGroupId::sporadic_group("M11"), 1);
  check(SimpleGroupId::ree(27), 21);
  check(SimpleGroupId::psl_eps(4, 5, +1), 1);   // n = 2^2: single digit
  check(SimpleGroupId::psl_eps(3, 5, +1), 1);   // odd n: digit at position 0
  check(SimpleGroupId::psl_eps(6, 11, +1), 5);  // odd(10)/odd(gcd(10,6)) = 5
  check(SimpleGroupId::psl_eps(6, 7, +1), 1);   // odd(6)/odd(gcd(6,6)) = 1
}

TEST_CASE("classification oracle spot table") {
  auto cls = [](const SimpleGroupId& id) { return classification_oracle(id); };

  Classification psp63 = cls(SimpleGroupId::psp(3, 3));
  CHECK(psp63.status == ClassificationStatus::has_nonpronormal);
  CHECK(psp63.citation == kTagSymplCounterexample);

  Classification psp45 = cls(SimpleGroupId::psp(2, 5));
  CHECK(psp45.status == ClassificationStatus::all_pronormal);
  CHECK(psp45.citation == kTagSymplClassification);

  Classification psp203 = cls(SimpleGroupId::psp(10, 3));
  CHECK(psp203.status == ClassificationStatus::all_pronormal);
  CHECK(psp203.citation == kTagSymplClassification);

  Classification psp143 = cls(SimpleGroupId::psp(7, 3));
  CHECK(psp143.status == ClassificationStatus::has_nonpronormal);
  CHECK(psp143.citation == kTagSymplNonpronormal);

  Classification psp47 = cls(SimpleGroupId::psp(2, 7));
  CHECK(psp47.status == ClassificationStatus::all_pronormal);

  Classification e6p19 = cls(SimpleGroupId::e6(19, +1));
  CHECK(e6p19.status == ClassificationStatus::has_nonpronormal);
  CHECK(e6p19.citation == kTagE6);

  Classification e6m17 = cls(SimpleGroupId::e6(17, -1));  // 18 divides 17 + 1
  CHECK(e6m17.status == ClassificationStatus::has_nonpronormal);

  Classification e6p7 = cls(SimpleGroupId::e6(7, +1));
  CHECK(e6p7.status == ClassificationStatus::all_pronormal);

  // p odd, eps = +, exponent not a power of two.
  Classification e6p27 = cls(SimpleGroupId::e6(27, +1));  // 27 = 3^3, 18 | 26? no
  CHECK(e6p27.status == ClassificationStatus::has_nonpronormal);

  CHECK(cls(SimpleGroupId::alt(11)).status == ClassificationStatus::all_pronormal);
  CHECK(cls(SimpleGroupId::sporadic_group("M24")).status ==
        ClassificationStatus::all_pronormal);
  CHECK(cls(SimpleGroupId::lie_char2()).status == ClassificationStatus::all_pronormal);
  CHECK(cls(SimpleGroupId::ree(27)).status == ClassificationStatus::all_pronormal);
  CHECK(cls(SimpleGroupId::psl2(7)).status == ClassificationStatus::all_pronormal);
  CHECK(cls(SimpleGroupId::psl_eps(4, 7, +1)).status ==
        ClassificationStatus::all_pronormal);
  CHECK(cls(SimpleGroupId::psl_eps(4, 7, +1)).citation == kTagBaseFamilies);

  // Conjectured statuses for odd q and n not a power of two.
  Classification c1 = cls(SimpleGroupId::psl_eps(3, 5, -1));
  CHECK(c1.status == ClassificationStatus::conjectured_all);
  CHECK(c1.citation == kTagPslConjecture);
  Classification c2 = cls(SimpleGroupId::psl_eps(7, 7, +1));
  CHECK(c2.status == ClassificationStatus::conjectured_nonpronormal);
  Classification c3 = cls(SimpleGroupId::psl_eps(3, 3, +1));
  CHECK(c3.status == ClassificationStatus::conjectured_all);
}

TEST_CASE("O(C_G(S)) predictions") {
  CHECK(ocgs_prediction(SimpleGroupId::e6(19, +1)) == 3);
  CHECK(ocgs_prediction(SimpleGroupId::e6(3, +1)) == 1);
  CHECK(ocgs_prediction(SimpleGroupId::e6(17, -1)) == 3);  // odd(18)/gcd(18,3)
  CHECK(ocgs_prediction(SimpleGroupId::psl_eps(3, 3, +1)) == 1);  // digit at 0
  CHECK(ocgs_prediction(SimpleGroupId::psp(3, 3)) == 1);
  CHECK(ocgs_prediction(SimpleGroupId::psp(10, 5)) == 1);
  CHECK(ocgs_prediction(SimpleGroupId::alt(9)) == 1);
  CHECK(ocgs_prediction(SimpleGroupId::psl_eps(6, 11, +1)) == 5);
  CHECK(ocgs_prediction(SimpleGroupId::psl_eps(6, 7, +1)) == 1);
  CHECK(ocgs_prediction(SimpleGroupId::psl_eps(10, 7, +1)) == 3);
}

TEST_CASE("id validation and JSON") {
  CHECK_THROWS_AS(SimpleGroupId::psl2(3).validate(), PreconditionError);
  CHECK_THROWS_AS(SimpleGroupId::psl2(2).validate(), PreconditionError);
  CHECK_THROWS_AS(SimpleGroupId::psl2(12).validate(), PreconditionError);
  CHECK_THROWS_AS(SimpleGroupId::psl_eps(3, 2, -1).validate(), PreconditionError);
  CHECK_THROWS_AS(SimpleGroupId::psp(2, 2).validate(), PreconditionError);
  CHECK_THROWS_AS(SimpleGroupId::psp(1, 3).validate(), PreconditionError);
  CHECK_THROWS_AS(SimpleGroupId::alt(4).validate(), PreconditionError);
  CHECK_THROWS_AS(SimpleGroupId::ree(3).validate(), PreconditionError);
  CHECK_THROWS_AS(SimpleGroupId::ree(9).validate(), PreconditionError);
  CHECK_THROWS_AS(SimpleGroupId::sporadic_group("X1").validate(), PreconditionError);

  SimpleGroupId id = SimpleGroupId::parse(R"({"family":"PSp","n":3,"q":3})");
  CHECK(id.family == SimpleGroupId::Family::PSp);
  CHECK(id.n == 3);

  for (const SimpleGroupId& x :
       {SimpleGroupId::alt(5), SimpleGroupId::psl2(7), SimpleGroupId::psp(3, 3),
        SimpleGroupId::psl_eps(3, 5, -1), SimpleGroupId::e6(19, +1),
        SimpleGroupId::sporadic_group("J1"), SimpleGroupId::ree(27),
        SimpleGroupId::lie_char2()}) {
    SimpleGroupId back = SimpleGroupId::from_json(x.to_json());
    CHECK(back.family == x.family);
    CHECK(back.n == x.n);
    CHECK(back.q == x.q);
    CHECK(back.eps == x.eps);
    CHECK(back.sporadic == x.sporadic);
  }

  CHECK_THROWS_AS(SimpleGroupId::parse(R"({"family":"PSp","n":3})"), ParseError);
  CHECK_THROWS_AS(SimpleGroupId::parse(R"({"family":"PSp","n":3,"q":3,"x":1})"),
                  ParseError);
  CHECK_THROWS_AS(SimpleGroupId::parse(R"({"family":"Zz"})"), ParseError);
}

namespace {

// Brute-force oracle: odd-index subgroup classes via the full subgroup
// lattice.
std::vector<Integer> odd_index_orders_brute(const PermGroup& G) {
  auto subs = all_subgroups(G);
  std::vector<Integer> orders;
  for (std::size_t r : subs.class_representatives())
    if (is_odd(G.order() / subs.subgroups[r].order()))
      orders.push_back(subs.subgroups[r].order());
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<Integer> odd_index_orders_enum(const PermGroup& G) {
  auto e = odd_index_subgroups(G);
  std::vector<Integer> orders;
  for (std::size_t r : e.class_representatives())
    orders.push_back(e.subgroups[r].order());
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

TEST_CASE("odd-index subgroup enumeration against brute force") {
  BuiltGroup s4 = realize(GroupSpec::sym(4));
  CHECK(odd_index_orders_enum(s4.group) == odd_index_orders_brute(s4.group));
  CHECK(odd_index_orders_enum(s4.group) == std::vector<Integer>{8, 24});

  BuiltGroup sl23 = realize(GroupSpec::sl2(3));
  CHECK(odd_index_orders_enum(sl23.group) == odd_index_orders_brute(sl23.group));
  CHECK(odd_index_orders_enum(sl23.group) == std::vector<Integer>{8, 24});

  BuiltGroup a5 = realize(GroupSpec::alt(5));
  auto orders = odd_index_orders_enum(a5.group);
  CHECK(orders == odd_index_orders_brute(a5.group));
  CHECK(orders == std::vector<Integer>{4, 12, 60});  // indices 15, 5, 1

  BuiltGroup s3 = realize(GroupSpec::sym(3));
  CHECK(odd_index_orders_enum(s3.group) == odd_index_orders_brute(s3.group));
}

TEST_CASE("all odd-index subgroups pronormal: probes") {
  BuiltGroup a5 = realize(GroupSpec::alt(5));
  CHECK(all_odd_index_pronormal(a5.group).all_pronormal);

  BuiltGroup w3 = realize(GroupSpec::wreath(GroupSpec::cyclic(3), 3));
  OddIndexPronormality probe = all_odd_index_pronormal(w3.group);
  CHECK_FALSE(probe.all_pronormal);
  // The counterexample class is the top Sym(3) (order 6, a complement).
  bool found_order6 = false;
  for (std::size_t idx : probe.counterexamples)
    if (probe.enumeration.subgroups[probe.tested[idx]].order() == 6) found_order6 = true;
  CHECK(found_order6);

  BuiltGroup ss = realize(GroupSpec::product({GroupSpec::sl2(3), GroupSpec::sl2(3)}));
  CHECK(all_odd_index_pronormal(ss.group).all_pronormal);
}
