#include "doctest.h"

#include "pronorm/constructions.hpp"
#include "pronorm/errors.hpp"
#include "pronorm/normalizer.hpp"
#include "pronorm/rng.hpp"
#include "pronorm/subgroup_ops.hpp"

using namespace pronorm;

namespace {

// Independent oracle: |Sp_{2n}(q)| = q^{n^2} prod (q^{2i}-1).
Integer sp_order_formula(unsigned n, unsigned q) {
  Integer o = 1;
  for (unsigned i = 0; i < n * n; ++i) o *= q;
  for (unsigned i = 1; i <= n; ++i) {
    Integer t = 1;
    for (unsigned k = 0; k < 2 * i; ++k) t *= q;
    o *= t - 1;
  }
  return o;
}

// Brute-force oracle: enumerate all 2x2 matrices over F_3 with det 1.
int count_sl2_3_matrices() {
  int count = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) ++count;
  return count;
}

}  // namespace

TEST_CASE("wreath product realization") {
  BuiltGroup w = realize(GroupSpec::wreath(GroupSpec::cyclic(3), 3));
  CHECK(w.group.degree() == 9);
  CHECK(w.group.order() == 162);
  CHECK(w.handle("base").order() == 27);
  CHECK(w.handle("top").order() == 6);
  CHECK(is_normal_in(w.group, w.handle("base")));
  CHECK(intersection(w.handle("top"), w.handle("base")).order() == 1);
  // Top permutes the blocks.
  for (const Perm& g : w.handle("top").generators())
    for (Point x = 0; x < 9; ++x) CHECK(g[x] % 3 == x % 3);

  BuiltGroup q8w = realize(GroupSpec::wreath(GroupSpec::quaternion8(), 3));
  CHECK(q8w.group.degree() == 24);
  CHECK(q8w.group.order() == 3072);
}

TEST_CASE("frobenius 7:3") {
  BuiltGroup f = realize(GroupSpec::frobenius73());
  CHECK(f.group.degree() == 7);
  CHECK(f.group.order() == 21);
  CHECK(f.handle("kernel").order() == 7);
  CHECK(f.handle("complement").order() == 3);
}

TEST_CASE("direct products") {
  BuiltGroup ff = realize(
      GroupSpec::product({GroupSpec::frobenius73(), GroupSpec::frobenius73()}));
  CHECK(ff.group.degree() == 14);
  CHECK(ff.group.order() == 441);
  CHECK(ff.handle("factor0").order() == 21);
  CHECK(ff.handle("factor1.kernel").order() == 7);

  BuiltGroup gt = realize(GroupSpec::product({GroupSpec::sym(3), GroupSpec::cyclic(1)}));
  CHECK(gt.group.order() == 6);

  BuiltGroup ss = realize(GroupSpec::product({GroupSpec::sl2(3), GroupSpec::sl2(3)}));
  CHECK(ss.group.order() == 576);

  // Projections are epimorphisms with the complementary kernel.
  const Epimorphism& pi0 = ff.projections[0];
  CHECK(pi0.target().order() == 21);
  CHECK(pi0.kernel().order() == 21);
  Rng rng(9);
  for (int i = 0; i < 10; ++i) {
    Perm a = ff.group.random_element(rng), b = ff.group.random_element(rng);
    CHECK(pi0.apply(a * b) == pi0.apply(a) * pi0.apply(b));
  }
}

TEST_CASE("diagonal subgroups") {
  BuiltGroup ff = realize(
      GroupSpec::product({GroupSpec::frobenius73(), GroupSpec::frobenius73()}));
  Perm seven = Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}});
  PermGroup d = diagonal_subgroup(ff, 0, 1, {seven}, {seven});
  CHECK(d.order() == 7);

  PermGroup dtriv = diagonal_subgroup(ff, 0, 1, {}, {});
  CHECK(dtriv.order() == 1);

  BuiltGroup ss = realize(GroupSpec::product({GroupSpec::sl2(3), GroupSpec::sl2(3)}));
  BuiltGroup one = realize(GroupSpec::sl2(3));
  PermGroup dsl = diagonal_subgroup(ss, 0, 1, one.group.generators(), one.group.generators());
  CHECK(dsl.order() == 24);

  // Mismatched pairing (order-7 against order-3) must be rejected.
  Perm three = Perm::from_cycles(7, {{1, 2, 4}, {3, 6, 5}});
  CHECK_THROWS_AS(diagonal_subgroup(ff, 0, 1, {seven}, {three}), PreconditionError);
}

TEST_CASE("symplectic groups match the order formula") {
  CHECK(count_sl2_3_matrices() == 24);  // independent route for Sp_2(3)

  BuiltGroup sp23 = realize(GroupSpec::sp(1, 3));
  CHECK(sp23.group.degree() == 8);
  CHECK(sp23.group.order() == 24);
  CHECK(sp23.group.order() == sp_order_formula(1, 3));

  BuiltGroup sp43 = realize(GroupSpec::sp(2, 3));
  CHECK(sp43.group.degree() == 80);
  CHECK(sp43.group.order() == 51840);
  CHECK(sp43.group.order() == sp_order_formula(2, 3));

  BuiltGroup sp25 = realize(GroupSpec::sp(1, 5));
  CHECK(sp25.group.order() == 120);
  CHECK(sp25.group.order() == sp_order_formula(1, 5));
}

TEST_CASE("symplectic form preserved on random pairs") {
  std::uint32_t q = 3, n = 2;
  MatrixGroupSpec spec = symplectic_group(n, q);
  PrimeField F(q);
  Mat J = symplectic_form(F, 2 * n);
  Rng rng(13);
  // Random products of generators still preserve the form (exact arithmetic).
  Mat M = Mat::identity(2 * n);
  for (int i = 0; i < 100; ++i) {
    M = mat_mul(F, M, spec.generators[rng.below(spec.generators.size())]);
    CHECK(preserves_form(F, M, J));
  }
}

TEST_CASE("block embeddings") {
  EmbeddingReport r1 = block_embedding(1, 1, 3);
  CHECK(r1.subgroup_order == 576);
  CHECK(r1.index == 90);
  CHECK_FALSE(r1.index_odd);  // consistent with 1 not <= 2 digitwise

  CHECK_THROWS_AS(block_embedding(1, 0, 3), PreconditionError);
}

TEST_CASE("SL2 vector actions") {
  BuiltGroup g = realize(GroupSpec::sl2(3));
  CHECK(g.group.degree() == 8);
  CHECK(g.group.order() == 24);
}

TEST_CASE("regular action and quotient specs") {
  BuiltGroup reg = realize(GroupSpec::regular(GroupSpec::sym(3)));
  CHECK(reg.group.degree() == 6);
  CHECK(reg.group.order() == 6);
  CHECK(reg.group.is_transitive());

  BuiltGroup q = realize(GroupSpec::quotient(GroupSpec::sl2(3), GroupSpec::RadicalTag::O2));
  CHECK(q.group.order() == 3);

  BuiltGroup qc = realize(
      GroupSpec::quotient(GroupSpec::sl2(3), GroupSpec::RadicalTag::Center));
  CHECK(qc.group.order() == 12);
}

TEST_CASE("spec JSON grammar") {
  GroupSpec w = GroupSpec::parse(R"({"wreath":{"base":{"cyclic":3},"top_degree":3}})");
  CHECK(w == GroupSpec::wreath(GroupSpec::cyclic(3), 3));
  GroupSpec sp = GroupSpec::parse(R"({"sp":{"n":3,"q":3}})");
  CHECK(sp == GroupSpec::sp(3, 3));
  GroupSpec pr = GroupSpec::parse(R"({"product":[{"frobenius73":{}},{"frobenius73":{}}]})");
  CHECK(pr.children.size() == 2);

  // Round trip.
  for (const GroupSpec& s :
       {w, sp, pr, GroupSpec::quotient(GroupSpec::sl2(3), GroupSpec::RadicalTag::O2),
        GroupSpec::elem_abelian(2, 3), GroupSpec::regular(GroupSpec::quaternion8())}) {
    CHECK(GroupSpec::from_json(s.to_json()) == s);
  }

  // Unknown keys rejected.
  CHECK_THROWS_AS(GroupSpec::parse(R"({"wreath":{"base":{"cyclic":3},"deg":3}})"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse(R"({"symmetric":4})"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse(R"(not json)"), ParseError);
  // Extension fields rejected.
  CHECK_THROWS_AS(GroupSpec::parse(R"({"sp":{"n":2,"q":9}})"), PreconditionError);
  CHECK_THROWS_AS(GroupSpec::parse(R"({"sl2":{"q":4}})"), PreconditionError);
}

TEST_CASE("deterministic realization") {
  GroupSpec spec = GroupSpec::wreath(GroupSpec::cyclic(3), 3);
  BuiltGroup a = realize(spec), b = realize(spec);
  CHECK(a.group.generators() == b.group.generators());
  CHECK(a.group.chain().fingerprint() == b.group.chain().fingerprint());
}

TEST_CASE("helper constructions") {
  PermGroup psl27 = psl2_projective(7);
  CHECK(psl27.degree() == 8);
  CHECK(psl27.order() == 168);

  PermGroup psl25 = psl2_projective(5);
  CHECK(psl25.order() == 60);

  PermGroup gl = gl3_2_vector_action();
  CHECK(gl.order() == 168);
  PermGroup k = gl3_2_hyperplane_pointwise_stabilizer();
  CHECK(k.order() == 4);
  CHECK(gl.contains_group(k));
  CHECK(fixed_points(k).size() == 3);

  BuiltGroup af = affine_frobenius_168();
  CHECK(af.group.order() == 168);
  CHECK(af.handle("o2").order() == 8);
  CHECK(af.handle("frobenius").order() == 21);
  CHECK(is_normal_in(af.group, af.handle("o2")));
}

TEST_CASE("dihedral and elementary abelian") {
  CHECK(realize(GroupSpec::dihedral(5)).group.order() == 10);
  CHECK(realize(GroupSpec::elem_abelian(2, 3)).group.order() == 8);
  CHECK(realize(GroupSpec::elem_abelian(3, 2)).group.order() == 9);
}
