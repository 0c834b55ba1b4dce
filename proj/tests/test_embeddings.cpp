#include "doctest.h"

#include "pronorm/constructions.hpp"
#include "pronorm/epimorphism.hpp"
#include "pronorm/rng.hpp"
#include "pronorm/subgroup_ops.hpp"
#include "pronorm/sylow.hpp"

using namespace pronorm;

TEST_CASE("Sp6(3) order matches the formula") {
  BuiltGroup sp63 = realize(GroupSpec::sp(3, 3));
  CHECK(sp63.group.degree() == 728);
  // q^{n^2} prod (q^{2i} - 1) = 3^9 * 8 * 80 * 728, computed independently.
  Integer want = Integer(19683) * 8 * 80 * 728;
  CHECK(want == Integer("9170703360"));
  CHECK(sp63.group.order() == want);
}

TEST_CASE("block embedding Sp2 x Sp4 inside Sp6(3)") {
  EmbeddingReport rep = block_embedding(1, 2, 3);
  CHECK(rep.subgroup_order == Integer(24) * 51840);
  CHECK(rep.index == 7371);
  CHECK(rep.index_odd);  // consistent with 1 prec 3 digitwise
}

TEST_CASE("wreath embedding details") {
  WreathEmbedding we = symplectic_wreath_embedding(1, 3, 3);
  // Embedding consistency: the image order equals the natural wreath's.
  CHECK(we.image.order() == we.wreath.group.order());
  CHECK(we.onto_wreath.kernel().is_trivial());

  // The isomorphism respects products on random elements.
  Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    Perm a = we.image.random_element(rng);
    Perm b = we.image.random_element(rng);
    CHECK(we.onto_wreath.apply(a * b) ==
          we.onto_wreath.apply(a) * we.onto_wreath.apply(b));
  }

  // The image contains the full block-diagonal Sp2 x Sp2 x Sp2.
  PrimeField F(3);
  MatrixGroupSpec sp2 = symplectic_group(1, 3);
  for (std::uint32_t block = 0; block < 3; ++block) {
    for (const Mat& g : sp2.generators) {
      Mat big = Mat::identity(6);
      for (std::uint32_t i = 0; i < 2; ++i)
        for (std::uint32_t j = 0; j < 2; ++j)
          big.at(2 * block + i, 2 * block + j) = g.at(i, j);
      CHECK(we.image.contains(matrix_to_perm(F, big)));
    }
  }

  // Degenerate wreath: t = 1 gives the whole Sp2(3).
  WreathEmbedding triv = symplectic_wreath_embedding(1, 1, 3);
  CHECK(triv.image.order() == 24);
  CHECK(triv.index == 1);
}

TEST_CASE("p_radical dominates every normal p-subgroup in the lattice") {
  for (const GroupSpec& spec :
       {GroupSpec::sl2(3), GroupSpec::sym(4),
        GroupSpec::wreath(GroupSpec::cyclic(2), 2)}) {
    BuiltGroup g = realize(spec);
    PermGroup o2 = p_radical(g.group, 2);
    CHECK(is_normal_in(g.group, o2));
    CHECK(p_part(o2.order(), 2) == o2.order());
    // Every normal 2-subgroup from the minimal-normal machinery sits inside.
    for (const PermGroup& m : minimal_normal_subgroups(g.group))
      if (p_part(m.order(), 2) == m.order() && m.order() < g.group.order())
        CHECK(o2.contains_group(m));
  }
}

TEST_CASE("quotient of the wreath copy by its 2-radical") {
  WreathEmbedding we = symplectic_wreath_embedding(1, 2, 3);
  CHECK(we.image.order() == Integer(24) * 24 * 2);
  PermGroup o2 = p_radical(we.wreath.group, 2);
  CHECK(o2.order() == 64);  // Q8 x Q8; the block swap is not in the radical
  Epimorphism q = quotient(we.wreath.group, o2);
  CHECK(q.target().order() == 18);  // C3 wr Sym(2)
}
