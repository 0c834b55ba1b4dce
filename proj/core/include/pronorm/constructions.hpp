#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pronorm/caps.hpp"
#include "pronorm/epimorphism.hpp"
#include "pronorm/group_spec.hpp"
#include "pronorm/matrix_group.hpp"
#include "pronorm/perm_group.hpp"

namespace pronorm {

// A realized construction: the permutation group plus named distinguished
// subgroups and (for products) projection epimorphisms.
//
// Handle names: wreaths expose "base", "top" and "factor<i>"; products
// expose "factor<i>" plus the factor's own handles as "factor<i>.<name>";
// Frobenius73 exposes "kernel" and "complement"; constructions whose socle
// is determined carry "socle".
struct BuiltGroup {
  PermGroup group;
  std::map<std::string, PermGroup> handles;
  std::vector<Epimorphism> projections;
  std::optional<GroupSpec> provenance;

  const PermGroup& handle(const std::string& name) const;
  bool has_handle(const std::string& name) const { return handles.count(name) != 0; }
};

// Deterministic realization of a construction AST: identical specs give
// identical generator lists and domain layouts. Domain layouts are part of
// the public contract: wreath block i occupies [i*deg(A), (i+1)*deg(A));
// products occupy disjoint concatenated windows in factor order.
BuiltGroup realize(const GroupSpec& spec, const Caps& caps = default_caps());

// Direct product of already-built groups on the disjoint union of their
// domains, with factor handles and projection epimorphisms.
BuiltGroup direct_product(const std::vector<BuiltGroup>& factors);

// Diagonal subgroup {(x, pair(x))} of two isomorphic subgroups sitting in
// distinct factors of a product, given by an explicit generator pairing in
// factor-local coordinates. The pairing must define an isomorphism
// (relation check by order accounting), else PreconditionError.
PermGroup diagonal_subgroup(const BuiltGroup& product, std::size_t factor_i,
                            std::size_t factor_j, const std::vector<Perm>& gens_i,
                            const std::vector<Perm>& gens_j);

// Faithful action of a matrix group on the nonzero vectors of its natural
// module. For specs carrying a symplectic form the generators are checked
// against the form and the chain order is checked against
// symplectic_order; a mismatch is a hard error, never a silent fallback.
BuiltGroup vector_action(const MatrixGroupSpec& mspec, const Caps& caps = default_caps());

struct EmbeddingReport {
  PermGroup subgroup;  // parent set to the ambient vector action
  PermGroup ambient;
  Integer subgroup_order;
  Integer ambient_order;
  Integer index;
  bool index_odd;
};

// Sp_{2m}(q) x Sp_{2k}(q) block-diagonal inside Sp_{2(m+k)}(q).
EmbeddingReport block_embedding(std::uint32_t m, std::uint32_t k, std::uint32_t q,
                                const Caps& caps = default_caps());

struct WreathEmbedding {
  PermGroup image;          // inside the ambient symplectic vector action
  PermGroup ambient;
  BuiltGroup wreath;        // abstract Sp_{2m}(q) wr Sym(t), natural action
  Epimorphism onto_wreath;  // isomorphism image -> wreath.group
  Integer index;            // |ambient : image|
  bool index_odd;
};

// Sp_{2m}(q) wr Sym(t) embedded block-wise inside Sp_{2mt}(q); block
// permutations are symplectic because the fixed form is a block-diagonal
// sum of identical blocks.
WreathEmbedding symplectic_wreath_embedding(std::uint32_t m, std::uint32_t t,
                                            std::uint32_t q,
                                            const Caps& caps = default_caps());

// Helper constructions outside the GroupSpec grammar.

// PSL_2(q) in its natural action on the q+1 points of the projective line.
PermGroup psl2_projective(std::uint32_t q);

// GL_3(2) on the 7 nonzero vectors of F_2^3.
PermGroup gl3_2_vector_action();

// The pointwise stabilizer of the hyperplane z = 0 in gl3_2_vector_action.
PermGroup gl3_2_hyperplane_pointwise_stabilizer();

// (C_2)^3 : (C_7 : C_3) of order 168 acting on the 8 points of F_2^3,
// with handles "o2" (the translations) and "frobenius" (the complement).
BuiltGroup affine_frobenius_168();

}  // namespace pronorm
