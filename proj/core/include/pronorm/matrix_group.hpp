#pragma once

#include <cstdint>
#include <vector>

#include "pronorm/bigint.hpp"
#include "pronorm/gf.hpp"
#include "pronorm/perm.hpp"

namespace pronorm {

// A matrix group over a prime field with a fixed symplectic form: the
// block-diagonal sum of 2x2 blocks [[0,1],[-1,0]]. Generators of symplectic
// specs preserve the form exactly (checked at construction).
struct MatrixGroupSpec {
  std::uint32_t dimension = 0;
  std::uint32_t q = 0;
  std::vector<Mat> generators;
  Mat form;  // relevant for symplectic specs; empty (n=0) otherwise
};

// The fixed form J for dimension 2n over F_q.
Mat symplectic_form(const PrimeField& F, std::uint32_t two_n);

// M J M^T == J in exact arithmetic (row-vector convention).
bool preserves_form(const PrimeField& F, const Mat& M, const Mat& J);

// |Sp_{2n}(q)| = q^{n^2} * prod_{i=1..n} (q^{2i} - 1).
Integer symplectic_order(std::uint32_t n, const Integer& q);

// Generators of Sp_{2n}(q) preserving the fixed form, for odd prime q
// (q = 2 admitted for n = 1, where Sp_2 = SL_2). The generating set is
// an SL_2 pair in the first block, block permutations, and a cross-block
// transvection; callers must verify the chain order against
// symplectic_order, which realize() does.
MatrixGroupSpec symplectic_group(std::uint32_t n, std::uint32_t q);

// Layout of the vector action: the nonzero row vector v = (v_0,...,v_{d-1})
// over F_q sits at point (sum_j v_j q^j) - 1. This numbering is part of the
// public contract; witnesses in reports refer to it.
Point vector_to_point(const PrimeField& F, const std::vector<std::uint32_t>& v);
std::vector<std::uint32_t> point_to_vector(const PrimeField& F, std::uint32_t dim, Point p);

// Permutation induced by v -> v*M on the nonzero vectors.
Perm matrix_to_perm(const PrimeField& F, const Mat& M);

}  // namespace pronorm
