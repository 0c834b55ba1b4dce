#include "pronorm/gf.hpp"

#include "pronorm/sylow.hpp"

namespace pronorm {

PrimeField::PrimeField(std::uint32_t q_) : q(q_) {
  if (!is_prime(q)) throw PreconditionError("field size must be prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  a %= q;
  if (a == 0) throw PreconditionError("inverting zero");
  // Fermat: a^(q-2).
  std::uint32_t result = 1, base = a, e = q - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Mat Mat::identity(std::uint32_t n) {
  Mat m = zero(n);
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::zero(std::uint32_t n) {
  Mat m;
  m.n = n;
  m.a.assign(std::size_t(n) * n, 0);
  return m;
}

Mat mat_mul(const PrimeField& F, const Mat& A, const Mat& B) {
  if (A.n != B.n) throw DegreeMismatch("matrix dimension mismatch");
  Mat C = Mat::zero(A.n);
  for (std::uint32_t i = 0; i < A.n; ++i)
    for (std::uint32_t k = 0; k < A.n; ++k) {
      std::uint32_t aik = A.at(i, k);
      if (!aik) continue;
      for (std::uint32_t j = 0; j < A.n; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
    }
  return C;
}

Mat mat_transpose(const Mat& A) {
  Mat T = Mat::zero(A.n);
  for (std::uint32_t i = 0; i < A.n; ++i)
    for (std::uint32_t j = 0; j < A.n; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

std::uint32_t mat_det(const PrimeField& F, Mat A) {
  std::uint32_t det = 1;
  for (std::uint32_t col = 0; col < A.n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < A.n && A.at(pivot, col) == 0) ++pivot;
    if (pivot == A.n) return 0;
    if (pivot != col) {
      for (std::uint32_t j = 0; j < A.n; ++j) std::swap(A.at(pivot, j), A.at(col, j));
      det = F.neg(det);
    }
    std::uint32_t d = A.at(col, col);
    det = F.mul(det, d);
    std::uint32_t dinv = F.inv(d);
    for (std::uint32_t r = col + 1; r < A.n; ++r) {
      std::uint32_t factor = F.mul(A.at(r, col), dinv);
      if (!factor) continue;
      for (std::uint32_t j = col; j < A.n; ++j)
        A.at(r, j) = F.sub(A.at(r, j), F.mul(factor, A.at(col, j)));
    }
  }
  return det;
}

bool mat_invertible(const PrimeField& F, const Mat& A) { return mat_det(F, A) != 0; }

}  // namespace pronorm
