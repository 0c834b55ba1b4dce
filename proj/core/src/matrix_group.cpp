#include "pronorm/matrix_group.hpp"

namespace pronorm {

Mat symplectic_form(const PrimeField& F, std::uint32_t two_n) {
  if (two_n % 2 != 0) throw PreconditionError("symplectic form needs even dimension");
  Mat J = Mat::zero(two_n);
  for (std::uint32_t b = 0; b + 1 < two_n; b += 2) {
    J.at(b, b + 1) = 1;
    J.at(b + 1, b) = F.neg(1);
  }
  return J;
}

bool preserves_form(const PrimeField& F, const Mat& M, const Mat& J) {
  Mat left = mat_mul(F, mat_mul(F, M, J), mat_transpose(M));
  return left == J;
}

Integer symplectic_order(std::uint32_t n, const Integer& q) {
  Integer order = 1;
  Integer qn2 = 1;
  for (std::uint32_t i = 0; i < n * n; ++i) qn2 *= q;
  order *= qn2;
  Integer q2i = 1;
  for (std::uint32_t i = 1; i <= n; ++i) {
    q2i = 1;
    for (std::uint32_t k = 0; k < 2 * i; ++k) q2i *= q;
    order *= (q2i - 1);
  }
  return order;
}

MatrixGroupSpec symplectic_group(std::uint32_t n, std::uint32_t q) {
  if (n < 1) throw PreconditionError("symplectic rank must be positive");
  PrimeField F(q);
  if (q == 2 && n > 1)
    throw PreconditionError("even characteristic supported only for Sp_2 = SL_2");
  std::uint32_t d = 2 * n;
  Mat J = symplectic_form(F, d);

  MatrixGroupSpec spec;
  spec.dimension = d;
  spec.q = q;
  spec.form = J;

  // SL_2 pair acting on the first hyperbolic plane.
  Mat E = Mat::identity(d);
  E.at(1, 0) = 1;  // row convention: e1 -> e1, f1 -> e1 + f1
  Mat W = Mat::identity(d);
  W.at(0, 0) = 0;
  W.at(0, 1) = 1;
  W.at(1, 0) = F.neg(1);
  W.at(1, 1) = 0;
  spec.generators.push_back(E);
  spec.generators.push_back(W);

  if (n >= 2) {
    // Block permutations: transposition of blocks 0,1 and the n-cycle.
    Mat T = Mat::zero(d);
    for (std::uint32_t i = 4; i < d; ++i) T.at(i, i) = 1;
    T.at(0, 2) = T.at(1, 3) = T.at(2, 0) = T.at(3, 1) = 1;
    spec.generators.push_back(T);
    if (n >= 3) {
      Mat C = Mat::zero(d);
      for (std::uint32_t b = 0; b < n; ++b) {
        std::uint32_t nb = (b + 1) % n;
        C.at(2 * b, 2 * nb) = 1;
        C.at(2 * b + 1, 2 * nb + 1) = 1;
      }
      spec.generators.push_back(C);
    }
    // Cross-block transvection t_v with v = e1 + e2:
    // x -> x + <x, v> v. Symplectic for every v.
    std::vector<std::uint32_t> v(d, 0);
    v[0] = 1;
    v[2] = 1;
    Mat X = Mat::identity(d);
    for (std::uint32_t i = 0; i < d; ++i) {
      // <e_i, v> from the form: sum_j J[i][j] v[j].
      std::uint32_t c = 0;
      for (std::uint32_t j = 0; j < d; ++j) c = F.add(c, F.mul(J.at(i, j), v[j]));
      if (!c) continue;
      for (std::uint32_t j = 0; j < d; ++j)
        X.at(i, j) = F.add(X.at(i, j), F.mul(c, v[j]));
    }
    spec.generators.push_back(X);
  }

  for (const Mat& g : spec.generators) {
    if (!mat_invertible(F, g)) throw Error("singular symplectic generator");
    if (!preserves_form(F, g, J)) throw Error("generator breaks the symplectic form");
  }
  return spec;
}

Point vector_to_point(const PrimeField& F, const std::vector<std::uint32_t>& v) {
  std::uint64_t acc = 0, pw = 1;
  for (std::uint32_t x : v) {
    acc += std::uint64_t(x % F.q) * pw;
    pw *= F.q;
  }
  if (acc == 0) throw PreconditionError("zero vector has no point");
  return static_cast<Point>(acc - 1);
}

std::vector<std::uint32_t> point_to_vector(const PrimeField& F, std::uint32_t dim, Point p) {
  std::uint64_t acc = std::uint64_t(p) + 1;
  std::vector<std::uint32_t> v(dim);
  for (std::uint32_t i = 0; i < dim; ++i) {
    v[i] = static_cast<std::uint32_t>(acc % F.q);
    acc /= F.q;
  }
  return v;
}

Perm matrix_to_perm(const PrimeField& F, const Mat& M) {
  std::uint64_t npoints = 1;
  for (std::uint32_t i = 0; i < M.n; ++i) npoints *= F.q;
  npoints -= 1;
  std::vector<Point> img(npoints);
  for (std::uint64_t p = 0; p < npoints; ++p) {
    auto v = point_to_vector(F, M.n, static_cast<Point>(p));
    std::vector<std::uint32_t> w(M.n, 0);
    for (std::uint32_t i = 0; i < M.n; ++i) {
      if (!v[i]) continue;
      for (std::uint32_t j = 0; j < M.n; ++j)
        w[j] = F.add(w[j], F.mul(v[i], M.at(i, j)));
    }
    img[p] = vector_to_point(F, w);
  }
  return Perm(std::move(img));
}

}  // namespace pronorm
