#pragma once

#include <cstdint>
#include <vector>

#include "pronorm/errors.hpp"

namespace pronorm {

// Arithmetic in the prime field F_q. Extension fields are out of scope by
// design; constructors must reject non-prime q.
struct PrimeField {
  std::uint32_t q;

  explicit PrimeField(std::uint32_t q_);

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % q; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + q - b % q) % q; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t(a) * b) % q);
  }
  std::uint32_t neg(std::uint32_t a) const { return a % q == 0 ? 0 : q - a % q; }
  std::uint32_t inv(std::uint32_t a) const;
};

// Dense square matrix over F_q, row-major. Vectors act as rows: v -> v*M,
// so left-to-right matrix products match left-to-right permutation
// composition in the induced vector action.
struct Mat {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> a;

  Mat() = default;
  Mat(std::uint32_t n_, std::vector<std::uint32_t> entries) : n(n_), a(std::move(entries)) {}
  static Mat identity(std::uint32_t n);
  static Mat zero(std::uint32_t n);

  std::uint32_t& at(std::uint32_t i, std::uint32_t j) { return a[i * n + j]; }
  std::uint32_t at(std::uint32_t i, std::uint32_t j) const { return a[i * n + j]; }

  friend bool operator==(const Mat& x, const Mat& y) = default;
};

Mat mat_mul(const PrimeField& F, const Mat& A, const Mat& B);
Mat mat_transpose(const Mat& A);
std::uint32_t mat_det(const PrimeField& F, Mat A);
bool mat_invertible(const PrimeField& F, const Mat& A);

}  // namespace pronorm
