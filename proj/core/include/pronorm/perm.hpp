#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pronorm/bigint.hpp"

namespace pronorm {

using Point = std::uint32_t;

// A bijection on the points {0, ..., degree-1}, stored as its image table.
//
// Composition is fixed left-to-right throughout the library:
//   (p * q) maps x to q(p(x)).
// Conjugation follows the same convention: p^g = g^-1 * p * g.
class Perm {
 public:
  Perm() = default;

  // Identity on `degree` points.
  explicit Perm(std::size_t degree);

  // From an image table; validates bijectivity.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree) { return Perm(degree); }

  // Convenience constructor from disjoint-or-not cycles, e.g.
  // from_cycles(4, {{0,1},{2,3}}).
  static Perm from_cycles(std::size_t degree,
                          std::initializer_list<std::initializer_list<Point>> cycles);

  std::size_t degree() const { return img_.size(); }
  Point operator[](Point x) const { return img_[x]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;

  friend Perm operator*(const Perm& p, const Perm& q);
  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b);

  // g^-1 * p * g, computed in one pass.
  Perm conjugated_by(const Perm& g) const;

  // Commutator p^-1 q^-1 p q.
  static Perm commutator(const Perm& p, const Perm& q);

  // Order as a permutation (lcm of cycle lengths).
  Integer order() const;

  std::size_t fixed_point_count() const;

  std::string to_cycle_string() const;

 private:
  std::vector<Point> img_;
};

inline std::size_t hash_value(const Perm& p) {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ p.degree();
  for (Point x : p.images()) h = (h * 0x100000001b3ULL) ^ x;
  return h;
}

struct PermHash {
  std::size_t operator()(const Perm& p) const { return hash_value(p); }
};

// p^e by binary exponentiation; e >= 0.
Perm power(const Perm& p, Integer e);

}  // namespace pronorm
