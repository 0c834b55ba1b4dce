#include "pronorm/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pronorm/errors.hpp"

namespace pronorm {

Perm::Perm(std::size_t degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point x : img_) {
    if (x >= img_.size() || seen[x])
      throw PreconditionError("image table is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree,
                       std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (const auto& cyc : cycles) {
    if (cyc.size() < 2) continue;
    auto it = cyc.begin();
    Point first = *it;
    Point prev = first;
    ++it;
    for (; it != cyc.end(); ++it) {
      if (prev >= degree || *it >= degree)
        throw PreconditionError("cycle point out of range");
      img[prev] = *it;
      prev = *it;
    }
    img[prev] = first;
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (Point x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (Point x = 0; x < img_.size(); ++x) r.img_[img_[x]] = x;
  return r;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("composing permutations of different degrees");
  Perm r;
  r.img_.resize(p.degree());
  for (Point x = 0; x < p.degree(); ++x) r.img_[x] = q.img_[p.img_[x]];
  return r;
}

std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (Point x = 0; x < a.degree(); ++x)
    if (a.img_[x] != b.img_[x]) return a.img_[x] <=> b.img_[x];
  return std::strong_ordering::equal;
}

Perm Perm::conjugated_by(const Perm& g) const {
  if (degree() != g.degree())
    throw DegreeMismatch("conjugating by permutation of different degree");
  Perm r;
  r.img_.resize(degree());
  // r = g^-1 * p * g satisfies r(g(x)) = g(p(x)).
  for (Point x = 0; x < degree(); ++x) r.img_[g.img_[x]] = g.img_[img_[x]];
  return r;
}

Perm Perm::commutator(const Perm& p, const Perm& q) {
  return p.inverse() * q.inverse() * p * q;
}

Integer Perm::order() const {
  Integer ord = 1;
  std::vector<bool> seen(img_.size(), false);
  for (Point start = 0; start < img_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    Point x = start;
    do {
      seen[x] = true;
      x = img_[x];
      ++len;
    } while (x != start);
    ord = boost::multiprecision::lcm(ord, Integer(len));
  }
  return ord;
}

std::size_t Perm::fixed_point_count() const {
  std::size_t n = 0;
  for (Point x = 0; x < img_.size(); ++x)
    if (img_[x] == x) ++n;
  return n;
}

Perm power(const Perm& p, Integer e) {
  if (e < 0) throw PreconditionError("negative exponent");
  Perm result(p.degree());
  Perm base = p;
  while (e > 0) {
    if ((e & 1) != 0) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (Point start = 0; start < img_.size(); ++start) {
    if (seen[start] || img_[start] == start) continue;
    any = true;
    out << '(';
    Point x = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << x;
      first = false;
      seen[x] = true;
      x = img_[x];
    } while (x != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace pronorm
