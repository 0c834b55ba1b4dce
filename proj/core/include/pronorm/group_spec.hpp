#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace pronorm {

// Construction AST for every group the library builds by name. Serializes
// losslessly to the JSON grammar, e.g.
//   {"wreath":{"base":{"cyclic":3},"top_degree":3}}
//   {"sp":{"n":3,"q":3}}
//   {"product":[{"frobenius73":{}},{"frobenius73":{}}]}
// Deserialization rejects unknown keys.
struct GroupSpec {
  enum class Kind {
    Sym,
    Alt,
    Cyclic,
    Dihedral,
    ElemAbelian,
    Quaternion8,
    Frobenius73,
    SL2,
    Sp,
    DirectProduct,
    WreathNatural,
    RegularAction,
    Quotient,
  };
  enum class RadicalTag { O2, Odd, Center };

  Kind kind = Kind::Sym;
  std::uint64_t n = 0;               // Sym/Alt/Cyclic/Dihedral size, ElemAbelian k,
                                     // Sp half-rank, wreath top degree
  std::uint64_t p = 0;               // ElemAbelian prime
  std::uint64_t q = 0;               // SL2 / Sp field size
  RadicalTag tag = RadicalTag::O2;   // Quotient
  std::vector<GroupSpec> children;   // product factors / wreath base /
                                     // regular inner / quotient inner

  static GroupSpec sym(std::uint64_t n);
  static GroupSpec alt(std::uint64_t n);
  static GroupSpec cyclic(std::uint64_t n);
  static GroupSpec dihedral(std::uint64_t n);
  static GroupSpec elem_abelian(std::uint64_t p, std::uint64_t k);
  static GroupSpec quaternion8();
  static GroupSpec frobenius73();
  static GroupSpec sl2(std::uint64_t q);
  static GroupSpec sp(std::uint64_t n, std::uint64_t q);
  static GroupSpec product(std::vector<GroupSpec> factors);
  static GroupSpec wreath(GroupSpec base, std::uint64_t top_degree);
  static GroupSpec regular(GroupSpec inner);
  static GroupSpec quotient(GroupSpec inner, RadicalTag tag);

  // Validates parameter domains (primality, n >= 1, ...); throws
  // PreconditionError with a reason.
  void validate() const;

  nlohmann::json to_json() const;
  static GroupSpec from_json(const nlohmann::json& j);
  static GroupSpec parse(const std::string& text);

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

}  // namespace pronorm
