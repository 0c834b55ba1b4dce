#include "pronorm/group_spec.hpp"

#include "pronorm/errors.hpp"
#include "pronorm/sylow.hpp"

namespace pronorm {

using nlohmann::json;

namespace {

GroupSpec make(GroupSpec::Kind kind, std::uint64_t n = 0) {
  GroupSpec s;
  s.kind = kind;
  s.n = n;
  return s;
}

}  // namespace

GroupSpec GroupSpec::sym(std::uint64_t n) { return make(Kind::Sym, n); }
GroupSpec GroupSpec::alt(std::uint64_t n) { return make(Kind::Alt, n); }
GroupSpec GroupSpec::cyclic(std::uint64_t n) { return make(Kind::Cyclic, n); }
GroupSpec GroupSpec::dihedral(std::uint64_t n) { return make(Kind::Dihedral, n); }
GroupSpec GroupSpec::elem_abelian(std::uint64_t p, std::uint64_t k) {
  GroupSpec s = make(Kind::ElemAbelian, k);
  s.p = p;
  return s;
}
GroupSpec GroupSpec::quaternion8() { return make(Kind::Quaternion8); }
GroupSpec GroupSpec::frobenius73() { return make(Kind::Frobenius73); }
GroupSpec GroupSpec::sl2(std::uint64_t q) {
  GroupSpec s = make(Kind::SL2);
  s.q = q;
  return s;
}
GroupSpec GroupSpec::sp(std::uint64_t n, std::uint64_t q) {
  GroupSpec s = make(Kind::Sp, n);
  s.q = q;
  return s;
}
GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  GroupSpec s = make(Kind::DirectProduct);
  s.children = std::move(factors);
  return s;
}
GroupSpec GroupSpec::wreath(GroupSpec base, std::uint64_t top_degree) {
  GroupSpec s = make(Kind::WreathNatural, top_degree);
  s.children.push_back(std::move(base));
  return s;
}
GroupSpec GroupSpec::regular(GroupSpec inner) {
  GroupSpec s = make(Kind::RegularAction);
  s.children.push_back(std::move(inner));
  return s;
}
GroupSpec GroupSpec::quotient(GroupSpec inner, RadicalTag tag) {
  GroupSpec s = make(Kind::Quotient);
  s.tag = tag;
  s.children.push_back(std::move(inner));
  return s;
}

void GroupSpec::validate() const {
  switch (kind) {
    case Kind::Sym:
    case Kind::Alt:
    case Kind::Cyclic:
      if (n < 1) throw PreconditionError("size must be >= 1");
      break;
    case Kind::Dihedral:
      if (n < 3) throw PreconditionError("dihedral size must be >= 3");
      break;
    case Kind::ElemAbelian:
      if (!is_prime(p)) throw PreconditionError("elementary abelian p must be prime");
      if (n < 1) throw PreconditionError("elementary abelian rank must be >= 1");
      break;
    case Kind::Quaternion8:
    case Kind::Frobenius73:
      break;
    case Kind::SL2:
      if (!is_prime(q)) throw PreconditionError("q must be prime (extension fields rejected)");
      break;
    case Kind::Sp:
      if (!is_prime(q)) throw PreconditionError("q must be prime (extension fields rejected)");
      if (q == 2 && n > 1) throw PreconditionError("Sp_{2n}(2) with n > 1 not supported");
      if (n < 1) throw PreconditionError("symplectic rank must be >= 1");
      break;
    case Kind::DirectProduct:
      if (children.empty()) throw PreconditionError("product needs at least one factor");
      for (const auto& c : children) c.validate();
      break;
    case Kind::WreathNatural:
      if (n < 1) throw PreconditionError("wreath top degree must be >= 1");
      children.at(0).validate();
      break;
    case Kind::RegularAction:
    case Kind::Quotient:
      children.at(0).validate();
      break;
  }
}

namespace {

void expect_keys(const json& j, std::initializer_list<const char*> keys) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys)
      if (it.key() == k) known = true;
    if (!known) throw ParseError("unknown key in group spec: " + it.key());
  }
  for (const char* k : keys)
    if (!j.contains(k)) throw ParseError(std::string("missing key in group spec: ") + k);
}

std::uint64_t as_count(const json& j, const char* what) {
  if (!j.is_number_unsigned()) throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

}  // namespace

json GroupSpec::to_json() const {
  switch (kind) {
    case Kind::Sym: return {{"sym", n}};
    case Kind::Alt: return {{"alt", n}};
    case Kind::Cyclic: return {{"cyclic", n}};
    case Kind::Dihedral: return {{"dihedral", n}};
    case Kind::ElemAbelian: return {{"elem_abelian", {{"p", p}, {"k", n}}}};
    case Kind::Quaternion8: return {{"quaternion8", json::object()}};
    case Kind::Frobenius73: return {{"frobenius73", json::object()}};
    case Kind::SL2: return {{"sl2", {{"q", q}}}};
    case Kind::Sp: return {{"sp", {{"n", n}, {"q", q}}}};
    case Kind::DirectProduct: {
      json arr = json::array();
      for (const auto& c : children) arr.push_back(c.to_json());
      return {{"product", arr}};
    }
    case Kind::WreathNatural:
      return {{"wreath", {{"base", children[0].to_json()}, {"top_degree", n}}}};
    case Kind::RegularAction: return {{"regular", children[0].to_json()}};
    case Kind::Quotient: {
      const char* tag_name = tag == RadicalTag::O2 ? "o2"
                             : tag == RadicalTag::Odd ? "odd"
                                                      : "center";
      return {{"quotient", {{"of", children[0].to_json()}, {"radical", tag_name}}}};
    }
  }
  throw Error("unreachable");
}

GroupSpec GroupSpec::from_json(const json& j) {
  if (!j.is_object() || j.size() != 1)
    throw ParseError("group spec must be a single-key object");
  const std::string key = j.begin().key();
  const json& v = j.begin().value();
  GroupSpec s;
  if (key == "sym") {
    s = sym(as_count(v, "sym"));
  } else if (key == "alt") {
    s = alt(as_count(v, "alt"));
  } else if (key == "cyclic") {
    s = cyclic(as_count(v, "cyclic"));
  } else if (key == "dihedral") {
    s = dihedral(as_count(v, "dihedral"));
  } else if (key == "elem_abelian") {
    expect_keys(v, {"p", "k"});
    s = elem_abelian(as_count(v["p"], "p"), as_count(v["k"], "k"));
  } else if (key == "quaternion8") {
    if (!v.is_object() || !v.empty()) throw ParseError("quaternion8 takes no parameters");
    s = quaternion8();
  } else if (key == "frobenius73") {
    if (!v.is_object() || !v.empty()) throw ParseError("frobenius73 takes no parameters");
    s = frobenius73();
  } else if (key == "sl2") {
    expect_keys(v, {"q"});
    s = sl2(as_count(v["q"], "q"));
  } else if (key == "sp") {
    expect_keys(v, {"n", "q"});
    s = sp(as_count(v["n"], "n"), as_count(v["q"], "q"));
  } else if (key == "product") {
    if (!v.is_array()) throw ParseError("product takes an array of specs");
    std::vector<GroupSpec> factors;
    for (const auto& c : v) factors.push_back(from_json(c));
    s = product(std::move(factors));
  } else if (key == "wreath") {
    expect_keys(v, {"base", "top_degree"});
    s = wreath(from_json(v["base"]), as_count(v["top_degree"], "top_degree"));
  } else if (key == "regular") {
    s = regular(from_json(v));
  } else if (key == "quotient") {
    expect_keys(v, {"of", "radical"});
    std::string tag_name = v["radical"].get<std::string>();
    RadicalTag tag;
    if (tag_name == "o2")
      tag = RadicalTag::O2;
    else if (tag_name == "odd")
      tag = RadicalTag::Odd;
    else if (tag_name == "center")
      tag = RadicalTag::Center;
    else
      throw ParseError("unknown radical tag: " + tag_name);
    s = quotient(from_json(v["of"]), tag);
  } else {
    throw ParseError("unknown group spec kind: " + key);
  }
  s.validate();
  return s;
}

GroupSpec GroupSpec::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

}  // namespace pronorm
