#include "pronorm/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "pronorm/errors.hpp"
#include "pronorm/sylow.hpp"

namespace pronorm {

std::optional<PrimePower> factor_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  PrimePower pp{p, 0, q};
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++pp.k;
  }
  if (rest != 1) return std::nullopt;
  return pp;
}

SimpleGroupId SimpleGroupId::alt(std::uint64_t n) {
  SimpleGroupId id;
  id.family = Family::Alt;
  id.n = n;
  return id;
}
SimpleGroupId SimpleGroupId::psl2(std::uint64_t q) {
  SimpleGroupId id;
  id.family = Family::PSL2;
  id.q = q;
  return id;
}
SimpleGroupId SimpleGroupId::psl_eps(std::uint64_t n, std::uint64_t q, int eps) {
  SimpleGroupId id;
  id.family = Family::PSLeps;
  id.n = n;
  id.q = q;
  id.eps = eps;
  return id;
}
SimpleGroupId SimpleGroupId::psp(std::uint64_t n, std::uint64_t q) {
  SimpleGroupId id;
  id.family = Family::PSp;
  id.n = n;
  id.q = q;
  return id;
}
SimpleGroupId SimpleGroupId::e6(std::uint64_t q, int eps) {
  SimpleGroupId id;
  id.family = Family::E6eps;
  id.q = q;
  id.eps = eps;
  return id;
}
SimpleGroupId SimpleGroupId::lie_char2() {
  SimpleGroupId id;
  id.family = Family::LieChar2;
  return id;
}
SimpleGroupId SimpleGroupId::sporadic_group(std::string name) {
  SimpleGroupId id;
  id.family = Family::Sporadic;
  id.sporadic = std::move(name);
  return id;
}
SimpleGroupId SimpleGroupId::ree(std::uint64_t q) {
  SimpleGroupId id;
  id.family = Family::Ree;
  id.q = q;
  return id;
}

namespace {

const std::array<const char*, 27> kSporadicNames = {
    "M11", "M12", "M22", "M23", "M24", "J1",  "J2",  "J3",  "J4",
    "Co1", "Co2", "Co3", "Fi22", "Fi23", "Fi24'", "HS", "McL", "He",
    "Ru", "Suz", "ON", "HN", "F5", "Ly", "Th", "B", "M"};

}  // namespace

PrimePower SimpleGroupId::field() const {
  auto pp = factor_prime_power(q);
  if (!pp) throw PreconditionError("q must be a prime power, got " + std::to_string(q));
  return *pp;
}

void SimpleGroupId::validate() const {
  switch (family) {
    case Family::Alt:
      if (n < 5) throw PreconditionError("Alt(n) simple needs n >= 5");
      break;
    case Family::PSL2:
      field();
      if (q < 4) throw PreconditionError("PSL2(q) simple needs q >= 4");
      break;
    case Family::PSLeps:
      field();
      if (eps != 1 && eps != -1) throw PreconditionError("eps must be +1 or -1");
      if (n < 3) throw PreconditionError("PSL_n^eps here needs n >= 3 (use PSL2 for n = 2)");
      if (n == 3 && q == 2 && eps == -1)
        throw PreconditionError("PSU3(2) is not simple");
      break;
    case Family::PSp:
      field();
      if (n < 2) throw PreconditionError("PSp_{2n} here needs n >= 2 (use PSL2 for n = 1)");
      if (n == 2 && q == 2) throw PreconditionError("Sp4(2) is not simple");
      break;
    case Family::E6eps:
      field();
      if (eps != 1 && eps != -1) throw PreconditionError("eps must be +1 or -1");
      break;
    case Family::LieChar2:
      break;
    case Family::Sporadic: {
      bool known = false;
      for (const char* name : kSporadicNames)
        if (sporadic == name) known = true;
      if (!known) throw PreconditionError("unknown sporadic group: " + sporadic);
      break;
    }
    case Family::Ree: {
      PrimePower pp = field();
      if (pp.p != 3 || pp.k < 3 || pp.k % 2 == 0)
        throw PreconditionError("Ree groups 2G2 need q = 3^{2m+1}, m >= 1");
      break;
    }
  }
}

nlohmann::json SimpleGroupId::to_json() const {
  nlohmann::json j;
  switch (family) {
    case Family::Alt: j = {{"family", "Alt"}, {"n", n}}; break;
    case Family::PSL2: j = {{"family", "PSL2"}, {"q", q}}; break;
    case Family::PSLeps:
      j = {{"family", "PSLeps"}, {"n", n}, {"q", q}, {"eps", eps > 0 ? "+" : "-"}};
      break;
    case Family::PSp: j = {{"family", "PSp"}, {"n", n}, {"q", q}}; break;
    case Family::E6eps:
      j = {{"family", "E6eps"}, {"q", q}, {"eps", eps > 0 ? "+" : "-"}};
      break;
    case Family::LieChar2: j = {{"family", "Lie-char-2"}}; break;
    case Family::Sporadic: j = {{"family", "sporadic"}, {"name", sporadic}}; break;
    case Family::Ree: j = {{"family", "Ree"}, {"q", q}}; break;
  }
  return j;
}

namespace {

int parse_eps(const nlohmann::json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "+") return +1;
    if (s == "-") return -1;
  }
  throw ParseError("eps must be \"+\" or \"-\"");
}

void expect_id_keys(const nlohmann::json& j, std::initializer_list<const char*> keys) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = it.key() == "family";
    for (const char* k : keys)
      if (it.key() == k) known = true;
    if (!known) throw ParseError("unknown key in group id: " + it.key());
  }
  for (const char* k : keys)
    if (!j.contains(k)) throw ParseError(std::string("missing key in group id: ") + k);
}

std::uint64_t id_count(const nlohmann::json& j, const char* what) {
  if (!j.is_number_unsigned())
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

}  // namespace

SimpleGroupId SimpleGroupId::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family"))
    throw ParseError("group id needs a \"family\" key");
  std::string fam = j["family"].get<std::string>();
  SimpleGroupId id;
  if (fam == "Alt") {
    expect_id_keys(j, {"n"});
    id = alt(id_count(j["n"], "n"));
  } else if (fam == "PSL2") {
    expect_id_keys(j, {"q"});
    id = psl2(id_count(j["q"], "q"));
  } else if (fam == "PSLeps") {
    expect_id_keys(j, {"n", "q", "eps"});
    id = psl_eps(id_count(j["n"], "n"), id_count(j["q"], "q"), parse_eps(j["eps"]));
  } else if (fam == "PSp") {
    expect_id_keys(j, {"n", "q"});
    id = psp(id_count(j["n"], "n"), id_count(j["q"], "q"));
  } else if (fam == "E6eps") {
    expect_id_keys(j, {"q", "eps"});
    id = e6(id_count(j["q"], "q"), parse_eps(j["eps"]));
  } else if (fam == "Lie-char-2") {
    expect_id_keys(j, {});
    id = lie_char2();
  } else if (fam == "sporadic") {
    expect_id_keys(j, {"name"});
    id = sporadic_group(j["name"].get<std::string>());
  } else if (fam == "Ree") {
    expect_id_keys(j, {"q"});
    id = ree(id_count(j["q"], "q"));
  } else {
    throw ParseError("unknown family: " + fam);
  }
  id.validate();
  return id;
}

SimpleGroupId SimpleGroupId::parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

const char* to_string(SymplecticRankForm f) {
  switch (f) {
    case SymplecticRankForm::power_of_two: return "power_of_two";
    case SymplecticRankForm::fermat_times_power: return "fermat_times_power";
    case SymplecticRankForm::neither: return "neither";
  }
  return "?";
}

SymplecticRankForm sympl_form_check(std::uint64_t n) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  std::uint64_t odd = odd_part_u64(n);
  if (odd == 1) return SymplecticRankForm::power_of_two;
  // odd = 2^{2k} + 1 with k >= 1?
  std::uint64_t rest = odd - 1;
  if ((rest & (rest - 1)) == 0) {
    unsigned e = 0;
    while ((1ULL << e) < rest) ++e;
    if (e >= 2 && e % 2 == 0) return SymplecticRankForm::fermat_times_power;
  }
  return SymplecticRankForm::neither;
}

DigitRecipe simpl_nonpron_digits(std::uint64_t n) {
  if (sympl_form_check(n) != SymplecticRankForm::neither)
    throw PreconditionError("digit recipe applies only to the 'neither' class");
  std::vector<unsigned> even_pos, odd_pos;
  for (unsigned i = 0; i < 64; ++i)
    if (n & (1ULL << i)) (i % 2 == 0 ? even_pos : odd_pos).push_back(i);
  std::size_t digits = even_pos.size() + odd_pos.size();

  DigitRecipe out;
  if (!even_pos.empty() && !odd_pos.empty()) {
    // Two digits of opposite parity: 2^even + 2^odd = 0 mod 3.
    if (digits == 2) {
      out.flagged = true;  // the only selection is n itself
      return out;
    }
    out.positions = {even_pos[0], odd_pos[0]};
  } else {
    // All digits share a parity; the 'neither' precondition forces at
    // least three of them (two same-parity digits make n a power of two
    // times 2^{2k}+1).
    const auto& pos = even_pos.empty() ? odd_pos : even_pos;
    if (pos.size() == 3) {
      out.flagged = true;
      return out;
    }
    out.positions = {pos[0], pos[1], pos[2]};
  }
  std::uint64_t m = 0;
  for (unsigned i : out.positions) m |= 1ULL << i;
  out.m = m;
  return out;
}

bool awrsn_condition(std::uint64_t a_order, const std::vector<std::uint64_t>& n_list,
                     bool strict) {
  if (a_order < 1 || n_list.empty())
    throw PreconditionError("awrsn_condition needs a_order >= 1 and a nonempty list");
  for (std::uint64_t ni : n_list) {
    // All nonzero submasks m of ni.
    for (std::uint64_t m = ni; m; m = (m - 1) & ni) {
      if (strict && m == ni) continue;
      std::uint64_t g = std::gcd(a_order, m);
      if ((g & (g - 1)) != 0) return false;
    }
  }
  return true;
}

namespace {

Integer odd_of(Integer v) { return odd_part(std::move(v)); }

unsigned popcount(std::uint64_t n) {
  unsigned c = 0;
  while (n) {
    c += n & 1;
    n >>= 1;
  }
  return c;
}

bool q_is_pm3_mod8(std::uint64_t q) { return q % 8 == 3 || q % 8 == 5; }

NormalizerPrediction self_normalized() { return {Integer(1), "self-normalized"}; }

}  // namespace

NormalizerPrediction sylow2_normalizer_prediction(const SimpleGroupId& id) {
  id.validate();
  switch (id.family) {
    case SimpleGroupId::Family::Alt:
      if (id.n == 5) return sylow2_normalizer_prediction(SimpleGroupId::psl2(5));
      if (id.n == 6) return sylow2_normalizer_prediction(SimpleGroupId::psl2(9));
      return self_normalized();
    case SimpleGroupId::Family::PSL2: {
      PrimePower pp = id.field();
      if (pp.p == 2) return {Integer(id.q - 1), "Borel"};
      if (q_is_pm3_mod8(id.q)) return {Integer(3), "Alt(4)"};
      return self_normalized();
    }
    case SimpleGroupId::Family::PSp: {
      PrimePower pp = id.field();
      if (pp.p == 2) {
        Integer idx = 1;
        for (std::uint64_t i = 0; i < id.n; ++i) idx *= Integer(id.q - 1);
        return {idx, "Borel"};
      }
      if (q_is_pm3_mod8(id.q)) {
        unsigned t = popcount(id.n);
        Integer idx = 1;
        for (unsigned i = 0; i < t; ++i) idx *= 3;
        return {idx, "elementary abelian of order 3^" + std::to_string(t)};
      }
      return self_normalized();
    }
    case SimpleGroupId::Family::PSLeps: {
      PrimePower pp = id.field();
      if (pp.p == 2)
        throw PreconditionError("even-characteristic PSL_n^eps not supported here");
      if (id.n % 2 == 1) return self_normalized();  // a 2-adic digit at position 0
      unsigned t = popcount(id.n);
      if (t <= 1) return self_normalized();
      Integer qe = id.eps > 0 ? Integer(id.q) - 1 : Integer(id.q) + 1;
      Integer idx = 1;
      for (unsigned i = 0; i + 2 < t; ++i) idx *= odd_of(qe);
      idx *= odd_of(qe) / odd_of(boost::multiprecision::gcd(qe, Integer(id.n)));
      return {idx, "direct product of " + std::to_string(t - 1) + " cyclic groups"};
    }
    case SimpleGroupId::Family::E6eps: {
      PrimePower pp = id.field();
      if (pp.p == 2)
        throw PreconditionError("even-characteristic E6 not supported here");
      Integer qe = id.eps > 0 ? Integer(id.q) - 1 : Integer(id.q) + 1;
      Integer idx = odd_of(qe) / boost::multiprecision::gcd(qe, Integer(3));
      return {idx, "cyclic"};
    }
    case SimpleGroupId::Family::LieChar2:
      throw PreconditionError(
          "char-2 normalizer index depends on the specific group (Borel)");
    case SimpleGroupId::Family::Sporadic: {
      const std::string& s = id.sporadic;
      if (s == "J2" || s == "J3" || s == "Suz" || s == "F5" || s == "HN")
        return {Integer(3), "index 3"};
      if (s == "J1") return {Integer(21), "(C2)^3 : (C7 : C3)"};
      return self_normalized();
    }
    case SimpleGroupId::Family::Ree:
      return {Integer(21), "(C2)^3 : (C7 : C3)"};
  }
  throw Error("unreachable");
}

const char* to_string(ClassificationStatus s) {
  switch (s) {
    case ClassificationStatus::all_pronormal: return "all_pronormal";
    case ClassificationStatus::has_nonpronormal: return "has_nonpronormal";
    case ClassificationStatus::conjectured_all: return "conjectured_all";
    case ClassificationStatus::conjectured_nonpronormal: return "conjectured_nonpronormal";
    case ClassificationStatus::open: return "open";
  }
  return "?";
}

nlohmann::json Classification::to_json() const {
  return {{"status", to_string(status)}, {"citation", citation}};
}

Classification classification_oracle(const SimpleGroupId& id) {
  id.validate();
  using F = SimpleGroupId::Family;
  switch (id.family) {
    case F::Alt:
    case F::LieChar2:
    case F::Sporadic:
    case F::Ree:
      return {ClassificationStatus::all_pronormal, kTagBaseFamilies};
    case F::PSL2:
      // Characteristic 2 or linear rank 2 = 2^1: both in the base families.
      return {ClassificationStatus::all_pronormal, kTagBaseFamilies};
    case F::PSLeps: {
      PrimePower pp = id.field();
      if (pp.p == 2) return {ClassificationStatus::all_pronormal, kTagBaseFamilies};
      if ((id.n & (id.n - 1)) == 0)
        return {ClassificationStatus::all_pronormal, kTagBaseFamilies};
      // Conjectured criterion: every m prec n must have gcd(m, q^{1+eps}(q-eps))
      // a power of 2.
      Integer modulus = id.eps > 0 ? Integer(id.q) * id.q * (Integer(id.q) - 1)
                                   : Integer(id.q) + 1;
      bool ok = true;
      for (std::uint64_t m = (id.n - 1) & id.n; m; m = (m - 1) & id.n) {
        Integer g = boost::multiprecision::gcd(Integer(m), modulus);
        if (odd_part(g) != 1) {
          ok = false;
          break;
        }
      }
      return {ok ? ClassificationStatus::conjectured_all
                 : ClassificationStatus::conjectured_nonpronormal,
              kTagPslConjecture};
    }
    case F::PSp: {
      PrimePower pp = id.field();
      if (pp.p == 2) return {ClassificationStatus::all_pronormal, kTagBaseFamilies};
      if (!q_is_pm3_mod8(id.q))
        return {ClassificationStatus::all_pronormal, kTagSymplClassification};
      if (sympl_form_check(id.n) != SymplecticRankForm::neither)
        return {ClassificationStatus::all_pronormal, kTagSymplClassification};
      if (id.n % 3 == 0)
        return {ClassificationStatus::has_nonpronormal, kTagSymplCounterexample};
      return {ClassificationStatus::has_nonpronormal, kTagSymplNonpronormal};
    }
    case F::E6eps: {
      PrimePower pp = id.field();
      Integer qe = id.eps > 0 ? Integer(id.q) - 1 : Integer(id.q) + 1;
      bool divisible_18 = qe % 18 == 0;
      bool k_power_of_two = (pp.k & (pp.k - 1)) == 0;
      bool all = !divisible_18 && (!(pp.p != 2 && id.eps > 0) || k_power_of_two);
      return {all ? ClassificationStatus::all_pronormal
                  : ClassificationStatus::has_nonpronormal,
              kTagE6};
    }
  }
  return {ClassificationStatus::open, "unclassified"};
}

Integer ocgs_prediction(const SimpleGroupId& id) {
  id.validate();
  using F = SimpleGroupId::Family;
  if (id.family == F::E6eps) {
    PrimePower pp = id.field();
    if (pp.p == 2) return 1;
    Integer qe = id.eps > 0 ? Integer(id.q) - 1 : Integer(id.q) + 1;
    return odd_of(qe) / boost::multiprecision::gcd(qe, Integer(3));
  }
  if (id.family == F::PSLeps) {
    PrimePower pp = id.field();
    if (pp.p == 2) return 1;
    if (id.n % 2 == 1) return 1;  // 2-adic digit at position 0 violates s_t > 0
    unsigned t = popcount(id.n);
    if (t <= 1) return 1;
    Integer qe = id.eps > 0 ? Integer(id.q) - 1 : Integer(id.q) + 1;
    Integer v = 1;
    for (unsigned i = 0; i + 2 < t; ++i) v *= odd_of(qe);
    v *= odd_of(qe) / odd_of(boost::multiprecision::gcd(qe, Integer(id.n)));
    return v;
  }
  return 1;
}

}  // namespace pronorm
