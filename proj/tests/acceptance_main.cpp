// Acceptance suite: one criterion per registered entry, each with pinned
// expected values and a wall-clock budget. Prints one pass/fail line per
// criterion; the process exit code is the number of failures.
//
// Run all:            ./acceptance
// Run one criterion:  ./acceptance --criterion 3

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "pronorm/constructions.hpp"
#include "pronorm/criteria.hpp"
#include "pronorm/epimorphism.hpp"
#include "pronorm/normalizer.hpp"
#include "pronorm/odd_index.hpp"
#include "pronorm/oracle.hpp"
#include "pronorm/pronormality.hpp"
#include "pronorm/scenarios.hpp"
#include "pronorm/subgroup_enum.hpp"
#include "pronorm/subgroup_ops.hpp"
#include "pronorm/sylow.hpp"

namespace {

using namespace pronorm;

class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) failures.push_back(what);
  }
  std::vector<std::string> failures;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<void(Checker&)> fn;
};

Perm seven_cycle() { return Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}); }

void c01_frobenius(Checker& c) {
  BuiltGroup ff =
      realize(GroupSpec::product({GroupSpec::frobenius73(), GroupSpec::frobenius73()}));
  PermGroup d = diagonal_subgroup(ff, 0, 1, {seven_cycle()}, {seven_cycle()});
  Integer index = ff.group.index_of(d);
  c.expect(index == 63, "index 63");
  c.expect(is_odd(index), "index odd");
  PronormalityVerdict v = is_pronormal(ff.group, d);
  c.expect(!v.pronormal(), "verdict not_pronormal");
  c.expect(v.failing_g.has_value(), "failing witness present");
  c.expect(v.certificate && v.certificate->join_order == 49, "join order 49");
  if (v.failing_g) {
    PermGroup j = join(d, d.conjugated_by(*v.failing_g));
    c.expect(j.order() == 49, "join recomputes to 49");
    for (const Perm& a : j.generators())
      for (const Perm& b : j.generators())
        c.expect(a * b == b * a, "join abelian");
  }
}

void c02_cpwrsn_grid(Checker& c) {
  for (std::uint64_t a = 2; a <= 6; ++a)
    for (std::uint64_t n = 2; n <= 4; ++n) {
      BuiltGroup w = realize(GroupSpec::wreath(GroupSpec::cyclic(a), n));
      bool pronormal = is_pronormal(w.group, w.handle("top")).pronormal();
      bool coprime = std::gcd(a, n) == 1;
      c.expect(pronormal == coprime,
               "cell (C" + std::to_string(a) + ", n=" + std::to_string(n) + ")");
    }
}

void c03_counterexample_core(Checker& c) {
  WreathEmbedding we = symplectic_wreath_embedding(1, 3, 3);
  c.expect(we.image.order() == 82944, "L order 82944");
  c.expect(we.ambient.order() == Integer("9170703360"), "ambient Sp6(3) order");
  c.expect(we.index == 110565 && we.index_odd, "|Sp6(3):L| = 110565, odd");
  const PermGroup& W = we.wreath.group;  // verified isomorphic copy of L
  PermGroup o2 = p_radical(W, 2);
  c.expect(o2.order() == 512, "O_2(L) order 512");
  Epimorphism q = quotient(W, o2);
  c.expect(q.target().order() == 162, "L/O_2(L) order 162");
  PermGroup preim = q.preimage(q.image(we.wreath.handle("top")));
  c.expect(preim.order() == 3072, "H order 3072");
  c.expect(W.index_of(preim) == 27, "|L:H| = 27 (odd)");
  PronormalityVerdict v = is_pronormal_odd(W, preim);
  c.expect(!v.pronormal(), "H not pronormal in L");
  c.expect(v.failing_g.has_value() && v.certificate.has_value(),
           "negative certificate present");
}

void c04_method_agreement(Checker& c) {
  std::vector<std::pair<std::string, PermGroup>> pool;
  pool.emplace_back("Sym(4)", realize(GroupSpec::sym(4)).group);
  pool.emplace_back("SL2(3)", realize(GroupSpec::sl2(3)).group);
  pool.emplace_back("Alt(5)", realize(GroupSpec::alt(5)).group);
  pool.emplace_back("Sym(5)", realize(GroupSpec::sym(5)).group);
  pool.emplace_back("PSL2(7)", psl2_projective(7));
  pool.emplace_back("C3wrSym(3)", realize(GroupSpec::wreath(GroupSpec::cyclic(3), 3)).group);
  pool.emplace_back("SL2(3)^2",
                    realize(GroupSpec::product({GroupSpec::sl2(3), GroupSpec::sl2(3)})).group);
  for (const auto& [name, g] : pool) {
    OddIndexSubgroups odd = odd_index_subgroups(g);
    for (std::size_t r : odd.class_representatives()) {
      const PermGroup& sub = odd.subgroups[r];
      bool by_def = is_pronormal(g, sub).pronormal();
      bool by_syl = is_pronormal_odd(g, sub).pronormal();
      bool by_red = reduction_pronormal(g, sub).pronormal();
      c.expect(by_def == by_syl && by_syl == by_red,
               name + ": methods agree on subgroup of order " + sub.order().str());
    }
  }
}

void c05_hall_audit(Checker& c) {
  for (auto& [name, g] :
       std::vector<std::pair<std::string, PermGroup>>{
           {"Sym(4)", realize(GroupSpec::sym(4)).group},
           {"SL2(3)", realize(GroupSpec::sl2(3)).group},
           {"Alt(5)", realize(GroupSpec::alt(5)).group},
           {"PSL2(7)", psl2_projective(7)}}) {
    HallAuditReport rep = hall_equivalence_audit(g);
    c.expect(rep.mismatches == 0,
             name + ": " + std::to_string(rep.mismatches) + " mismatches");
  }
}

void c06_praeger(Checker& c) {
  bool alt5_case = false, linear_case = false;
  for (auto& [name, g] :
       std::vector<std::pair<std::string, PermGroup>>{
           {"Sym(4)", realize(GroupSpec::sym(4)).group},
           {"Alt(5)", realize(GroupSpec::alt(5)).group},
           {"PSL2(7)", psl2_projective(7)},
           {"GL3(2)", gl3_2_vector_action()},
           {"SL2(3)", realize(GroupSpec::sl2(3)).group},
           {"C3wrSym(3)", realize(GroupSpec::wreath(GroupSpec::cyclic(3), 3)).group},
           {"Frobenius73", realize(GroupSpec::frobenius73()).group}}) {
    SubgroupList subs = all_subgroups(g);
    for (std::size_t r : subs.class_representatives()) {
      if (subs.subgroups[r].is_trivial()) continue;
      PraegerReport rep = praeger_audit(g, subs.subgroups[r]);
      if (!rep.applicable) continue;
      c.expect(rep.bound_holds, name + ": bound holds");
      if (rep.equality && name == "Alt(5)" && rep.f == 2 && rep.contains_alt)
        alt5_case = true;
      if (rep.equality && name == "GL3(2)" && rep.f == 3 && rep.linear_case)
        linear_case = true;
    }
  }
  c.expect(alt5_case, "equality case: <3-cycle> in Alt(5), f=2, n=5");
  c.expect(linear_case, "equality case: hyperplane stabilizer in GL3(2), f=3, n=7");
}

void c07_ngs_profiles(Checker& c) {
  auto check_psl2 = [&](std::uint32_t q, std::uint64_t want) {
    PermGroup g = psl2_projective(q);
    PermGroup s = sylow(g, 2);
    PermGroup n = normalizer(g, s);
    c.expect(n.order() / s.order() == want,
             "PSL2(" + std::to_string(q) + ") index " + std::to_string(want));
    c.expect(sylow2_normalizer_prediction(SimpleGroupId::psl2(q)).index == want,
             "prediction matches for q=" + std::to_string(q));
  };
  check_psl2(5, 3);
  check_psl2(7, 1);
  check_psl2(11, 3);
  check_psl2(13, 3);
  // Alt(4) type at q = 5.
  {
    PermGroup g = psl2_projective(5);
    PermGroup n = normalizer(g, sylow(g, 2));
    c.expect(n.order() == 12, "N in PSL2(5) has order 12");
    auto hist = element_order_histogram(n);
    c.expect(hist.size() == 3 && hist[1].first == 2 && hist[1].second == 3 &&
                 hist[2].first == 3 && hist[2].second == 8,
             "N in PSL2(5) has Alt(4) order statistics");
  }
  // PSp4(3) through Sp4(3): the central involution lies in S, so the index
  // |N_G(S):S| is the same upstairs and downstairs.
  {
    BuiltGroup sp = realize(GroupSpec::sp(2, 3));
    PermGroup s = sylow(sp.group, 2);
    PermGroup z = center(sp.group);
    c.expect(z.order() == 2 && s.contains_group(z), "center inside Sylow 2");
    PermGroup n = normalizer(sp.group, s);
    c.expect(n.order() / s.order() == 3, "PSp4(3) normalizer index 3");
    c.expect(sylow2_normalizer_prediction(SimpleGroupId::psp(2, 3)).index == 3,
             "prediction for PSp4(3)");
  }
}

void c08_criterion_suites(Checker& c) {
  for (const char* name :
       {"frattini_suite", "quot_suite", "supl_suite", "suffcriteria_suite"}) {
    ScenarioResult r = run_scenario(name);
    bool ok = r.status == ScenarioResult::Status::pass;
    std::string msg = std::string(name) + ": " + to_string(r.status);
    if (!ok && r.details.contains("failures"))
      msg += " " + r.details["failures"].dump();
    c.expect(ok, msg);
    if (r.details.contains("instances"))
      c.expect(r.details["instances"].get<std::size_t>() >= 200,
               std::string(name) + ": at least 200 instances");
  }
}

void c09_awrsn_probe(Checker& c) {
  BuiltGroup w = realize(GroupSpec::wreath(GroupSpec::cyclic(3), 3));
  OddIndexPronormality probe = all_odd_index_pronormal(w.group);
  c.expect(!probe.all_pronormal, "C3 wr Sym(3) has a non-pronormal odd-index subgroup");
  bool strict_matches = awrsn_condition(3, {3}, true) == probe.all_pronormal;
  bool nonstrict_matches = awrsn_condition(3, {3}, false) == probe.all_pronormal;
  std::cout << "    [criterion 9] matching quantifier variant: "
            << (strict_matches && nonstrict_matches ? "both"
                : strict_matches                    ? "strict"
                : nonstrict_matches                 ? "non-strict"
                                                    : "neither")
            << "\n";
  c.expect(strict_matches || nonstrict_matches, "some variant matches measured truth");
}

void c10_prodsympl(Checker& c) {
  BuiltGroup ss = realize(GroupSpec::product({GroupSpec::sl2(3), GroupSpec::sl2(3)}));
  OddIndexPronormality probe = all_odd_index_pronormal(ss.group);
  c.expect(probe.all_pronormal, "all odd-index subgroups of SL2(3)^2 pronormal");
  c.expect(probe.tested.size() >= 3, "several classes tested");
}

void c11_oracle_table(Checker& c) {
  struct Row {
    SimpleGroupId id;
    ClassificationStatus status;
    const char* tag;
  };
  std::vector<Row> rows = {
      {SimpleGroupId::psp(3, 3), ClassificationStatus::has_nonpronormal,
       kTagSymplCounterexample},
      {SimpleGroupId::psp(2, 5), ClassificationStatus::all_pronormal,
       kTagSymplClassification},
      {SimpleGroupId::psp(10, 3), ClassificationStatus::all_pronormal,
       kTagSymplClassification},
      {SimpleGroupId::psp(7, 3), ClassificationStatus::has_nonpronormal,
       kTagSymplNonpronormal},
      {SimpleGroupId::e6(19, +1), ClassificationStatus::has_nonpronormal, kTagE6},
      {SimpleGroupId::e6(17, -1), ClassificationStatus::has_nonpronormal, kTagE6},
  };
  for (const Row& row : rows) {
    Classification cls = classification_oracle(row.id);
    std::string name = row.id.to_json().dump();
    c.expect(cls.status == row.status, name + ": status");
    c.expect(cls.citation == row.tag, name + ": citation tag");
  }
}

void c12_digit_recipe(Checker& c) {
  std::size_t produced = 0;
  std::vector<std::uint64_t> flagged;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    if (sympl_form_check(n) != SymplecticRankForm::neither) continue;
    DigitRecipe r = simpl_nonpron_digits(n);
    if (r.flagged) {
      flagged.push_back(n);
      continue;
    }
    c.expect(r.m.has_value(), "m produced for n=" + std::to_string(n));
    if (r.m) {
      c.expect(prec(*r.m, n), "m prec n for n=" + std::to_string(n));
      c.expect(*r.m % 3 == 0, "3 | m for n=" + std::to_string(n));
    }
    ++produced;
  }
  std::string head;
  for (std::size_t i = 0; i < flagged.size() && i < 8; ++i)
    head += (i ? "," : "") + std::to_string(flagged[i]);
  std::cout << "    [criterion 12] " << produced << " values produced, "
            << flagged.size() << " flagged edge cases (first: " << head << ")\n";
  c.expect(produced > 3000, "recipe covers the bulk of the range");
}

void c13_performance(Checker& c) {
  BuiltGroup sp63 = realize(GroupSpec::sp(3, 3));
  c.expect(sp63.group.degree() == 728, "degree 728");
  c.expect(sp63.group.order() == Integer("9170703360"), "order 9170703360");
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "Frobenius counterexample: diagonal in (C7:C3)^2", 5.0, c01_frobenius},
      {2, "abelian wreath grid: top pronormal iff gcd(|A|, n) = 1", 60.0, c02_cpwrsn_grid},
      {3, "counterexample core: Sp2(3) wr Sym(3) inside Sp6(3)", 120.0,
       c03_counterexample_core},
      {4, "method agreement on the odd-index pool", 600.0, c04_method_agreement},
      {5, "fixed-point criterion audit: zero mismatches", 600.0, c05_hall_audit},
      {6, "fixed-point bound with both equality cases", 300.0, c06_praeger},
      {7, "Sylow 2-normalizer profiles", 300.0, c07_ngs_profiles},
      {8, "criterion suites, >= 200 instances each", 600.0, c08_criterion_suites},
      {9, "abelian wreath quantifier probe", 120.0, c09_awrsn_probe},
      {10, "product of symplectic groups: all odd-index pronormal", 300.0, c10_prodsympl},
      {11, "classification oracle spot table", 10.0, c11_oracle_table},
      {12, "digit recipe over n <= 10^4", 10.0, c12_digit_recipe},
      {13, "performance: Sp6(3) stabilizer chain", 60.0, c13_performance},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);

  int failures = 0;
  for (const Criterion& cr : criteria()) {
    if (only && cr.id != only) continue;
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.fn(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    if (secs > cr.budget_s)
      c.failures.push_back("budget exceeded: " + std::to_string(secs) + " s > " +
                           std::to_string(cr.budget_s) + " s");
    bool pass = c.failures.empty();
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << cr.id << ": "
              << cr.title << " (" << secs << " s, budget " << cr.budget_s << " s)\n";
    for (const std::string& f : c.failures) std::cout << "       - " << f << "\n";
    if (!pass) ++failures;
  }
  return failures;
}
