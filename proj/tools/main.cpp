#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pronorm/constructions.hpp"
#include "pronorm/errors.hpp"
#include "pronorm/odd_index.hpp"
#include "pronorm/oracle.hpp"
#include "pronorm/pronormality.hpp"
#include "pronorm/scenarios.hpp"
#include "pronorm/subgroup_ops.hpp"
#include "pronorm/verdict.hpp"

namespace {

using nlohmann::json;
using namespace pronorm;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;   // not_pronormal verdict / scenario failure
constexpr int kExitUsage = 2;      // parse or precondition failure
constexpr int kExitCap = 3;        // search cap exceeded

struct Output {
  std::string format = "json";
  std::string path;

  void emit(const json& j, const std::string& text) const {
    std::string body = format == "json" ? j.dump(2) + "\n" : text;
    if (path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw ParseError("cannot open output path: " + path);
      out << body;
    }
  }
};

// Inline JSON or @file / plain path to a JSON file.
std::string load_payload(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return arg;
  std::string path = (!arg.empty() && arg[0] == '@') ? arg.substr(1) : arg;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read spec file: " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json group_record(const PermGroup& g) {
  json gens = json::array();
  for (const Perm& p : g.generators()) gens.push_back(perm_to_json(p));
  return {{"degree", g.degree()}, {"generators", gens}, {"order", g.order().str()}};
}

int cmd_group_eval(const std::string& spec_arg, const Caps& caps, const Output& out) {
  GroupSpec spec = GroupSpec::parse(load_payload(spec_arg));
  BuiltGroup built = realize(spec, caps);
  json j = group_record(built.group);
  j["spec"] = spec.to_json();
  json handles = json::object();
  for (const auto& [name, sub] : built.handles)
    handles[name] = {{"order", sub.order().str()}, {"generators", [&] {
                       json arr = json::array();
                       for (const Perm& p : sub.generators()) arr.push_back(perm_to_json(p));
                       return arr;
                     }()}};
  j["handles"] = handles;
  std::string text = "degree " + std::to_string(built.group.degree()) + "\norder " +
                     built.group.order().str() + "\n";
  for (const auto& [name, sub] : built.handles)
    text += "handle " + name + ": order " + sub.order().str() + "\n";
  out.emit(j, text);
  return kExitOk;
}

int cmd_pronormal_check(const std::string& spec_arg, const std::string& subgroup_json,
                        const std::string& handle, const std::string& method,
                        std::uint64_t seed, const Caps& caps, const Output& out) {
  GroupSpec spec = GroupSpec::parse(load_payload(spec_arg));
  BuiltGroup built = realize(spec, caps);

  PermGroup H;
  if (!handle.empty()) {
    H = built.handle(handle);
  } else if (!subgroup_json.empty()) {
    json j;
    try {
      j = json::parse(load_payload(subgroup_json));
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid subgroup JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("subgroup must be an array of image arrays");
    std::vector<Perm> gens;
    for (const auto& pj : j) gens.push_back(perm_from_json(pj));
    H = subgroup_closure(built.group, gens);
  } else {
    throw ParseError("one of --subgroup or --handle is required");
  }

  PronormalityVerdict v;
  if (method == "def" || method == "definition")
    v = is_pronormal(built.group, H, caps);
  else if (method == "normsyl")
    v = is_pronormal_odd(built.group, H, seed, caps);
  else if (method == "reduction")
    v = reduction_pronormal(built.group, H, seed, caps);
  else
    throw ParseError("unknown method: " + method + " (def | normsyl | reduction)");

  json j = v.to_json();
  j["group_order"] = built.group.order().str();
  j["subgroup_order"] = H.order().str();
  j["index"] = built.group.index_of(H).str();
  std::string text = std::string(to_string(v.status)) + " (method " +
                     to_string(v.method) + ", index " +
                     built.group.index_of(H).str() + ")\n";
  if (v.failing_g) text += "failing g = " + v.failing_g->to_cycle_string() + "\n";
  out.emit(j, text);
  return v.pronormal() ? kExitOk : kExitNegative;
}

int cmd_oddindex(const std::string& spec_arg, std::uint64_t seed, const Caps& caps,
                 const Output& out) {
  GroupSpec spec = GroupSpec::parse(load_payload(spec_arg));
  BuiltGroup built = realize(spec, caps);
  OddIndexSubgroups odd = odd_index_subgroups(built.group, seed, caps);
  json arr = json::array();
  std::string text;
  for (std::size_t i = 0; i < odd.subgroups.size(); ++i) {
    const PermGroup& k = odd.subgroups[i];
    json rec = group_record(k);
    rec["index"] = built.group.index_of(k).str();
    rec["class_of"] = odd.class_of[i];
    arr.push_back(std::move(rec));
    text += "order " + k.order().str() + ", index " + built.group.index_of(k).str() +
            ", class " + std::to_string(odd.class_of[i]) + "\n";
  }
  json j = {{"group_order", built.group.order().str()},
            {"sylow2_order", odd.sylow2.order().str()},
            {"subgroups", arr}};
  out.emit(j, text);
  return kExitOk;
}

int cmd_oracle(const std::string& id_arg, const Output& out) {
  SimpleGroupId id = SimpleGroupId::parse(load_payload(id_arg));
  Classification cls = classification_oracle(id);
  json j = {{"id", id.to_json()}, {"classification", cls.to_json()}};
  std::string text = std::string(to_string(cls.status)) + " [" + cls.citation + "]\n";
  try {
    NormalizerPrediction pred = sylow2_normalizer_prediction(id);
    j["sylow2_normalizer"] = {{"index", pred.index.str()}, {"structure", pred.structure}};
    text += "predicted |N_G(S):S| = " + pred.index.str() + " (" + pred.structure + ")\n";
  } catch (const PreconditionError&) {
    // Prediction undefined for this id (generic char-2 tag); classification
    // stands on its own.
  }
  j["ocgs_order"] = ocgs_prediction(id).str();
  out.emit(j, text);
  return kExitOk;
}

int cmd_repro(const std::string& filter, std::uint64_t seed, const Caps& caps,
              const Output& out) {
  ScenarioReport rep = run_all(filter, seed, caps);
  std::string text;
  for (const ScenarioResult& r : rep.results)
    text += r.name + ": " + to_string(r.status) + "\n";
  text += rep.all_pass ? "all pass\n" : "failures present\n";
  out.emit(rep.to_json(), text);
  return rep.all_pass ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pronorm: pronormality of subgroups in finite permutation groups"};
  app.require_subcommand(1);

  Output out;
  std::uint64_t seed = pronorm::kDefaultSeed;
  Caps caps;
  app.add_option("--seed", seed, "seed for randomized-but-reproducible phases");
  app.add_option("--cap-join", caps.max_conjugacy_tests,
                 "cap on candidate tests in conjugacy searches");
  std::optional<std::uint64_t> cap_order;
  app.add_option("--cap-order", cap_order, "cap on group order for exhaustive audits");
  app.add_option("--format", out.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out.path, "write the report to a file");

  app.fallthrough();
  auto* group = app.add_subcommand("group", "inspect constructions");
  group->fallthrough();
  auto* group_eval = group->add_subcommand("eval", "realize a construction and report it");
  group_eval->fallthrough();
  std::string spec_arg;
  group_eval->add_option("spec", spec_arg, "construction JSON or @file")->required();

  auto* pron = app.add_subcommand("pronormal", "pronormality deciders");
  pron->fallthrough();
  auto* pron_check = pron->add_subcommand("check", "decide pronormality of a subgroup");
  pron_check->fallthrough();
  std::string pron_spec, subgroup_json, handle_name, method = "def";
  pron_check->add_option("spec", pron_spec, "construction JSON or @file")->required();
  pron_check->add_option("--subgroup", subgroup_json,
                         "subgroup generators as a JSON array of image arrays");
  pron_check->add_option("--handle", handle_name,
                         "named distinguished subgroup of the construction");
  pron_check->add_option("--method", method, "def | normsyl | reduction");

  auto* oddix = app.add_subcommand("oddindex", "odd-index subgroup machinery");
  oddix->fallthrough();
  auto* oddix_enum = oddix->add_subcommand("enumerate", "overgroups of a Sylow 2-subgroup");
  oddix_enum->fallthrough();
  std::string oddix_spec;
  oddix_enum->add_option("spec", oddix_spec, "construction JSON or @file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "arithmetic classification oracle");
  oracle_cmd->fallthrough();
  std::string id_arg;
  oracle_cmd->add_option("id", id_arg, "simple group id JSON or @file")->required();

  auto* repro = app.add_subcommand("repro", "reproduction scenarios");
  repro->fallthrough();
  auto* repro_run = repro->add_subcommand("run", "run registered scenarios");
  repro_run->fallthrough();
  std::string filter;
  repro_run->add_option("--filter", filter, "substring filter on scenario names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (cap_order) {
    caps.exhaustive_order_cap = *cap_order;
    caps.normal_lattice_cap = *cap_order;
  }

  try {
    if (group_eval->parsed()) return cmd_group_eval(spec_arg, caps, out);
    if (pron_check->parsed())
      return cmd_pronormal_check(pron_spec, subgroup_json, handle_name, method, seed,
                                 caps, out);
    if (oddix_enum->parsed()) return cmd_oddindex(oddix_spec, seed, caps, out);
    if (oracle_cmd->parsed()) return cmd_oracle(id_arg, out);
    if (repro_run->parsed()) return cmd_repro(filter, seed, caps, out);
    std::cerr << "missing subcommand\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotASubgroup& e) {
    std::cerr << "not a subgroup: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegreeMismatch& e) {
    std::cerr << "degree mismatch: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
