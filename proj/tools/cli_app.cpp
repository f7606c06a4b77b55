#include "cli_app.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lfr/approx.hpp"
#include "lfr/correspondence.hpp"
#include "lfr/crisp.hpp"
#include "lfr/io.hpp"
#include "lfr/reconstruction.hpp"
#include "lfr/relations.hpp"

namespace lfr::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

struct Options {
  bool pretty = false;
  unsigned threads = 0;

  std::string lattice_file;
  std::string algebra_name;
  std::string relation_file;
  std::string crisp_file;

  std::string file;
  std::string property;
  std::string lhs, rhs, rel = "le";
  std::size_t n = 0;
  std::vector<std::string> kinds;
  bool crisp = false;
  std::string left, right;
  std::string operator_file, axiom_file;
  std::string example;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  void emit(const json& j) { out_ << (opt_.pretty ? j.dump(2) : j.dump()) << '\n'; }

  AlgebraPtr algebra() const {
    if (!opt_.lattice_file.empty() && !opt_.algebra_name.empty()) {
      throw Error(ErrorCode::InvalidInput, "give either --lattice or --algebra, not both");
    }
    if (!opt_.lattice_file.empty()) return io::algebra_from_json(io::read_json_file(opt_.lattice_file));
    if (!opt_.algebra_name.empty()) return standard_algebra(opt_.algebra_name);
    throw Error(ErrorCode::InvalidInput, "an algebra is required (--lattice FILE or --algebra NAME)");
  }

  FuzzyRelation relation() const {
    if (opt_.relation_file.empty()) throw Error(ErrorCode::InvalidInput, "--relation FILE is required");
    return io::relation_from_json(io::read_json_file(opt_.relation_file), algebra());
  }

  EnumerationCaps caps() const { return EnumerationCaps::from_env(); }

  int check_lattice() {
    json doc = io::read_json_file(opt_.file);
    try {
      AlgebraPtr alg = io::algebra_from_json(doc);
      emit(json{{"file", opt_.file}, {"valid", true}, {"elements", alg->size()}, {"algebra", io::to_json(*alg)}});
      return kHolds;
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::NotAPoset:
        case ErrorCode::NotALattice:
        case ErrorCode::NoBounds:
        case ErrorCode::NotDistributive:
        case ErrorCode::NotInvolutive:
        case ErrorCode::NotAntitone:
          emit(json{{"file", opt_.file}, {"valid", false}, {"error", to_string(e.code())}, {"detail", e.what()}});
          return kFails;
        default:
          throw;
      }
    }
  }

  int check() {
    PropertyKind kind = parse_kind(opt_.property);
    if (!opt_.crisp_file.empty()) {
      CrispRelation rho = io::crisp_from_json(io::read_json_file(opt_.crisp_file));
      PropertyReport rep = crisp_property(rho, kind);
      json j{{"kind", to_string(kind)}, {"holds", rep.holds}, {"witness", nullptr}};
      if (rep.witness) {
        json pts = json::array();
        for (auto p : rep.witness->points) pts.push_back(rho.universe_ptr()->name(p));
        json vals = json::array();
        for (auto v : rep.witness->values) vals.push_back(index(v) == 1);
        j["witness"] = json{{"points", pts}, {"values", vals}};
      }
      emit(j);
      return rep.holds ? kHolds : kFails;
    }
    FuzzyRelation r = relation();
    PropertyReport rep = check_property(r, kind);
    emit(io::to_json(rep, r.universe(), r.algebra()));
    return rep.holds ? kHolds : kFails;
  }

  OperatorLaw law_from_options() const {
    if (opt_.rel != "le" && opt_.rel != "eq") throw Error(ErrorCode::InvalidInput, "--rel must be 'le' or 'eq'");
    return OperatorLaw{OperatorWord::parse(opt_.lhs), OperatorWord::parse(opt_.rhs),
                       opt_.rel == "le" ? LawRelation::Le : LawRelation::Eq};
  }

  int law() {
    OperatorLaw law = law_from_options();
    if (!opt_.crisp_file.empty()) {
      CrispRelation rho = io::crisp_from_json(io::read_json_file(opt_.crisp_file));
      auto cex = crisp_law_counterexample(rho, law, caps());
      json j{{"law", law.str()}, {"holds", !cex}, {"counterexample", nullptr}};
      if (cex) {
        j["counterexample"] = json{{"set", io::to_json(*cex)},
                                   {"lhs", io::to_json(crisp_word(rho, law.lhs, *cex))},
                                   {"rhs", io::to_json(crisp_word(rho, law.rhs, *cex))}};
      }
      emit(j);
      return cex ? kFails : kHolds;
    }
    LawReport rep = law_holds(relation(), law, caps());
    emit(io::to_json(rep));
    return rep.holds_for_all ? kHolds : kFails;
  }

  int correspondence() {
    PropertyKind kind = parse_kind(opt_.property);
    if (!opt_.relation_file.empty()) {
      FuzzyRelation r = relation();
      CorrespondenceOutcome o = correspondence_outcome(r, kind, caps());
      auto laws = correspondence_laws(kind);
      emit(json{{"kind", to_string(kind)},
                {"property", o.property},
                {"laws", {{{"law", laws[0].str()}, {"holds", o.upper_law}}, {{"law", laws[1].str()}, {"holds", o.lower_law}}}},
                {"verified", o.agrees()}});
      return o.agrees() ? kHolds : kFails;
    }
    if (opt_.n == 0) throw Error(ErrorCode::InvalidInput, "give --relation FILE or --n N");
    auto counts = sweep_correspondence(algebra(), opt_.n, {kind}, caps(), opt_.threads);
    emit(io::to_json(counts.front()));
    return counts.front().disagreed == 0 ? kHolds : kFails;
  }

  int sweep() {
    if (opt_.n == 0) throw Error(ErrorCode::InvalidInput, "--n N is required");
    std::vector<PropertyKind> kinds;
    for (const auto& k : opt_.kinds) kinds.push_back(parse_kind(k));
    std::vector<SweepCounts> counts;
    json summary;
    if (opt_.crisp) {
      if (!opt_.algebra_name.empty() && opt_.algebra_name != "bool2") {
        throw Error(ErrorCode::InvalidInput, "crisp sweeps run over bool2");
      }
      if (kinds.empty()) kinds.assign(kCrispCorrespondenceKinds.begin(), kCrispCorrespondenceKinds.end());
      counts = crisp_sweep(opt_.n, kinds, caps(), opt_.threads);
      summary["algebra"] = "bool2";
      summary["crisp"] = true;
    } else {
      if (kinds.empty()) kinds.assign(kCorrespondenceKinds.begin(), kCorrespondenceKinds.end());
      AlgebraPtr alg = algebra();
      counts = sweep_correspondence(alg, opt_.n, kinds, caps(), opt_.threads);
      summary["algebra"] = opt_.algebra_name.empty() ? opt_.lattice_file : opt_.algebra_name;
      summary["crisp"] = false;
    }
    std::uint64_t disagreements = 0;
    for (const auto& c : counts) {
      emit(io::to_json(c));
      disagreements += c.disagreed;
    }
    summary["n"] = opt_.n;
    summary["relations"] = counts.empty() ? 0 : counts.front().checked;
    summary["kinds"] = counts.size();
    summary["disagreements"] = disagreements;
    emit(json{{"summary", summary}});
    return disagreements == 0 ? kHolds : kFails;
  }

  int search() {
    Predicate left = parse_predicate(opt_.left);
    Predicate right = parse_predicate(opt_.right);
    AlgebraPtr alg = algebra();
    SearchResult res = search_counterexample(alg, opt_.n, left, right, caps());
    json j{{"left", to_string(left)}, {"right", to_string(right)}, {"checked", res.checked}, {"found", res.index.has_value()}};
    if (res.relation) {
      j["index"] = *res.index;
      j["relation"] = io::to_json(*res.relation);
      j["left_value"] = res.left;
      j["right_value"] = res.right;
    }
    emit(j);
    return res.relation ? kFails : kHolds;
  }

  int reconstruct() {
    AlgebraPtr alg = algebra();
    AbstractOperator op = io::operator_from_json(io::read_json_file(opt_.operator_file), alg);
    const EnumerationCaps c = caps();
    json j;
    j["base_axiom"] = base_axiom_holds(op, c);
    auto r = represents_upper(op, c);
    j["represents_upper"] = r.has_value();
    j["relation"] = r ? io::to_json(*r) : json(nullptr);
    bool ok = r.has_value();
    if (!opt_.axiom_file.empty()) {
      AxiomSpec spec = io::axiom_from_json(io::read_json_file(opt_.axiom_file));
      bool characterized = characterized_axiom_holds(op, spec, c);
      j["axiom"] = io::to_json(spec);
      j["characterized_axiom"] = characterized;
      j["lower_side_axiom"] = lower_side_axiom_holds(dual_operator(op), spec, c);
      j["single_axiom_equation"] = single_axiom_equation_holds(op, spec, c);
      ok = ok && characterized;
    }
    emit(j);
    return ok ? kHolds : kFails;
  }

  int reproduce() {
    auto checks = reproduce_example(opt_.example);
    json list = json::array();
    bool all = true;
    for (const auto& c : checks) {
      list.push_back(json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok()}});
      all = all && c.ok();
    }
    emit(json{{"example", opt_.example}, {"ok", all}, {"checks", list}});
    return all ? kHolds : kFails;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
};

void add_algebra_options(CLI::App* sub, Options& opt) {
  sub->add_option("--lattice", opt.lattice_file, "Lattice JSON file");
  sub->add_option("--algebra", opt.algebra_name, "Catalog algebra: bool2, chain3, m2_fix, m2_swap, chain_n(k)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Rough approximations over finite De Morgan Heyting algebras", "lfrough"};
  app.set_version_flag("--version", "lfrough 1.0");
  app.add_flag("--pretty", opt.pretty, "Indented output");
  app.add_option("--threads", opt.threads, "Worker threads for sweeps (0 = all cores)");
  app.require_subcommand(1);
  app.fallthrough();

  auto* check_lattice = app.add_subcommand("check-lattice", "Validate a lattice file as a De Morgan Heyting algebra");
  check_lattice->add_option("file", opt.file, "Lattice JSON file")->required();

  auto* check = app.add_subcommand("check", "Evaluate a relation property");
  check->add_option("property", opt.property, "Property kind, e.g. symmetric_dm")->required();
  add_algebra_options(check, opt);
  check->add_option("--relation", opt.relation_file, "Relation JSON file");
  check->add_option("--crisp", opt.crisp_file, "Crisp relation JSON file");

  auto* law = app.add_subcommand("law", "Check an operator law over every fuzzy set");
  law->add_option("--lhs", opt.lhs, "Word over {L,U}, or I")->required();
  law->add_option("--rhs", opt.rhs, "Word over {L,U}, or I")->required();
  law->add_option("--rel", opt.rel, "le or eq")->check(CLI::IsMember({"le", "eq"}));
  add_algebra_options(law, opt);
  law->add_option("--relation", opt.relation_file, "Relation JSON file");
  law->add_option("--crisp", opt.crisp_file, "Crisp relation JSON file");

  auto* corr = app.add_subcommand("correspondence", "Compare a property with its operator laws");
  corr->add_option("property,--property", opt.property, "Property kind")->required();
  add_algebra_options(corr, opt);
  corr->add_option("--relation", opt.relation_file, "Relation JSON file");
  corr->add_option("--n,--universe", opt.n, "Sweep all relations on this many points");

  auto* sweep = app.add_subcommand("sweep", "Correspondence sweep over all relations");
  add_algebra_options(sweep, opt);
  sweep->add_option("--n,--universe", opt.n, "Universe size")->required();
  sweep->add_option("--kinds", opt.kinds, "Kinds to sweep (default: all with a correspondence)")->delimiter(',');
  sweep->add_flag("--crisp", opt.crisp, "Sweep crisp relations with the classical correspondences");

  auto* search = app.add_subcommand("search", "First relation where two predicates disagree");
  search->add_option("--left", opt.left, "Kind, law like L<=U, or char:KIND")->required();
  search->add_option("--right", opt.right, "Kind, law like L<=U, or char:KIND")->required();
  add_algebra_options(search, opt);
  search->add_option("--n,--universe", opt.n, "Universe size 1..3")->required();

  auto* reconstruct = app.add_subcommand("reconstruct", "Recover a relation from an abstract operator");
  add_algebra_options(reconstruct, opt);
  reconstruct->add_option("--operator", opt.operator_file, "Operator JSON file")->required();
  reconstruct->add_option("--axiom", opt.axiom_file, "Axiom JSON file {\"S\":[..],\"T\":[..]}");

  auto* reproduce = app.add_subcommand("reproduce", "Recompute a stored example");
  reproduce->add_option("id", opt.example, "Example id")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  Runner runner(opt, out);
  try {
    if (*check_lattice) return runner.check_lattice();
    if (*check) return runner.check();
    if (*law) return runner.law();
    if (*corr) return runner.correspondence();
    if (*sweep) return runner.sweep();
    if (*search) return runner.search();
    if (*reconstruct) return runner.reconstruct();
    if (*reproduce) return runner.reproduce();
  } catch (const Error& e) {
    err << json{{"error", to_string(e.code())}, {"detail", e.what()}}.dump() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace lfr::cli
