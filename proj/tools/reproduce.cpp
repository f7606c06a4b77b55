#include <functional>
#include <map>

#include "cli_app.hpp"
#include "lfr/approx.hpp"
#include "lfr/correspondence.hpp"
#include "lfr/crisp.hpp"
#include "lfr/io.hpp"
#include "lfr/relations.hpp"

namespace lfr::cli {

namespace {

using json = nlohmann::ordered_json;

FuzzyRelation relation(const std::string& algebra, const std::vector<std::vector<std::string>>& rows) {
  auto alg = standard_algebra(algebra);
  json m = rows;
  return io::relation_from_json(json{{"universe", {"x", "y"}}, {"matrix", m}}, alg);
}

FuzzySet set_of(const FuzzyRelation& r, const std::map<std::string, std::string>& values) {
  return FuzzySet::from_names(r.algebra_ptr(), r.universe_ptr(), values);
}

std::string at(const FuzzySet& a, const std::string& point) { return a.algebra().name(a.at(point)); }

json values(const FuzzySet& a) { return io::to_json(a)["values"]; }

std::vector<ExampleCheck> serial1() {
  auto r = relation("m2_fix", {{"a", "b"}, {"b", "a"}});
  auto a = set_of(r, {{"x", "b"}, {"y", "a"}});
  auto l = lower(r, a), u = upper(r, a), ls = lower_residuated(r, a);
  return {
      {"serial", true, check_property(r, PropertyKind::Serial).holds},
      {"serial_pointed", false, check_property(r, PropertyKind::SerialPointed).holds},
      {"lower(A)(x)", "1", at(l, "x")},
      {"upper(A)(x)", "0", at(u, "x")},
      {"lower_residuated(A)(x)", "0", at(ls, "x")},
      {"lower(A) <= upper(A)", false, leq(l, u)},
      {"lower_residuated(A) <= upper(A)", true, leq(ls, u)},
  };
}

std::vector<ExampleCheck> serial_not_one() {
  auto r = relation("m2_swap", {{"a", "b"}, {"b", "a"}});
  bool residuated_is_lower = true;
  for (FuzzySet a : FuzzySetSpace(r.algebra_ptr(), r.universe_ptr())) {
    residuated_is_lower = residuated_is_lower && lower(r, a) == lower_residuated(r, a);
  }
  return {
      {"serial", true, check_property(r, PropertyKind::Serial).holds},
      {"serial_pointed", false, check_property(r, PropertyKind::SerialPointed).holds},
      {"lower_residuated = lower for all A", true, residuated_is_lower},
      {"L<=U for all A", true, law_holds(r, parse_law("L<=U")).holds_for_all},
  };
}

std::vector<ExampleCheck> chain3_symm() {
  auto r = relation("chain3", {{"0", "u"}, {"u", "1"}});
  auto dm = check_property(r, PropertyKind::SymmetricDm);
  json witness = dm.witness ? io::to_json(*dm.witness, r.universe(), r.algebra()) : json(nullptr);
  return {
      {"symmetric_classical", true, check_property(r, PropertyKind::SymmetricClassical).holds},
      {"symmetric_dm", false, dm.holds},
      {"symmetric_dm witness", json{{"points", {"x", "y"}}, {"values", {"1", "u"}}}, witness},
      {"R(x,y)' v R(y,x)", "u", r.algebra().name(r.algebra().join(r.algebra().neg(r.at("x", "y")), r.at("y", "x")))},
  };
}

// The accompanying prose says the De Morgan condition holds for every pair;
// direct evaluation gives b at (x, y), and the stored value is the computed one.
std::vector<ExampleCheck> m2_swap_symm() {
  auto r = relation("m2_swap", {{"0", "a"}, {"b", "1"}});
  const auto& alg = r.algebra();
  return {
      {"R(x,y)' v R(y,x)", "b", alg.name(alg.join(alg.neg(r.at("x", "y")), r.at("y", "x")))},
      {"symmetric_dm", false, check_property(r, PropertyKind::SymmetricDm).holds},
      {"symmetric_classical", false, check_property(r, PropertyKind::SymmetricClassical).holds},
  };
}

std::vector<ExampleCheck> seriality2_gap() {
  auto r = relation("m2_fix", {{"a", "a"}, {"b", "b"}});
  auto zero = bottom_set(r.algebra_ptr(), r.universe_ptr());
  auto law = law_holds(r, parse_law("L<=U"));
  return {
      {"lower(0)(x)", "a", at(lower(r, zero), "x")},
      {"upper(0)", json{{"x", "0"}, {"y", "0"}}, values(upper(r, zero))},
      {"serial_singleton", true, check_property(r, PropertyKind::SerialSingleton).holds},
      {"lower(I_z) <= upper(I_z) for all z", true, singleton_characterization(r, PropertyKind::SerialSingleton)},
      {"L<=U for all A", false, law.holds_for_all},
  };
}

std::vector<ExampleCheck> alliance_four_points() {
  auto uni = Universe::make({"1", "2", "3", "4"});
  auto rho = CrispRelation::from_edges(uni, {{"1", "4"}, {"2", "2"}, {"2", "3"}, {"3", "1"}, {"3", "2"}, {"4", "4"}});
  auto x = CrispSet::of(uni, {"3", "4"});
  auto up = crisp_approx(rho, x, Approx::Upper);
  auto low = crisp_approx(rho, up, Approx::Lower);
  auto first = crisp_law_counterexample(rho, parse_law("LU<=U"));
  return {
      {"positive_alliance", true, crisp_property(rho, PropertyKind::PositiveAlliance).holds},
      {"singleton condition", true, alliance_singleton_check(rho)},
      {"X^rho", json{"1", "2", "4"}, io::to_json(up)},
      {"(X^rho)_rho", json{"1", "3", "4"}, io::to_json(low)},
      {"(X^rho)_rho subset of X^rho", false, low.subset_of(up)},
      {"first X violating (X^rho)_rho <= X^rho", json{"3", "4"}, first ? io::to_json(*first) : json(nullptr)},
  };
}

std::vector<ExampleCheck> alliance_serial_not_transitive() {
  auto uni = Universe::make({"a", "b", "c"});
  auto rho = CrispRelation::from_edges(uni, {{"a", "b"}, {"b", "b"}, {"c", "a"}, {"c", "c"}});
  auto tr = crisp_property(rho, PropertyKind::Transitive);
  json witness = nullptr;
  if (tr.witness) {
    witness = json::array();
    for (auto p : tr.witness->points) witness.push_back(uni->name(p));
  }
  return {
      {"serial", true, crisp_property(rho, PropertyKind::Serial).holds},
      {"transitive", false, tr.holds},
      {"transitive witness", json{"c", "a", "b"}, witness},
      {"positive_alliance", true, crisp_property(rho, PropertyKind::PositiveAlliance).holds},
  };
}

const std::map<std::string, std::function<std::vector<ExampleCheck>()>>& catalog() {
  static const std::map<std::string, std::function<std::vector<ExampleCheck>()>> c{
      {"serial1", serial1},
      {"serial_not_one", serial_not_one},
      {"chain3_symm", chain3_symm},
      {"m2_swap_symm", m2_swap_symm},
      {"seriality2_gap", seriality2_gap},
      {"alliance_figure1", alliance_four_points},
      {"alliance_serial_not_transitive", alliance_serial_not_transitive},
  };
  return c;
}

}  // namespace

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids{"serial1",          "serial_not_one",   "chain3_symm",
                                            "m2_swap_symm",     "seriality2_gap",   "alliance_figure1",
                                            "alliance_serial_not_transitive"};
  return ids;
}

std::vector<ExampleCheck> reproduce_example(const std::string& id) {
  auto it = catalog().find(id);
  if (it == catalog().end()) throw Error(ErrorCode::UnknownExample, "no example named '" + id + "'");
  return it->second();
}

}  // namespace lfr::cli
