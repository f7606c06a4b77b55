// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Timing covers the computation only, not process start-up.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lfr/crisp.hpp"
#include "lfr/reconstruction.hpp"

namespace {

using namespace lfr;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

FuzzyRelation rel(const char* algebra, std::vector<std::vector<const char*>> rows) {
  auto alg = standard_algebra(algebra);
  std::vector<Elem> v;
  for (const auto& row : rows) {
    for (const char* e : row) v.push_back(alg->element(e));
  }
  return FuzzyRelation(alg, Universe::of_size(rows.size()), std::move(v));
}

FuzzySet set(const FuzzyRelation& r, std::vector<const char*> values) {
  std::vector<Elem> v;
  for (const char* e : values) v.push_back(r.algebra().element(e));
  return FuzzySet(r.algebra_ptr(), r.universe_ptr(), std::move(v));
}

bool is_serial(const FuzzyRelation& r) { return check_property(r, PropertyKind::Serial).holds; }

Outcome ac1() {
  Outcome o;
  auto r = rel("m2_fix", {{"a", "b"}, {"b", "a"}});
  const auto& alg = r.algebra();
  auto a = set(r, {"b", "a"});
  auto l = lower(r, a), u = upper(r, a), ls = lower_residuated(r, a);
  o.require(is_serial(r), "relation not serial");
  o.require(l[0] == alg.top(), "L(A)(x) != 1");
  o.require(u[0] == alg.bottom(), "U(A)(x) != 0");
  o.require(!leq(l, u), "L(A) <= U(A)");
  o.require(ls[0] == alg.bottom(), "L*(A)(x) != 0");
  o.require(leq(ls, u), "L*(A) not below U(A)");
  return o;
}

Outcome ac2() {
  Outcome o;
  auto r = rel("m2_fix", {{"a", "a"}, {"b", "b"}});
  auto zero = bottom_set(r.algebra_ptr(), r.universe_ptr());
  o.require(r.algebra().name(lower(r, zero)[0]) == "a", "L(0)(x) != a");
  o.require(upper(r, zero) == zero, "U(0) != 0");
  for (std::size_t z = 0; z < 2; ++z) {
    auto iz = singleton(r.algebra_ptr(), r.universe_ptr(), z);
    o.require(leq(lower(r, iz), upper(r, iz)), "L(I_z) not below U(I_z)");
  }
  o.require(check_property(r, PropertyKind::SerialSingleton).holds, "serial_singleton fails");
  o.require(!law_holds(r, parse_law("L<=U")).holds_for_all, "law L<=U holds");
  return o;
}

Outcome ac3() {
  Outcome o;
  auto c = rel("chain3", {{"0", "u"}, {"u", "1"}});
  o.require(check_property(c, PropertyKind::SymmetricClassical).holds, "chain3: classical symmetry fails");
  auto dm = check_property(c, PropertyKind::SymmetricDm);
  o.require(!dm.holds, "chain3: De Morgan symmetry holds");
  o.require(dm.witness && c.algebra().name(dm.witness->values[1]) == "u", "chain3: witness value != u");
  // companion on the swapped diamond: the oracle value is b and both symmetries fail
  auto s = rel("m2_swap", {{"0", "a"}, {"b", "1"}});
  const auto& alg = s.algebra();
  o.require(alg.name(alg.join(alg.neg(s(0, 1)), s(1, 0))) == "b", "m2_swap: value != b");
  o.require(!check_property(s, PropertyKind::SymmetricDm).holds, "m2_swap: De Morgan symmetry holds");
  o.require(!check_property(s, PropertyKind::SymmetricClassical).holds, "m2_swap: classical symmetry holds");
  return o;
}

Outcome ac4() {
  Outcome o;
  auto uni = Universe::make({"1", "2", "3", "4"});
  auto rho = CrispRelation::from_edges(uni, {{"1", "4"}, {"2", "2"}, {"2", "3"}, {"3", "1"}, {"3", "2"}, {"4", "4"}});
  o.require(crisp_property(rho, PropertyKind::PositiveAlliance).holds, "not a positive alliance");
  auto x = CrispSet::of(uni, {"3", "4"});
  auto up = crisp_approx(rho, x, Approx::Upper);
  auto low = crisp_approx(rho, up, Approx::Lower);
  o.require(up == CrispSet::of(uni, {"1", "2", "4"}), "X^rho != {1,2,4}");
  o.require(low == CrispSet::of(uni, {"1", "3", "4"}), "(X^rho)_rho != {1,3,4}");
  o.require(!low.subset_of(up), "(X^rho)_rho is contained in X^rho");
  return o;
}

Outcome ac5() {
  Outcome o;
  std::vector<PropertyKind> kinds(kCorrespondenceKinds.begin(), kCorrespondenceKinds.end());
  const std::pair<const char*, std::uint64_t> contexts[] = {{"m2_fix", 256}, {"m2_swap", 256}, {"chain3", 81}};
  std::uint64_t checked = 0;
  for (const auto& [id, count] : contexts) {
    for (const auto& c : sweep_correspondence(standard_algebra(id), 2, kinds, EnumerationCaps{})) {
      o.require(c.checked == count, std::string(id) + ": wrong relation count");
      o.require(c.disagreed == 0, std::string(id) + ": " + std::string(to_string(c.kind)) + " disagrees");
      checked += c.checked;
    }
  }
  std::vector<PropertyKind> crisp(kCrispCorrespondenceKinds.begin(), kCrispCorrespondenceKinds.end());
  for (const auto& c : crisp_sweep(3, crisp, EnumerationCaps{})) {
    o.require(c.checked == 512, "crisp: wrong relation count");
    o.require(c.disagreed == 0, "crisp: " + std::string(to_string(c.kind)) + " disagrees");
    checked += c.checked;
  }
  o.detail = o.ok ? std::to_string(checked) + " relation-kind pairs, 0 disagreements" : o.detail;
  return o;
}

Outcome ac6() {
  Outcome o;
  auto alg = standard_algebra("m2_fix");
  auto uni = Universe::of_size(2);
  FuzzySetSpace space(alg, uni);
  std::vector<FuzzySet> sets(space.begin(), space.end());
  std::vector<FuzzySet> singles{singleton(alg, uni, 0), singleton(alg, uni, 1)};
  auto words = all_words(3);
  std::uint64_t premises = 0, violations = 0;
  for (FuzzyRelation r : RelationSpace(alg, uni, 1'000'000)) {
    for (const auto& w : words) {
      bool premise = true;
      for (const auto& ix : singles) premise = premise && leq(upper(r, ix), apply_word(r, w, ix));
      if (!premise) continue;
      ++premises;
      for (const auto& a : sets) violations += !leq(upper(r, a), apply_word(r, w, a));
    }
  }
  o.require(violations == 0, std::to_string(violations) + " violations");
  if (o.ok) o.detail = std::to_string(premises) + " (relation, word) premises, 0 violations";
  return o;
}

Outcome ac7() {
  Outcome o;
  auto alg = standard_algebra("m2_fix");
  auto uni = Universe::of_size(2);
  FuzzySetSpace space(alg, uni);
  std::vector<FuzzySet> sets(space.begin(), space.end());
  std::vector<std::uint64_t> seen(256, 0);
  std::uint64_t perturbed = 0, perturbed_rejected = 0;
  const std::pair<PropertyKind, AxiomSpec> single[] = {
      {PropertyKind::Mediate, {{OperatorWord::parse("UU")}, {}}},
      {PropertyKind::Euclidean, {{OperatorWord::parse("LU")}, {}}},
      {PropertyKind::Adjoint, {{OperatorWord::parse("UL")}, {}}},
      {PropertyKind::Functional, {{OperatorWord::parse("L")}, {}}},
      {PropertyKind::Reflexive, {{}, {OperatorWord::parse("I")}}},
      {PropertyKind::Transitive, {{}, {OperatorWord::parse("UU")}}},
  };
  const AxiomSpec combined{{OperatorWord::parse("UU"), OperatorWord::parse("LU"), OperatorWord::parse("UL")},
                           {OperatorWord::parse("I"), OperatorWord::parse("UU")}};
  RelationSpace rels(alg, uni, 1'000'000);
  for (auto it = rels.begin(); it != rels.end(); ++it) {
    const FuzzyRelation r = *it;
    std::vector<std::vector<Elem>> images(2, std::vector<Elem>(2));
    for (std::size_t x = 0; x < 2; ++x) {
      for (std::size_t y = 0; y < 2; ++y) images[x][y] = r(y, x);
    }
    auto op = AbstractOperator::from_singleton_images(alg, uni, images);
    o.require(base_axiom_holds(op), "base axiom fails on a singleton-generated operator");
    auto back = represents_upper(op);
    o.require(back.has_value(), "singleton-generated operator not represented");
    if (back) {
      o.require(*back == r, "extract/induce is not the identity");
      ++seen[rels.index_of(*back)];
    }
    o.require(extract_relation(operator_from_relation(r)) == r, "extract(induce(R)) != R");

    // every one-entry perturbation of the extensional table of U_R
    std::vector<std::vector<Elem>> table;
    for (const auto& a : sets) {
      auto u = upper(r, a);
      table.emplace_back(u.values().begin(), u.values().end());
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (std::size_t x = 0; x < 2; ++x) {
        for (Elem e : alg->elements()) {
          if (e == table[i][x]) continue;
          auto bad = table;
          bad[i][x] = e;
          ++perturbed;
          perturbed_rejected += !represents_upper(AbstractOperator::from_table(alg, uni, std::move(bad)));
        }
      }
    }

    auto induced = operator_from_relation(r);
    bool all = true;
    for (const auto& [kind, spec] : single) {
      const bool holds = check_property(r, kind).holds;
      if (kind != PropertyKind::Functional) all = all && holds;
      o.require(characterized_axiom_holds(induced, spec) == holds,
                std::string(to_string(kind)) + ": axiom and property disagree");
    }
    o.require(characterized_axiom_holds(induced, combined) == all, "combined axiom and properties disagree");
  }
  for (auto c : seen) o.require(c == 1, "assignment-to-relation map is not a bijection");
  o.require(perturbed_rejected == perturbed,
            std::to_string(perturbed - perturbed_rejected) + " of " + std::to_string(perturbed) +
                " perturbed tables accepted");
  if (o.ok) o.detail = "256 relations, " + std::to_string(perturbed) + " perturbed tables rejected";
  return o;
}

Outcome ac8() {
  Outcome o;
  auto words = all_words(3);
  std::uint64_t non_serial = 0;
  for (const char* id : {"m2_fix", "chain3"}) {
    auto alg = standard_algebra(id);
    auto uni = Universe::of_size(2);
    const auto& A = *alg;
    FuzzySetSpace space(alg, uni);
    std::vector<FuzzySet> sets(space.begin(), space.end());
    auto zero = bottom_set(alg, uni), one = top_set(alg, uni);
    auto check = [&](bool cond, const char* what) { o.require(cond, std::string(id) + ": " + what); };
    for (FuzzyRelation r : RelationSpace(alg, uni, 1'000'000)) {
      // L0=0 and U1=1 hold exactly for serial relations; L1=1 and U0=0 always
      check(upper(r, zero) == zero && lower(r, one) == one, "U0=0 or L1=1 fails");
      const bool serial = is_serial(r);
      non_serial += !serial;
      check((lower(r, zero) == zero) == serial && (upper(r, one) == one) == serial, "L0=0/U1=1 not equivalent to seriality");
      auto d = dual_operator(operator_from_relation(r));
      for (const auto& a : sets) {
        check(neg(upper(r, a)) == lower(r, neg(a)) && neg(lower(r, a)) == upper(r, neg(a)), "duality");
        check(d(a) == lower(r, a), "dual(upper) != lower");
        for (const auto& b : sets) {
          check(upper(r, join(a, b)) == join(upper(r, a), upper(r, b)), "U over joins");
          check(lower(r, meet(a, b)) == meet(lower(r, a), lower(r, b)), "L over meets");
          check(leq(upper(r, meet(a, b)), meet(upper(r, a), upper(r, b))), "U over meets");
          check(leq(join(lower(r, a), lower(r, b)), lower(r, join(a, b))), "L over joins");
        }
        for (Elem c : A.elements()) {
          auto bar = constant_set(alg, uni, c);
          check(leq(upper(r, bar), bar) && leq(bar, lower(r, bar)), "U(c) <= c <= L(c)");
          check(upper(r, meet(bar, a)) == meet(bar, upper(r, a)), "U(c ^ A)");
          check(lower(r, join(bar, a)) == join(bar, lower(r, a)), "L(c v A)");
          check(leq(upper(r, join(bar, a)), join(bar, upper(r, a))), "U(c v A)");
          check(leq(meet(bar, lower(r, a)), lower(r, meet(bar, a))), "L(c ^ A)");
        }
      }
      for (std::size_t x = 0; x < 2; ++x) {
        auto ix = singleton(alg, uni, x);
        for (const auto& w : words) {
          for (Elem c : A.elements()) {
            auto bar = constant_set(alg, uni, c);
            check(leq(meet(bar, apply_word(r, w, ix)), apply_word(r, w, meet(bar, ix))), "word step inequality");
          }
        }
      }
    }
  }
  if (o.ok) o.detail = "m2_fix and chain3 on two points; L0=0 fails on all " + std::to_string(non_serial) + " non-serial relations";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    double budget_ms;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "serial example: L(A) not below U(A), L*(A) below U(A)", 1.0, ac1},
      {"AC2", "seriality gap: singleton condition without the law", 1.0, ac2},
      {"AC3", "symmetry separation on chain3 and the swapped diamond", 1.0e9, ac3},
      {"AC4", "crisp positive alliance without the set law", 1.0, ac4},
      {"AC5", "correspondence sweeps", 10'000.0, ac5},
      {"AC6", "lifting singleton inequalities", 30'000.0, ac6},
      {"AC7", "reconstruction", 10'000.0, ac7},
      {"AC8", "operator-law suite", 30'000.0, ac8},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && ms >= c.budget_ms) {
      o.ok = false;
      o.detail = "over time budget";
    }
    failed += !o.ok;
    std::string budget = c.budget_ms < 1.0e9 ? " < " + std::to_string(static_cast<long>(c.budget_ms)) + " ms" : "";
    std::printf("[%s] %s %s (%.3f ms%s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, ms, budget.c_str(),
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
