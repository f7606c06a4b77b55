#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lfr/approx.hpp"
#include "lfr/error.hpp"
#include "lfr/fuzzy.hpp"
#include "lfr/parallel.hpp"
#include "lfr/relations.hpp"

namespace lfr {

enum class LawRelation : std::uint8_t { Le, Eq };

/// lhs(A) <= rhs(A) (or =) for every fuzzy set A.
struct OperatorLaw {
  OperatorWord lhs;
  OperatorWord rhs;
  LawRelation rel = LawRelation::Le;

  std::string str() const { return lhs.str() + (rel == LawRelation::Le ? "<=" : "=") + rhs.str(); }

  friend bool operator==(const OperatorLaw&, const OperatorLaw&) = default;
};

/// "LU<=U", "I<=U", "UL=LU".
inline OperatorLaw parse_law(std::string_view text) {
  if (auto p = text.find("<="); p != std::string_view::npos) {
    return {OperatorWord::parse(text.substr(0, p)), OperatorWord::parse(text.substr(p + 2)), LawRelation::Le};
  }
  if (auto p = text.find('='); p != std::string_view::npos) {
    return {OperatorWord::parse(text.substr(0, p)), OperatorWord::parse(text.substr(p + 1)), LawRelation::Eq};
  }
  throw Error(ErrorCode::InvalidInput, "law '" + std::string(text) + "' needs '<=' or '='");
}

struct LawCounterexample {
  FuzzySet set;
  FuzzySet lhs_value;
  FuzzySet rhs_value;
};

struct LawReport {
  OperatorLaw law;
  bool holds_for_all = true;
  std::optional<LawCounterexample> counterexample;
};

namespace detail {

/// Index of the first set violating the law, if any.
inline std::optional<std::uint64_t> first_law_violation(const DmhAlgebra& alg, std::size_t n, std::span<const Elem> rel,
                                                        const OperatorLaw& law, std::uint64_t set_count) {
  WordEvaluator ev(alg, n, rel);
  std::vector<Elem> a(n), l(n), r(n);
  for (std::uint64_t i = 0; i < set_count; ++i) {
    decode_index(i, alg.size(), a);
    ev.apply(law.lhs, a, l);
    ev.apply(law.rhs, a, r);
    bool ok = law.rel == LawRelation::Le ? values_leq(alg, l, r) : l == r;
    if (!ok) return i;
  }
  return std::nullopt;
}

inline std::uint64_t set_count(const DmhAlgebra& alg, std::size_t n, const EnumerationCaps& caps) {
  return checked_power(alg.size(), n, caps.sets, "fuzzy set enumeration");
}

}  // namespace detail

inline LawReport law_holds(const FuzzyRelation& r, const OperatorLaw& law,
                           const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  const std::uint64_t count = detail::set_count(r.algebra(), r.size(), caps);
  LawReport rep{law, true, std::nullopt};
  if (auto bad = detail::first_law_violation(r.algebra(), r.size(), r.values(), law, count)) {
    FuzzySetSpace space(r.algebra_ptr(), r.universe_ptr(), caps.sets);
    FuzzySet a = space.at(*bad);
    rep.holds_for_all = false;
    rep.counterexample = LawCounterexample{a, apply_word(r, law.lhs, a), apply_word(r, law.rhs, a)};
  }
  return rep;
}

constexpr bool has_correspondence(PropertyKind kind) noexcept {
  switch (kind) {
    case PropertyKind::Reflexive:
    case PropertyKind::SymmetricDm:
    case PropertyKind::Transitive:
    case PropertyKind::Mediate:
    case PropertyKind::Euclidean:
    case PropertyKind::Adjoint:
    case PropertyKind::Functional:
      return true;
    default:
      return false;
  }
}

inline constexpr std::array<PropertyKind, 7> kCorrespondenceKinds{
    PropertyKind::Reflexive, PropertyKind::SymmetricDm, PropertyKind::Transitive, PropertyKind::Mediate,
    PropertyKind::Euclidean, PropertyKind::Adjoint,     PropertyKind::Functional,
};

/// The upper-form law and its lower-form dual characterizing `kind`.
inline std::array<OperatorLaw, 2> correspondence_laws(PropertyKind kind) {
  auto law = [](std::string_view s) { return parse_law(s); };
  switch (kind) {
    case PropertyKind::Reflexive: return {law("I<=U"), law("L<=I")};
    case PropertyKind::SymmetricDm: return {law("I<=LU"), law("UL<=I")};
    case PropertyKind::Transitive: return {law("UU<=U"), law("L<=LL")};
    case PropertyKind::Mediate: return {law("U<=UU"), law("LL<=L")};
    case PropertyKind::Euclidean: return {law("U<=LU"), law("UL<=L")};
    case PropertyKind::Adjoint: return {law("U<=UL"), law("LU<=L")};
    case PropertyKind::Functional: return {law("U<=L"), law("U<=L")};
    default:
      throw Error(ErrorCode::UnsupportedKind, std::string(to_string(kind)) + " has no operator correspondence");
  }
}

struct CorrespondenceOutcome {
  bool property = false;
  bool upper_law = false;
  bool lower_law = false;

  bool agrees() const noexcept { return property == upper_law && property == lower_law; }
};

namespace detail {

inline CorrespondenceOutcome correspondence_raw(const DmhAlgebra& alg, std::size_t n, std::span<const Elem> rel,
                                                PropertyKind kind, std::uint64_t set_count) {
  auto laws = correspondence_laws(kind);
  return {check_raw(alg, n, rel, kind).holds, !first_law_violation(alg, n, rel, laws[0], set_count),
          !first_law_violation(alg, n, rel, laws[1], set_count)};
}

}  // namespace detail

inline CorrespondenceOutcome correspondence_outcome(const FuzzyRelation& r, PropertyKind kind,
                                                    const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  if (!has_correspondence(kind)) {
    throw Error(ErrorCode::UnsupportedKind, std::string(to_string(kind)) + " has no operator correspondence");
  }
  return detail::correspondence_raw(r.algebra(), r.size(), r.values(), kind,
                                    detail::set_count(r.algebra(), r.size(), caps));
}

/// True when the property and both paired laws agree on r.
inline bool correspondence_verified(const FuzzyRelation& r, PropertyKind kind,
                                    const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  return correspondence_outcome(r, kind, caps).agrees();
}

/// A predicate over relations: a property kind, a law quantified over all
/// sets, or the singleton characterization of a kind ("char:KIND").
struct SingletonCharacterization {
  PropertyKind kind;
  friend bool operator==(const SingletonCharacterization&, const SingletonCharacterization&) = default;
};

using Predicate = std::variant<PropertyKind, OperatorLaw, SingletonCharacterization>;

inline Predicate parse_predicate(std::string_view text) {
  if (text.starts_with("char:")) {
    PropertyKind k = parse_kind(text.substr(5));
    if (!has_singleton_characterization(k)) {
      throw Error(ErrorCode::UnsupportedKind, std::string(to_string(k)) + " has no singleton characterization");
    }
    return SingletonCharacterization{k};
  }
  if (text.find('=') != std::string_view::npos) return parse_law(text);
  return parse_kind(text);
}

inline std::string to_string(const Predicate& p) {
  struct {
    std::string operator()(PropertyKind k) const { return std::string(to_string(k)); }
    std::string operator()(const OperatorLaw& l) const { return l.str(); }
    std::string operator()(const SingletonCharacterization& c) const { return "char:" + std::string(to_string(c.kind)); }
  } visitor;
  return std::visit(visitor, p);
}

inline bool evaluate(const Predicate& p, const FuzzyRelation& r, const EnumerationCaps& caps) {
  struct {
    const FuzzyRelation& r;
    const EnumerationCaps& caps;
    bool operator()(PropertyKind k) const { return check_property(r, k).holds; }
    bool operator()(const OperatorLaw& l) const { return law_holds(r, l, caps).holds_for_all; }
    bool operator()(const SingletonCharacterization& c) const { return singleton_characterization(r, c.kind); }
  } visitor{r, caps};
  return std::visit(visitor, p);
}

struct SearchResult {
  std::uint64_t checked = 0;
  std::optional<std::uint64_t> index;
  std::optional<FuzzyRelation> relation;
  bool left = false;
  bool right = false;
};

/// First relation (lexicographic, row-major) on which the predicates differ.
inline SearchResult search_counterexample(const AlgebraPtr& alg, std::size_t universe_size, const Predicate& left,
                                          const Predicate& right,
                                          const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  if (universe_size < 1 || universe_size > 3) throw Error(ErrorCode::InvalidInput, "universe size must be 1..3");
  auto uni = Universe::of_size(universe_size);
  detail::set_count(*alg, universe_size, caps);
  RelationSpace space(alg, uni, caps.relations);
  SearchResult out;
  for (auto it = space.begin(); it != space.end(); ++it) {
    FuzzyRelation r = *it;
    ++out.checked;
    bool l = evaluate(left, r, caps);
    bool rr = evaluate(right, r, caps);
    if (l != rr) {
      out.index = it.position();
      out.relation = std::move(r);
      out.left = l;
      out.right = rr;
      break;
    }
  }
  return out;
}

struct SweepCounts {
  PropertyKind kind;
  std::uint64_t checked = 0;
  std::uint64_t agreed = 0;
  std::uint64_t disagreed = 0;
  std::optional<std::uint64_t> first_disagreement;
};

namespace detail {

/// Combines per-worker counts; workers own consecutive index ranges, so the
/// first disagreement seen in worker order is the global first.
inline std::vector<SweepCounts> reduce_sweeps(const std::vector<PropertyKind>& kinds,
                                              const std::vector<std::vector<SweepCounts>>& partial) {
  std::vector<SweepCounts> total;
  for (PropertyKind k : kinds) total.push_back(SweepCounts{k, 0, 0, 0, std::nullopt});
  for (const auto& part : partial) {
    for (std::size_t k = 0; k < part.size(); ++k) {
      total[k].checked += part[k].checked;
      total[k].agreed += part[k].agreed;
      total[k].disagreed += part[k].disagreed;
      if (!total[k].first_disagreement) total[k].first_disagreement = part[k].first_disagreement;
    }
  }
  return total;
}

}  // namespace detail

/// Property-vs-law agreement over every relation on (alg, |U|=n).
/// Workers own disjoint index ranges; counts are reduced in index order.
inline std::vector<SweepCounts> sweep_correspondence(const AlgebraPtr& alg, std::size_t n,
                                                     const std::vector<PropertyKind>& kinds,
                                                     const EnumerationCaps& caps = EnumerationCaps::from_env(),
                                                     unsigned threads = 0) {
  for (PropertyKind k : kinds) {
    if (!has_correspondence(k)) {
      throw Error(ErrorCode::UnsupportedKind, std::string(to_string(k)) + " has no operator correspondence");
    }
  }
  const std::uint64_t sets = detail::set_count(*alg, n, caps);
  const std::uint64_t rels = checked_power(alg->size(), n * n, caps.relations, "relation enumeration");

  const unsigned workers = resolve_threads(threads);
  std::vector<std::vector<SweepCounts>> partial(workers);
  parallel_chunks(rels, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    std::vector<SweepCounts> local;
    for (PropertyKind k : kinds) local.push_back(SweepCounts{k, 0, 0, 0, std::nullopt});
    std::vector<Elem> rel(n * n);
    for (std::uint64_t i = begin; i < end; ++i) {
      detail::decode_index(i, alg->size(), rel);
      for (std::size_t k = 0; k < kinds.size(); ++k) {
        auto o = detail::correspondence_raw(*alg, n, rel, kinds[k], sets);
        ++local[k].checked;
        if (o.agrees()) {
          ++local[k].agreed;
        } else {
          ++local[k].disagreed;
          if (!local[k].first_disagreement) local[k].first_disagreement = i;
        }
      }
    }
    partial[w] = std::move(local);
  });

  return detail::reduce_sweeps(kinds, partial);
}

}  // namespace lfr
