#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lfr/approx.hpp"
#include "lfr/correspondence.hpp"
#include "lfr/error.hpp"
#include "lfr/fuzzy.hpp"
#include "lfr/parallel.hpp"
#include "lfr/relations.hpp"

namespace lfr {

inline constexpr std::size_t kMaxCrispPoints = 64;

using Mask = std::uint64_t;

namespace detail {

inline void check_crisp_universe(const UniversePtr& uni) {
  if (uni->size() > kMaxCrispPoints) {
    throw Error(ErrorCode::InvalidInput, "crisp universes are limited to 64 points");
  }
}

inline Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace detail

/// A subset of U; bit x is set when point x is a member.
class CrispSet {
 public:
  CrispSet(UniversePtr uni, Mask bits) : universe_(std::move(uni)), bits_(bits) {
    detail::check_crisp_universe(universe_);
    if (bits_ & ~detail::full_mask(universe_->size())) throw Error(ErrorCode::InvalidInput, "set has points outside U");
  }

  static CrispSet of(UniversePtr uni, const std::vector<std::string>& members) {
    Mask m = 0;
    for (const auto& p : members) m |= Mask{1} << uni->point(p);
    return CrispSet(std::move(uni), m);
  }

  /// The i-th subset in lexicographic order (first point most significant).
  static CrispSet from_index(UniversePtr uni, std::uint64_t index) {
    const std::size_t n = uni->size();
    Mask m = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if ((index >> (n - 1 - x)) & 1) m |= Mask{1} << x;
    }
    return CrispSet(std::move(uni), m);
  }

  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  Mask bits() const noexcept { return bits_; }
  bool contains(std::size_t x) const { return (bits_ >> x) & 1; }
  std::size_t size() const noexcept { return universe_->size(); }

  std::vector<std::string> members() const {
    std::vector<std::string> out;
    for (std::size_t x = 0; x < size(); ++x) {
      if (contains(x)) out.push_back(universe_->name(x));
    }
    return out;
  }

  bool subset_of(const CrispSet& other) const { return (bits_ & ~other.bits_) == 0; }

  friend bool operator==(const CrispSet& a, const CrispSet& b) {
    return detail::same_universe(a.universe_, b.universe_) && a.bits_ == b.bits_;
  }

 private:
  UniversePtr universe_;
  Mask bits_;
};

/// A binary relation on U; rows()[x] is the image set R(x).
class CrispRelation {
 public:
  CrispRelation(UniversePtr uni, std::vector<Mask> rows) : universe_(std::move(uni)), rows_(std::move(rows)) {
    detail::check_crisp_universe(universe_);
    if (rows_.size() != universe_->size()) throw Error(ErrorCode::InvalidInput, "relation needs one row per point");
    for (Mask r : rows_) {
      if (r & ~detail::full_mask(universe_->size())) throw Error(ErrorCode::InvalidInput, "edge leaves U");
    }
  }

  static CrispRelation from_edges(UniversePtr uni, const std::vector<std::pair<std::string, std::string>>& edges) {
    std::vector<Mask> rows(uni->size(), 0);
    for (const auto& [a, b] : edges) rows[uni->point(a)] |= Mask{1} << uni->point(b);
    return CrispRelation(std::move(uni), std::move(rows));
  }

  /// Row-major lexicographic index, matching the bool2 relation order.
  static CrispRelation from_index(UniversePtr uni, std::uint64_t index) {
    const std::size_t n = uni->size();
    std::vector<Mask> rows(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if ((index >> (n * n - 1 - (x * n + y))) & 1) rows[x] |= Mask{1} << y;
      }
    }
    return CrispRelation(std::move(uni), std::move(rows));
  }

  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  std::size_t size() const noexcept { return universe_->size(); }
  bool operator()(std::size_t x, std::size_t y) const { return (rows_[x] >> y) & 1; }
  const std::vector<Mask>& rows() const noexcept { return rows_; }

  std::vector<std::pair<std::string, std::string>> edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t x = 0; x < size(); ++x) {
      for (std::size_t y = 0; y < size(); ++y) {
        if ((*this)(x, y)) out.emplace_back(universe_->name(x), universe_->name(y));
      }
    }
    return out;
  }

  friend bool operator==(const CrispRelation& a, const CrispRelation& b) {
    return detail::same_universe(a.universe_, b.universe_) && a.rows_ == b.rows_;
  }

 private:
  UniversePtr universe_;
  std::vector<Mask> rows_;
};

namespace detail {

inline Mask crisp_upper(const std::vector<Mask>& rows, Mask x) {
  Mask out = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] & x) out |= Mask{1} << i;
  }
  return out;
}

inline Mask crisp_lower(const std::vector<Mask>& rows, Mask x) {
  Mask out = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if ((rows[i] & ~x) == 0) out |= Mask{1} << i;
  }
  return out;
}

inline Mask crisp_word(const std::vector<Mask>& rows, const OperatorWord& w, Mask x) {
  auto letters = w.letters();
  for (std::size_t i = letters.size(); i-- > 0;) {
    x = letters[i] == Letter::Upper ? crisp_upper(rows, x) : crisp_lower(rows, x);
  }
  return x;
}

inline const AlgebraPtr& bool2() {
  static const AlgebraPtr alg = standard_algebra("bool2");
  return alg;
}

}  // namespace detail

enum class Approx : std::uint8_t { Lower, Upper };

inline CrispSet crisp_approx(const CrispRelation& rel, const CrispSet& x, Approx which) {
  if (!detail::same_universe(rel.universe_ptr(), x.universe_ptr())) {
    throw Error(ErrorCode::MixedContext, "relation and set live over different universes");
  }
  Mask m = which == Approx::Upper ? detail::crisp_upper(rel.rows(), x.bits()) : detail::crisp_lower(rel.rows(), x.bits());
  return CrispSet(rel.universe_ptr(), m);
}

inline CrispSet crisp_word(const CrispRelation& rel, const OperatorWord& w, const CrispSet& x) {
  if (!detail::same_universe(rel.universe_ptr(), x.universe_ptr())) {
    throw Error(ErrorCode::MixedContext, "relation and set live over different universes");
  }
  return CrispSet(rel.universe_ptr(), detail::crisp_word(rel.rows(), w, x.bits()));
}

constexpr bool crisp_supports(PropertyKind kind) noexcept {
  return kind != PropertyKind::SerialPointed && kind != PropertyKind::SerialSingleton &&
         kind != PropertyKind::SymmetricDm;
}

/// Classical property check. Witnesses use the same point tuples as the
/// fuzzy checker, with truth values encoded as bool2 elements (0 or 1).
inline PropertyReport crisp_property(const CrispRelation& rel, PropertyKind kind) {
  if (!crisp_supports(kind)) {
    throw Error(ErrorCode::UnsupportedKind, std::string(to_string(kind)) + " collapses in the crisp case");
  }
  const std::size_t n = rel.size();
  const Elem f = elem(0), t = elem(1);
  auto B = [&](bool b) { return b ? t : f; };
  auto R = [&](std::size_t x, std::size_t y) { return rel(x, y); };
  PropertyReport rep{kind, true, std::nullopt};
  auto fail = [&](std::vector<std::size_t> pts, std::vector<Elem> vals) {
    rep.holds = false;
    rep.witness = Witness{std::move(pts), std::move(vals)};
    return rep;
  };

  switch (kind) {
    case PropertyKind::Serial:
      for (std::size_t x = 0; x < n; ++x) {
        if (rel.rows()[x] == 0) return fail({x}, {t, f});
      }
      return rep;
    case PropertyKind::Reflexive:
      for (std::size_t x = 0; x < n; ++x) {
        if (!R(x, x)) return fail({x}, {t, f});
      }
      return rep;
    case PropertyKind::SymmetricClassical:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (R(x, y) != R(y, x)) return fail({x, y}, {B(R(x, y)), B(R(y, x))});
        }
      }
      return rep;
    case PropertyKind::Transitive:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t z = 0; z < n; ++z) {
          for (std::size_t y = 0; y < n; ++y) {
            if (R(x, z) && R(z, y) && !R(x, y)) return fail({x, z, y}, {t, f});
          }
        }
      }
      return rep;
    case PropertyKind::Mediate:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          bool via = false;
          for (std::size_t z = 0; z < n; ++z) via = via || (R(x, z) && R(z, y));
          if (R(x, y) && !via) return fail({x, y}, {t, f});
        }
      }
      return rep;
    case PropertyKind::Euclidean:
      // x R y and x R z imply z R y
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          bool bad = false;
          for (std::size_t z = 0; z < n; ++z) bad = bad || (R(x, z) && !R(z, y));
          if (bad && R(x, y)) return fail({x, y}, {t, f});
        }
      }
      return rep;
    case PropertyKind::Adjoint:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          bool lhs = true;
          for (std::size_t z = 0; z < n; ++z) {
            bool inner = false;
            for (std::size_t w = 0; w < n; ++w) inner = inner || (w != y && (!R(x, z) || R(z, w)));
            lhs = lhs && inner;
          }
          if (lhs && R(x, y)) return fail({x, y}, {t, f});
        }
      }
      return rep;
    case PropertyKind::Functional:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (R(x, y) && std::popcount(rel.rows()[x]) > 1) return fail({x, y}, {t, f});
        }
      }
      return rep;
    case PropertyKind::PositiveAlliance:
      // not x R y implies some z with x R z and not z R y
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          bool exists = false;
          for (std::size_t z = 0; z < n; ++z) exists = exists || (R(x, z) && !R(z, y));
          if (!R(x, y) && !exists) return fail({x, y}, {t, f});
        }
      }
      return rep;
    default:
      break;
  }
  return rep;
}

/// First subset X (lexicographic) with lhs(X) not contained in rhs(X), or
/// lhs(X) != rhs(X) for an equation.
inline std::optional<CrispSet> crisp_law_counterexample(const CrispRelation& rel, const OperatorLaw& law,
                                                        const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  const std::size_t n = rel.size();
  const std::uint64_t count = checked_power(2, n, caps.sets, "subset enumeration");
  for (std::uint64_t i = 0; i < count; ++i) {
    CrispSet x = CrispSet::from_index(rel.universe_ptr(), i);
    Mask l = detail::crisp_word(rel.rows(), law.lhs, x.bits());
    Mask r = detail::crisp_word(rel.rows(), law.rhs, x.bits());
    bool ok = law.rel == LawRelation::Le ? (l & ~r) == 0 : l == r;
    if (!ok) return x;
  }
  return std::nullopt;
}

inline bool crisp_law_holds(const CrispRelation& rel, const OperatorLaw& law,
                            const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  return !crisp_law_counterexample(rel, law, caps);
}

inline constexpr std::array<PropertyKind, 6> kCrispCorrespondenceKinds{
    PropertyKind::Serial,     PropertyKind::Reflexive, PropertyKind::SymmetricClassical,
    PropertyKind::Transitive, PropertyKind::Mediate,   PropertyKind::Euclidean,
};

/// Operator laws classically equivalent to `kind`. Serial is also checked on
/// the constants: U^R = U and the lower approximation of the empty set is empty.
inline std::vector<OperatorLaw> crisp_correspondence_laws(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::Serial: return {parse_law("L<=U")};
    case PropertyKind::Reflexive:
    case PropertyKind::Transitive:
    case PropertyKind::Mediate:
    case PropertyKind::Euclidean: {
      auto laws = correspondence_laws(kind);
      return {laws[0], laws[1]};
    }
    case PropertyKind::SymmetricClassical: {
      auto laws = correspondence_laws(PropertyKind::SymmetricDm);
      return {laws[0], laws[1]};
    }
    default:
      throw Error(ErrorCode::UnsupportedKind, std::string(to_string(kind)) + " is not among the crisp correspondences");
  }
}

inline bool crisp_correspondence(const CrispRelation& rel, PropertyKind kind,
                                 const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  const auto laws = crisp_correspondence_laws(kind);
  const bool prop = crisp_property(rel, kind).holds;
  for (const auto& law : laws) {
    if (crisp_law_holds(rel, law, caps) != prop) return false;
  }
  if (kind == PropertyKind::Serial) {
    const Mask all = detail::full_mask(rel.size());
    if ((detail::crisp_upper(rel.rows(), all) == all) != prop) return false;
    if ((detail::crisp_lower(rel.rows(), 0) == 0) != prop) return false;
  }
  return true;
}

/// ({x}^R)_R is contained in {x}^R for every x.
inline bool alliance_singleton_check(const CrispRelation& rel) {
  for (std::size_t x = 0; x < rel.size(); ++x) {
    Mask up = detail::crisp_upper(rel.rows(), Mask{1} << x);
    if (detail::crisp_lower(rel.rows(), up) & ~up) return false;
  }
  return true;
}

inline FuzzyRelation embed(const CrispRelation& rel) {
  const std::size_t n = rel.size();
  const AlgebraPtr& alg = detail::bool2();
  std::vector<Elem> v(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) v[x * n + y] = rel(x, y) ? alg->top() : alg->bottom();
  }
  return FuzzyRelation(alg, rel.universe_ptr(), std::move(v));
}

inline FuzzySet embed(const CrispSet& s) {
  const AlgebraPtr& alg = detail::bool2();
  std::vector<Elem> v(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) v[x] = s.contains(x) ? alg->top() : alg->bottom();
  return FuzzySet(alg, s.universe_ptr(), std::move(v));
}

/// Property-vs-law agreement over every crisp relation on n points.
inline std::vector<SweepCounts> crisp_sweep(std::size_t n, const std::vector<PropertyKind>& kinds,
                                            const EnumerationCaps& caps = EnumerationCaps::from_env(),
                                            unsigned threads = 0) {
  for (PropertyKind k : kinds) crisp_correspondence_laws(k);
  if (n == 0 || n > 8) throw Error(ErrorCode::InvalidInput, "crisp sweep needs 1..8 points");
  const std::uint64_t rels = checked_power(2, n * n, caps.relations, "relation enumeration");
  checked_power(2, n, caps.sets, "subset enumeration");
  auto uni = Universe::of_size(n);

  const unsigned workers = resolve_threads(threads);
  std::vector<std::vector<SweepCounts>> partial(workers);
  parallel_chunks(rels, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    std::vector<SweepCounts> local;
    for (PropertyKind k : kinds) local.push_back(SweepCounts{k, 0, 0, 0, std::nullopt});
    for (std::uint64_t i = begin; i < end; ++i) {
      CrispRelation rel = CrispRelation::from_index(uni, i);
      for (std::size_t k = 0; k < kinds.size(); ++k) {
        ++local[k].checked;
        if (crisp_correspondence(rel, kinds[k], caps)) {
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
