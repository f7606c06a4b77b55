#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "lfr/approx.hpp"
#include "lfr/error.hpp"
#include "lfr/fuzzy.hpp"

namespace lfr {

enum class PropertyKind : std::uint8_t {
  Serial,
  SerialPointed,
  SerialSingleton,
  Reflexive,
  SymmetricDm,
  SymmetricClassical,
  Transitive,
  Mediate,
  Euclidean,
  Adjoint,
  Functional,
  PositiveAlliance,
};

inline constexpr std::array<PropertyKind, 12> kAllKinds{
    PropertyKind::Serial,     PropertyKind::SerialPointed,      PropertyKind::SerialSingleton,
    PropertyKind::Reflexive,  PropertyKind::SymmetricDm,        PropertyKind::SymmetricClassical,
    PropertyKind::Transitive, PropertyKind::Mediate,            PropertyKind::Euclidean,
    PropertyKind::Adjoint,    PropertyKind::Functional,         PropertyKind::PositiveAlliance,
};

constexpr std::string_view to_string(PropertyKind k) noexcept {
  switch (k) {
    case PropertyKind::Serial: return "serial";
    case PropertyKind::SerialPointed: return "serial_pointed";
    case PropertyKind::SerialSingleton: return "serial_singleton";
    case PropertyKind::Reflexive: return "reflexive";
    case PropertyKind::SymmetricDm: return "symmetric_dm";
    case PropertyKind::SymmetricClassical: return "symmetric_classical";
    case PropertyKind::Transitive: return "transitive";
    case PropertyKind::Mediate: return "mediate";
    case PropertyKind::Euclidean: return "euclidean";
    case PropertyKind::Adjoint: return "adjoint";
    case PropertyKind::Functional: return "functional";
    case PropertyKind::PositiveAlliance: return "positive_alliance";
  }
  return "unknown";
}

inline PropertyKind parse_kind(std::string_view name) {
  for (PropertyKind k : kAllKinds) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::UnknownKind, "unknown property '" + std::string(name) + "'");
}

/// Points of the first violation plus the raw values involved.
///
/// For most kinds `values` is {lhs, rhs} of an inequality lhs <= rhs that
/// fails. Equations of the form v = 1 are stored as {1, v}. Exceptions:
/// symmetric_classical stores {R(x,y), R(y,x)} (which differ) and
/// serial_pointed stores the whole row of x (none of it is 1).
///
/// Point tuples: (x) for serial, serial_pointed, reflexive; (x, z, y) for
/// transitive, following the path x -> z -> y; (x, y) otherwise.
struct Witness {
  std::vector<std::size_t> points;
  std::vector<Elem> values;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct PropertyReport {
  PropertyKind kind;
  bool holds = true;
  std::optional<Witness> witness;

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

namespace detail {

// Shared by the fuzzy and crisp checkers: evaluates every defining condition
// on a raw row-major relation and stops at the first violation.
inline PropertyReport check_raw(const DmhAlgebra& alg, std::size_t n, std::span<const Elem> r, PropertyKind kind) {
  auto R = [&](std::size_t x, std::size_t y) { return r[x * n + y]; };
  const Elem one = alg.top();
  const Elem zero = alg.bottom();
  PropertyReport rep{kind, true, std::nullopt};
  auto fail = [&](std::vector<std::size_t> pts, std::vector<Elem> vals) {
    rep.holds = false;
    rep.witness = Witness{std::move(pts), std::move(vals)};
    return rep;
  };
  auto ineq = [&](Elem lhs, Elem rhs) { return alg.leq(lhs, rhs); };

  switch (kind) {
    case PropertyKind::Serial:
      for (std::size_t x = 0; x < n; ++x) {
        Elem s = zero;
        for (std::size_t y = 0; y < n; ++y) s = alg.join(s, R(x, y));
        if (s != one) return fail({x}, {one, s});
      }
      return rep;
    case PropertyKind::SerialPointed:
      for (std::size_t x = 0; x < n; ++x) {
        bool found = false;
        for (std::size_t y = 0; y < n && !found; ++y) found = R(x, y) == one;
        if (!found) return fail({x}, std::vector<Elem>(r.begin() + x * n, r.begin() + (x + 1) * n));
      }
      return rep;
    case PropertyKind::SerialSingleton:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Elem others = zero;
          for (std::size_t z = 0; z < n; ++z) {
            if (z != y) others = alg.join(others, R(x, z));
          }
          Elem lhs = alg.neg(R(x, y));
          if (!ineq(lhs, others)) return fail({x, y}, {lhs, others});
        }
      }
      return rep;
    case PropertyKind::Reflexive:
      for (std::size_t x = 0; x < n; ++x) {
        if (R(x, x) != one) return fail({x}, {one, R(x, x)});
      }
      return rep;
    case PropertyKind::SymmetricDm:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Elem v = alg.join(alg.neg(R(x, y)), R(y, x));
          if (v != one) return fail({x, y}, {one, v});
        }
      }
      return rep;
    case PropertyKind::SymmetricClassical:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (R(x, y) != R(y, x)) return fail({x, y}, {R(x, y), R(y, x)});
        }
      }
      return rep;
    case PropertyKind::Transitive:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t z = 0; z < n; ++z) {
          for (std::size_t y = 0; y < n; ++y) {
            Elem lhs = alg.meet(R(x, z), R(z, y));
            if (!ineq(lhs, R(x, y))) return fail({x, z, y}, {lhs, R(x, y)});
          }
        }
      }
      return rep;
    case PropertyKind::Mediate:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Elem rhs = zero;
          for (std::size_t z = 0; z < n; ++z) rhs = alg.join(rhs, alg.meet(R(x, z), R(z, y)));
          if (!ineq(R(x, y), rhs)) return fail({x, y}, {R(x, y), rhs});
        }
      }
      return rep;
    case PropertyKind::Euclidean:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Elem lhs = zero;
          for (std::size_t z = 0; z < n; ++z) lhs = alg.join(lhs, alg.meet(R(x, z), alg.neg(R(z, y))));
          Elem rhs = alg.neg(R(x, y));
          if (!ineq(lhs, rhs)) return fail({x, y}, {lhs, rhs});
        }
      }
      return rep;
    case PropertyKind::Adjoint:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Elem lhs = one;
          for (std::size_t z = 0; z < n; ++z) {
            Elem inner = zero;  // empty join when U = {y}
            for (std::size_t w = 0; w < n; ++w) {
              if (w != y) inner = alg.join(inner, alg.join(alg.neg(R(x, z)), R(z, w)));
            }
            lhs = alg.meet(lhs, inner);
          }
          Elem rhs = alg.neg(R(x, y));
          if (!ineq(lhs, rhs)) return fail({x, y}, {lhs, rhs});
        }
      }
      return rep;
    case PropertyKind::Functional:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Elem rhs = one;
          for (std::size_t z = 0; z < n; ++z) {
            if (z != y) rhs = alg.meet(rhs, alg.neg(R(x, z)));
          }
          if (!ineq(R(x, y), rhs)) return fail({x, y}, {R(x, y), rhs});
        }
      }
      return rep;
    case PropertyKind::PositiveAlliance:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Elem rhs = zero;
          for (std::size_t z = 0; z < n; ++z) rhs = alg.join(rhs, alg.meet(R(x, z), alg.neg(R(z, y))));
          Elem lhs = alg.neg(R(x, y));
          if (!ineq(lhs, rhs)) return fail({x, y}, {lhs, rhs});
        }
      }
      return rep;
  }
  return rep;
}

}  // namespace detail

inline PropertyReport check_property(const FuzzyRelation& r, PropertyKind kind) {
  return detail::check_raw(r.algebra(), r.size(), r.values(), kind);
}

/// Re-evaluates a witness against the relation; true iff it really is a
/// violation of `kind` with exactly the recorded values.
inline bool witness_violates(const FuzzyRelation& r, PropertyKind kind, const Witness& w) {
  const std::size_t n = r.size();
  for (std::size_t p : w.points) {
    if (p >= n) return false;
  }
  const DmhAlgebra& alg = r.algebra();
  auto pair_ok = [&](Elem lhs, Elem rhs) { return w.values == std::vector<Elem>{lhs, rhs} && !alg.leq(lhs, rhs); };
  const Elem one = alg.top();
  const Elem zero = alg.bottom();
  switch (kind) {
    case PropertyKind::Serial: {
      if (w.points.size() != 1) return false;
      Elem s = zero;
      for (std::size_t y = 0; y < n; ++y) s = alg.join(s, r(w.points[0], y));
      return pair_ok(one, s);
    }
    case PropertyKind::SerialPointed: {
      if (w.points.size() != 1) return false;
      auto row = r.row(w.points[0]);
      return std::vector<Elem>(row.begin(), row.end()) == w.values &&
             std::find(row.begin(), row.end(), one) == row.end();
    }
    case PropertyKind::Reflexive:
      return w.points.size() == 1 && pair_ok(one, r(w.points[0], w.points[0]));
    case PropertyKind::SymmetricClassical:
      return w.points.size() == 2 && w.values == std::vector<Elem>{r(w.points[0], w.points[1]), r(w.points[1], w.points[0])} &&
             w.values[0] != w.values[1];
    case PropertyKind::Transitive: {
      if (w.points.size() != 3) return false;
      auto [x, z, y] = std::tuple(w.points[0], w.points[1], w.points[2]);
      return pair_ok(alg.meet(r(x, z), r(z, y)), r(x, y));
    }
    default:
      break;
  }
  if (w.points.size() != 2) return false;
  const std::size_t x = w.points[0];
  const std::size_t y = w.points[1];
  auto R = [&](std::size_t a, std::size_t b) { return r(a, b); };
  switch (kind) {
    case PropertyKind::SerialSingleton: {
      Elem others = zero;
      for (std::size_t z = 0; z < n; ++z) {
        if (z != y) others = alg.join(others, R(x, z));
      }
      return pair_ok(alg.neg(R(x, y)), others);
    }
    case PropertyKind::SymmetricDm:
      return pair_ok(one, alg.join(alg.neg(R(x, y)), R(y, x)));
    case PropertyKind::Mediate: {
      Elem rhs = zero;
      for (std::size_t z = 0; z < n; ++z) rhs = alg.join(rhs, alg.meet(R(x, z), R(z, y)));
      return pair_ok(R(x, y), rhs);
    }
    case PropertyKind::Euclidean: {
      Elem lhs = zero;
      for (std::size_t z = 0; z < n; ++z) lhs = alg.join(lhs, alg.meet(R(x, z), alg.neg(R(z, y))));
      return pair_ok(lhs, alg.neg(R(x, y)));
    }
    case PropertyKind::Adjoint: {
      Elem lhs = one;
      for (std::size_t z = 0; z < n; ++z) {
        Elem inner = zero;
        for (std::size_t v = 0; v < n; ++v) {
          if (v != y) inner = alg.join(inner, alg.join(alg.neg(R(x, z)), R(z, v)));
        }
        lhs = alg.meet(lhs, inner);
      }
      return pair_ok(lhs, alg.neg(R(x, y)));
    }
    case PropertyKind::Functional: {
      Elem rhs = one;
      for (std::size_t z = 0; z < n; ++z) {
        if (z != y) rhs = alg.meet(rhs, alg.neg(R(x, z)));
      }
      return pair_ok(R(x, y), rhs);
    }
    case PropertyKind::PositiveAlliance: {
      Elem rhs = zero;
      for (std::size_t z = 0; z < n; ++z) rhs = alg.join(rhs, alg.meet(R(x, z), alg.neg(R(z, y))));
      return pair_ok(alg.neg(R(x, y)), rhs);
    }
    default:
      return false;
  }
}

/// The operator-level condition on singletons I_x, as (lhs, rhs) with
/// lhs(I_x) <= rhs(I_x) required for every x. Serial is characterized on the
/// constant 1 instead and has no entry here.
inline std::optional<std::pair<OperatorWord, OperatorWord>> singleton_law(PropertyKind kind) {
  auto w = [](std::string_view s) { return OperatorWord::parse(s); };
  switch (kind) {
    case PropertyKind::SerialSingleton: return std::pair{w("L"), w("U")};
    case PropertyKind::Reflexive: return std::pair{w("I"), w("U")};
    case PropertyKind::SymmetricDm: return std::pair{w("I"), w("LU")};
    case PropertyKind::Transitive: return std::pair{w("UU"), w("U")};
    case PropertyKind::Mediate: return std::pair{w("U"), w("UU")};
    case PropertyKind::Euclidean: return std::pair{w("U"), w("LU")};
    case PropertyKind::Adjoint: return std::pair{w("U"), w("UL")};
    case PropertyKind::Functional: return std::pair{w("U"), w("L")};
    case PropertyKind::PositiveAlliance: return std::pair{w("LU"), w("U")};
    default: return std::nullopt;
  }
}

constexpr bool has_singleton_characterization(PropertyKind kind) noexcept {
  return kind != PropertyKind::SerialPointed && kind != PropertyKind::SymmetricClassical;
}

inline bool singleton_characterization(const FuzzyRelation& r, PropertyKind kind) {
  if (!has_singleton_characterization(kind)) {
    throw Error(ErrorCode::UnsupportedKind, std::string(to_string(kind)) + " has no singleton characterization");
  }
  const AlgebraPtr& alg = r.algebra_ptr();
  const UniversePtr& uni = r.universe_ptr();
  if (kind == PropertyKind::Serial) {
    FuzzySet one = top_set(alg, uni);
    return upper(r, one) == one;
  }
  auto [lhs, rhs] = *singleton_law(kind);
  const std::size_t n = r.size();
  detail::WordEvaluator ev(*alg, n, r.values());
  std::vector<Elem> a(n), b(n);
  for (std::size_t x = 0; x < n; ++x) {
    FuzzySet ix = singleton(alg, uni, x);
    ev.apply(lhs, ix.values(), a);
    ev.apply(rhs, ix.values(), b);
    if (!detail::values_leq(*alg, a, b)) return false;
  }
  return true;
}

}  // namespace lfr
