#pragma once

#include <array>
#include <charconv>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lfr/error.hpp"

namespace lfr {

/// Dense index of a lattice element. Element names live on the lattice.
enum class Elem : std::uint8_t {};

constexpr std::size_t index(Elem e) noexcept { return static_cast<std::size_t>(e); }
constexpr Elem elem(std::size_t i) noexcept { return static_cast<Elem>(i); }

inline constexpr std::size_t kMaxElements = 255;

/// Square row-major table holding a binary operation on elements.
class ElementTable {
 public:
  ElementTable() = default;
  explicit ElementTable(std::size_t n) : n_(n), cells_(n * n, Elem{}) {}

  Elem operator()(Elem a, Elem b) const { return cells_[index(a) * n_ + index(b)]; }
  Elem& at(Elem a, Elem b) { return cells_[index(a) * n_ + index(b)]; }
  std::size_t size() const noexcept { return n_; }

  friend bool operator==(const ElementTable&, const ElementTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> cells_;
};

using OrderPairs = std::vector<std::pair<std::string, std::string>>;

class FiniteLattice;
FiniteLattice build_lattice(std::vector<std::string> elements, const OrderPairs& leq_pairs);

/// A finite bounded lattice with every operation tabulated at construction.
///
/// Instances only come out of build_lattice(), which validates the order, so
/// every accessor is total and O(1).
class FiniteLattice {
 public:
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Elem e) const { return names_[index(e)]; }

  std::optional<Elem> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return elem(i);
    }
    return std::nullopt;
  }

  Elem element(std::string_view name) const {
    if (auto e = find(name)) return *e;
    throw Error(ErrorCode::UnknownElement, "no element named '" + std::string(name) + "'");
  }

  auto elements() const {
    return std::views::iota(std::size_t{0}, size()) | std::views::transform(elem);
  }

  bool leq(Elem a, Elem b) const { return leq_[index(a) * size() + index(b)] != 0; }
  Elem join(Elem a, Elem b) const { return join_(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_(a, b); }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  /// Join of a finite family; the empty join is bottom.
  template <std::ranges::input_range R>
  Elem join_all(R&& family) const {
    Elem acc = bottom_;
    for (Elem e : family) acc = join(acc, e);
    return acc;
  }

  /// Meet of a finite family; the empty meet is top.
  template <std::ranges::input_range R>
  Elem meet_all(R&& family) const {
    Elem acc = top_;
    for (Elem e : family) acc = meet(acc, e);
    return acc;
  }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_;
  }

 private:
  friend FiniteLattice build_lattice(std::vector<std::string>, const OrderPairs&);
  FiniteLattice() = default;

  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  ElementTable join_;
  ElementTable meet_;
  Elem bottom_{};
  Elem top_{};
};

/// Builds a lattice from the reflexive-transitive closure of the declared
/// order pairs. Throws NotAPoset, NoBounds or NotALattice.
inline FiniteLattice build_lattice(std::vector<std::string> elements, const OrderPairs& leq_pairs) {
  if (elements.empty()) throw Error(ErrorCode::InvalidInput, "a lattice needs at least one element");
  if (elements.size() > kMaxElements) {
    throw Error(ErrorCode::InvalidInput, "at most " + std::to_string(kMaxElements) + " elements supported");
  }
  const std::size_t n = elements.size();
  std::map<std::string, std::size_t, std::less<>> ids;
  for (std::size_t i = 0; i < n; ++i) {
    if (!ids.emplace(elements[i], i).second) {
      throw Error(ErrorCode::InvalidInput, "duplicate element '" + elements[i] + "'");
    }
  }
  auto lookup = [&](const std::string& name) {
    auto it = ids.find(name);
    if (it == ids.end()) throw Error(ErrorCode::UnknownElement, "order pair names undeclared element '" + name + "'");
    return it->second;
  };

  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [lo, hi] : leq_pairs) leq[lookup(lo) * n + lookup(hi)] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k * n + j]) leq[i * n + j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq[i * n + j] && leq[j * n + i]) {
        throw Error(ErrorCode::NotAPoset, "'" + elements[i] + "' and '" + elements[j] + "' are below each other");
      }
    }
  }

  auto below_all = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq[i * n + j]) return false;
    }
    return true;
  };
  auto above_all = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq[j * n + i]) return false;
    }
    return true;
  };
  std::optional<std::size_t> bottom, top;
  for (std::size_t i = 0; i < n; ++i) {
    if (below_all(i)) bottom = i;
    if (above_all(i)) top = i;
  }
  if (!bottom) throw Error(ErrorCode::NoBounds, "no least element");
  if (!top) throw Error(ErrorCode::NoBounds, "no greatest element");

  FiniteLattice lat;
  lat.join_ = ElementTable(n);
  lat.meet_ = ElementTable(n);
  std::vector<std::size_t> bounds;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // least upper bound
      bounds.clear();
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[a * n + c] && leq[b * n + c]) bounds.push_back(c);
      }
      std::optional<std::size_t> lub;
      for (std::size_t c : bounds) {
        bool least = true;
        for (std::size_t d : bounds) least = least && leq[c * n + d];
        if (least) lub = c;
      }
      if (!lub) {
        throw Error(ErrorCode::NotALattice, "'" + elements[a] + "' and '" + elements[b] + "' have no least upper bound");
      }
      lat.join_.at(elem(a), elem(b)) = elem(*lub);

      // greatest lower bound
      bounds.clear();
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[c * n + a] && leq[c * n + b]) bounds.push_back(c);
      }
      std::optional<std::size_t> glb;
      for (std::size_t c : bounds) {
        bool greatest = true;
        for (std::size_t d : bounds) greatest = greatest && leq[d * n + c];
        if (greatest) glb = c;
      }
      if (!glb) {
        throw Error(ErrorCode::NotALattice, "'" + elements[a] + "' and '" + elements[b] + "' have no greatest lower bound");
      }
      lat.meet_.at(elem(a), elem(b)) = elem(*glb);
    }
  }
  lat.names_ = std::move(elements);
  lat.leq_ = std::move(leq);
  lat.bottom_ = elem(*bottom);
  lat.top_ = elem(*top);
  return lat;
}

/// First triple (a, b, c) with a ^ (b v c) != (a ^ b) v (a ^ c), if any.
inline std::optional<std::array<Elem, 3>> find_distributivity_failure(const FiniteLattice& lat) {
  for (Elem a : lat.elements()) {
    for (Elem b : lat.elements()) {
      for (Elem c : lat.elements()) {
        if (lat.meet(a, lat.join(b, c)) != lat.join(lat.meet(a, b), lat.meet(a, c))) {
          return std::array<Elem, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool is_distributive(const FiniteLattice& lat) { return !find_distributivity_failure(lat); }

/// Relative pseudocomplement table: implies(a, b) is the join of every c
/// with a ^ c <= b. Throws NotDistributive when no residuum exists.
inline ElementTable derive_heyting(const FiniteLattice& lat) {
  if (auto bad = find_distributivity_failure(lat)) {
    const auto& [a, b, c] = *bad;
    throw Error(ErrorCode::NotDistributive, "distributivity fails at (" + lat.name(a) + ", " + lat.name(b) + ", " +
                                                lat.name(c) + ")");
  }
  ElementTable implies(lat.size());
  for (Elem a : lat.elements()) {
    for (Elem b : lat.elements()) {
      Elem acc = lat.bottom();
      for (Elem c : lat.elements()) {
        if (lat.leq(lat.meet(a, c), b)) acc = lat.join(acc, c);
      }
      implies.at(a, b) = acc;
    }
  }
  for (Elem a : lat.elements()) {
    for (Elem b : lat.elements()) {
      for (Elem c : lat.elements()) {
        if (lat.leq(lat.meet(a, c), b) != lat.leq(c, implies(a, b))) {
          throw Error(ErrorCode::NotDistributive, "residuation fails for " + lat.name(a) + " => " + lat.name(b));
        }
      }
    }
  }
  return implies;
}

class DmhAlgebra;
DmhAlgebra attach_involution(FiniteLattice lat, std::vector<Elem> neg_map);

/// A finite De Morgan Heyting algebra: distributive lattice, Heyting
/// implication and an antitone involution. Immutable once built.
class DmhAlgebra {
 public:
  const FiniteLattice& lattice() const noexcept { return lattice_; }

  std::size_t size() const noexcept { return lattice_.size(); }
  const std::string& name(Elem e) const { return lattice_.name(e); }
  const std::vector<std::string>& names() const noexcept { return lattice_.names(); }
  std::optional<Elem> find(std::string_view n) const { return lattice_.find(n); }
  Elem element(std::string_view n) const { return lattice_.element(n); }
  auto elements() const { return lattice_.elements(); }

  bool leq(Elem a, Elem b) const { return lattice_.leq(a, b); }
  Elem join(Elem a, Elem b) const { return lattice_.join(a, b); }
  Elem meet(Elem a, Elem b) const { return lattice_.meet(a, b); }
  Elem bottom() const noexcept { return lattice_.bottom(); }
  Elem top() const noexcept { return lattice_.top(); }
  template <std::ranges::input_range R>
  Elem join_all(R&& family) const { return lattice_.join_all(std::forward<R>(family)); }
  template <std::ranges::input_range R>
  Elem meet_all(R&& family) const { return lattice_.meet_all(std::forward<R>(family)); }

  Elem implies(Elem a, Elem b) const { return implies_(a, b); }
  Elem neg(Elem a) const { return neg_[index(a)]; }
  /// De Morgan implication a' v b. Not residuated in general.
  Elem arrow(Elem a, Elem b) const { return join(neg(a), b); }

  const ElementTable& implies_table() const noexcept { return implies_; }
  const std::vector<Elem>& involution() const noexcept { return neg_; }

  friend bool operator==(const DmhAlgebra& a, const DmhAlgebra& b) {
    return a.lattice_ == b.lattice_ && a.neg_ == b.neg_;
  }

 private:
  friend DmhAlgebra attach_involution(FiniteLattice, std::vector<Elem>);
  DmhAlgebra(FiniteLattice lat, ElementTable implies, std::vector<Elem> neg)
      : lattice_(std::move(lat)), implies_(std::move(implies)), neg_(std::move(neg)) {}

  FiniteLattice lattice_;
  ElementTable implies_;
  std::vector<Elem> neg_;
};

using AlgebraPtr = std::shared_ptr<const DmhAlgebra>;

/// Validates the involution (x'' = x, (x ^ y)' = x' v y') and derives the
/// Heyting implication. Throws NotInvolutive, NotAntitone, NotDistributive.
inline DmhAlgebra attach_involution(FiniteLattice lat, std::vector<Elem> neg_map) {
  if (neg_map.size() != lat.size()) {
    throw Error(ErrorCode::SchemaError, "involution must be defined on every element");
  }
  for (Elem e : neg_map) {
    if (index(e) >= lat.size()) throw Error(ErrorCode::UnknownElement, "involution maps outside the lattice");
  }
  for (Elem x : lat.elements()) {
    if (neg_map[index(neg_map[index(x)])] != x) {
      throw Error(ErrorCode::NotInvolutive, "(" + lat.name(x) + "')' != " + lat.name(x));
    }
  }
  for (Elem x : lat.elements()) {
    for (Elem y : lat.elements()) {
      if (neg_map[index(lat.meet(x, y))] != lat.join(neg_map[index(x)], neg_map[index(y)])) {
        throw Error(ErrorCode::NotAntitone, "De Morgan law fails for (" + lat.name(x) + ", " + lat.name(y) + ")");
      }
    }
  }
  ElementTable implies = derive_heyting(lat);
  return DmhAlgebra(std::move(lat), std::move(implies), std::move(neg_map));
}

inline DmhAlgebra attach_involution(FiniteLattice lat, const std::map<std::string, std::string>& neg_map) {
  std::vector<Elem> table;
  table.reserve(lat.size());
  for (Elem x : lat.elements()) {
    auto it = neg_map.find(lat.name(x));
    if (it == neg_map.end()) {
      throw Error(ErrorCode::SchemaError, "involution missing for element '" + lat.name(x) + "'");
    }
    table.push_back(lat.element(it->second));
  }
  return attach_involution(std::move(lat), std::move(table));
}

inline Elem demorgan_arrow(const DmhAlgebra& alg, Elem a, Elem b) { return alg.arrow(a, b); }

namespace detail {

inline AlgebraPtr make_algebra(std::vector<std::string> elements, const OrderPairs& order,
                               const std::map<std::string, std::string>& involution) {
  return std::make_shared<const DmhAlgebra>(attach_involution(build_lattice(std::move(elements), order), involution));
}

inline AlgebraPtr diamond(bool swap) {
  return make_algebra({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}},
                      {{"0", "1"}, {"a", swap ? "b" : "a"}, {"b", swap ? "a" : "b"}, {"1", "0"}});
}

/// k-element chain 0 < c1 < ... < 1 with the order-reversing mirror.
inline AlgebraPtr chain(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(i == 0 ? "0" : (i + 1 == k ? "1" : "c" + std::to_string(i)));
  }
  OrderPairs order;
  for (std::size_t i = 0; i + 1 < k; ++i) order.emplace_back(names[i], names[i + 1]);
  std::map<std::string, std::string> mirror;
  for (std::size_t i = 0; i < k; ++i) mirror[names[i]] = names[k - 1 - i];
  return make_algebra(std::move(names), order, mirror);
}

}  // namespace detail

/// Catalog ids with a fixed algebra; "chain_n(k)" is accepted in addition.
inline const std::vector<std::string>& standard_algebra_ids() {
  static const std::vector<std::string> ids{"bool2", "chain3", "m2_fix", "m2_swap"};
  return ids;
}

/// Named algebras used throughout the examples. Fixed ids return a shared
/// instance, so contexts built from them compare by pointer.
inline AlgebraPtr standard_algebra(std::string_view id) {
  if (id == "bool2") {
    static const AlgebraPtr a = detail::make_algebra({"0", "1"}, {{"0", "1"}}, {{"0", "1"}, {"1", "0"}});
    return a;
  }
  if (id == "chain3") {
    static const AlgebraPtr a =
        detail::make_algebra({"0", "u", "1"}, {{"0", "u"}, {"u", "1"}}, {{"0", "1"}, {"u", "u"}, {"1", "0"}});
    return a;
  }
  if (id == "m2_fix") {
    static const AlgebraPtr a = detail::diamond(false);
    return a;
  }
  if (id == "m2_swap") {
    static const AlgebraPtr a = detail::diamond(true);
    return a;
  }
  constexpr std::string_view prefix = "chain_n(";
  if (id.starts_with(prefix) && id.ends_with(")")) {
    std::string_view digits = id.substr(prefix.size(), id.size() - prefix.size() - 1);
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && k >= 1 && k <= kMaxElements) {
      return detail::chain(k);
    }
  }
  throw Error(ErrorCode::UnknownCatalogId, "unknown algebra '" + std::string(id) + "'");
}

}  // namespace lfr
