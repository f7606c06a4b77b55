#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lfr/error.hpp"
#include "lfr/lattice.hpp"

namespace lfr {

/// Limits on exhaustive enumeration. Exceeding one is an error, never a
/// reason to sample.
struct EnumerationCaps {
  std::uint64_t sets = 10'000;         // fuzzy sets per law check
  std::uint64_t relations = 1'000'000; // relations per sweep

  /// Defaults, with both caps replaced by DMH_ENUM_CAP when it is set.
  static EnumerationCaps from_env() {
    EnumerationCaps caps;
    if (const char* raw = std::getenv("DMH_ENUM_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(raw, &end, 10);
      if (end == raw || *end != '\0' || v == 0) {
        throw Error(ErrorCode::InvalidInput, "DMH_ENUM_CAP must be a positive integer");
      }
      caps.sets = v;
      caps.relations = v;
    }
    return caps;
  }
};

/// Upper bound for materializing the whole of F_L(U) through FuzzySetSpace.
inline constexpr std::uint64_t kSetSpaceHardCap = 1'000'000;

/// base^exp, or EnumerationTooLarge once it passes `cap`.
inline std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap, std::string_view what) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > cap / base) {
      throw Error(ErrorCode::EnumerationTooLarge, std::string(what) + " exceeds cap " + std::to_string(cap));
    }
    acc *= base;
  }
  if (acc > cap) throw Error(ErrorCode::EnumerationTooLarge, std::string(what) + " exceeds cap " + std::to_string(cap));
  return acc;
}

class Universe {
 public:
  explicit Universe(std::vector<std::string> points) : points_(std::move(points)) {
    if (points_.empty()) throw Error(ErrorCode::InvalidInput, "universe must be nonempty");
    std::map<std::string_view, int> seen;
    for (const auto& p : points_) {
      if (!seen.emplace(p, 0).second) throw Error(ErrorCode::InvalidInput, "duplicate point '" + p + "'");
    }
  }

  static std::shared_ptr<const Universe> make(std::vector<std::string> points) {
    return std::make_shared<const Universe>(std::move(points));
  }

  /// Points named x, y, z for up to three points, p1..pn beyond that.
  static std::shared_ptr<const Universe> of_size(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(n <= 3 ? std::string(1, static_cast<char>('x' + i)) : "p" + std::to_string(i + 1));
    }
    return make(std::move(names));
  }

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::string& name(std::size_t x) const { return points_.at(x); }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (points_[i] == name) return i;
    }
    return std::nullopt;
  }

  std::size_t point(std::string_view name) const {
    if (auto p = find(name)) return *p;
    throw Error(ErrorCode::UnknownPoint, "no point named '" + std::string(name) + "'");
  }

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::vector<std::string> points_;
};

using UniversePtr = std::shared_ptr<const Universe>;

namespace detail {

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a == b || (a && b && *a == *b); }
inline bool same_universe(const UniversePtr& a, const UniversePtr& b) { return a == b || (a && b && *a == *b); }

inline void check_values(const DmhAlgebra& alg, std::span<const Elem> values) {
  for (Elem e : values) {
    if (index(e) >= alg.size()) throw Error(ErrorCode::UnknownElement, "value outside the algebra");
  }
}

}  // namespace detail

/// An L-fuzzy set: a total map from universe points to algebra elements.
class FuzzySet {
 public:
  FuzzySet(AlgebraPtr algebra, UniversePtr universe, std::vector<Elem> values)
      : algebra_(std::move(algebra)), universe_(std::move(universe)), values_(std::move(values)) {
    if (!algebra_ || !universe_) throw Error(ErrorCode::InvalidInput, "fuzzy set needs an algebra and a universe");
    if (values_.size() != universe_->size()) throw Error(ErrorCode::InvalidInput, "fuzzy set must be total on U");
    detail::check_values(*algebra_, values_);
  }

  /// Values given by point and element names; every point must appear.
  static FuzzySet from_names(AlgebraPtr algebra, UniversePtr universe, const std::map<std::string, std::string>& values) {
    if (values.size() != universe->size()) throw Error(ErrorCode::SchemaError, "fuzzy set must list every point once");
    std::vector<Elem> v(universe->size(), Elem{});
    for (const auto& [point, element] : values) v[universe->point(point)] = algebra->element(element);
    return FuzzySet(std::move(algebra), std::move(universe), std::move(v));
  }

  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  const DmhAlgebra& algebra() const noexcept { return *algebra_; }
  const Universe& universe() const noexcept { return *universe_; }

  std::size_t size() const noexcept { return values_.size(); }
  Elem operator[](std::size_t x) const { return values_[x]; }
  Elem at(std::string_view point) const { return values_[universe_->point(point)]; }
  std::span<const Elem> values() const noexcept { return values_; }

  /// Equal values over the same context; sets from different contexts are
  /// never equal.
  friend bool operator==(const FuzzySet& a, const FuzzySet& b) {
    return detail::same_algebra(a.algebra_, b.algebra_) && detail::same_universe(a.universe_, b.universe_) &&
           a.values_ == b.values_;
  }

 private:
  AlgebraPtr algebra_;
  UniversePtr universe_;
  std::vector<Elem> values_;
};

/// An L-fuzzy relation on U, stored row-major in declared point order.
class FuzzyRelation {
 public:
  FuzzyRelation(AlgebraPtr algebra, UniversePtr universe, std::vector<Elem> row_major)
      : algebra_(std::move(algebra)), universe_(std::move(universe)), values_(std::move(row_major)) {
    if (!algebra_ || !universe_) throw Error(ErrorCode::InvalidInput, "relation needs an algebra and a universe");
    if (values_.size() != universe_->size() * universe_->size()) {
      throw Error(ErrorCode::InvalidInput, "relation must be total on U x U");
    }
    detail::check_values(*algebra_, values_);
  }

  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  const DmhAlgebra& algebra() const noexcept { return *algebra_; }
  const Universe& universe() const noexcept { return *universe_; }

  std::size_t size() const noexcept { return universe_->size(); }
  Elem operator()(std::size_t x, std::size_t y) const { return values_[x * size() + y]; }
  Elem at(std::string_view x, std::string_view y) const { return (*this)(universe_->point(x), universe_->point(y)); }
  std::span<const Elem> values() const noexcept { return values_; }
  std::span<const Elem> row(std::size_t x) const { return std::span(values_).subspan(x * size(), size()); }

  friend bool operator==(const FuzzyRelation& a, const FuzzyRelation& b) {
    return detail::same_algebra(a.algebra_, b.algebra_) && detail::same_universe(a.universe_, b.universe_) &&
           a.values_ == b.values_;
  }

 private:
  AlgebraPtr algebra_;
  UniversePtr universe_;
  std::vector<Elem> values_;
};

template <class A, class B>
bool shares_context(const A& a, const B& b) {
  return detail::same_algebra(a.algebra_ptr(), b.algebra_ptr()) && detail::same_universe(a.universe_ptr(), b.universe_ptr());
}

template <class A, class B>
void require_same_context(const A& a, const B& b) {
  if (!shares_context(a, b)) throw Error(ErrorCode::MixedContext, "operands live over different algebras or universes");
}

enum class PointwiseOp { Join, Meet, Neg, Arrow, Heyting };

inline FuzzySet pointwise(PointwiseOp op, const FuzzySet& a) {
  if (op != PointwiseOp::Neg) throw Error(ErrorCode::InvalidInput, "only NEG is unary");
  std::vector<Elem> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a.algebra().neg(a[x]);
  return FuzzySet(a.algebra_ptr(), a.universe_ptr(), std::move(out));
}

inline FuzzySet pointwise(PointwiseOp op, const FuzzySet& a, const FuzzySet& b) {
  require_same_context(a, b);
  const DmhAlgebra& alg = a.algebra();
  std::vector<Elem> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    switch (op) {
      case PointwiseOp::Join: out[x] = alg.join(a[x], b[x]); break;
      case PointwiseOp::Meet: out[x] = alg.meet(a[x], b[x]); break;
      case PointwiseOp::Arrow: out[x] = alg.arrow(a[x], b[x]); break;
      case PointwiseOp::Heyting: out[x] = alg.implies(a[x], b[x]); break;
      case PointwiseOp::Neg: throw Error(ErrorCode::InvalidInput, "NEG is unary");
    }
  }
  return FuzzySet(a.algebra_ptr(), a.universe_ptr(), std::move(out));
}

inline FuzzySet join(const FuzzySet& a, const FuzzySet& b) { return pointwise(PointwiseOp::Join, a, b); }
inline FuzzySet meet(const FuzzySet& a, const FuzzySet& b) { return pointwise(PointwiseOp::Meet, a, b); }
inline FuzzySet neg(const FuzzySet& a) { return pointwise(PointwiseOp::Neg, a); }

/// Pointwise order.
inline bool leq(const FuzzySet& a, const FuzzySet& b) {
  require_same_context(a, b);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (!a.algebra().leq(a[x], b[x])) return false;
  }
  return true;
}

inline FuzzySet constant_set(const AlgebraPtr& alg, const UniversePtr& uni, Elem a) {
  return FuzzySet(alg, uni, std::vector<Elem>(uni->size(), a));
}

inline FuzzySet bottom_set(const AlgebraPtr& alg, const UniversePtr& uni) { return constant_set(alg, uni, alg->bottom()); }
inline FuzzySet top_set(const AlgebraPtr& alg, const UniversePtr& uni) { return constant_set(alg, uni, alg->top()); }

/// I_x: top at x, bottom elsewhere.
inline FuzzySet singleton(const AlgebraPtr& alg, const UniversePtr& uni, std::size_t x) {
  if (x >= uni->size()) throw Error(ErrorCode::UnknownPoint, "point index out of range");
  std::vector<Elem> v(uni->size(), alg->bottom());
  v[x] = alg->top();
  return FuzzySet(alg, uni, std::move(v));
}

inline FuzzySet singleton(const AlgebraPtr& alg, const UniversePtr& uni, std::string_view x) {
  return singleton(alg, uni, uni->point(x));
}

/// Checks A = join_x (const(A(x)) ^ I_x) and A = meet_x (const(A(x)) v I_x').
inline bool decomposition_check(const FuzzySet& a) {
  const auto& alg = a.algebra_ptr();
  const auto& uni = a.universe_ptr();
  FuzzySet by_join = bottom_set(alg, uni);
  FuzzySet by_meet = top_set(alg, uni);
  for (std::size_t x = 0; x < a.size(); ++x) {
    FuzzySet level = constant_set(alg, uni, a[x]);
    FuzzySet point = singleton(alg, uni, x);
    by_join = join(by_join, meet(level, point));
    by_meet = meet(by_meet, join(level, neg(point)));
  }
  return by_join == a && by_meet == a;
}

namespace detail {

/// Writes the digits of `index` in base `base`, most significant first.
inline void decode_index(std::uint64_t index, std::size_t base, std::span<Elem> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = elem(index % base);
    index /= base;
  }
}

inline std::uint64_t encode_index(std::span<const Elem> values, std::size_t base) {
  std::uint64_t acc = 0;
  for (Elem e : values) acc = acc * base + index(e);
  return acc;
}

}  // namespace detail

/// The finite space of all value vectors of a given length over an algebra,
/// in lexicographic order (first coordinate most significant, elements in
/// declared order). Shared by FuzzySetSpace and RelationSpace.
template <class Item>
class ValueSpace {
 public:
  std::uint64_t size() const noexcept { return count_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const UniversePtr& universe_ptr() const noexcept { return universe_; }

  Item at(std::uint64_t i) const {
    std::vector<Elem> v(length_);
    detail::decode_index(i, algebra_->size(), v);
    return Item(algebra_, universe_, std::move(v));
  }

  std::uint64_t index_of(const Item& item) const {
    require_same_context(item, *this);
    return detail::encode_index(item.values(), algebra_->size());
  }

  class iterator {
   public:
    using value_type = Item;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(const ValueSpace* space, std::uint64_t i) : space_(space), i_(i) {}

    Item operator*() const { return space_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++i_;
      return tmp;
    }
    std::uint64_t position() const noexcept { return i_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.i_ == b.i_; }

   private:
    const ValueSpace* space_ = nullptr;
    std::uint64_t i_ = 0;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, count_); }

 protected:
  ValueSpace(AlgebraPtr alg, UniversePtr uni, std::size_t length, std::uint64_t cap, std::string_view what)
      : algebra_(std::move(alg)), universe_(std::move(uni)), length_(length),
        count_(checked_power(algebra_->size(), length, cap, what)) {}

 private:
  AlgebraPtr algebra_;
  UniversePtr universe_;
  std::size_t length_;
  std::uint64_t count_;
};

/// All of F_L(U), |L|^|U| sets.
class FuzzySetSpace : public ValueSpace<FuzzySet> {
 public:
  FuzzySetSpace(AlgebraPtr alg, UniversePtr uni, std::uint64_t cap = kSetSpaceHardCap)
      : ValueSpace(alg, uni, uni->size(), std::min(cap, kSetSpaceHardCap), "fuzzy set enumeration") {}
};

/// All L-relations on U, |L|^(|U|^2) relations, row-major lexicographic.
class RelationSpace : public ValueSpace<FuzzyRelation> {
 public:
  RelationSpace(AlgebraPtr alg, UniversePtr uni, std::uint64_t cap)
      : ValueSpace(alg, uni, uni->size() * uni->size(), cap, "relation enumeration") {}
};

}  // namespace lfr
