#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "lfr/approx.hpp"
#include "lfr/error.hpp"
#include "lfr/fuzzy.hpp"

namespace lfr {

/// A map F_L(U) -> F_L(U), given extensionally or by its singleton images.
/// Either form may be wrapped in negation-conjugation (the dual operator).
class AbstractOperator {
 public:
  static constexpr std::uint64_t kMaxTableInputs = 256;

  struct ExtensionalTable {
    std::vector<std::vector<Elem>> outputs;  // indexed by lexicographic set index
  };
  struct SingletonGenerated {
    std::vector<std::vector<Elem>> images;  // images[x] = op(I_x)
  };

  /// Tabulates `fn` over all of F_L(U); needs |L|^|U| <= 256.
  static AbstractOperator tabulate(AlgebraPtr alg, UniversePtr uni, const std::function<FuzzySet(const FuzzySet&)>& fn) {
    FuzzySetSpace space(alg, uni, kMaxTableInputs);
    ExtensionalTable t;
    t.outputs.reserve(space.size());
    for (FuzzySet a : space) {
      FuzzySet out = fn(a);
      require_same_context(a, out);
      t.outputs.emplace_back(out.values().begin(), out.values().end());
    }
    return AbstractOperator(std::move(alg), std::move(uni), std::move(t));
  }

  /// outputs[i] is the image of the i-th set in lexicographic order.
  static AbstractOperator from_table(AlgebraPtr alg, UniversePtr uni, std::vector<std::vector<Elem>> outputs) {
    const std::uint64_t count = checked_power(alg->size(), uni->size(), kMaxTableInputs, "extensional table");
    if (outputs.size() != count) throw Error(ErrorCode::SchemaError, "extensional table must list every fuzzy set");
    for (const auto& o : outputs) {
      if (o.size() != uni->size()) throw Error(ErrorCode::SchemaError, "table output must be total on U");
      detail::check_values(*alg, o);
    }
    return AbstractOperator(std::move(alg), std::move(uni), ExtensionalTable{std::move(outputs)});
  }

  static AbstractOperator from_singleton_images(AlgebraPtr alg, UniversePtr uni, std::vector<std::vector<Elem>> images) {
    if (images.size() != uni->size()) throw Error(ErrorCode::SchemaError, "need one singleton image per point");
    for (const auto& o : images) {
      if (o.size() != uni->size()) throw Error(ErrorCode::SchemaError, "singleton image must be total on U");
      detail::check_values(*alg, o);
    }
    return AbstractOperator(std::move(alg), std::move(uni), SingletonGenerated{std::move(images)});
  }

  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  const DmhAlgebra& algebra() const noexcept { return *algebra_; }
  std::size_t size() const noexcept { return universe_->size(); }

  bool is_table() const noexcept { return std::holds_alternative<ExtensionalTable>(repr_); }
  bool is_dual() const noexcept { return negated_; }
  const std::variant<ExtensionalTable, SingletonGenerated>& representation() const noexcept { return repr_; }

  /// Raw evaluation on a value vector of length |U|.
  void apply_into(std::span<const Elem> in, std::span<Elem> out) const {
    const DmhAlgebra& alg = *algebra_;
    const std::size_t n = size();
    std::vector<Elem> arg(in.begin(), in.end());
    if (negated_) {
      for (Elem& e : arg) e = alg.neg(e);
    }
    if (const auto* t = std::get_if<ExtensionalTable>(&repr_)) {
      const auto& o = t->outputs[detail::encode_index(arg, alg.size())];
      std::copy(o.begin(), o.end(), out.begin());
    } else {
      // op(A) = join_x (constant A(x) meet op(I_x))
      const auto& images = std::get<SingletonGenerated>(repr_).images;
      std::fill(out.begin(), out.end(), alg.bottom());
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) out[y] = alg.join(out[y], alg.meet(arg[x], images[x][y]));
      }
    }
    if (negated_) {
      for (Elem& e : out) e = alg.neg(e);
    }
  }

  FuzzySet apply(const FuzzySet& a) const {
    if (!detail::same_algebra(algebra_, a.algebra_ptr()) || !detail::same_universe(universe_, a.universe_ptr())) {
      throw Error(ErrorCode::MixedContext, "operator and set live over different contexts");
    }
    std::vector<Elem> out(size());
    apply_into(a.values(), out);
    return FuzzySet(algebra_, universe_, std::move(out));
  }

  FuzzySet operator()(const FuzzySet& a) const { return apply(a); }

  /// A -> op(A')'. Dualizing twice gives back the original operator.
  AbstractOperator dual() const {
    AbstractOperator d = *this;
    d.negated_ = !negated_;
    return d;
  }

 private:
  AbstractOperator(AlgebraPtr alg, UniversePtr uni, std::variant<ExtensionalTable, SingletonGenerated> repr)
      : algebra_(std::move(alg)), universe_(std::move(uni)), repr_(std::move(repr)) {}

  AlgebraPtr algebra_;
  UniversePtr universe_;
  std::variant<ExtensionalTable, SingletonGenerated> repr_;
  bool negated_ = false;
};

/// Lower-side words: the dual of a word swaps L and U.
struct AxiomSpec {
  std::vector<OperatorWord> upper_bounds;  // op <= S_j
  std::vector<OperatorWord> lower_bounds;  // T_k <= op
};

inline AbstractOperator operator_from_relation(const FuzzyRelation& r) {
  std::vector<std::vector<Elem>> images;
  for (std::size_t x = 0; x < r.size(); ++x) {
    FuzzySet img = upper(r, singleton(r.algebra_ptr(), r.universe_ptr(), x));
    images.emplace_back(img.values().begin(), img.values().end());
  }
  return AbstractOperator::from_singleton_images(r.algebra_ptr(), r.universe_ptr(), std::move(images));
}

inline AbstractOperator dual_operator(const AbstractOperator& op) { return op.dual(); }

/// R(x,y) = op(I_y)(x).
inline FuzzyRelation extract_relation(const AbstractOperator& op) {
  const std::size_t n = op.size();
  std::vector<Elem> rel(n * n);
  std::vector<Elem> in(n), out(n);
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(in.begin(), in.end(), op.algebra().bottom());
    in[y] = op.algebra().top();
    op.apply_into(in, out);
    for (std::size_t x = 0; x < n; ++x) rel[x * n + y] = out[x];
  }
  return FuzzyRelation(op.algebra_ptr(), op.universe_ptr(), std::move(rel));
}

namespace detail {

/// Images of every set, in lexicographic order.
inline std::vector<std::vector<Elem>> materialize(const AbstractOperator& op, const EnumerationCaps& caps) {
  const DmhAlgebra& alg = op.algebra();
  const std::size_t n = op.size();
  const std::uint64_t count = checked_power(alg.size(), n, caps.sets, "fuzzy set enumeration");
  std::vector<std::vector<Elem>> images(count, std::vector<Elem>(n));
  std::vector<Elem> a(n);
  for (std::uint64_t i = 0; i < count; ++i) {
    decode_index(i, alg.size(), a);
    op.apply_into(a, images[i]);
  }
  return images;
}

// The arbitrary-family axiom op(a meet join_i A_i) = a meet join_i op(A_i)
// reduces on a finite lattice to the empty family (op(0) = 0), binary joins
// (larger families follow by induction) plus the constant-meet law on a
// single set.
//
// `upper_side` selects this form. Otherwise the order-dual one is checked,
// with op(1) = 1, binary meets and op(a join A) = a join op(A).
inline bool base_axiom_on_images(const DmhAlgebra& alg, std::size_t n, const std::vector<std::vector<Elem>>& images,
                                 bool upper_side) {
  const std::uint64_t count = images.size();
  const Elem unit = upper_side ? alg.bottom() : alg.top();
  auto op2 = [&](Elem a, Elem b) { return upper_side ? alg.join(a, b) : alg.meet(a, b); };
  auto cop2 = [&](Elem a, Elem b) { return upper_side ? alg.meet(a, b) : alg.join(a, b); };

  std::vector<Elem> buf(n);
  for (std::size_t x = 0; x < n; ++x) buf[x] = unit;
  for (Elem e : images[encode_index(buf, alg.size())]) {
    if (e != unit) return false;
  }
  std::vector<Elem> a(n), b(n);
  for (std::uint64_t i = 0; i < count; ++i) {
    decode_index(i, alg.size(), a);
    for (std::uint64_t j = i + 1; j < count; ++j) {
      decode_index(j, alg.size(), b);
      for (std::size_t x = 0; x < n; ++x) buf[x] = op2(a[x], b[x]);
      const auto& combined = images[encode_index(buf, alg.size())];
      for (std::size_t x = 0; x < n; ++x) {
        if (combined[x] != op2(images[i][x], images[j][x])) return false;
      }
    }
    for (Elem c : alg.elements()) {
      for (std::size_t x = 0; x < n; ++x) buf[x] = cop2(c, a[x]);
      const auto& scaled = images[encode_index(buf, alg.size())];
      for (std::size_t x = 0; x < n; ++x) {
        if (scaled[x] != cop2(c, images[i][x])) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

inline bool base_axiom_holds(const AbstractOperator& op, const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  return detail::base_axiom_on_images(op.algebra(), op.size(), detail::materialize(op, caps), true);
}

/// The relation whose upper approximation is op, if there is one. It is
/// unique, since any such relation is recovered by extract_relation.
inline std::optional<FuzzyRelation> represents_upper(const AbstractOperator& op,
                                                     const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  const auto images = detail::materialize(op, caps);
  if (!detail::base_axiom_on_images(op.algebra(), op.size(), images, true)) return std::nullopt;
  FuzzyRelation r = extract_relation(op);
  const std::size_t n = op.size();
  std::vector<Elem> a(n), u(n);
  for (std::uint64_t i = 0; i < images.size(); ++i) {
    detail::decode_index(i, op.algebra().size(), a);
    detail::upper_into(op.algebra(), n, r.values(), a, u);
    if (u != images[i]) return std::nullopt;
  }
  return r;
}

/// Base axiom plus op <= S_j and T_k <= op on every set, with the words
/// evaluated through the relation extracted from op.
inline bool characterized_axiom_holds(const AbstractOperator& op, const AxiomSpec& spec,
                                      const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  const DmhAlgebra& alg = op.algebra();
  const std::size_t n = op.size();
  const auto images = detail::materialize(op, caps);
  if (!detail::base_axiom_on_images(alg, n, images, true)) return false;
  FuzzyRelation r = extract_relation(op);
  detail::WordEvaluator ev(alg, n, r.values());
  std::vector<Elem> a(n), w(n);
  for (std::uint64_t i = 0; i < images.size(); ++i) {
    detail::decode_index(i, alg.size(), a);
    for (const auto& s : spec.upper_bounds) {
      ev.apply(s, a, w);
      if (!detail::values_leq(alg, images[i], w)) return false;
    }
    for (const auto& t : spec.lower_bounds) {
      ev.apply(t, a, w);
      if (!detail::values_leq(alg, w, images[i])) return false;
    }
  }
  return true;
}

/// The same check phrased through the lower-side operator lop = dual(op):
/// the order-dual base axiom, lop >= dual(S_j) and lop <= dual(T_k), with
/// R(x,y) = lop(I_y')(x)'.
inline bool lower_side_axiom_holds(const AbstractOperator& lop, const AxiomSpec& spec,
                                   const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  const DmhAlgebra& alg = lop.algebra();
  const std::size_t n = lop.size();
  const auto images = detail::materialize(lop, caps);
  if (!detail::base_axiom_on_images(alg, n, images, false)) return false;
  std::vector<Elem> rel(n * n), in(n), out(n);
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(in.begin(), in.end(), alg.top());
    in[y] = alg.bottom();
    lop.apply_into(in, out);
    for (std::size_t x = 0; x < n; ++x) rel[x * n + y] = alg.neg(out[x]);
  }
  detail::WordEvaluator ev(alg, n, rel);
  std::vector<Elem> a(n), w(n);
  for (std::uint64_t i = 0; i < images.size(); ++i) {
    detail::decode_index(i, alg.size(), a);
    for (const auto& s : spec.upper_bounds) {
      ev.apply(s.dual(), a, w);
      if (!detail::values_leq(alg, w, images[i])) return false;
    }
    for (const auto& t : spec.lower_bounds) {
      ev.apply(t.dual(), a, w);
      if (!detail::values_leq(alg, images[i], w)) return false;
    }
  }
  return true;
}

/// The bare equation op(A) = (op(A) meet S_1(A) meet ...) join T_1(A) join ...
/// on every A, without the separate bound hypotheses. Weaker than
/// characterized_axiom_holds: T_k can mask a failure of op <= S_j.
inline bool single_axiom_equation_holds(const AbstractOperator& op, const AxiomSpec& spec,
                                        const EnumerationCaps& caps = EnumerationCaps::from_env()) {
  const DmhAlgebra& alg = op.algebra();
  const std::size_t n = op.size();
  const auto images = detail::materialize(op, caps);
  FuzzyRelation r = extract_relation(op);
  detail::WordEvaluator ev(alg, n, r.values());
  std::vector<Elem> a(n), w(n), rhs(n);
  for (std::uint64_t i = 0; i < images.size(); ++i) {
    detail::decode_index(i, alg.size(), a);
    rhs = images[i];
    for (const auto& s : spec.upper_bounds) {
      ev.apply(s, a, w);
      for (std::size_t x = 0; x < n; ++x) rhs[x] = alg.meet(rhs[x], w[x]);
    }
    for (const auto& t : spec.lower_bounds) {
      ev.apply(t, a, w);
      for (std::size_t x = 0; x < n; ++x) rhs[x] = alg.join(rhs[x], w[x]);
    }
    if (rhs != images[i]) return false;
  }
  return true;
}

}  // namespace lfr
