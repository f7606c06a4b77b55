#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lfr/error.hpp"
#include "lfr/fuzzy.hpp"

namespace lfr {

enum class Letter : std::uint8_t { Lower, Upper };

/// A composition of lower/upper approximations, outermost letter first:
/// "LU" denotes A -> lower(upper(A)). The empty word is the identity.
class OperatorWord {
 public:
  static constexpr std::size_t kDefaultCap = 4;

  OperatorWord() = default;

  explicit OperatorWord(std::vector<Letter> letters, std::size_t cap = kDefaultCap) : letters_(std::move(letters)) {
    if (letters_.size() > cap) {
      throw Error(ErrorCode::WordTooLong, "word of length " + std::to_string(letters_.size()) + " exceeds cap " +
                                              std::to_string(cap));
    }
  }

  /// Parses a string over {L, U}; "" and "I" denote the identity.
  static OperatorWord parse(std::string_view text, std::size_t cap = kDefaultCap) {
    if (text == "I") return OperatorWord();
    std::vector<Letter> letters;
    for (char c : text) {
      if (c == 'L') {
        letters.push_back(Letter::Lower);
      } else if (c == 'U') {
        letters.push_back(Letter::Upper);
      } else {
        throw Error(ErrorCode::InvalidInput, "operator word '" + std::string(text) + "' must be over {L, U} or 'I'");
      }
    }
    return OperatorWord(std::move(letters), cap);
  }

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  std::string str() const {
    if (letters_.empty()) return "I";
    std::string s;
    for (Letter l : letters_) s.push_back(l == Letter::Lower ? 'L' : 'U');
    return s;
  }

  /// The word conjugate under negation: letters swapped.
  OperatorWord dual() const {
    std::vector<Letter> swapped;
    for (Letter l : letters_) swapped.push_back(l == Letter::Lower ? Letter::Upper : Letter::Lower);
    return OperatorWord(std::move(swapped), letters_.size());
  }

  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Every word of length 0..max_len, shorter words first, L before U.
inline std::vector<OperatorWord> all_words(std::size_t max_len) {
  std::vector<OperatorWord> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::vector<Letter> letters(len);
      for (std::size_t i = 0; i < len; ++i) {
        letters[i] = ((bits >> (len - 1 - i)) & 1) ? Letter::Upper : Letter::Lower;
      }
      out.emplace_back(std::move(letters), max_len);
    }
  }
  return out;
}

namespace detail {

// Raw kernels over row-major relation values; `in` and `out` must not alias.

inline void upper_into(const DmhAlgebra& alg, std::size_t n, std::span<const Elem> rel, std::span<const Elem> in,
                       std::span<Elem> out) {
  for (std::size_t x = 0; x < n; ++x) {
    Elem acc = alg.bottom();
    for (std::size_t y = 0; y < n; ++y) acc = alg.join(acc, alg.meet(rel[x * n + y], in[y]));
    out[x] = acc;
  }
}

inline void lower_into(const DmhAlgebra& alg, std::size_t n, std::span<const Elem> rel, std::span<const Elem> in,
                       std::span<Elem> out) {
  for (std::size_t x = 0; x < n; ++x) {
    Elem acc = alg.top();
    for (std::size_t y = 0; y < n; ++y) acc = alg.meet(acc, alg.join(alg.neg(rel[x * n + y]), in[y]));
    out[x] = acc;
  }
}

/// Evaluates operator words for one relation without allocating per call.
class WordEvaluator {
 public:
  WordEvaluator(const DmhAlgebra& alg, std::size_t n, std::span<const Elem> rel)
      : alg_(&alg), n_(n), rel_(rel), scratch_a_(n), scratch_b_(n) {}

  void apply(const OperatorWord& w, std::span<const Elem> in, std::span<Elem> out) {
    auto letters = w.letters();
    std::copy(in.begin(), in.end(), scratch_a_.begin());
    for (std::size_t i = letters.size(); i-- > 0;) {
      if (letters[i] == Letter::Upper) {
        upper_into(*alg_, n_, rel_, scratch_a_, scratch_b_);
      } else {
        lower_into(*alg_, n_, rel_, scratch_a_, scratch_b_);
      }
      scratch_a_.swap(scratch_b_);
    }
    std::copy(scratch_a_.begin(), scratch_a_.end(), out.begin());
  }

 private:
  const DmhAlgebra* alg_;
  std::size_t n_;
  std::span<const Elem> rel_;
  std::vector<Elem> scratch_a_;
  std::vector<Elem> scratch_b_;
};

inline bool values_leq(const DmhAlgebra& alg, std::span<const Elem> a, std::span<const Elem> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!alg.leq(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace detail

/// upper(A)(x) = join_y (R(x,y) ^ A(y)).
inline FuzzySet upper(const FuzzyRelation& r, const FuzzySet& a) {
  require_same_context(r, a);
  std::vector<Elem> out(a.size());
  detail::upper_into(r.algebra(), r.size(), r.values(), a.values(), out);
  return FuzzySet(a.algebra_ptr(), a.universe_ptr(), std::move(out));
}

/// lower(A)(x) = meet_y (R(x,y)' v A(y)).
inline FuzzySet lower(const FuzzyRelation& r, const FuzzySet& a) {
  require_same_context(r, a);
  std::vector<Elem> out(a.size());
  detail::lower_into(r.algebra(), r.size(), r.values(), a.values(), out);
  return FuzzySet(a.algebra_ptr(), a.universe_ptr(), std::move(out));
}

/// Residuated lower approximation: meet_y (R(x,y) => A(y)).
inline FuzzySet lower_residuated(const FuzzyRelation& r, const FuzzySet& a) {
  require_same_context(r, a);
  const DmhAlgebra& alg = r.algebra();
  const std::size_t n = r.size();
  std::vector<Elem> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    Elem acc = alg.top();
    for (std::size_t y = 0; y < n; ++y) acc = alg.meet(acc, alg.implies(r(x, y), a[y]));
    out[x] = acc;
  }
  return FuzzySet(a.algebra_ptr(), a.universe_ptr(), std::move(out));
}

inline FuzzySet apply_word(const FuzzyRelation& r, const OperatorWord& w, const FuzzySet& a) {
  require_same_context(r, a);
  std::vector<Elem> out(a.size());
  detail::WordEvaluator(r.algebra(), r.size(), r.values()).apply(w, a.values(), out);
  return FuzzySet(a.algebra_ptr(), a.universe_ptr(), std::move(out));
}

}  // namespace lfr
