#pragma once

#include <string>
#include <vector>

#include "lfr/fuzzy.hpp"
#include "lfr/lattice.hpp"

namespace lfr::test {

inline UniversePtr xy() {
  static const UniversePtr u = Universe::make({"x", "y"});
  return u;
}

// Builds a relation from element names, row-major.
inline FuzzyRelation rel(const std::string& algebra, const std::vector<std::vector<std::string>>& rows) {
  auto alg = standard_algebra(algebra);
  auto uni = Universe::of_size(rows.size());
  std::vector<Elem> v;
  for (const auto& row : rows) {
    for (const auto& e : row) v.push_back(alg->element(e));
  }
  return FuzzyRelation(alg, uni, std::move(v));
}

inline FuzzySet set(const FuzzyRelation& r, const std::vector<std::string>& values) {
  std::vector<Elem> v;
  for (const auto& e : values) v.push_back(r.algebra().element(e));
  return FuzzySet(r.algebra_ptr(), r.universe_ptr(), std::move(v));
}

inline std::vector<std::string> names(const FuzzySet& a) {
  std::vector<std::string> out;
  for (Elem e : a.values()) out.push_back(a.algebra().name(e));
  return out;
}

struct Context {
  const char* algebra;
  std::size_t n;
};

// Catalog contexts where F_L(U) is small enough for exhaustive law checks.
inline const std::vector<Context>& small_contexts() {
  static const std::vector<Context> c{{"bool2", 1}, {"bool2", 2}, {"bool2", 3}, {"chain3", 1},
                                      {"chain3", 2}, {"m2_fix", 1}, {"m2_fix", 2}, {"m2_swap", 2}};
  return c;
}

}  // namespace lfr::test
