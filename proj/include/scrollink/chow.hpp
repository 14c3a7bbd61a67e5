#pragma once

#include <initializer_list>
#include <span>

#include "scrollink/base.hpp"
#include "scrollink/scroll.hpp"

namespace scrollink {

/// Intersection number of dim(X) divisor classes on the resolution of X.
///
/// The form is multilinear with monomial values
///   Ht^r = f,   Ht^(r-1)*Rt = 1,   Ht^(r-2)*Rt^2 = ... = Rt^r = 0,
/// so the full 2^r expansion collapses to the two surviving layers:
///   f * prod_t(h_t)  +  sum_t r_t * prod_{u != t}(h_u).
inline Int intersect(const Scroll& x, std::span<const ResolvedClass> classes) {
  require(static_cast<Int>(classes.size()) == x.dimension(), "arity_eq_dim",
          "intersection number needs exactly dim(X) classes");
  Int top = 1;
  for (const ResolvedClass& c : classes) top *= c.h;
  Int value = x.degree() * top;
  for (std::size_t t = 0; t < classes.size(); ++t) {
    Int term = classes[t].r;
    for (std::size_t u = 0; u < classes.size(); ++u) {
      if (u != t) term *= classes[u].h;
    }
    value += term;
  }
  return value;
}

inline Int intersect(const Scroll& x, std::initializer_list<ResolvedClass> classes) {
  return intersect(x, std::span<const ResolvedClass>(classes.begin(), classes.size()));
}

/// Invariants of the complete intersection curve Y cut on a 3-dimensional
/// scroll X by hypersurfaces of degrees a and b.
struct CiCurveData {
  Int a = 0;
  Int b = 0;
  Int degree = 0;         // a*b*f
  Int ruling_degree = 0;  // deg(R intersect Y) = a*b
  Int genus = 0;          // 2g - 2 = (a+b-3)*degree + (n-4)*ruling_degree
};

/// Degree and ruling degree come from the intersection form; the genus from
/// the adjunction identity above, whose right-hand side equals
/// a*b*(f*(a+b-2) - 2) and is therefore always even.  Evenness is still
/// checked: a failure means arithmetic left the exact range.
inline CiCurveData ci_invariants(const Scroll& x, Int a, Int b) {
  require(x.dimension() == 3, "dim_eq_3",
          "complete intersection curve invariants need a 3-dimensional scroll");
  require(a >= 1 && b >= 1, "cut_degrees_positive", "hypersurface degrees must be >= 1");
  const ResolvedClass cut_a{a, 0};
  const ResolvedClass cut_b{b, 0};
  Int degree = intersect(x, {cut_a, cut_b, {1, 0}});
  Int ruling_degree = intersect(x, {cut_a, cut_b, {0, 1}});
  Int n = x.embedding_dimension();
  Int twice = (a + b - 3) * degree + (n - 4) * ruling_degree;
  ensure(twice % 2 == 0, "adjunction degree of a complete intersection curve must be even");
  return {a, b, degree, ruling_degree, twice / 2 + 1};
}

}  // namespace scrollink
