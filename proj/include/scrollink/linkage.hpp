#pragma once

#include "scrollink/base.hpp"
#include "scrollink/chow.hpp"
#include "scrollink/scroll.hpp"

namespace scrollink {

struct CurveInvariants {
  Int degree = 0;
  Int genus = 0;
  Int ruling_degree = 0;  // deg(R intersect C)
};

enum class LinkVariant {
  Smooth,       // ambient scroll smooth
  PointVertex,  // ambient scroll has a point vertex
};

inline const char* to_string(LinkVariant v) {
  return v == LinkVariant::Smooth ? "smooth" : "point_vertex";
}

struct LinkResult {
  CurveInvariants curve;
  LinkVariant variant = LinkVariant::Smooth;
  // Degree-0 input: the formula still evaluates (to genus 1) but the value
  // is a convention for the empty curve, so it is flagged.
  bool empty_curve = false;
};

/// Genus of the curve linked to `known` by the complete intersection Y of
/// hypersurfaces of degrees a and b on a 3-dimensional scroll:
///
///   p_a(C2) = p_a(C1) - p_a(Y) + (a+b-3)*deg(C2) + (n-4)*deg(R^C2) + 1.
///
/// Both curves together must exhaust Y: degrees add up to a*b*f and ruling
/// degrees to a*b.  Line-vertex scrolls are rejected; there the accounting
/// only bounds and this function would overclaim.
inline LinkResult link_genus(const Scroll& x, Int a, Int b, const CurveInvariants& known,
                             Int unknown_degree, Int unknown_ruling) {
  require(x.dimension() == 3, "dim_eq_3", "linkage accounting needs a 3-dimensional scroll");
  require(x.vertex_dimension() <= 0, "vertex_point_or_smooth",
          "linkage genus is exact only on smooth or point-vertex scrolls");
  require(unknown_degree >= 0 && unknown_ruling >= 0, "unknown_nonnegative",
          "degree and ruling degree of the linked curve must be >= 0");
  CiCurveData y = ci_invariants(x, a, b);
  require(known.degree + unknown_degree == y.degree, "degree_conservation",
          "degrees of the linked curves must add up to deg(Y) = a*b*f");
  require(known.ruling_degree + unknown_ruling == y.ruling_degree, "ruling_conservation",
          "ruling degrees of the linked curves must add up to a*b");
  Int n = x.embedding_dimension();
  Int genus =
      known.genus - y.genus + (a + b - 3) * unknown_degree + (n - 4) * unknown_ruling + 1;
  LinkResult result;
  result.curve = {unknown_degree, genus, unknown_ruling};
  result.variant = x.smooth() ? LinkVariant::Smooth : LinkVariant::PointVertex;
  result.empty_curve = (unknown_degree == 0);
  return result;
}

/// Arithmetic genus of a union of two curves meeting in t points.
inline Int noether_union(Int p1, Int p2, Int t) {
  require(t >= 0, "t_ge_0", "intersection count must be >= 0");
  return p1 + p2 + t - 1;
}

/// Arithmetic genus of a plane curve of the given degree.
inline Int clebsch(Int degree) {
  require(degree >= 1, "degree_ge_1", "plane curve degree must be >= 1");
  return (degree - 1) * (degree - 2) / 2;
}

/// Residual accounting for a scroll inside a generic complete intersection A
/// of n-3 quadrics through it, on a general hyperplane section: A_H is the
/// quadric complete intersection curve, B_H the residual curve, and the
/// scroll contributes a rational normal curve of degree n-2 meeting B_H in
/// yb_degree points.  Noether then closes: pa_AH = pa_BH + yb_degree - 1.
struct ResidualQuadricData {
  Int n = 0;
  AmbientClass yb_class;  // (n-4)*H - (n-4)*R
  Int yb_degree = 0;      // (n-4)*(n-3)
  Int pa_AH = 0;          // 1 + 2^(n-4)*(n-5)
  Int pa_BH = 0;          // 2^(n-4)*(n-5) - (n-2)*(n-5)
};

inline ResidualQuadricData residual_quadric_invariants(Int n) {
  require(n >= 5, "n_ge_5", "quadric residual data needs n >= 5");
  require(n <= 60, "n_le_60", "2^(n-4) leaves the exact 64-bit range past n = 60");
  Int pow2 = Int{1} << (n - 4);
  ResidualQuadricData q;
  q.n = n;
  q.yb_class = {n - 4, -(n - 4)};
  q.yb_degree = (n - 4) * (n - 3);
  q.pa_AH = 1 + pow2 * (n - 5);
  q.pa_BH = pow2 * (n - 5) - (n - 2) * (n - 5);
  return q;
}

}  // namespace scrollink
