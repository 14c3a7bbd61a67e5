#pragma once

#include "scrollink/base.hpp"
#include "scrollink/chow.hpp"
#include "scrollink/scroll.hpp"

namespace scrollink {

/// Integral total transform on the resolution of an effective divisor
/// D ~ d*R across a codimension-2 vertex.  Writing d - 1 = k*f + h with
/// 0 <= h < f gives D* ~ (k+1)*Ht - (f-h-1)*Rt.
inline ResolvedClass total_transform(const Scroll& x, Int d) {
  require(class_group(x) == ClassGroup::CyclicHisFR, "vertex_codim_2",
          "total transform is defined across a codimension-2 vertex");
  require(d >= 1, "d_ge_1", "the divisor d*R must be effective and nonzero");
  Int f = x.degree();
  Int k = (d - 1) / f;
  Int h = (d - 1) % f;
  return {k + 1, -(f - h - 1)};
}

/// Proper transform of the curve cut on a line-vertex 3-fold by a
/// hypersurface of degree cut_degree passing through the vertex line with
/// multiplicity vertex_mult: (cut_degree - a)*Ht + f*a*Rt for a = vertex_mult.
inline ResolvedClass proper_transform_through_vertex(const Scroll& x, Int cut_degree,
                                                     Int vertex_mult) {
  require(x.dimension() == 3 && x.vertex_dimension() == 1, "vertex_is_line",
          "proper transform through the vertex needs a 3-fold whose vertex is a line");
  require(vertex_mult >= 0, "mult_nonnegative", "vertex multiplicity must be >= 0");
  require(vertex_mult <= cut_degree, "mult_le_cut_degree",
          "vertex multiplicity cannot exceed the cutting degree");
  return {cut_degree - vertex_mult, x.degree() * vertex_mult};
}

/// Multiplicity along the vertex line of the curve cut by two hypersurfaces
/// of degrees deg1, deg2 with vertex multiplicities a, b: the Chow defect
///   S*.F*.Ht - St.Ft.Ht
/// between total transforms (deg*Ht) and proper transforms.  The value
/// always comes out as a*b*f; it is computed by expansion, not by that
/// closed form, so the two routes check each other in the test suite.
inline Int vertex_multiplicity_ci(const Scroll& x, Int deg1, Int a, Int deg2, Int b) {
  require(x.dimension() == 3 && x.vertex_dimension() == 1, "vertex_is_line",
          "vertex multiplicities need a 3-fold whose vertex is a line");
  const ResolvedClass hyper{1, 0};
  const ResolvedClass total1{deg1, 0};
  const ResolvedClass total2{deg2, 0};
  ResolvedClass proper1 = proper_transform_through_vertex(x, deg1, a);
  ResolvedClass proper2 = proper_transform_through_vertex(x, deg2, b);
  return intersect(x, {total1, total2, hyper}) - intersect(x, {proper1, proper2, hyper});
}

/// Multiplicity at the vertex of the intersection with one ruling plane
/// through the vertex: S*.P*.Ht - St.Pt.Ht where P* = Ht - (f-1)*Rt is the
/// total transform of the plane and Pt = Rt its proper transform.  Always
/// equals the vertex multiplicity a of the cutting hypersurface.
inline Int vertex_multiplicity_in_ruling_plane(const Scroll& x, Int deg1, Int a) {
  require(x.dimension() == 3 && x.vertex_dimension() == 1, "vertex_is_line",
          "vertex multiplicities need a 3-fold whose vertex is a line");
  const ResolvedClass hyper{1, 0};
  const ResolvedClass total1{deg1, 0};
  ResolvedClass plane_total = total_transform(x, 1);
  ResolvedClass proper1 = proper_transform_through_vertex(x, deg1, a);
  return intersect(x, {total1, plane_total, hyper}) - intersect(x, {proper1, {0, 1}, hyper});
}

}  // namespace scrollink
