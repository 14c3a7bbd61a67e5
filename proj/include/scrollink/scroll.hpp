#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "scrollink/base.hpp"

namespace scrollink {

/// Weil divisor class a*H + b*R on the scroll itself.  H is the hyperplane
/// class, R the class of a ruling plane.  Equality of ambient classes is a
/// statement about the class group, so compare through classes_equal(), not
/// componentwise.
struct AmbientClass {
  Int h = 0;
  Int r = 0;
};

/// Divisor class a*Ht + b*Rt on the resolution, where Ht and Rt are the
/// pullbacks of H and R.  The resolution has free rank-2 Picard group, so
/// componentwise equality is the right notion here.
struct ResolvedClass {
  Int h = 0;
  Int r = 0;

  friend bool operator==(const ResolvedClass&, const ResolvedClass&) = default;
};

enum class ClassGroup {
  FreeRank2,    // Cl(X) = Z<H> + Z<R>
  CyclicHisFR,  // codimension-2 vertex: H ~ f*R and Cl(X) = Z<R>
};

inline const char* to_string(ClassGroup g) {
  return g == ClassGroup::FreeRank2 ? "FreeRank2" : "CyclicHisFR";
}

/// A rational normal scroll: the variety of minimal degree determined by
/// splitting degrees 0 <= a_1 <= ... <= a_r, not all zero.
///
/// Invariants kept by construction:
///   dimension r >= 2, degree f = sum(a_i) >= 1, spans P^(f+r-1);
///   the vertex is spanned by the zero summands, so with l = #zeros the
///   vertex has dimension l-1 (-1 meaning empty, i.e. the scroll is smooth)
///   and l < r always holds.
class Scroll {
public:
  explicit Scroll(std::vector<Int> degrees) : degrees_(std::move(degrees)) {
    require(degrees_.size() >= 2, "dim_ge_2", "a scroll needs at least two splitting degrees");
    std::sort(degrees_.begin(), degrees_.end());
    require(degrees_.front() >= 0, "degrees_nonnegative", "splitting degrees must be >= 0");
    require(degrees_.back() >= 1, "degree_positive",
            "at least one splitting degree must be positive");
  }

  const std::vector<Int>& degrees() const { return degrees_; }

  Int dimension() const { return static_cast<Int>(degrees_.size()); }

  Int degree() const { return std::accumulate(degrees_.begin(), degrees_.end(), Int{0}); }

  Int embedding_dimension() const { return degree() + dimension() - 1; }

  Int zero_count() const {
    return static_cast<Int>(std::count(degrees_.begin(), degrees_.end(), Int{0}));
  }

  /// -1 when smooth, 0 for a point vertex, 1 for a line vertex, ...
  Int vertex_dimension() const { return zero_count() - 1; }

  bool smooth() const { return zero_count() == 0; }

private:
  std::vector<Int> degrees_;
};

inline Scroll make_scroll(std::vector<Int> degrees) { return Scroll(std::move(degrees)); }

inline ClassGroup class_group(const Scroll& x) {
  return x.vertex_dimension() == x.dimension() - 2 ? ClassGroup::CyclicHisFR
                                                   : ClassGroup::FreeRank2;
}

/// Canonical representative of a divisor class.  In the cyclic case H ~ f*R
/// collapses every class onto the ruling axis; otherwise classes are already
/// canonical.
inline AmbientClass normalize_class(const Scroll& x, AmbientClass c) {
  if (class_group(x) == ClassGroup::CyclicHisFR) return {0, c.h * x.degree() + c.r};
  return c;
}

inline bool classes_equal(const Scroll& x, AmbientClass lhs, AmbientClass rhs) {
  AmbientClass a = normalize_class(x, lhs);
  AmbientClass b = normalize_class(x, rhs);
  return a.h == b.h && a.r == b.r;
}

/// K_X ~ -r*H + (f-2)*R, returned unnormalized.
inline AmbientClass canonical_class(const Scroll& x) {
  return {-x.dimension(), x.degree() - 2};
}

/// Whether the rank-1 sheaf attached to a*H + b*R is reflexive.  Only a
/// codimension-2 vertex obstructs reflexivity, and there exactly the classes
/// with b < f survive.  Smooth scrolls are rejected: every divisor class is
/// Cartier and the question does not arise.
inline bool is_reflexive(const Scroll& x, Int a, Int b) {
  require(!x.smooth(), "scroll_singular", "reflexivity test applies to singular scrolls");
  (void)a;
  if (class_group(x) == ClassGroup::FreeRank2) return true;
  return b < x.degree();
}

struct HyperplaneSectionInfo {
  Int dimension = 0;
  Int degree = 0;
  bool smooth = false;
};

/// A general hyperplane section is again a scroll, of one dimension less and
/// the same degree.  It misses a point vertex but meets any positive-
/// dimensional one.  Sections of surfaces are curves, not scrolls, hence the
/// dimension floor.
inline HyperplaneSectionInfo hyperplane_section(const Scroll& x) {
  require(x.dimension() >= 3, "dim_ge_3",
          "hyperplane section descriptor needs a scroll of dimension >= 3");
  return {x.dimension() - 1, x.degree(), x.vertex_dimension() <= 0};
}

}  // namespace scrollink
