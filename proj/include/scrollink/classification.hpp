#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "scrollink/base.hpp"
#include "scrollink/hilbert.hpp"
#include "scrollink/linkage.hpp"
#include "scrollink/rational.hpp"
#include "scrollink/scroll.hpp"

namespace scrollink {

enum class ResidualKind {
  Empty,                     // v = n-3 with eps = s-1: C is the whole complete intersection
  PlaneCurve,                // v = n-3 in the planar window
  PlaneCurvePlusPlaneCurve,  // v = n-4 in the planar window: C' plus a plane curve of degree m+1
  OutOfImplementedRange,     // everything else
};

inline const char* to_string(ResidualKind k) {
  switch (k) {
    case ResidualKind::Empty: return "Empty";
    case ResidualKind::PlaneCurve: return "PlaneCurve";
    case ResidualKind::PlaneCurvePlusPlaneCurve: return "PlaneCurvePlusPlaneCurve";
    case ResidualKind::OutOfImplementedRange: return "OutOfImplementedRange";
  }
  return "OutOfImplementedRange";
}

/// Point-vertex 3-fold scroll of degree n-2 spanning P^n, on which the
/// closure checks run: splitting degrees (0, 1, n-3).
inline Scroll closure_scroll(Int n) {
  require(n >= 5, "n_ge_5", "closure scroll needs n >= 5");
  return Scroll({0, 1, n - 3});
}

struct ClassificationReport {
  MaxGenusParams params;
  bool in_planar_range = false;
  ResidualKind residual = ResidualKind::OutOfImplementedRange;
  Int residual_degree = 0;  // s - eps - 1, the plane component C'
  Int residual_genus = 0;   // 0 when no residual curve is classified
  AmbientClass surface_class;                 // (w+1)*H - (n-3-v)*R, or w*H + R when v = 0
  std::optional<Int> construction_D_degree;   // only for v = n-3 or v = n-4
  bool d_degree_in_window = false;            // 0 <= D degree <= w
  Int bound_G = 0;                            // genus_from_profile
  Rational closed_form;                       // comparator only, never asserted
  bool closure_attempted = false;
  bool closure_ok = false;
  std::optional<Int> noether_t;               // v = n-4: solved intersection count
  std::optional<Int> line_vertex_lower_bound; // tail bound; only ">=" on a line vertex
};

/// Everything the library can say about (d, n, s), in one deterministic pass.
/// Pure function of its inputs: repeated calls return identical reports.
inline ClassificationReport classify(Int d, Int n, Int s) {
  MaxGenusParams p = decompose(d, n, s);
  ClassificationReport rep;
  rep.params = p;
  rep.in_planar_range = p.planar_residual_range;
  rep.residual_degree = s - p.eps - 1;
  rep.surface_class =
      p.v == 0 ? AmbientClass{p.w, 1} : AmbientClass{p.w + 1, -(n - 3 - p.v)};
  rep.bound_G = genus_from_profile(p);
  rep.closed_form = genus_closed_form(p).closed_form;

  if (p.v == n - 3 || p.v == n - 4) {
    Int dd = p.eps + (p.v == n - 3 ? 1 : 2) - (n - 3) * (p.w + 1);
    rep.construction_D_degree = dd;
    rep.d_degree_in_window = (dd >= 0 && dd <= p.w);
  }

  if (p.v == n - 3 && p.eps == s - 1) {
    rep.residual = ResidualKind::Empty;
  } else if (rep.in_planar_range && p.v == n - 3) {
    rep.residual = ResidualKind::PlaneCurve;
  } else if (rep.in_planar_range && p.v == n - 4) {
    rep.residual = ResidualKind::PlaneCurvePlusPlaneCurve;
  } else {
    rep.residual = ResidualKind::OutOfImplementedRange;
  }

  if (rep.residual == ResidualKind::OutOfImplementedRange || n < 5) return rep;

  Scroll ambient = closure_scroll(n);
  Int a = p.w + 1;
  Int b = p.m + 1;
  switch (rep.residual) {
    case ResidualKind::Empty: {
      // C exhausts the complete intersection, so the table genus must come
      // back as p_a(Y) on the nose.
      CiCurveData y = ci_invariants(ambient, a, b);
      rep.closure_attempted = true;
      rep.closure_ok = (d == y.degree) && (rep.bound_G == y.genus);
      break;
    }
    case ResidualKind::PlaneCurve: {
      rep.residual_genus = clebsch(rep.residual_degree);
      rep.line_vertex_lower_bound = h0_residual(p, 0);
      CurveInvariants c{d, rep.bound_G, a * b};
      LinkResult linked = link_genus(ambient, a, b, c, rep.residual_degree, 0);
      rep.closure_attempted = true;
      rep.closure_ok = (linked.curve.genus == rep.residual_genus);
      break;
    }
    case ResidualKind::PlaneCurvePlusPlaneCurve: {
      // Residual C'' = C' union a plane curve of degree m+1 in a second
      // ruling plane; the two planes are disjoint, which the solved Noether
      // intersection count confirms.
      Int t1 = (n - 2) * p.w + n - 5 - p.eps;
      Int t2 = (n - 2) * p.w + n - 6 - p.eps;
      rep.residual_genus = t1 * t2 / 2 + p.m * (p.m - 1) / 2 - 1;
      rep.noether_t =
          rep.residual_genus - noether_union(clebsch(rep.residual_degree), clebsch(p.m + 1), 0);
      CurveInvariants c{d, rep.bound_G, a * b};
      LinkResult linked = link_genus(ambient, a, b, c, rep.residual_degree + p.m + 1, 0);
      rep.closure_attempted = true;
      rep.closure_ok = (linked.curve.genus == rep.residual_genus);
      break;
    }
    case ResidualKind::OutOfImplementedRange: break;
  }
  return rep;
}

/// Tail bound for a line-vertex ambient scroll, where the section count is
/// only bounded from below.  Same number as h0_residual; the caller must
/// present it as ">=".
inline Int line_vertex_lower_bound(Int d, Int n, Int s, Int i) {
  return h0_residual(decompose(d, n, s), i);
}

// ---------------------------------------------------------------------------
// Full-circle closure
// ---------------------------------------------------------------------------

struct ClosureReport {
  Int d = 0, n = 0, s = 0;
  Int a = 0, b = 0;        // w+1, m+1
  Int bound_G = 0;         // table genus of C
  Int ci_genus = 0;        // p_a(Y)
  Int residual_degree = 0; // s - eps - 1
  Int linked_genus = 0;    // linkage formula applied to the residual
  Int expected_genus = 0;  // plane-curve genus of the residual
  bool ok = false;
};

/// Full circle: table genus -> linkage across the (w+1, m+1) complete
/// intersection on the point-vertex scroll -> plane-curve genus of the
/// residual.  Licensed only in the planar window with v = n-3.
inline ClosureReport verify_closure(Int d, Int n, Int s) {
  require(n >= 5, "n_ge_5", "closure verification needs n >= 5");
  MaxGenusParams p = decompose(d, n, s);
  require(p.planar_residual_range, "planar_residual_range",
          "closure verification needs s-2-w <= eps <= s-2");
  require(p.v == n - 3, "v_eq_n_minus_3", "closure verification needs v = n-3");
  ClosureReport rep;
  rep.d = d;
  rep.n = n;
  rep.s = s;
  rep.a = p.w + 1;
  rep.b = p.m + 1;
  rep.bound_G = genus_from_profile(p);
  rep.residual_degree = s - p.eps - 1;
  rep.expected_genus = clebsch(rep.residual_degree);
  Scroll ambient = closure_scroll(n);
  CiCurveData y = ci_invariants(ambient, rep.a, rep.b);
  rep.ci_genus = y.genus;
  CurveInvariants c{d, rep.bound_G, rep.a * rep.b};
  rep.linked_genus = link_genus(ambient, rep.a, rep.b, c, rep.residual_degree, 0).curve.genus;
  rep.ok = (rep.linked_genus == rep.expected_genus);
  return rep;
}

// ---------------------------------------------------------------------------
// Sweep
// ---------------------------------------------------------------------------

struct IntRange {
  Int lo = 0;
  Int hi = -1;

  bool contains(Int x) const { return x >= lo && x <= hi; }
};

enum class EpsFilter { All, Planar, Range };

struct SweepOptions {
  IntRange n, s, m;
  EpsFilter eps_filter = EpsFilter::All;
  IntRange eps_range;  // honored when eps_filter == Range
  int threads = 0;     // 0: SCROLLINK_THREADS env var, then hardware concurrency
};

struct SweepResult {
  std::vector<ClassificationReport> rows;
  Int planar_rows = 0;
  Int closure_attempted = 0;
  Int closure_ok = 0;
};

namespace detail {

inline int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SCROLLINK_THREADS")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0 && parsed <= 1024) return static_cast<int>(parsed);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace detail

/// One report per admissible (d, n, s) in the requested box, ordered
/// lexicographically by (n, s, m, eps) with d = s*m + eps + 1.  Inadmissible
/// combinations (s < n-1 or m <= w) are skipped, not errors.  Rows are
/// computed in parallel but placed by index, so the output is independent of
/// the thread count.
inline SweepResult sweep(const SweepOptions& opt) {
  struct Task {
    Int d, n, s;
  };
  std::vector<Task> tasks;
  for (Int n = opt.n.lo; n <= opt.n.hi; ++n) {
    if (n < 4) continue;
    for (Int s = opt.s.lo; s <= opt.s.hi; ++s) {
      if (s < n - 1) continue;
      Int w = (s - 1) / (n - 2);
      Int eps_lo = 0, eps_hi = s - 1;
      if (opt.eps_filter == EpsFilter::Planar) {
        eps_lo = s - 2 - w;
        eps_hi = s - 2;
      } else if (opt.eps_filter == EpsFilter::Range) {
        eps_lo = std::max<Int>(0, opt.eps_range.lo);
        eps_hi = std::min<Int>(s - 1, opt.eps_range.hi);
      }
      for (Int m = opt.m.lo; m <= opt.m.hi; ++m) {
        if (m < w + 1) continue;
        for (Int eps = eps_lo; eps <= eps_hi; ++eps) tasks.push_back({s * m + eps + 1, n, s});
      }
    }
  }

  SweepResult result;
  result.rows.resize(tasks.size());
  int threads = detail::resolve_thread_count(opt.threads);
  if (threads > static_cast<int>(tasks.size())) threads = static_cast<int>(std::max<std::size_t>(tasks.size(), 1));

  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&](int id) {
    try {
      for (std::size_t i = static_cast<std::size_t>(id); i < tasks.size();
           i += static_cast<std::size_t>(threads)) {
        result.rows[i] = classify(tasks[i].d, tasks[i].n, tasks[i].s);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  for (const ClassificationReport& row : result.rows) {
    if (row.in_planar_range) ++result.planar_rows;
    if (row.closure_attempted) ++result.closure_attempted;
    if (row.closure_ok) ++result.closure_ok;
  }
  return result;
}

}  // namespace scrollink
