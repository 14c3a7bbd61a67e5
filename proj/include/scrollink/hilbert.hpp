#pragma once

#include <cmath>
#include <numeric>
#include <vector>

#include "scrollink/base.hpp"
#include "scrollink/rational.hpp"

namespace scrollink {

// ---------------------------------------------------------------------------
// Parameter block
// ---------------------------------------------------------------------------

/// Parameters behind the maximal-genus bound G(d,n,s) for a curve of degree d
/// in P^n forced to lie on a surface of degree >= s.
///
/// The two Euclidean divisions are unconditional.  The (k, delta) pair comes
/// from a case split on epsilon:
///   e = 0  (eps <  w*(n-1-v)):  eps           = k*w     + delta, 0 <= delta < w
///   e = 1  (eps >= w*(n-1-v)):  eps + n-2 - v = k*(w+1) + delta, 0 <= delta < w+1
struct MaxGenusParams {
  Int d = 0, n = 0, s = 0;
  Int m = 0, eps = 0;    // d - 1 = s*m + eps,       0 <= eps <= s-1
  Int w = 0, v = 0;      // s - 1 = (n-2)*w + v,     0 <= v <= n-3
  Int k = 0, delta = 0;  // case split above
  Int e = 0;             // selects the division defining (k, delta)
  bool in_asymptotic_range = false;     // d above the threshold below (flag only)
  bool planar_residual_range = false;   // s-2-w <= eps <= s-2
};

namespace detail {

/// Exact test of  d > (2s/(n-2)) * ((n-1)!)^(1/1 + 1/2 + ... + 1/(n-2)).
///
/// Raising both sides to L = lcm(1..n-2) clears the fractional exponents, so
/// the test becomes the integer comparison
///   (d*(n-2))^L  >  (2s)^L * ((n-1)!)^M,   M = L*(1/1 + ... + 1/(n-2)),
/// evaluated in arbitrary precision.  When the operands would exceed ~50k
/// decimal digits (far outside desk scale, n > 12 with large d) the test
/// falls back to long-double logarithms, good to ~18 significant digits for
/// a threshold that moves by whole integers.
inline bool exceeds_asymptotic_threshold(Int d, Int n, Int s) {
  Int lcm_exp = 1;
  for (Int j = 2; j <= n - 2; ++j) lcm_exp = std::lcm(lcm_exp, j);
  double base_digits = std::log10(static_cast<double>(d) * static_cast<double>(n - 2)) + 1.0;
  if (static_cast<double>(lcm_exp) * base_digits <= 50000.0) {
    BigInt lhs = boost::multiprecision::pow(BigInt(d) * (n - 2), static_cast<unsigned>(lcm_exp));
    BigInt factorial = 1;
    for (Int i = 2; i <= n - 1; ++i) factorial *= i;
    Int m_exp = 0;
    for (Int j = 1; j <= n - 2; ++j) m_exp += lcm_exp / j;
    BigInt rhs = boost::multiprecision::pow(BigInt(2) * s, static_cast<unsigned>(lcm_exp)) *
                 boost::multiprecision::pow(factorial, static_cast<unsigned>(m_exp));
    return lhs > rhs;
  }
  long double lhs = std::log(static_cast<long double>(d)) +
                    std::log(static_cast<long double>(n - 2)) -
                    std::log(static_cast<long double>(2 * s));
  long double harmonic = 0.0L;
  for (Int j = 1; j <= n - 2; ++j) harmonic += 1.0L / static_cast<long double>(j);
  return lhs > harmonic * std::lgammal(static_cast<long double>(n));
}

}  // namespace detail

inline MaxGenusParams decompose(Int d, Int n, Int s) {
  require(n >= 4, "n_ge_4", "ambient dimension must be >= 4");
  require(s >= n - 1, "s_ge_n_minus_1", "surface degree must be >= n-1");
  require(d >= 1, "d_ge_1", "curve degree must be >= 1");
  MaxGenusParams p;
  p.d = d;
  p.n = n;
  p.s = s;
  p.m = (d - 1) / s;
  p.eps = (d - 1) % s;
  p.w = (s - 1) / (n - 2);
  p.v = (s - 1) % (n - 2);
  require(p.m >= p.w + 1, "m_ge_w_plus_1",
          "d too small against s: the growth table needs m >= w+1");
  if (p.eps < p.w * (n - 1 - p.v)) {
    p.e = 0;
    p.k = p.eps / p.w;
    p.delta = p.eps % p.w;
  } else {
    p.e = 1;
    Int shifted = p.eps + n - 2 - p.v;
    p.k = shifted / (p.w + 1);
    p.delta = shifted % (p.w + 1);
  }
  p.in_asymptotic_range = detail::exceeds_asymptotic_threshold(d, n, s);
  p.planar_residual_range = (p.eps >= s - 2 - p.w) && (p.eps <= s - 2);
  return p;
}

// ---------------------------------------------------------------------------
// Growth table and profile
// ---------------------------------------------------------------------------

/// First difference of the extremal Hilbert function of the d points cut by
/// a general hyperplane.  Zero outside [0, m+w+e]; branch boundaries may
/// collide (delta = 0 empties the third branch) and then the later branch
/// wins by falling through.
inline Int delta_h(const MaxGenusParams& p, Int r) {
  if (r < 0 || r > p.m + p.w + p.e) return 0;
  if (r <= p.w) return (p.n - 2) * r + 1;
  if (r <= p.m) return p.s;
  if (r <= p.m + p.delta) return p.s + p.k - (p.n - 2) * (r - p.m);
  return p.s + p.k - (p.n - 2) * (r - p.m) - 1;
}

/// A finite first-difference sequence h(r) - h(r-1), indexed from r = 0.
class HilbertProfile {
public:
  explicit HilbertProfile(std::vector<Int> deltas) : deltas_(std::move(deltas)) {
    cumulative_.reserve(deltas_.size());
    Int acc = 0;
    for (Int dh : deltas_) {
      require(dh >= 0, "deltas_nonnegative", "profile differences must be >= 0");
      acc += dh;
      cumulative_.push_back(acc);
    }
  }

  Int delta(Int r) const {
    if (r < 0 || r > max_index()) return 0;
    return deltas_[static_cast<std::size_t>(r)];
  }

  /// h(r): 0 below zero, the full mass beyond the last index.
  Int cumulative(Int r) const {
    if (r < 0) return 0;
    if (r > max_index()) return mass();
    return cumulative_[static_cast<std::size_t>(r)];
  }

  Int mass() const { return cumulative_.empty() ? 0 : cumulative_.back(); }

  Int max_index() const { return static_cast<Int>(deltas_.size()) - 1; }

  const std::vector<Int>& deltas() const { return deltas_; }

private:
  std::vector<Int> deltas_;
  std::vector<Int> cumulative_;
};

/// The growth table materialized for params.  The mass must come back to d;
/// anything else is a defect in the table, not in the input.
inline HilbertProfile profile(const MaxGenusParams& p) {
  Int top = p.m + p.w + p.e;
  require(top < 1'000'000, "profile_size",
          "profile too large to materialize; this path is for desk-scale inputs");
  std::vector<Int> deltas;
  deltas.reserve(static_cast<std::size_t>(top) + 1);
  for (Int r = 0; r <= top; ++r) deltas.push_back(delta_h(p, r));
  HilbertProfile result(std::move(deltas));
  ensure(result.mass() == p.d, "profile mass must equal d");
  return result;
}

/// Deficiency sum sum_{r>=1} (mass - h(r)): the arithmetic genus attached to
/// an ACM profile.
inline Int acm_genus(const HilbertProfile& hp) {
  Int g = 0;
  for (Int r = 1; r <= hp.max_index(); ++r) g += hp.mass() - hp.cumulative(r);
  return g;
}

/// The authoritative G(d,n,s): deficiency sum over the growth table,
/// streamed without materializing the profile.  The mass identity is checked
/// on the way out.
inline Int genus_from_profile(const MaxGenusParams& p) {
  Int acc = 0;
  Int g = 0;
  for (Int r = 0; r <= p.m + p.w + p.e; ++r) {
    Int dh = delta_h(p, r);
    ensure(dh >= 0, "growth table produced a negative difference");
    acc += dh;
    if (r >= 1) g += p.d - acc;
  }
  ensure(acc == p.d, "growth table mass must equal d");
  return g;
}

inline Int genus_from_profile(Int d, Int n, Int s) { return genus_from_profile(decompose(d, n, s)); }

// ---------------------------------------------------------------------------
// Closed form (comparator only)
// ---------------------------------------------------------------------------

struct ClosedFormReport {
  Rational closed_form;
  Int profile_sum = 0;
  Rational difference;  // closed_form - profile_sum
};

/// The printed closed form for G(d,n,s).  Kept strictly as a comparator: the
/// table route above is authoritative and the two are known to disagree for
/// some inputs, so nothing anywhere asserts they match.
inline ClosedFormReport genus_closed_form(const MaxGenusParams& p) {
  const Rational half(1, 2);
  Rational rho;
  if (p.e == 0) {
    rho = -half * p.delta * (p.w - p.delta);
  } else {
    rho = half * p.eps - half * p.w * (p.n - 2 - p.v) - half * p.delta * (p.w - p.delta + 1);
  }
  Rational g = 1 + half * p.d * (p.m + p.w - 2) - half * (p.m + 1) * (p.w - 3) +
               half * p.v * p.m * (p.w + 1) + rho;
  ClosedFormReport report;
  report.closed_form = g;
  report.profile_sum = genus_from_profile(p);
  report.difference = g - report.profile_sum;
  return report;
}

inline ClosedFormReport genus_closed_form(Int d, Int n, Int s) {
  return genus_closed_form(decompose(d, n, s));
}

// ---------------------------------------------------------------------------
// Castelnuovo bound
// ---------------------------------------------------------------------------

struct CastelnuovoBound {
  Int w = 0, v = 0;         // s - 1 = (N-1)*w + v
  Int classical = 0;        // C(w,2)*(N-1) + w*v
  Int printed_variant = 0;  // C(w,2) + w*v
};

/// Maximal genus of an integral nondegenerate curve of degree s in P^N.
/// The classical value is the deficiency sum of the minimal point growth
/// h(r) = min((N-1)r + 1, s); the variant drops the (N-1) factor and is
/// reported alongside so callers can show both.
inline CastelnuovoBound castelnuovo_genus(Int s, Int N) {
  require(N >= 3, "N_ge_3", "Castelnuovo bound needs ambient dimension >= 3");
  require(s >= N, "s_ge_N", "Castelnuovo bound needs degree >= ambient dimension");
  CastelnuovoBound b;
  b.w = (s - 1) / (N - 1);
  b.v = (s - 1) % (N - 1);
  Int pairs = b.w * (b.w - 1) / 2;
  b.classical = pairs * (N - 1) + b.w * b.v;
  b.printed_variant = pairs + b.w * b.v;
  return b;
}

// ---------------------------------------------------------------------------
// Residual section counts
// ---------------------------------------------------------------------------

/// Sections of the residual twist i*H + (n-4)*R through the linked curve:
/// the tail sum of the growth table from r = m+w-i+1 on.  For a line-vertex
/// ambient scroll the same number is only a lower bound; callers label it.
inline Int h0_residual(const MaxGenusParams& p, Int i) {
  require(i >= 0, "i_ge_0", "twist index must be >= 0");
  require(i <= p.w && i <= p.m, "i_le_w_and_m", "twist index must be <= w and <= m");
  Int tail = 0;
  for (Int r = p.m + p.w - i + 1; r <= p.m + p.w + p.e; ++r) tail += delta_h(p, r);
  return tail;
}

/// h^1 of the twisted ideal of the hyperplane points: mass - h(k), clamped
/// at 0 past regularity.
inline Int h1_points(const HilbertProfile& hp, Int k) {
  Int value = hp.mass() - hp.cumulative(k);
  return value < 0 ? 0 : value;
}

}  // namespace scrollink
