#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "oracles.hpp"
#include "scrollink/hilbert.hpp"
#include "scrollink/linkage.hpp"

using namespace scrollink;

TEST_CASE("parameter decomposition, e = 1 branch", "[hilbert]") {
  MaxGenusParams p = decompose(96, 5, 9);
  CHECK(p.m == 10);
  CHECK(p.eps == 5);
  CHECK(p.w == 2);
  CHECK(p.v == 2);
  CHECK(p.e == 1);
  CHECK(p.k == 2);
  CHECK(p.delta == 0);
  CHECK(p.planar_residual_range);
  CHECK_FALSE(p.in_asymptotic_range);
}

TEST_CASE("parameter decomposition, e = 0 branch", "[hilbert]") {
  MaxGenusParams p = decompose(109, 5, 9);
  CHECK(p.m == 12);
  CHECK(p.eps == 0);
  CHECK(p.w == 2);
  CHECK(p.v == 2);
  CHECK(p.e == 0);
  CHECK(p.k == 0);
  CHECK(p.delta == 0);
  CHECK_FALSE(p.planar_residual_range);
}

TEST_CASE("decomposition identities hold on a grid", "[hilbert][property]") {
  for (Int n = 4; n <= 9; ++n) {
    for (Int s = n - 1; s <= n + 12; ++s) {
      Int w = (s - 1) / (n - 2);
      for (Int d = s * (w + 1) + 1; d <= s * (w + 4); ++d) {
        MaxGenusParams p = decompose(d, n, s);
        CHECK(p.d - 1 == p.s * p.m + p.eps);
        CHECK(0 <= p.eps);
        CHECK(p.eps <= p.s - 1);
        CHECK(p.s - 1 == (p.n - 2) * p.w + p.v);
        CHECK(0 <= p.v);
        CHECK(p.v <= p.n - 3);
        CHECK(p.m >= p.w + 1);
        if (p.e == 0) {
          CHECK(p.eps == p.k * p.w + p.delta);
          CHECK(p.delta < p.w);
        } else {
          CHECK(p.eps + p.n - 2 - p.v == p.k * (p.w + 1) + p.delta);
          CHECK(p.delta < p.w + 1);
        }
        CHECK(p.delta >= 0);
        CHECK(p.planar_residual_range == (p.s - 2 - p.w <= p.eps && p.eps <= p.s - 2));
      }
    }
  }
}

TEST_CASE("decomposition preconditions", "[hilbert]") {
  CHECK_THROWS_AS(decompose(50, 3, 9), domain_error);
  CHECK_THROWS_AS(decompose(50, 5, 3), domain_error);
  CHECK_THROWS_AS(decompose(0, 5, 9), domain_error);
  // d = 20 gives m = 2 < w + 1 = 3 at (n, s) = (5, 9).
  CHECK_THROWS_AS(decompose(20, 5, 9), domain_error);
}

TEST_CASE("growth table at the reference point", "[hilbert]") {
  MaxGenusParams p = decompose(96, 5, 9);
  std::vector<Int> expected{1, 4, 7, 9, 9, 9, 9, 9, 9, 9, 9, 7, 4, 1};
  HilbertProfile hp = profile(p);
  CHECK(hp.deltas() == expected);
  CHECK(hp.mass() == 96);
  CHECK(hp.max_index() == 13);

  CHECK(delta_h(p, -3) == 0);
  CHECK(delta_h(p, 1) == 4);
  CHECK(delta_h(p, 13) == 1);
  CHECK(delta_h(p, 14) == 0);
}

TEST_CASE("growth table shape", "[hilbert][property]") {
  for (Int n = 5; n <= 8; ++n) {
    for (Int s = n - 1; s <= n + 9; ++s) {
      Int w = (s - 1) / (n - 2);
      for (Int d = s * (w + 1) + 1; d <= s * (w + 3); ++d) {
        MaxGenusParams p = decompose(d, n, s);
        HilbertProfile hp = profile(p);
        // Mass identity: the first differences account for every point.
        REQUIRE(hp.mass() == d);
        // Initial ramp at slope n-2, plateau at s, then a weakly
        // decreasing tail.
        for (Int r = 0; r <= p.w; ++r) CHECK(hp.delta(r) == (n - 2) * r + 1);
        for (Int r = p.w + 1; r <= p.m; ++r) CHECK(hp.delta(r) == s);
        for (Int r = p.m + 1; r <= hp.max_index(); ++r) {
          CHECK(hp.delta(r) <= hp.delta(r - 1));
          CHECK(hp.delta(r) >= 0);
        }
      }
    }
  }
}

TEST_CASE("profile accessors clamp outside the support", "[hilbert]") {
  HilbertProfile hp({1, 3, 5});
  CHECK(hp.mass() == 9);
  CHECK(hp.cumulative(-1) == 0);
  CHECK(hp.cumulative(0) == 1);
  CHECK(hp.cumulative(2) == 9);
  CHECK(hp.cumulative(50) == 9);
  CHECK(hp.delta(-1) == 0);
  CHECK(hp.delta(9) == 0);
  CHECK_THROWS_AS(HilbertProfile({1, -2, 3}), domain_error);
}

TEST_CASE("profile consistency guard", "[hilbert]") {
  // A tampered parameter block must be caught, not silently summed.
  MaxGenusParams p = decompose(96, 5, 9);
  p.d = 97;
  CHECK_THROWS_AS(profile(p), consistency_error);
  CHECK_THROWS_AS(genus_from_profile(p), consistency_error);
}

TEST_CASE("genus bound along both routes", "[hilbert]") {
  CHECK(genus_from_profile(96, 5, 9) == 529);
  CHECK(genus_from_profile(109, 5, 9) == 678);
  CHECK(acm_genus(profile(decompose(96, 5, 9))) == 529);

  ClosedFormReport report = genus_closed_form(96, 5, 9);
  CHECK(report.profile_sum == 529);
  CHECK(report.closed_form == Rational(518));
  CHECK(report.difference == Rational(-11));
}

TEST_CASE("streamed genus equals materialized genus", "[hilbert][property]") {
  for (Int n = 5; n <= 7; ++n) {
    for (Int s = n; s <= n + 7; ++s) {
      Int w = (s - 1) / (n - 2);
      for (Int d = s * (w + 1) + 1; d <= s * (w + 3); ++d) {
        MaxGenusParams p = decompose(d, n, s);
        HilbertProfile hp = profile(p);
        Int streamed = genus_from_profile(p);
        CHECK(streamed == acm_genus(hp));
        CHECK(streamed == oracles::deficiency_sum(hp.deltas()));
      }
    }
  }
}

TEST_CASE("plane curve control: constant growth gives the clebsch genus", "[hilbert]") {
  // A plane curve of degree d has delta h = 1 in every degree 0..d-1; its
  // deficiency sum must come out as (d-1)(d-2)/2.
  for (Int d = 1; d <= 12; ++d) {
    std::vector<Int> deltas(static_cast<std::size_t>(d), 1);
    CHECK(oracles::deficiency_sum(deltas) == clebsch(d));
    CHECK(acm_genus(HilbertProfile(deltas)) == clebsch(d));
  }
}

TEST_CASE("castelnuovo bound", "[hilbert]") {
  CastelnuovoBound b = castelnuovo_genus(9, 4);
  CHECK(b.w == 2);
  CHECK(b.v == 2);
  CHECK(b.classical == 7);
  CHECK(b.printed_variant == 5);

  CastelnuovoBound cubic = castelnuovo_genus(3, 3);
  CHECK(cubic.classical == 0);
  CHECK(cubic.printed_variant == 0);

  CHECK_THROWS_AS(castelnuovo_genus(9, 2), domain_error);
  CHECK_THROWS_AS(castelnuovo_genus(3, 4), domain_error);
}

TEST_CASE("castelnuovo bound agrees with the deficiency oracle", "[hilbert][property]") {
  for (Int N = 3; N <= 8; ++N) {
    for (Int s = N; s <= N + 30; ++s) {
      CHECK(castelnuovo_genus(s, N).classical == oracles::castelnuovo_deficiency(s, N));
    }
  }
}

TEST_CASE("residual sections", "[hilbert]") {
  MaxGenusParams p = decompose(96, 5, 9);
  CHECK(h0_residual(p, 0) == 1);
  CHECK(h0_residual(p, 1) == 5);
  CHECK(h0_residual(p, 2) == 12);
  CHECK_THROWS_AS(h0_residual(p, -1), domain_error);
  CHECK_THROWS_AS(h0_residual(p, 3), domain_error);
}

TEST_CASE("residual section differences follow the growth table", "[hilbert][property]") {
  for (Int n = 5; n <= 7; ++n) {
    for (Int s = n; s <= n + 6; ++s) {
      Int w = (s - 1) / (n - 2);
      for (Int d = s * (w + 1) + 1; d <= s * (w + 2); ++d) {
        MaxGenusParams p = decompose(d, n, s);
        Int cap = std::min(p.w, p.m);
        for (Int i = 1; i <= cap; ++i) {
          CHECK(h0_residual(p, i) - h0_residual(p, i - 1) == delta_h(p, p.m + p.w - i + 1));
        }
      }
    }
  }
}

TEST_CASE("point cohomology deficit", "[hilbert]") {
  HilbertProfile hp = profile(decompose(96, 5, 9));
  CHECK(h1_points(hp, 13) == 0);
  CHECK(h1_points(hp, 20) == 0);
  CHECK(h1_points(hp, 10) == 12);
  CHECK(h1_points(hp, -1) == 96);
}

TEST_CASE("asymptotic range flag flips at the exact threshold", "[hilbert]") {
  // At (n, s) = (4, 3) the threshold is 3 * 6^(3/2) = 44.09..., so 44 is out
  // and 45 is in.
  CHECK_FALSE(decompose(44, 4, 3).in_asymptotic_range);
  CHECK(decompose(45, 4, 3).in_asymptotic_range);
  // Large n exercises the logarithmic fallback; the threshold is astronomical
  // there, far beyond any 64-bit degree.
  CHECK_FALSE(decompose(1'000'000'000'000'000'000LL, 20, 19).in_asymptotic_range);
}
