#include <catch2/catch_amalgamated.hpp>

#include "scrollink/expr.hpp"

using namespace scrollink;

TEST_CASE("divisor products parse into resolved classes", "[expr]") {
  auto factors = expr::parse_divisor_product("(2H+R)*H*H");
  REQUIRE(factors.size() == 3);
  CHECK(factors[0] == ResolvedClass{2, 1});
  CHECK(factors[1] == ResolvedClass{1, 0});
  CHECK(factors[2] == ResolvedClass{1, 0});

  auto single = expr::parse_divisor_product("3R");
  REQUIRE(single.size() == 1);
  CHECK(single[0] == ResolvedClass{0, 3});

  auto spaced = expr::parse_divisor_product("  ( 2H + R )  * H * H  ");
  CHECK(spaced == factors);
}

TEST_CASE("linear forms support signs and repeated terms", "[expr]") {
  auto neg = expr::parse_divisor_product("(-H+2R)*R");
  REQUIRE(neg.size() == 2);
  CHECK(neg[0] == ResolvedClass{-1, 2});
  CHECK(neg[1] == ResolvedClass{0, 1});

  auto collected = expr::parse_divisor_product("(H+H-3R+R)");
  REQUIRE(collected.size() == 1);
  CHECK(collected[0] == ResolvedClass{2, -2});

  // Zero classes are legitimate: cancellation and zero coefficients.
  CHECK(expr::parse_divisor_product("(H-H)")[0] == ResolvedClass{0, 0});
  CHECK(expr::parse_divisor_product("0H")[0] == ResolvedClass{0, 0});
}

TEST_CASE("evaluation against a scroll", "[expr]") {
  Scroll x({0, 0, 3});
  CHECK(expr::evaluate(x, "H*H*H") == 3);
  CHECK(expr::evaluate(x, "(2H+R)*H*H") == 7);
  CHECK(expr::evaluate(x, "H*H*R") == 1);
  CHECK(expr::evaluate(x, "(H-H)*H*R") == 0);
  // Arity mismatches surface as domain errors from the intersection form.
  CHECK_THROWS_AS(expr::evaluate(x, "H*H"), domain_error);
  CHECK_THROWS_AS(expr::evaluate(x, "H*H*H*H"), domain_error);
}

TEST_CASE("malformed expressions are rejected with a position", "[expr]") {
  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      expr::parse_divisor_product(text);
    } catch (const expr::parse_error& e) {
      return e.position();
    }
    FAIL("expected parse_error for: " << text);
    return static_cast<std::size_t>(-1);
  };

  // Sums of products are not divisor products.
  CHECK(position_of("H*H+H") == 3);
  // A bare integer factor has no divisor meaning.
  CHECK(position_of("3*H*H") == 0);
  CHECK(position_of("H*H*3") == 4);
  CHECK(position_of("H*(R+1)*H") == 5);
  CHECK_THROWS_AS(expr::parse_divisor_product(""), expr::parse_error);
  CHECK_THROWS_AS(expr::parse_divisor_product("H**H"), expr::parse_error);
  CHECK_THROWS_AS(expr::parse_divisor_product("(H"), expr::parse_error);
  CHECK_THROWS_AS(expr::parse_divisor_product("H)"), expr::parse_error);
  CHECK_THROWS_AS(expr::parse_divisor_product("xH"), expr::parse_error);
  CHECK_THROWS_AS(expr::parse_divisor_product("H*"), expr::parse_error);
  CHECK_THROWS_AS(expr::parse_divisor_product("2147483648123456789H"), expr::parse_error);

  try {
    expr::parse_divisor_product("H*H*3");
  } catch (const expr::parse_error& e) {
    CHECK(std::string(e.what()).find("constant term") != std::string::npos);
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
}
