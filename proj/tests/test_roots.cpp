#include <doctest.h>

#include "oracles.hpp"
#include "quiver/roots.hpp"
#include "test_util.hpp"

using namespace quiver;
using testutil::mat;

TEST_CASE("root vectors") {
  CHECK(root_to_vector({0, 2}, 3) == (IntVector(3) << 1, 1, 0).finished());
  CHECK(root_to_vector({1, 2}, 2) == (IntVector(2) << 0, 1).finished());
  CHECK(signed_root_to_vector({-1, {0, 3}}, 3) == (IntVector(3) << -1, -1, -1).finished());
  CHECK_THROWS_AS(root_to_vector({2, 2}, 3), std::out_of_range);
  CHECK_THROWS_AS(root_to_vector({0, 4}, 3), std::out_of_range);
  CHECK(positive_roots(3).size() == 6);
  CHECK(positive_roots(5).size() == 15);
}

TEST_CASE("vector_to_signed_root") {
  CHECK(vector_to_signed_root((IntVector(3) << 0, 1, 1).finished()) == SignedRoot{1, {1, 3}});
  CHECK(vector_to_signed_root((IntVector(3) << -1, 0, 0).finished()) == SignedRoot{-1, {0, 1}});
  CHECK_FALSE(vector_to_signed_root((IntVector(3) << 1, 0, 1).finished()));
  CHECK_FALSE(vector_to_signed_root((IntVector(3) << 1, -1, 0).finished()));
  CHECK_FALSE(vector_to_signed_root((IntVector(3) << 0, 2, 0).finished()));
  CHECK_FALSE(vector_to_signed_root(IntVector::Zero(3)));
  for (int n = 1; n <= 5; ++n) {
    for (const Root& r : positive_roots(n)) {
      for (int s : {1, -1}) CHECK(vector_to_signed_root(signed_root_to_vector({s, r}, n)) == SignedRoot{s, r});
    }
  }
}

TEST_CASE("euler matrix") {
  CHECK(euler_matrix(3) == mat({{1, -1, 0}, {0, 1, -1}, {0, 0, 1}}));
  // E_ij = hom(e_i, e_j) - ext(e_i, e_j) computed on simple modules.
  for (int n = 1; n <= 5; ++n) {
    const IntMatrix e = euler_matrix(n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const auto he = oracle::hom_ext(oracle::interval_module({a, a + 1}, n), oracle::interval_module({b, b + 1}, n));
        CHECK(e(a, b) == he.hom - he.ext);
      }
    }
  }
}

TEST_CASE("A2 hom, ext and subroots") {
  const Root b01{0, 1}, b12{1, 2}, b02{0, 2};
  CHECK(hom(b01, b12) == 0);
  CHECK(ext(b01, b12) == 1);
  CHECK(hom(b12, b01) == 0);
  CHECK(ext(b12, b01) == 0);
  CHECK(hom(b02, b01) == 1);
  CHECK(hom(b01, b02) == 0);
  CHECK(hom(b12, b02) == 1);
  CHECK(hom(b02, b12) == 0);
  CHECK(is_subroot(b12, b02));
  CHECK_FALSE(is_subroot(b01, b02));
  CHECK(is_subroot(b02, b02));
}

TEST_CASE("hom, ext and subroots agree with representation oracle, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto roots = positive_roots(n);
    for (const Root& a : roots) {
      for (const Root& b : roots) {
        const auto ma = oracle::interval_module(a, n);
        const auto mb = oracle::interval_module(b, n);
        const auto he = oracle::hom_ext(ma, mb);
        CAPTURE(to_string(a));
        CAPTURE(to_string(b));
        CHECK(hom(a, b) == he.hom);
        CHECK(ext(a, b) == he.ext);
        CHECK(he.hom - he.ext == euler_pairing(root_to_vector(a, n), root_to_vector(b, n)));
        CHECK(is_subroot(a, b) == oracle::embeds(ma, mb));
      }
    }
  }
}

TEST_CASE("wall membership") {
  using R = Rational;
  const Root b02{0, 2}, b12{1, 2}, b01{0, 1};
  CHECK(in_wall({R(0), R(0)}, b02));
  // <beta, beta> = 1 so beta itself is off its wall
  CHECK_FALSE(in_wall({R(1), R(1)}, b02));
  // <x, e1> = x1: on D(beta01) iff x1 = 0 (no proper subroots)
  CHECK(in_wall({R(0), R(5)}, b01));
  CHECK_FALSE(in_wall({R(1, 2), R(5)}, b01));
  // <x, b02> = x2 and <x, b12> = x2 - x1
  CHECK(in_wall({R(1), R(0)}, b02));       // <x, b12> = -1 <= 0
  CHECK_FALSE(in_wall({R(-1), R(0)}, b02));  // <x, b12> = 1 > 0
  CHECK(in_wall({R(3), R(3)}, b12));
  CHECK_FALSE(in_wall({R(1, 3), R(1, 3)}, b01));
  CHECK_THROWS_AS(in_wall({R(0), R(0)}, Root{0, 3}), std::out_of_range);
}

TEST_CASE("c-matrix validation") {
  CHECK(validate_c_matrix(IntMatrix::Identity(3, 3)).ok);
  CHECK(validate_c_matrix(-IntMatrix::Identity(3, 3)).ok);
  CHECK(validate_c_matrix(mat({{0, -1}, {-1, 0}})).ok);

  const auto nested = validate_c_matrix(mat({{1, 0}, {1, 1}}));
  CHECK_FALSE(nested.ok);
  REQUIRE(nested.violations.size() == 1);
  CHECK(nested.violations[0].row_a == 1);
  CHECK(nested.violations[0].row_b == 2);

  const auto bad_row = validate_c_matrix(mat({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
  CHECK_FALSE(bad_row.ok);
  CHECK(bad_row.violations[0].row_a == 1);
  CHECK(bad_row.violations[0].row_b == 0);

  // +beta01 and -beta12: ext(beta01, beta12) = 1 forbids this pair
  CHECK_FALSE(validate_c_matrix(mat({{1, 0}, {0, -1}})).ok);
  // c-matrix after mutating vertex 1 of the framed quiver
  CHECK(validate_c_matrix(mat({{-1, 0}, {0, 1}})).ok);
}
