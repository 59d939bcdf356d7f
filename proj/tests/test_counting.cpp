#include "doctest.h"
#include "pmap/counting.hpp"
#include "pmap/rooted_map.hpp"

using namespace pmap;

TEST_CASE("formula values") {
  CHECK(theta(1, 0) == 1);
  CHECK(theta(1) == 1);
  CHECK(theta(3, 1) == 4);
  CHECK(theta(5) == 92);
  CHECK(lambda(3) == 6);
  CHECK(lambda(4) == 22);
  CHECK(a(0) == 1);
  CHECK(a(4) == 68);
  CHECK(lambda(1, 0) == 1);
  const int baxter[] = {1, 2, 6, 22, 92, 422, 2074, 10754, 58202, 326240};
  for (int n = 1; n <= 10; ++n) CHECK(theta(n) == baxter[n - 1]);
  const int loopless[] = {1, 1, 3, 13, 68, 399, 2530};
  for (int n = 0; n <= 6; ++n) CHECK(a(n) == loopless[n]);
  const int nonsep[] = {1, 2, 6, 22, 91, 408, 1938};
  for (int n = 1; n <= 7; ++n) CHECK(lambda(n) == nonsep[n - 1]);
}

TEST_CASE("sums and symmetry") {
  for (int n = 1; n <= 10; ++n) {
    BigCount t = 0, l = 0;
    for (int i = 0; i < n; ++i) {
      t += theta(n, i);
      l += lambda(n, i);
      CHECK(theta(n, i) == theta(n, n - 1 - i));
    }
    CHECK(t == theta(n));
    CHECK(l == lambda(n));
  }
}

TEST_CASE("large arguments stay exact") {
  CHECK(a(30) > 0);
  CHECK(theta(40) > 0);
}

TEST_CASE("range and dispatch") {
  CHECK_THROWS_AS(theta(0), Error);
  CHECK_THROWS_AS(theta(3, 3), Error);
  CHECK_THROWS_AS(a(-1), Error);
  CHECK_THROWS_AS(count_formula(Formula::lambda_ni, 3), Error);
  CHECK(count_formula(Formula::theta_n, 5) == 92);
  CHECK(parse_formula("a_n") == Formula::a_n);
  CHECK_FALSE(parse_formula("b_n"));
  try {
    exact_div(7, 2);
    FAIL("expected NonIntegerResult");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIntegerResult);
  }
}
