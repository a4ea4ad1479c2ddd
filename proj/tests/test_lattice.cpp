#include <random>

#include "clarke/lattice.hpp"
#include "doctest.h"

using namespace clarke;
using namespace clarke::lattice;

namespace {

LatticeVector nvec(IntVec c) { return {std::move(c), Tag::N}; }
LatticeVector mvec(IntVec c) { return {std::move(c), Tag::M}; }

bool is_unimodular_matrix(const IntMatrix& m) {
  Int d = det(m);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("pairing on basis vectors and simple values") {
  CHECK(pair(nvec({1, 0}), mvec({0, 1})) == 0);
  CHECK(pair(nvec({1, 2}), mvec({3, -1})) == 1);
  CHECK(pair(nvec({0, 0}), mvec({5, 7})) == 0);
}

TEST_CASE("pairing rejects mismatches") {
  CHECK_THROWS_AS(pair(nvec({1, 0}), mvec({1})), InputError);
  CHECK_THROWS_AS(pair(nvec({1, 0}), nvec({0, 1})), InputError);
}

TEST_CASE("pairing is bilinear") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    IntVec n1(3), n2(3), m(3);
    for (int i = 0; i < 3; ++i) { n1[i] = d(rng); n2[i] = d(rng); m[i] = d(rng); }
    Int a = d(rng), b = d(rng);
    IntVec combo(3);
    for (int i = 0; i < 3; ++i) combo[i] = a * n1[i] + b * n2[i];
    CHECK(pair(nvec(combo), mvec(m)) ==
          a * pair(nvec(n1), mvec(m)) + b * pair(nvec(n2), mvec(m)));
  }
}

TEST_CASE("smith normal form on the examples") {
  SUBCASE("identity") {
    auto s = smith_normal_form(IntMatrix::identity(2));
    CHECK(s.d == IntMatrix::identity(2));
  }
  SUBCASE("diag(2,2)") {
    IntMatrix a(2, 2);
    a.at(0, 0) = 2;
    a.at(1, 1) = 2;
    auto s = smith_normal_form(a);
    CHECK(s.invariants() == std::vector<Int>{2, 2});
  }
  SUBCASE("[[2,1],[0,2]]") {
    // oracle: d1 = gcd of entries = 1, d1*d2 = |det| = 4, so D = diag(1,4)
    IntMatrix a(2, 2);
    a.at(0, 0) = 2; a.at(0, 1) = 1; a.at(1, 1) = 2;
    auto s = smith_normal_form(a);
    CHECK(s.invariants() == std::vector<Int>{1, 4});
  }
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-6, 6);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j) a.at(i, j) = d(rng);
    auto s = smith_normal_form(a);
    CHECK(s.u.mul(a).mul(s.v) == s.d);
    CHECK(is_unimodular_matrix(s.u));
    CHECK(is_unimodular_matrix(s.v));
    auto inv = s.invariants();
    for (size_t i = 0; i + 1 < inv.size(); ++i) CHECK(inv[i + 1] % inv[i] == 0);
    for (int i = 0; i < s.d.rows; ++i)
      for (int j = 0; j < s.d.cols; ++j)
        if (i != j) CHECK(s.d.at(i, j) == 0);
    // idempotence: SNF of D is D again
    CHECK(smith_normal_form(s.d).d == s.d);
  }
}

TEST_CASE("integral solve via SNF") {
  IntMatrix a(2, 2);
  a.at(0, 0) = 2; a.at(0, 1) = 1; a.at(1, 1) = 2;
  auto x = solve_integral(a, {3, 2});
  REQUIRE(x.has_value());
  CHECK(2 * (*x)[0] + (*x)[1] == 3);
  CHECK(2 * (*x)[1] == 2);
  CHECK_FALSE(solve_integral(a, {0, 1}).has_value());
}

TEST_CASE("saturation basis spans the saturated column lattice") {
  // columns (2,0),(0,2): saturation is all of Z^2
  IntMatrix a(2, 2);
  a.at(0, 0) = 2; a.at(1, 1) = 2;
  auto b = saturation_basis(a);
  REQUIRE(b.size() == 2);
  IntMatrix m = IntMatrix::from_cols(b);
  CHECK(is_unimodular_matrix(m));
}
