#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "towog/exact.hpp"
#include "towog/toric.hpp"

using namespace towog;
using namespace towog::testing;

TEST_CASE("determinant on small matrices") {
  CHECK(determinant(IntMatrix{{1, 0}, {0, 1}}) == 1);
  CHECK(determinant(IntMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(determinant(IntMatrix{}) == 1);
  CHECK(determinant(IntMatrix{{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("determinant of the naturally oriented weighted triangle") {
  // A(C_3) with weights (2,2,2): frozen from the cofactor oracle; the banded
  // formula gives 1 + 2*4 = 9 as well.
  auto g = make_graph(3, {2, 2, 2}, {{1, 2}, {2, 3}, {3, 1}});
  IntMatrix a = incidence_matrix(g).matrix;
  CHECK(cofactor_determinant(a) == 9);
  CHECK(determinant(a) == 9);
}

TEST_CASE("determinant requires a square matrix") {
  IntMatrix m(2, 3);
  try {
    determinant(m);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_square);
  }
}

TEST_CASE("determinant matches the cofactor oracle on random matrices") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> size(1, 5), entry(-5, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = size(rng);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    CHECK(determinant(m) == cofactor_determinant(m));
  }
}

TEST_CASE("rank on fixed matrices") {
  CHECK(rank(IntMatrix(3, 3)) == 0);
  CHECK(rank(IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}) == 4);
  auto d1 = load_graph("8cycles_d1.wog");
  CHECK(rank(incidence_matrix(d1).matrix) == 7);
}

TEST_CASE("null space of a rank-one matrix") {
  auto basis = null_space_basis(IntMatrix{{1, 1}, {1, 1}});
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == -basis[0][1]);
  CHECK(basis[0][1] != 0);
}

TEST_CASE("full column rank means empty null space") {
  CHECK(null_space_basis(IntMatrix{{1, 0}, {0, 1}, {1, 1}}).empty());
}

TEST_CASE("null space of the first eight-cycle example") {
  auto d1 = load_graph("8cycles_d1.wog");
  auto basis = null_space_basis(incidence_matrix(d1).matrix);
  REQUIRE(basis.size() == 1);
  std::vector<Int> prim = primitive_integer_vector(basis[0]);
  std::vector<Int> expected{1, -4, 16, -16, 8, -4, 2, -1};
  CHECK(prim == expected);
}

TEST_CASE("null space vectors annihilate and complement the rank") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 6), entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    auto basis = null_space_basis(m);
    CHECK(rank(m) + basis.size() == c);
    for (const auto& v : basis) {
      for (std::size_t i = 0; i < r; ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < c; ++j) acc += Rat(m(i, j)) * v[j];
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("primitive integer vector examples") {
  auto rat = [](long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
  };
  CHECK(primitive_integer_vector({rat(1, 2), rat(-1, 3)}) == std::vector<Int>{3, -2});
  CHECK(primitive_integer_vector({Rat(2), Rat(-2)}) == std::vector<Int>{1, -1});
  CHECK(primitive_integer_vector({Rat(-1), Rat(4)}) == std::vector<Int>{1, -4});
  CHECK_THROWS_AS(primitive_integer_vector({Rat(0), Rat(0)}), Error);
}

TEST_CASE("primitive integer vector is scale invariant") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-6, 6), scale(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rat> v(4);
    bool nonzero = false;
    for (auto& x : v) {
      Rat r(entry(rng), scale(rng));
      r.canonicalize();
      x = r;
      if (x != 0) nonzero = true;
    }
    if (!nonzero) continue;
    Rat c(entry(rng), scale(rng));
    c.canonicalize();
    if (c == 0) continue;
    std::vector<Rat> scaled = v;
    for (auto& x : scaled) x *= c;
    CHECK(primitive_integer_vector(scaled) == primitive_integer_vector(v));
  }
}

TEST_CASE("bounded kernel of a rank-one matrix") {
  auto vecs = bounded_integer_kernel(IntMatrix{{1, 1}, {1, 1}}, 2);
  std::set<std::vector<long>> got;
  for (const auto& u : vecs) got.insert({static_cast<long>(u[0].get_si()), static_cast<long>(u[1].get_si())});
  std::set<std::vector<long>> expected{{1, -1}, {-1, 1}, {2, -2}, {-2, 2}};
  CHECK(got == expected);
}

TEST_CASE("bounded kernel is empty at full column rank") {
  CHECK(bounded_integer_kernel(IntMatrix{{1, 0}, {0, 1}}, 5).empty());
}

TEST_CASE("bounded kernel of the first eight-cycle example") {
  auto d1 = load_graph("8cycles_d1.wog");
  auto vecs = bounded_integer_kernel(incidence_matrix(d1).matrix, 16);
  REQUIRE(vecs.size() == 2);
  std::vector<Int> expected{1, -4, 16, -16, 8, -4, 2, -1};
  std::vector<Int> negated;
  for (const Int& x : expected) negated.push_back(-x);
  CHECK(((vecs[0] == expected && vecs[1] == negated) || (vecs[0] == negated && vecs[1] == expected)));
}

TEST_CASE("bounded kernel agrees with full enumeration and is negation closed") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> rows(1, 3), cols(2, 4), entry(-2, 2), bnd(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = rows(rng), c = cols(rng);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    long bound = bnd(rng);
    auto vecs = bounded_integer_kernel(m, bound);
    std::set<std::vector<long>> got;
    for (const auto& u : vecs) {
      std::vector<long> plain;
      for (const Int& x : u) {
        CHECK(abs(x) <= bound);
        plain.push_back(static_cast<long>(x.get_si()));
      }
      for (const Int& y : mat_vec(m, u)) CHECK(y == 0);
      got.insert(std::move(plain));
    }
    for (const auto& u : got) {
      std::vector<long> neg;
      for (long x : u) neg.push_back(-x);
      CHECK(got.count(neg) == 1);
    }
    CHECK(got == brute_force_bounded_kernel(m, bound));
  }
}
