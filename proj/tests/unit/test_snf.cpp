#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cechspan/snf.hpp"

using namespace cechspan;

namespace {

IntMatrix random_matrix(std::mt19937_64& gen, std::size_t r, std::size_t c, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(gen);
  return m;
}

void check_smith(const IntMatrix& m) {
  const auto s = smith_normal_form(m);
  REQUIRE(s.u * m * s.v == s.d);
  REQUIRE(s.u * s.u_inv == IntMatrix::identity(m.rows()));
  REQUIRE(s.v * s.v_inv == IntMatrix::identity(m.cols()));
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j) REQUIRE(s.d(i, j) == 0);
  const auto diag = s.diagonal();
  for (const auto& x : diag) REQUIRE(x >= 0);
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    if (diag[i] == 0) {
      REQUIRE(diag[i + 1] == 0);
    } else {
      REQUIRE(diag[i + 1] % diag[i] == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith form of small known matrices") {
  auto s = smith_normal_form(int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  CHECK(s.diagonal() == std::vector<Integer>{2, 6, 12});
  CHECK(s.rank == 3);

  s = smith_normal_form(int_matrix({{0, 0}, {0, 0}}));
  CHECK(s.rank == 0);

  s = smith_normal_form(int_matrix({{2, 0}, {0, 3}}));
  CHECK(s.diagonal() == std::vector<Integer>{1, 6});
}

TEST_CASE("smith form identity and divisibility on random matrices") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    check_smith(random_matrix(gen, dim(gen), dim(gen), trial % 3 == 0 ? 1 : 9));
  }
}

TEST_CASE("smith form switches to big integers on overflow") {
  IntMatrix m(2, 2);
  m(0, 0) = Integer("123456789012345678901");
  m(0, 1) = Integer("98765432109876543210");
  m(1, 0) = Integer("-55555555555555555555");
  m(1, 1) = 3;
  check_smith(m);
}

TEST_CASE("rational determinant") {
  Matrix<Rational> m(2, 2);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = 3;
  m(1, 0) = 2;
  m(1, 1) = Rational(-1, 3);
  CHECK(determinant(m) == Rational(-37, 6));
}
