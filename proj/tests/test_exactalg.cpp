#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exactalg.hpp"

using namespace exactalg;

namespace {

Matrix<Rat> from_rows(const std::vector<std::vector<long>>& rows) {
  Matrix<Rat> m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

Matrix<Rat> random_matrix(std::mt19937& rng, int r, int c, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix<Rat> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// product of random integer shears and permutations: always unimodular
Matrix<Rat> random_unimodular(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::uniform_int_distribution<int> idx(0, n - 1);
  Matrix<Rat> m = Matrix<Rat>::identity(n);
  for (int k = 0; k < 4 * n; ++k) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Matrix<Rat> s = Matrix<Rat>::identity(n);
    s(i, j) = d(rng);
    m = m * s;
  }
  return m;
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(Matrix<Rat>::identity(2)) == 2);
  CHECK(rank(Matrix<Rat>(3, 4)) == 0);
  CHECK(rank(from_rows({{1, 0}, {1, 1}})) == 2);
}

TEST_CASE("kernel_basis") {
  CHECK(kernel_basis(Matrix<Rat>::identity(3)).cols() == 0);
  Matrix<Rat> one_rel = from_rows({{1, 1}});
  Matrix<Rat> kb = kernel_basis(one_rel);
  REQUIRE(kb.cols() == 1);
  CHECK(kb(0, 0) * one_rel(0, 0) + kb(1, 0) * one_rel(0, 1) == 0);
  CHECK(kernel_basis(from_rows({{1, 0}, {1, 1}})).cols() == 0);
}

TEST_CASE("inverse") {
  CHECK(inverse(Matrix<Rat>::identity(4)) == Matrix<Rat>::identity(4));
  Matrix<Rat> d = from_rows({{2, 0}, {0, 3}});
  Matrix<Rat> di = inverse(d);
  CHECK(di(0, 0) == Rat(1, 2));
  CHECK(di(1, 1) == Rat(1, 3));
  CHECK(d * di == Matrix<Rat>::identity(2));
  CHECK_THROWS_AS(inverse(from_rows({{1, 2}, {2, 4}})), SingularMatrix);
}

TEST_CASE("signature_symmetric") {
  Inertia s = signature_symmetric(from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}));
  CHECK(s.n_plus == 1);
  CHECK(s.n_zero == 1);
  CHECK(s.n_minus == 1);
  Inertia z = signature_symmetric(Matrix<Rat>(2, 2));
  CHECK(z.n_plus == 0);
  CHECK(z.n_zero == 2);
  CHECK(z.n_minus == 0);
  // hyperbolic block needs the off-diagonal split
  Inertia h = signature_symmetric(from_rows({{0, 1}, {1, 0}}));
  CHECK(h.n_plus == 1);
  CHECK(h.n_minus == 1);
  CHECK_THROWS_AS(signature_symmetric(from_rows({{0, 1}, {2, 0}})), NotSymmetric);
}

TEST_CASE("is_unimodular") {
  CHECK(is_unimodular(Matrix<Rat>::identity(3)));
  CHECK_FALSE(is_unimodular(from_rows({{2, 0}, {0, 1}})));
  Matrix<Rat> half(1, 1);
  half(0, 0) = Rat(1, 2);
  CHECK_THROWS_AS(is_unimodular(half), NonIntegerEntries);
}

TEST_CASE("rank + kernel dimension = cols") {
  std::mt19937 rng(42);
  for (int it = 0; it < 30; ++it) {
    int r = 1 + it % 5, c = 1 + (it * 7) % 6;
    Matrix<Rat> m = random_matrix(rng, r, c);
    CHECK(rank(m) + kernel_basis(m).cols() == c);
  }
}

TEST_CASE("inverse is two-sided") {
  std::mt19937 rng(7);
  for (int it = 0; it < 10; ++it) {
    Matrix<Rat> m = random_unimodular(rng, 4);
    Matrix<Rat> mi = inverse(m);
    CHECK(m * mi == Matrix<Rat>::identity(4));
    CHECK(mi * m == Matrix<Rat>::identity(4));
  }
}

TEST_CASE("signature invariant under unimodular congruence") {
  std::mt19937 rng(11);
  Matrix<Rat> g = from_rows({{2, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 0}});
  Inertia base = signature_symmetric(g);
  for (int it = 0; it < 10; ++it) {
    Matrix<Rat> s = random_unimodular(rng, 4);
    Inertia t = signature_symmetric(s.transposed() * g * s);
    CHECK(t.n_plus == base.n_plus);
    CHECK(t.n_zero == base.n_zero);
    CHECK(t.n_minus == base.n_minus);
  }
}

TEST_CASE("rational string round-trip") {
  for (const char* s : {"0", "1", "-7", "3/4", "-22/7"}) {
    CHECK(rat_to_string(rat_from_string(s)) == s);
  }
  CHECK(rat_from_string("2/4") == Rat(1, 2));
  CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rat_from_string("abc"), ParseError);
  CHECK_THROWS_AS(rat_from_string(""), ParseError);
}

TEST_CASE("matrix JSON round-trip") {
  Matrix<Rat> m = from_rows({{1, -2}, {3, 4}});
  m(0, 1) = Rat(-2, 3);
  nlohmann::json j = matrix_to_json(m);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 2);
  CHECK(matrix_from_json(j) == m);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"rows", 1}}), ParseError);
}

TEST_CASE("prime field arithmetic") {
  Fp::set_modulus(101);
  Fp a(45), b(77);
  CHECK((a * b * a.inv() * b.inv()).value() == 1);
  CHECK((a + (-a)).value() == 0);
  CHECK((Fp(100) + Fp(2)).value() == 1);
  CHECK_THROWS(Fp::set_modulus(6));
  Fp::set_modulus(101);
  Matrix<Fp> m(2, 2);
  m(0, 0) = Fp(2);
  m(0, 1) = Fp(1);
  m(1, 0) = Fp(1);
  m(1, 1) = Fp(1);
  CHECK(rank(m) == 2);
  Matrix<Fp> mi = inverse(m);
  CHECK(m * mi == Matrix<Fp>::identity(2));
}
