#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "speciesdims.hpp"

using namespace speciesdims;
using exactalg::Matrix;
using exactalg::Rat;
using lattice::Symbol;

namespace {

Symbol simply_laced(std::vector<long> weights, int eps = 1) {
  Symbol s;
  s.epsilon = eps;
  for (long p : weights) s.arms.push_back({p, 1, 1});
  return s;
}

Symbol rc_symbol() {  // single arm p=2, e=1, f=2, eps=1
  Symbol s;
  s.epsilon = 1;
  s.arms.push_back({2, 1, 2});
  return s;
}

bool rows_equal(const Matrix<Rat>& m, const std::vector<std::vector<long>>& rows) {
  if (m.rows() != static_cast<int>(rows.size())) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != Rat(rows[i][j])) return false;
  return true;
}

}  // namespace

TEST_CASE("cartan_squid") {
  DimPresentation p = cartan_squid(simply_laced({2, 2}));
  REQUIRE(p.hom_dims.rows() == 4);
  // all nonzero entries 1 except the (F,G) entry 2
  CHECK(rows_equal(p.hom_dims, {{1, 0, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 2}, {0, 0, 0, 1}}));
  DimPresentation rc = cartan_squid(rc_symbol());
  CHECK(rows_equal(rc.hom_dims, {{2, 2, 2}, {0, 1, 2}, {0, 0, 1}}));
  for (const Symbol& s : lattice::enumerate_symbols(9, 2)) {
    DimPresentation q = cartan_squid(s);
    for (int i = 0; i < q.hom_dims.rows(); ++i) CHECK(q.hom_dims(i, i) == q.vertex_dims[i]);
  }
}

TEST_CASE("cartan_cd") {
  // simply laced: dim W = t - 2
  for (int t = 2; t <= 4; ++t) {
    std::vector<long> w(t, 2);
    DimPresentation p = cartan_cd(simply_laced(w));
    CHECK(p.hom_dims(0, p.hom_dims.cols() - 1) == Rat(t - 2));
  }
  DimPresentation rc = cartan_cd(rc_symbol());
  CHECK(rc.hom_dims(0, rc.hom_dims.cols() - 1) == 0);  // W = 1*2 - 2 = 0
  CHECK_THROWS_AS(cartan_cd(simply_laced({3})), Condition6Violated);
}

TEST_CASE("cartan_canonical") {
  DimPresentation rc = cartan_canonical(rc_symbol());
  CHECK(rows_equal(rc.hom_dims, {{1, 2, 2}, {0, 2, 2}, {0, 0, 1}}));
  DimPresentation p22 = cartan_canonical(simply_laced({2, 2}));
  CHECK(p22.hom_dims(0, p22.hom_dims.cols() - 1) == 2);  // dim M
  // hom_dims * kappa = canonical-basis Gram display
  for (const Symbol& s : lattice::enumerate_symbols(9, 2)) {
    long k = lattice::kappa(s);
    Matrix<Rat> want = cartan_canonical(s).hom_dims;
    for (int i = 0; i < want.rows(); ++i)
      for (int j = 0; j < want.cols(); ++j) want(i, j) *= k;
    CHECK(lattice::gram_canonical_basis(s).gram == want);
  }
}

TEST_CASE("gram_simple_basis of the Coxeter-Dynkin presentation") {
  // Euler form values; the arm blocks are displayed e_i(p-1), ..., e_i(1),
  // so the e_i(1) row/column is the rightmost of each block.  The F row and
  // the G column each meet an arm only at e_i(1) (with -eps*f_i and
  // -eps^2*f_i), zero at the deeper vertices.
  for (const Symbol& s : lattice::enumerate_symbols(9, 2)) {
    if (!s.condition6()) continue;
    Matrix<Rat> g = gram_simple_basis(cartan_cd(s));
    int n = s.rank();
    long eps = s.epsilon;
    CHECK(g(0, 0) == 1);
    CHECK(g(0, n - 1) == Rat(2 * eps));  // <S_F, S_G> = 2 eps (Ext^2 entry)
    CHECK(g(n - 1, n - 1) == Rat(eps * eps));
    int idx = 1;
    for (int i = 0; i < s.t(); ++i) {
      const auto& a = s.arms[i];
      int w = static_cast<int>(a.p) - 1;
      Rat dD(eps * a.f, a.e);
      dD.canonicalize();
      for (int r = idx; r < idx + w; ++r) {
        CHECK(g(r, r) == dD);
        if (r + 1 < idx + w) CHECK(g(r, r + 1) == -dD);  // arm arrow entries
        CHECK(g(r, n - 1) == (r == idx + w - 1 ? Rat(-eps * eps * a.f) : Rat(0)));
        CHECK(g(0, r) == (r == idx + w - 1 ? Rat(-eps * a.f) : Rat(0)));
      }
      // no cross-arm values
      for (int r = idx; r < idx + w; ++r)
        for (int c = 1; c < n - 1; ++c)
          if (c < idx || c >= idx + w) CHECK(g(r, c) == 0);
      idx += w;
    }
  }
}

TEST_CASE("gram_simple_basis trivial and errors") {
  DimPresentation one;
  one.tag = AlgebraTag::Squid;
  one.vertex_labels = {"v"};
  one.vertex_dims = {Rat(1)};
  one.hom_dims = Matrix<Rat>::identity(1);
  CHECK(gram_simple_basis(one) == Matrix<Rat>::identity(1));
  one.hom_dims(0, 0) = 0;
  one.vertex_dims[0] = 1;
  CHECK_THROWS_AS(gram_simple_basis(one), SingularCartan);
}

TEST_CASE("check_condition6") {
  CHECK_FALSE(check_condition6({{1, 1}}));
  CHECK(check_condition6({{1, 2}}));
  CHECK(check_condition6({{1, 1}, {1, 1}}));
}

TEST_CASE("congruence_check") {
  Matrix<Rat> g = Matrix<Rat>::identity(3);
  CHECK(congruence_check(g, g, Matrix<Rat>::identity(3)));
  Matrix<Rat> two = Matrix<Rat>::identity(3);
  for (int i = 0; i < 3; ++i) two(i, i) = 2;
  CHECK_FALSE(congruence_check(g, g, two));
  CHECK_THROWS_AS(congruence_check(g, Matrix<Rat>::identity(2), Matrix<Rat>::identity(3)),
                  exactalg::SizeMismatch);
}

TEST_CASE("three Gram presentations are congruent for every symbol") {
  for (const Symbol& s : lattice::enumerate_symbols(9, 2)) {
    if (!s.condition6()) continue;
    long k = lattice::kappa(s);
    Matrix<Rat> HA = cartan_squid(s).hom_dims;
    Matrix<Rat> HB = cartan_cd(s).hom_dims;
    Matrix<Rat> S = lattice::ab_witness(s);
    CHECK(congruence_check(HA, HB, S));
    lattice::BilinearLattice L = lattice::gram_s_basis(s);
    Matrix<Rat> QA = lattice::squid_basis_change(s);
    Matrix<Rat> kHA = HA;
    for (int i = 0; i < kHA.rows(); ++i)
      for (int j = 0; j < kHA.cols(); ++j) kHA(i, j) *= k;
    CHECK(congruence_check(L.gram, kHA, QA));
  }
}

TEST_CASE("presentation JSON") {
  nlohmann::json j = presentation_to_json(cartan_squid(simply_laced({2, 2})));
  CHECK(j["algebra"] == "squid");
  CHECK(j["vertex_labels"].size() == 4);
}
