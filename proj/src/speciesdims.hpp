// Dimension-level presentations of the squid (A), Coxeter-Dynkin (B) and
// canonical (C) algebras for arbitrary symbols; Euler forms in projective and
// simple bases; numerical condition checks.
#pragma once

#include "lattice.hpp"

namespace speciesdims {

using exactalg::Matrix;
using exactalg::Rat;
using lattice::Symbol;

struct Condition6Violated : std::runtime_error {
  Condition6Violated() : std::runtime_error("condition (6) fails: eps * sum d_i < 2") {}
};
struct SingularCartan : std::runtime_error {
  SingularCartan() : std::runtime_error("Cartan matrix is singular") {}
};

enum class AlgebraTag { Squid, CoxeterDynkin, Canonical };

struct DimPresentation {
  AlgebraTag tag = AlgebraTag::Squid;
  std::vector<std::string> vertex_labels;  // paper display order
  std::vector<Rat> vertex_dims;            // dim of local division algebra / dim_k F
  Matrix<Rat> hom_dims;                    // (i,j) = dim_k e_i X e_j, same units
};

// Vertex order: arm1 e_1(p_1-1)..e_1(1), ..., arm_t, F, G.
DimPresentation cartan_squid(const Symbol& s);
// Vertex order: F, arm1 e_1(p_1-1)..e_1(1), ..., arm_t, G.
DimPresentation cartan_cd(const Symbol& s);
// Vertex order: F, arm1 u_1(1)..u_1(p_1-1), ..., arm_t, G.
DimPresentation cartan_canonical(const Symbol& s);

// Euler form in the simple basis: with multiplicity matrix
// m(i,j) = hom_dims(i,j)/vertex_dims(j), returns m^{-1} G_P m^{-T} where
// G_P = hom_dims^T (projective-basis Gram under <P_i,P_j> = dim Hom(P_i,P_j),
// Hom(e_iX, e_jX) = e_jXe_i).
Matrix<Rat> gram_simple_basis(const DimPresentation& p);

struct Point6 {
  long dimDU = 1;
  long dimUF = 1;
};
bool check_condition6(const std::vector<Point6>& points);

bool congruence_check(const Matrix<Rat>& g1, const Matrix<Rat>& g2,
                      const Matrix<Rat>& base_change);

nlohmann::json presentation_to_json(const DimPresentation& p);

}  // namespace speciesdims
