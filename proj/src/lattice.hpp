// Canonical bilinear lattices: symbols, Gram matrices, Coxeter transformation,
// kappa/delta, signature and representation type.
#pragma once

#include <string>
#include <vector>

#include "exactalg.hpp"

namespace lattice {

using exactalg::Inertia;
using exactalg::Matrix;
using exactalg::Rat;

struct NonIntegralCoxeter : std::runtime_error {
  NonIntegralCoxeter() : std::runtime_error("Coxeter matrix has non-integral entries") {}
};
struct NoConventionMatches : std::runtime_error {
  NoConventionMatches() : std::runtime_error("no index convention reproduces the display") {}
};
struct InconsistentDimensions : std::runtime_error {
  InconsistentDimensions() : std::runtime_error("point dimension data is inconsistent") {}
};
struct InvalidSymbol : std::runtime_error {
  explicit InvalidSymbol(const std::string& w) : std::runtime_error("invalid symbol: " + w) {}
};

struct Arm {
  long p = 2;  // weight, >= 2
  long e = 1;
  long f = 1;
  long d() const { return e * f; }
  bool operator==(const Arm& o) const { return p == o.p && e == o.e && f == o.f; }
  bool operator<(const Arm& o) const {
    if (p != o.p) return p < o.p;
    if (e != o.e) return e < o.e;
    return f < o.f;
  }
};

struct Symbol {
  int epsilon = 1;  // in {1, 2}
  std::vector<Arm> arms;

  int t() const { return static_cast<int>(arms.size()); }
  int rank() const {
    int n = 2;
    for (const auto& a : arms) n += static_cast<int>(a.p) - 1;
    return n;
  }
  // condition (6) of the Proposition, numerically: eps * sum d_i >= 2
  bool condition6() const {
    long s = 0;
    for (const auto& a : arms) s += a.d();
    return epsilon * s >= 2;
  }
  void validate() const;
  // order-insensitive equality (arm multiset)
  bool same_symbol(const Symbol& o) const;
};

long kappa(const Symbol& s);
long delta(const Symbol& s);

enum class RepType { Domestic, Tubular, Wild };
RepType rep_type(const Symbol& s);
std::string rep_type_name(RepType t);

struct BilinearLattice {
  int rank = 0;
  Matrix<Rat> gram;  // integer entries
  std::vector<std::string> basis_labels;
};

BilinearLattice gram_s_basis(const Symbol& s);
Matrix<Rat> coxeter_matrix(const BilinearLattice& L);

struct BasisResult {
  Matrix<Rat> gram;         // Gram matrix in the new basis (the paper display)
  Matrix<Rat> base_change;  // unimodular, columns = new basis in s-basis coords
  int convention = 1;       // index shift that reproduced the display (0 or 1)
};

BasisResult gram_canonical_basis(const Symbol& s);
BasisResult gram_opposite_basis(const Symbol& s);

Inertia signature(const Symbol& s);

struct PointDims {
  long dimDU = 1;
  long dimUF = 1;
  long dimDV = 1;
  long dimVG = 1;
};

// eps_raw in {1/2, 1, 2}; the 1/2 case is normalized to eps=2 via the
// opposite-algebra extraction rule.
Symbol symbol_from_data(const Rat& eps_raw, const std::vector<PointDims>& points,
                        const std::vector<long>& weights);

std::vector<Symbol> enumerate_symbols(int max_rank, long max_d);

// Base change from the s-basis to the squid projective display basis
// (columns ordered e_1(p_1-1)..e_1(1), ..., F, G); satisfies
// Q^T G_s Q = kappa * H_A with H_A the squid Cartan display.
Matrix<Rat> squid_basis_change(const Symbol& s);

// Unimodular witness S with S^T H_A S = H_B (squid -> Coxeter-Dynkin
// projective display bases, both conventions: also S^T H_A^T S = H_B^T).
Matrix<Rat> ab_witness(const Symbol& s);

nlohmann::json symbol_to_json(const Symbol& s);
Symbol symbol_from_json(const nlohmann::json& j);

}  // namespace lattice
