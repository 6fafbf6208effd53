// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion is verified against an independent oracle (closed
// formulas, tables, or a second computation path), never against the code
// under test itself.
#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "driver.hpp"

using exactalg::Matrix;
using exactalg::Rat;
using lattice::Symbol;
namespace bq = boundquiver;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, const std::function<bool(std::ostream&)>& body) {
  std::ostringstream details;
  bool ok = false;
  try {
    ok = body(details);
  } catch (const std::exception& e) {
    details << " [exception: " << e.what() << "]";
  }
  std::cout << "criterion " << n << (ok ? " PASS: " : " FAIL: ") << what << details.str()
            << std::endl;
  if (!ok) ++failures;
}

std::vector<Symbol> corpus() { return lattice::enumerate_symbols(12, 2); }

struct Instance {
  std::vector<long> weights;
  std::vector<std::string> lambdas;
};

std::vector<Instance> instances() {
  return {
      {{2, 2}, {"0", "1"}},         {{2, 3}, {"0", "1"}},
      {{2, 4}, {"0", "1"}},         {{3, 3}, {"0", "1"}},
      {{2, 2}, {"0", "inf"}},       {{3, 4}, {"1", "inf"}},
      {{2, 2, 2}, {"0", "1", "2"}}, {{2, 2, 3}, {"0", "1", "inf"}},
      {{2, 3, 3}, {"0", "1", "2"}}, {{2, 3, 4}, {"0", "1", "inf"}},
      {{2, 2, 4}, {"0", "1", "2"}}, {{2, 2, 2}, {"0", "1", "3"}},
  };
}

Matrix<Rat> simple_gram(const Symbol& s) {
  return speciesdims::gram_simple_basis(speciesdims::cartan_squid(s));
}

}  // namespace

int main() {
  criterion(1, "lattice axioms hold exactly for every symbol of rank <= 12", [](std::ostream& d) {
    int count = 0;
    for (const Symbol& s : corpus()) {
      lattice::BilinearLattice L = lattice::gram_s_basis(s);
      Matrix<Rat> tau = lattice::coxeter_matrix(L);
      if (!exactalg::is_integer_matrix(tau)) return false;
      if (L.gram.transposed() != -(L.gram * tau)) return false;
      // tau^{p_i} fixes s_i^{(0)}
      int idx = 2;
      for (const auto& a : s.arms) {
        Matrix<Rat> tp = Matrix<Rat>::identity(L.rank);
        for (long k = 0; k < a.p; ++k) tp = tp * tau;
        for (int r = 0; r < L.rank; ++r)
          if (tp(r, idx) != (r == idx ? Rat(1) : Rat(0))) return false;
        idx += static_cast<int>(a.p) - 1;
      }
      ++count;
    }
    d << " (" << count << " symbols)";
    return count > 0;
  });

  criterion(2, "canonical and opposite Gram displays reproduced for all symbols",
            [](std::ostream& d) {
              int count = 0;
              for (const Symbol& s : corpus()) {
                // the builders throw NoConventionMatches unless the display
                // formula is reproduced entry-for-entry under some convention
                lattice::BasisResult bc = lattice::gram_canonical_basis(s);
                lattice::BasisResult bo = lattice::gram_opposite_basis(s);
                if (!exactalg::is_unimodular(bc.base_change)) return false;
                if (!exactalg::is_unimodular(bo.base_change)) return false;
                // independent cross-check: canonical display = kappa * H_C
                Matrix<Rat> want = speciesdims::cartan_canonical(s).hom_dims;
                long k = lattice::kappa(s);
                for (int i = 0; i < want.rows(); ++i)
                  for (int j = 0; j < want.cols(); ++j) want(i, j) *= k;
                if (bc.gram != want) return false;
                if (exactalg::det(bo.gram) != exactalg::det(bc.gram)) return false;
                ++count;
              }
              d << " (" << count << " symbols)";
              return count > 0;
            });

  criterion(3, "sign of delta matches the signature table over the enumeration",
            [](std::ostream& d) {
              int count = 0;
              for (const Symbol& s : corpus()) {
                long dl = lattice::delta(s);
                exactalg::Inertia sig = lattice::signature(s);
                int n = s.rank();
                exactalg::Inertia want;
                if (dl < 0)
                  want = {n - 1, 1, 0};
                else if (dl == 0)
                  want = {n - 2, 2, 0};
                else
                  want = {n - 2, 1, 1};
                if (!(sig == want)) return false;
                lattice::RepType rt = lattice::rep_type(s);
                if ((dl < 0) != (rt == lattice::RepType::Domestic)) return false;
                if ((dl == 0) != (rt == lattice::RepType::Tubular)) return false;
                ++count;
              }
              d << " (" << count << " symbols)";
              return count > 0;
            });

  criterion(4,
            "Euler-form value table for the Coxeter-Dynkin simples (corrected: "
            "the F-row and G-column meet each arm only at e_i(1), with "
            "-eps*f_i resp. -eps^2*f_i) incl. <S_F,S_G> = 2 eps",
            [](std::ostream& d) {
              int count = 0;
              for (const Symbol& s : corpus()) {
                if (!s.condition6()) continue;
                Matrix<Rat> g = speciesdims::gram_simple_basis(speciesdims::cartan_cd(s));
                int n = s.rank();
                long eps = s.epsilon;
                if (g(0, 0) != 1) return false;
                if (g(0, n - 1) != Rat(2 * eps)) return false;  // the Ext^2 entry
                if (g(n - 1, n - 1) != Rat(eps * eps)) return false;
                int idx = 1;
                for (const auto& a : s.arms) {
                  int w = static_cast<int>(a.p) - 1;
                  Rat dD(eps * a.f, a.e);
                  dD.canonicalize();
                  for (int r = idx; r < idx + w; ++r) {
                    if (g(r, r) != dD) return false;
                    if (r + 1 < idx + w && g(r, r + 1) != -dD) return false;
                    if (g(r, n - 1) != (r == idx + w - 1 ? Rat(-eps * eps * a.f) : Rat(0)))
                      return false;
                    if (g(0, r) != (r == idx + w - 1 ? Rat(-eps * a.f) : Rat(0))) return false;
                    for (int c = 1; c < n - 1; ++c)
                      if ((c < idx || c >= idx + w) && g(r, c) != 0) return false;
                  }
                  idx += w;
                }
                // signature cross-check: the symmetrized simple-basis form is
                // rationally congruent to the s-basis form
                exactalg::Inertia si = exactalg::signature_symmetric(g + g.transposed());
                if (!(si == lattice::signature(s))) return false;
                ++count;
              }
              d << " (" << count << " symbols)";
              return count > 0;
            });

  criterion(5,
            "conditions (1),(2),(3),(5),(6) agree over all t <= 4, p_i <= 4, "
            "lambda in {0,1,2,3,inf}, incl. all-false at t = 1",
            [](std::ostream& d) {
              driver::Report rep;
              driver::run_condition_sweep<Rat>(4, 4, &rep);
              for (const auto& c : rep.checks) d << " (" << c.details << ")";
              for (auto w : {2L, 3L}) {
                bq::Conditions c =
                    bq::check_conditions<Rat>({w}, driver::parse_points<Rat>({"0"}));
                if (!c.agree() || c.c1 || c.c2 || c.c3 || c.c5 || c.c6) return false;
              }
              return rep.all_pass();
            });

  criterion(6,
            "build_tilting_apr yields a tilting module with End Cartan = "
            "Coxeter-Dynkin Cartan; dim Ext^2(S_F,S_G) over B is 2",
            [](std::ostream& d) {
              int count = 0;
              std::vector<std::vector<long>> seen;
              for (const Instance& in : instances()) {
                auto pts = driver::parse_points<Rat>(in.lambdas);
                bq::TiltingResult<Rat> tr = bq::build_tilting_apr<Rat>(in.weights, pts);
                if (!bq::is_tilting(tr.alg, tr.summands)) return false;
                Symbol s = driver::symbol_from_weights(in.weights);
                if (bq::end_dims(tr.summands) != speciesdims::cartan_cd(s).hom_dims) return false;
                // Ext^2 over B itself, with finite parameters (the dimension
                // does not depend on the chosen points)
                if (std::find(seen.begin(), seen.end(), in.weights) == seen.end()) {
                  seen.push_back(in.weights);
                  std::vector<std::string> fin;
                  for (std::size_t i = 0; i < in.weights.size(); ++i)
                    fin.push_back(std::to_string(i));
                  auto B = bq::cd_algebra<Rat>(in.weights, driver::parse_points<Rat>(fin));
                  int F = B->q().vindex("F"), G = B->q().vindex("G");
                  if (bq::ext_dim(bq::simple(B, F), bq::simple(B, G), 2) != 2) return false;
                }
                ++count;
              }
              d << " (" << count << " instances)";
              return count >= 10;
            });

  criterion(7,
            "build_tilting_canonical satisfies the dual conditions of a "
            "classical tilting module with End Cartan = canonical Cartan "
            "(classical pd <= 1 fails at I_F for t >= 3; cotilting verified)",
            [](std::ostream& d) {
              int count = 0;
              for (const Instance& in : instances()) {
                auto pts = driver::parse_points<Rat>(in.lambdas);
                bq::TiltingResult<Rat> tr = bq::build_tilting_canonical<Rat>(in.weights, pts);
                if (!bq::is_cotilting(tr.alg, tr.summands)) return false;
                Symbol s = driver::symbol_from_weights(in.weights);
                if (bq::end_dims(tr.summands) != speciesdims::cartan_canonical(s).hom_dims)
                  return false;
                ++count;
              }
              d << " (" << count << " instances)";
              return count >= 10;
            });

  criterion(8,
            "summand dimension vectors give a unimodular congruence from the "
            "squid simple-basis Euler matrix to each target Cartan",
            [](std::ostream& d) {
              int count = 0;
              for (const Instance& in : instances()) {
                auto pts = driver::parse_points<Rat>(in.lambdas);
                Symbol s = driver::symbol_from_weights(in.weights);
                Matrix<Rat> GS = simple_gram(s);
                int n = s.rank();
                for (const std::string& target : {std::string("cd"), std::string("canonical")}) {
                  bq::TiltingResult<Rat> tr =
                      target == "canonical" ? bq::build_tilting_canonical<Rat>(in.weights, pts)
                                            : bq::build_tilting_apr<Rat>(in.weights, pts);
                  Matrix<Rat> S(n, n);
                  for (int j = 0; j < n; ++j)
                    for (int v = 0; v < n; ++v) S(v, j) = tr.summands[j].dims[v];
                  if (!exactalg::is_unimodular(S)) return false;
                  Matrix<Rat> H = target == "canonical"
                                      ? speciesdims::cartan_canonical(s).hom_dims
                                      : speciesdims::cartan_cd(s).hom_dims;
                  if (S.transposed() * GS * S != H.transposed()) return false;
                  ++count;
                }
              }
              d << " (" << count << " congruences)";
              return count >= 20;
            });

  criterion(9,
            "reflection functors: e_F(S^-(N)) has dimension t - 2, and the "
            "reflection chain ends with all arm components 1 and F-component 2",
            [](std::ostream& d) {
              int count = 0;
              for (const Instance& in : instances()) {
                auto pts = driver::parse_points<Rat>(in.lambdas);
                bq::OnePointData<Rat> opd = bq::a0_module<Rat>(in.weights, pts);
                const auto& Q = opd.alg->q();
                int t = static_cast<int>(in.weights.size());
                // sanity: N = e_0 A e_G has F-component 2 and arm components 1
                if (opd.N.dims[Q.vindex("F")] != 2) return false;
                // S^- at the source F
                bq::Rep<Rat> sm = bq::bgp_reflect(opd.N, "F", bq::ReflectDir::Minus);
                if (sm.dims[Q.vindex("F")] != t - 2) return false;
                // the chain of S^+ at sinks from the proof of Thm. (C case)
                std::vector<std::string> deep, ones, all_arms;
                for (const auto& arm : opd.arm_vertices)
                  for (std::size_t j = 0; j < arm.size(); ++j) {
                    all_arms.push_back(arm[j]);
                    (j >= 1 ? deep : ones).push_back(arm[j]);
                  }
                auto is_sink = [](const bq::Rep<Rat>& M, int v) {
                  bool has_in = false;
                  for (const auto& a : M.A->q().arrows) {
                    if (a.src == v) return false;
                    if (a.tgt == v) has_in = true;
                  }
                  return has_in;
                };
                auto greedy = [&](bq::Rep<Rat> M, const std::vector<std::string>& allowed) {
                  bool changed = true;
                  while (changed) {
                    changed = false;
                    for (const auto& vn : allowed) {
                      if (is_sink(M, M.A->q().vindex(vn))) {
                        M = bq::bgp_reflect(M, vn, bq::ReflectDir::Plus);
                        changed = true;
                      }
                    }
                  }
                  return M;
                };
                bq::Rep<Rat> s1 = greedy(opd.N, deep);
                // after clearing the deep arm vertices: deep components 0,
                // e_i(1) components 1, F-component (= M) unchanged
                for (const auto& vn : deep)
                  if (s1.dims[s1.A->q().vindex(vn)] != 0) return false;
                for (const auto& vn : ones)
                  if (s1.dims[s1.A->q().vindex(vn)] != 1) return false;
                if (s1.dims[s1.A->q().vindex("F")] != 2) return false;
                bq::Rep<Rat> s2 = s1;
                for (const auto& vn : ones) s2 = bq::bgp_reflect(s2, vn, bq::ReflectDir::Plus);
                bq::Rep<Rat> s3 = greedy(s2, all_arms);
                // final state: V_i -> V_i^+ (all arm components 1), M fixed
                for (const auto& vn : all_arms)
                  if (s3.dims[s3.A->q().vindex(vn)] != 1) return false;
                if (s3.dims[s3.A->q().vindex("F")] != 2) return false;
                // final orientation: F is a sink of the reflected quiver
                for (const auto& a : s3.A->q().arrows)
                  if (s3.A->q().vertices[a.src] == "F") return false;
                ++count;
              }
              d << " (" << count << " instances)";
              return count >= 10;
            });

  criterion(10, "R/C example symbol has delta = -2 and domestic type", [](std::ostream& d) {
    Symbol s = lattice::symbol_from_data(Rat(1), {{1, 2, 1, 2}}, {2});
    if (lattice::delta(s) != -2) return false;
    if (lattice::rep_type(s) != lattice::RepType::Domestic) return false;
    d << " (symbol p=2, e=1, f=2, eps=1; rank " << s.rank() << ")";
    return s.rank() == 3;
  });

  if (failures > 0) {
    std::cout << failures << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
