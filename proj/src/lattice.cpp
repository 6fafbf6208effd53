#include "lattice.hpp"

#include <algorithm>
#include <numeric>

namespace lattice {

namespace {
long lcm_l(long a, long b) { return a / std::gcd(a, b) * b; }
}  // namespace

void Symbol::validate() const {
  if (epsilon != 1 && epsilon != 2) throw InvalidSymbol("epsilon must be 1 or 2");
  if (arms.empty()) throw InvalidSymbol("at least one arm required");
  for (const auto& a : arms) {
    if (a.p < 2) throw InvalidSymbol("weight p_i must be >= 2");
    if (a.e < 1 || a.f < 1) throw InvalidSymbol("e_i and f_i must be >= 1");
  }
}

bool Symbol::same_symbol(const Symbol& o) const {
  if (epsilon != o.epsilon || arms.size() != o.arms.size()) return false;
  auto x = arms, y = o.arms;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

long kappa(const Symbol& s) {
  s.validate();
  long k = 1;
  for (const auto& a : s.arms) k = lcm_l(k, a.e / std::gcd(a.e, s.epsilon * a.f));
  return k;
}

long delta(const Symbol& s) {
  s.validate();
  long p = 1;
  for (const auto& a : s.arms) p = lcm_l(p, a.p);
  // p * (sum d_i (1 - 1/p_i) - 2/eps); integral since p_i | p and eps | 2
  long acc = 0;
  for (const auto& a : s.arms) acc += a.d() * (p - p / a.p);
  acc -= 2 * p / s.epsilon;
  return acc;
}

RepType rep_type(const Symbol& s) {
  long d = delta(s);
  if (d < 0) return RepType::Domestic;
  if (d == 0) return RepType::Tubular;
  return RepType::Wild;
}

std::string rep_type_name(RepType t) {
  switch (t) {
    case RepType::Domestic:
      return "domestic";
    case RepType::Tubular:
      return "tubular";
    default:
      return "wild";
  }
}

BilinearLattice gram_s_basis(const Symbol& s) {
  s.validate();
  int n = s.rank();
  long k = kappa(s);
  long eps = s.epsilon;
  BilinearLattice L;
  L.rank = n;
  L.gram = Matrix<Rat>(n, n);
  L.basis_labels = {"a", "w"};
  L.gram(0, 0) = k;
  L.gram(0, 1) = k * eps;
  L.gram(1, 0) = -k * eps;
  int idx = 2;
  for (int i = 0; i < s.t(); ++i) {
    const Arm& a = s.arms[i];
    L.gram(0, idx) = k * eps * a.f;
    for (long j = 0; j + 1 < a.p; ++j) {
      Rat v(k * eps * a.f, a.e);
      v.canonicalize();
      if (v.get_den() != 1) throw InvalidSymbol("kappa*eps*f/e not integral");
      L.gram(idx + j, idx + j) = v;
      if (j >= 1) L.gram(idx + j - 1, idx + j) = -v;
      L.basis_labels.push_back("s_" + std::to_string(i + 1) + "^(" + std::to_string(j) + ")");
    }
    idx += static_cast<int>(a.p) - 1;
  }
  return L;
}

Matrix<Rat> coxeter_matrix(const BilinearLattice& L) {
  Matrix<Rat> tau = -(exactalg::inverse(L.gram) * L.gram.transposed());
  if (!exactalg::is_integer_matrix(tau)) throw NonIntegralCoxeter();
  return tau;
}

namespace {

// Expected Gram displays of the two bases (paper's matrices).
Matrix<Rat> expected_canonical(const Symbol& s) {
  int n = s.rank();
  long k = kappa(s), eps = s.epsilon;
  Matrix<Rat> E(n, n);
  E(0, 0) = k;
  E(0, n - 1) = 2 * k * eps;
  E(n - 1, n - 1) = k * eps * eps;
  int c0 = 1;
  for (const auto& a : s.arms) {
    int w = static_cast<int>(a.p) - 1;
    for (int r = c0; r < c0 + w; ++r) {
      E(0, r) = k * eps * a.f;
      for (int c = r; c < c0 + w; ++c) {
        Rat v(k * eps * a.f, a.e);
        v.canonicalize();
        E(r, c) = v;
      }
      E(r, n - 1) = k * eps * eps * a.f;
    }
    c0 += w;
  }
  return E;
}

Matrix<Rat> expected_opposite(const Symbol& s) {
  int n = s.rank();
  long k = kappa(s), eps = s.epsilon;
  Matrix<Rat> E(n, n);
  E(0, 0) = k * eps * eps;
  E(0, n - 1) = 2 * k * eps;
  E(n - 1, n - 1) = k;
  int c0 = 1;
  for (const auto& a : s.arms) {
    int w = static_cast<int>(a.p) - 1;
    for (int r = c0; r < c0 + w; ++r) {
      E(0, r) = k * eps * eps * a.f;
      for (int c = r; c < c0 + w; ++c) {
        Rat v(k * eps * a.f, a.e);
        v.canonicalize();
        E(r, c) = v;
      }
      E(r, n - 1) = k * eps * a.f;
    }
    c0 += w;
  }
  return E;
}

// Base change columns for the canonical basis (a, a_i(j), w + eps*a) or the
// opposite basis (eps*a - w, b_i(j), a), with the arm entries
//   a_i(j) = sum_{l=1..j} tau^{-l} s_i^{(0)} + eps*f_i*a
//   b_i(j) = sum_{l=1..j} tau^{-l} s_i^{(0)} + f_i*(eps*a - w)
// and j running over shift..shift+p_i-2.
Matrix<Rat> base_change(const Symbol& s, int shift, bool opposite) {
  BilinearLattice L = gram_s_basis(s);
  Matrix<Rat> tau_inv = exactalg::inverse(coxeter_matrix(L));
  int n = s.rank();
  Matrix<Rat> P(n, n);
  auto set_col = [&](int c, const Matrix<Rat>& v) {
    for (int i = 0; i < n; ++i) P(i, c) = v(i, 0);
  };
  Matrix<Rat> head(n, 1);
  if (opposite) {
    head(0, 0) = s.epsilon;
    head(1, 0) = -1;
  } else {
    head(0, 0) = 1;
  }
  set_col(0, head);
  int col = 1, idx = 2;
  for (const auto& arm : s.arms) {
    Matrix<Rat> s0(n, 1);
    s0(idx, 0) = 1;
    for (long j = shift; j < shift + arm.p - 1; ++j) {
      Matrix<Rat> v(n, 1);
      if (opposite) {
        v(0, 0) = Rat(arm.f) * Rat(s.epsilon);
        v(1, 0) = -arm.f;
      } else {
        v(0, 0) = Rat(s.epsilon) * Rat(arm.f);
      }
      Matrix<Rat> acc = s0;
      for (long l = 0; l < j; ++l) {
        acc = tau_inv * acc;
        v = v + acc;
      }
      set_col(col++, v);
    }
    idx += static_cast<int>(arm.p) - 1;
  }
  Matrix<Rat> tail(n, 1);
  if (opposite) {
    tail(0, 0) = 1;
  } else {
    tail(0, 0) = s.epsilon;
    tail(1, 0) = 1;
  }
  set_col(col, tail);
  return P;
}

BasisResult basis_result(const Symbol& s, bool opposite) {
  Matrix<Rat> G = gram_s_basis(s).gram;
  Matrix<Rat> expect = opposite ? expected_opposite(s) : expected_canonical(s);
  // The paper's displayed index range (j from 0) makes the base change
  // singular; the shifted range (j from 1) reproduces the display. Both are
  // tried and the matching one is reported.
  for (int shift : {1, 0}) {
    Matrix<Rat> P = base_change(s, shift, opposite);
    Rat d = exactalg::det(P);
    if (d != 1 && d != -1) continue;
    Matrix<Rat> got = P.transposed() * G * P;
    if (got == expect) return BasisResult{got, P, shift};
  }
  throw NoConventionMatches();
}

}  // namespace

BasisResult gram_canonical_basis(const Symbol& s) { return basis_result(s, false); }
BasisResult gram_opposite_basis(const Symbol& s) { return basis_result(s, true); }

Inertia signature(const Symbol& s) {
  Matrix<Rat> G = gram_s_basis(s).gram;
  return exactalg::signature_symmetric(G + G.transposed());
}

Symbol symbol_from_data(const Rat& eps_raw, const std::vector<PointDims>& points,
                        const std::vector<long>& weights) {
  if (points.size() != weights.size() || points.empty())
    throw InconsistentDimensions();
  Rat half(1, 2);
  if (eps_raw != 1 && eps_raw != 2 && eps_raw != half)
    throw InvalidSymbol("epsilon must be 1/2, 1 or 2");
  Symbol s;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const PointDims& pt = points[i];
    // regularity: dim U_F = eps * dim V_G
    if (Rat(pt.dimUF) != eps_raw * Rat(pt.dimVG)) throw InconsistentDimensions();
    Arm a;
    a.p = weights[i];
    if (eps_raw == half) {
      a.e = pt.dimDV;
      a.f = pt.dimUF;
    } else {
      a.e = pt.dimDU;
      a.f = pt.dimVG;
    }
    s.arms.push_back(a);
  }
  s.epsilon = (eps_raw == half) ? 2 : static_cast<int>(eps_raw.get_num().get_si());
  s.validate();
  return s;
}

std::vector<Symbol> enumerate_symbols(int max_rank, long max_d) {
  std::vector<Symbol> out;
  if (max_rank < 3 || max_d < 1) return out;
  // all (p,e,f) with p>=2, e*f<=max_d, ordered for deterministic output
  std::vector<Arm> alphabet;
  for (long p = 2; p <= max_rank - 1; ++p)
    for (long e = 1; e <= max_d; ++e)
      for (long f = 1; e * f <= max_d; ++f) alphabet.push_back({p, e, f});
  std::sort(alphabet.begin(), alphabet.end());
  // non-decreasing arm sequences (canonical representative of the multiset)
  std::vector<Arm> cur;
  auto emit = [&](auto&& self, int min_idx, int rank_used) -> void {
    if (!cur.empty()) {
      for (int eps : {1, 2}) {
        Symbol s;
        s.epsilon = eps;
        s.arms = cur;
        out.push_back(s);
      }
    }
    for (int i = min_idx; i < static_cast<int>(alphabet.size()); ++i) {
      int add = static_cast<int>(alphabet[i].p) - 1;
      if (rank_used + add > max_rank) continue;
      cur.push_back(alphabet[i]);
      self(self, i, rank_used + add);
      cur.pop_back();
    }
  };
  emit(emit, 0, 2);
  // group eps together deterministically: sort by (rank, t, arms, eps)
  std::stable_sort(out.begin(), out.end(), [](const Symbol& x, const Symbol& y) {
    if (x.rank() != y.rank()) return x.rank() < y.rank();
    if (x.t() != y.t()) return x.t() < y.t();
    if (x.arms != y.arms)
      return std::lexicographical_compare(x.arms.begin(), x.arms.end(), y.arms.begin(),
                                          y.arms.end());
    return x.epsilon < y.epsilon;
  });
  return out;
}

Matrix<Rat> squid_basis_change(const Symbol& s) {
  s.validate();
  int n = s.rank();
  Matrix<Rat> Q(n, n);
  int col = 0, idx = 2;
  for (const auto& a : s.arms) {
    for (long j = a.p - 1; j >= 1; --j) {  // display order e_i(p-1)..e_i(1)
      Q(1, col) = -a.f;
      for (long l = 0; l < j; ++l) Q(idx + static_cast<int>(l), col) = 1;
      ++col;
    }
    idx += static_cast<int>(a.p) - 1;
  }
  Q(0, col) = 1;  // F -> a
  Q(0, col + 1) = s.epsilon;
  Q(1, col + 1) = 1;  // G -> eps*a + w
  return Q;
}

Matrix<Rat> ab_witness(const Symbol& s) {
  s.validate();
  int n = s.rank();
  Matrix<Rat> S(n, n);
  // B's F-column is the class [X] = sum_i e_i [P_{e_i(1)}] - [P_F] in A's
  // projective display coordinates; arms and G map identically.
  S(n - 2, 0) = -1;
  int idx = 0;
  for (const auto& a : s.arms) {
    S(idx + static_cast<int>(a.p) - 2, 0) = a.e;
    idx += static_cast<int>(a.p) - 1;
  }
  for (int c = 1; c < n - 1; ++c) S(c - 1, c) = 1;
  S(n - 1, n - 1) = 1;
  return S;
}

nlohmann::json symbol_to_json(const Symbol& s) {
  nlohmann::json arms = nlohmann::json::array();
  for (const auto& a : s.arms) arms.push_back({{"p", a.p}, {"e", a.e}, {"f", a.f}});
  return {{"epsilon", s.epsilon}, {"arms", arms}};
}

Symbol symbol_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("epsilon") || !j.contains("arms"))
    throw exactalg::ParseError("symbol JSON must have epsilon and arms");
  Symbol s;
  s.epsilon = j.at("epsilon").get<int>();
  for (const auto& a : j.at("arms")) {
    Arm arm;
    arm.p = a.at("p").get<long>();
    arm.e = a.value("e", 1L);
    arm.f = a.value("f", 1L);
    s.arms.push_back(arm);
  }
  s.validate();
  return s;
}

}  // namespace lattice
