#include "speciesdims.hpp"

namespace speciesdims {

namespace {

Rat ratdiv(long num, long den) {
  Rat v(num, den);
  v.canonicalize();
  return v;
}

void arm_labels(const Symbol& s, int i, bool ascending, std::vector<std::string>* labels) {
  const auto& a = s.arms[i];
  if (ascending) {
    for (long j = 1; j <= a.p - 1; ++j)
      labels->push_back("u_" + std::to_string(i + 1) + "(" + std::to_string(j) + ")");
  } else {
    for (long j = a.p - 1; j >= 1; --j)
      labels->push_back("e_" + std::to_string(i + 1) + "(" + std::to_string(j) + ")");
  }
}

}  // namespace

DimPresentation cartan_squid(const Symbol& s) {
  s.validate();
  int n = s.rank();
  long eps = s.epsilon;
  DimPresentation P;
  P.tag = AlgebraTag::Squid;
  P.hom_dims = Matrix<Rat>(n, n);
  P.vertex_dims.assign(n, Rat(0));
  int idx = 0;
  for (int i = 0; i < s.t(); ++i) {
    const auto& a = s.arms[i];
    int w = static_cast<int>(a.p) - 1;
    arm_labels(s, i, false, &P.vertex_labels);
    for (int r = idx; r < idx + w; ++r) {
      P.vertex_dims[r] = ratdiv(eps * a.f, a.e);  // dim D_i
      for (int c = r; c < idx + w; ++c) P.hom_dims(r, c) = P.vertex_dims[r];
      P.hom_dims(r, n - 2) = eps * a.f;            // U_i
      P.hom_dims(r, n - 1) = eps * eps * a.f;      // V_i
    }
    idx += w;
  }
  P.vertex_labels.push_back("F");
  P.vertex_labels.push_back("G");
  P.vertex_dims[n - 2] = 1;
  P.vertex_dims[n - 1] = eps * eps;
  P.hom_dims(n - 2, n - 2) = 1;
  P.hom_dims(n - 2, n - 1) = 2 * eps;  // M
  P.hom_dims(n - 1, n - 1) = eps * eps;
  return P;
}

DimPresentation cartan_cd(const Symbol& s) {
  s.validate();
  if (!s.condition6()) throw Condition6Violated();
  int n = s.rank();
  long eps = s.epsilon;
  DimPresentation P;
  P.tag = AlgebraTag::CoxeterDynkin;
  P.hom_dims = Matrix<Rat>(n, n);
  P.vertex_dims.assign(n, Rat(0));
  P.vertex_labels.push_back("F");
  P.vertex_dims[0] = 1;
  P.hom_dims(0, 0) = 1;
  long sum_d = 0;
  for (const auto& a : s.arms) sum_d += a.d();
  P.hom_dims(0, n - 1) = eps * eps * sum_d - 2 * eps;  // W
  P.vertex_dims[n - 1] = eps * eps;
  P.hom_dims(n - 1, n - 1) = eps * eps;
  int idx = 1;
  for (int i = 0; i < s.t(); ++i) {
    const auto& a = s.arms[i];
    int w = static_cast<int>(a.p) - 1;
    arm_labels(s, i, false, &P.vertex_labels);
    P.hom_dims(0, idx + w - 1) = eps * a.f;  // U_i^vee at e_i(1)
    for (int r = idx; r < idx + w; ++r) {
      P.vertex_dims[r] = ratdiv(eps * a.f, a.e);
      for (int c = r; c < idx + w; ++c) P.hom_dims(r, c) = P.vertex_dims[r];
      P.hom_dims(r, n - 1) = eps * eps * a.f;  // V_i
    }
    idx += w;
  }
  P.vertex_labels.push_back("G");
  return P;
}

DimPresentation cartan_canonical(const Symbol& s) {
  s.validate();
  int n = s.rank();
  long eps = s.epsilon;
  DimPresentation P;
  P.tag = AlgebraTag::Canonical;
  P.hom_dims = Matrix<Rat>(n, n);
  P.vertex_dims.assign(n, Rat(0));
  P.vertex_labels.push_back("F");
  P.vertex_dims[0] = 1;
  P.hom_dims(0, 0) = 1;
  P.hom_dims(0, n - 1) = 2 * eps;  // M
  P.vertex_dims[n - 1] = eps * eps;
  P.hom_dims(n - 1, n - 1) = eps * eps;
  int idx = 1;
  for (int i = 0; i < s.t(); ++i) {
    const auto& a = s.arms[i];
    int w = static_cast<int>(a.p) - 1;
    arm_labels(s, i, true, &P.vertex_labels);
    for (int r = idx; r < idx + w; ++r) {
      P.vertex_dims[r] = ratdiv(eps * a.f, a.e);
      P.hom_dims(0, r) = eps * a.f;  // U_i^*
      for (int c = r; c < idx + w; ++c) P.hom_dims(r, c) = P.vertex_dims[r];
      P.hom_dims(r, n - 1) = eps * eps * a.f;  // V_i^+
    }
    idx += w;
  }
  P.vertex_labels.push_back("G");
  return P;
}

Matrix<Rat> gram_simple_basis(const DimPresentation& p) {
  int n = p.hom_dims.rows();
  Matrix<Rat> mult(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult(i, j) = p.hom_dims(i, j) / p.vertex_dims[j];
  Matrix<Rat> mi;
  try {
    mi = exactalg::inverse(mult);
  } catch (const exactalg::SingularMatrix&) {
    throw SingularCartan();
  }
  return mi * p.hom_dims.transposed() * mi.transposed();
}

bool check_condition6(const std::vector<Point6>& points) {
  long sum = 0;
  for (const auto& pt : points) sum += pt.dimDU * pt.dimUF;
  return sum >= 2;
}

bool congruence_check(const Matrix<Rat>& g1, const Matrix<Rat>& g2,
                      const Matrix<Rat>& base_change) {
  if (g1.rows() != g1.cols() || g2.rows() != g2.cols() || g1.rows() != g2.rows() ||
      base_change.rows() != g1.rows() || base_change.rows() != base_change.cols())
    throw exactalg::SizeMismatch();
  if (!exactalg::is_unimodular(base_change)) return false;
  return base_change.transposed() * g1 * base_change == g2;
}

nlohmann::json presentation_to_json(const DimPresentation& p) {
  const char* tag = p.tag == AlgebraTag::Squid
                        ? "squid"
                        : (p.tag == AlgebraTag::CoxeterDynkin ? "cd" : "canonical");
  nlohmann::json dims = nlohmann::json::array();
  for (const auto& d : p.vertex_dims) dims.push_back(exactalg::rat_to_string(d));
  return {{"algebra", tag},
          {"vertex_labels", p.vertex_labels},
          {"vertex_dims", dims},
          {"hom_dims", exactalg::matrix_to_json(p.hom_dims)}};
}

}  // namespace speciesdims
