#include "exactalg.hpp"

#include <cctype>

namespace exactalg {

long Fp::p_ = 2;

void Fp::set_modulus(long p) {
  if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("modulus must be prime");
  p_ = p;
}

Fp Fp::inv() const {
  if (v_ == 0) throw SingularMatrix();
  // extended Euclid
  long a = v_, b = p_, x0 = 1, x1 = 0;
  while (b) {
    long q = a / b;
    long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return from(norm(x0 % p_));
}

Rat det(Matrix<Rat> m) {
  if (m.rows() != m.cols()) throw SizeMismatch();
  int n = m.rows();
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int pr = -1;
    for (int i = c; i < n; ++i)
      if (m(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) return Rat(0);
    if (pr != c) {
      m.swap_rows(c, pr);
      d = -d;
    }
    d *= m(c, c);
    Rat pv = m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) / pv;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

// Congruence diagonalization (simultaneous row+column operations). A zero
// pivot with a nonzero off-diagonal entry is split by the standard move of
// adding the partner row/column, which turns the hyperbolic 2x2 block into
// one positive and one negative pivot.
Inertia signature_symmetric(Matrix<Rat> m) {
  if (m.rows() != m.cols()) throw SizeMismatch();
  int n = m.rows();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i)) throw NotSymmetric();
  Inertia sig;
  int k = 0;
  while (k < n) {
    int dp = -1;
    for (int i = k; i < n; ++i)
      if (m(i, i) != 0) {
        dp = i;
        break;
      }
    if (dp < 0) {
      int oi = -1, oj = -1;
      for (int i = k; i < n && oi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (m(i, j) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi < 0) {
        sig.n_zero += n - k;
        break;
      }
      for (int c = 0; c < n; ++c) m(oi, c) += m(oj, c);
      for (int r = 0; r < n; ++r) m(r, oi) += m(r, oj);
      continue;  // m(oi,oi) is now nonzero
    }
    if (dp != k) {
      m.swap_rows(k, dp);
      for (int r = 0; r < n; ++r) std::swap(m(r, k), m(r, dp));
    }
    Rat pv = m(k, k);
    if (pv > 0)
      ++sig.n_plus;
    else
      ++sig.n_minus;
    for (int i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rat f = m(i, k) / pv;
      for (int c = 0; c < n; ++c) m(i, c) -= f * m(k, c);
      for (int r = 0; r < n; ++r) m(r, i) -= f * m(r, k);
    }
    ++k;
  }
  return sig;
}

bool is_integer_matrix(const Matrix<Rat>& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j).get_den() != 1) return false;
  return true;
}

bool is_unimodular(const Matrix<Rat>& m) {
  if (m.rows() != m.cols()) throw SizeMismatch();
  if (!is_integer_matrix(m)) throw NonIntegerEntries();
  Rat d = det(m);
  return d == 1 || d == -1;
}

std::string rat_to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw ParseError("bad character in rational literal '" + s + "'", i);
  }
  try {
    std::size_t slash = s.find('/');
    Int num(slash == std::string::npos ? s : s.substr(0, slash), 10);
    Int den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1), 10);
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    Rat x(num, den);
    x.canonicalize();
    return x;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational literal '" + s + "'");
  }
}

nlohmann::json matrix_to_json(const Matrix<Rat>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix<Rat> matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError("matrix JSON must have rows/cols/entries");
  int r = j.at("rows").get<int>();
  int c = j.at("cols").get<int>();
  const auto& e = j.at("entries");
  if (r < 0 || c < 0 || !e.is_array() || static_cast<int>(e.size()) != r)
    throw ParseError("matrix JSON entry count mismatch");
  Matrix<Rat> m(r, c);
  for (int i = 0; i < r; ++i) {
    if (!e[i].is_array() || static_cast<int>(e[i].size()) != c)
      throw ParseError("matrix JSON row length mismatch");
    for (int k = 0; k < c; ++k) m(i, k) = rat_from_string(e[i][k].get<std::string>());
  }
  return m;
}

}  // namespace exactalg
