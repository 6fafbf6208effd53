// Exact dense linear algebra over Q (GMP rationals) and F_p.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace exactalg {

using Rat = mpq_class;
using Int = mpz_class;

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("matrix is singular") {}
};
struct NotSymmetric : std::runtime_error {
  NotSymmetric() : std::runtime_error("matrix is not symmetric") {}
};
struct NonIntegerEntries : std::runtime_error {
  NonIntegerEntries() : std::runtime_error("matrix has non-integer entries") {}
};
struct SizeMismatch : std::runtime_error {
  SizeMismatch() : std::runtime_error("matrix size mismatch") {}
};
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what, std::size_t pos = 0)
      : std::runtime_error("parse error: " + what), position(pos) {}
  std::size_t position;
};

// Prime field with a process-wide modulus, set once before any F_p work
// (matches the one-field-per-run CLI model; reads are thread-safe after set).
class Fp {
 public:
  Fp() : v_(0) {}
  Fp(long x) { v_ = norm(x % p_); }  // NOLINT: implicit by design, mirrors Rat(int)
  static void set_modulus(long p);
  static long modulus() { return p_; }

  long value() const { return v_; }
  bool operator==(const Fp& o) const { return v_ == o.v_; }
  bool operator!=(const Fp& o) const { return v_ != o.v_; }
  Fp operator+(const Fp& o) const { return from(norm((v_ + o.v_) % p_)); }
  Fp operator-(const Fp& o) const { return from(norm((v_ - o.v_) % p_)); }
  Fp operator-() const { return from(norm(-v_ % p_)); }
  Fp operator*(const Fp& o) const { return from(norm((v_ * o.v_) % p_)); }
  Fp operator/(const Fp& o) const { return *this * o.inv(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp inv() const;

 private:
  static Fp from(long v) {
    Fp r;
    r.v_ = v;
    return r;
  }
  static long norm(long x) { return x < 0 ? x + p_ : x; }
  long v_;
  static long p_;
};

inline bool is_zero(const Rat& x) { return x == 0; }
inline bool is_zero(const Fp& x) { return x.value() == 0; }

template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int r, int c) : rows_(r), cols_(c), a_(static_cast<std::size_t>(r) * c, K(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw SizeMismatch();
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K& x = (*this)(i, k);
        if (is_zero(x)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch();
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch();
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  void swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

 private:
  int rows_, cols_;
  std::vector<K> a_;
};

// Row-reduce in place; returns pivot column indices.
template <class K>
std::vector<int> rref(Matrix<K>& m) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    m.swap_rows(r, pr);
    K pv = m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) = m(r, j) / pv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class K>
int rank(Matrix<K> m) {
  return static_cast<int>(rref(m).size());
}

// Basis of the right null space, columns in reduced column echelon form
// (deterministic: free columns in ascending order, unit at the free index).
template <class K>
Matrix<K> kernel_basis(Matrix<K> m) {
  int n = m.cols();
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(n, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  Matrix<K> basis(n, static_cast<int>(free_cols.size()));
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    basis(free_cols[k], k) = K(1);
    for (int i = 0; i < static_cast<int>(piv.size()); ++i)
      basis(piv[i], k) = -m(i, free_cols[k]);
  }
  return basis;
}

// One solution x of m x = rhs (columns of rhs solved independently);
// returns false if any column is inconsistent.
template <class K>
bool solve(const Matrix<K>& m, const Matrix<K>& rhs, Matrix<K>& out) {
  if (m.rows() != rhs.rows()) throw SizeMismatch();
  Matrix<K> aug(m.rows(), m.cols() + rhs.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    for (int j = 0; j < rhs.cols(); ++j) aug(i, m.cols() + j) = rhs(i, j);
  }
  std::vector<int> piv = rref(aug);
  out = Matrix<K>(m.cols(), rhs.cols());
  for (int i = 0; i < static_cast<int>(piv.size()); ++i) {
    if (piv[i] >= m.cols()) return false;
    for (int j = 0; j < rhs.cols(); ++j) out(piv[i], j) = aug(i, m.cols() + j);
  }
  return true;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw SizeMismatch();
  Matrix<K> aug(m.rows(), 2 * m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols() + i) = K(1);
  }
  std::vector<int> piv = rref(aug);
  // [m | I] always has full row rank; m is singular iff a pivot escapes into
  // the identity block
  if (static_cast<int>(piv.size()) < m.rows() || (!piv.empty() && piv.back() >= m.cols()))
    throw SingularMatrix();
  Matrix<K> inv(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) inv(i, j) = aug(i, m.cols() + j);
  return inv;
}

struct Inertia {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;
  bool operator==(const Inertia& o) const {
    return n_plus == o.n_plus && n_zero == o.n_zero && n_minus == o.n_minus;
  }
};

Rat det(Matrix<Rat> m);
Inertia signature_symmetric(Matrix<Rat> m);
bool is_unimodular(const Matrix<Rat>& m);
bool is_integer_matrix(const Matrix<Rat>& m);

std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);
nlohmann::json matrix_to_json(const Matrix<Rat>& m);
Matrix<Rat> matrix_from_json(const nlohmann::json& j);

}  // namespace exactalg
