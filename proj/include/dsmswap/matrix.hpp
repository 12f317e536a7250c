#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "dsmswap/errors.hpp"

namespace dsmswap {

// Hard cap on dense dimensions. Keeps the m^2-sized tensor composites at
// 4096 entries per side (m <= 64), which is the intended desk scale.
inline constexpr int kMaxDenseDim = 4096;

/// Dense real matrix, row-major.
class Matrix {
 public:
  Matrix() = default;

  Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw ShapeError("matrix dimensions must be positive");
    if (rows > kMaxDenseDim || cols > kMaxDenseDim)
      throw SizeError("matrix dimension exceeds cap of " + std::to_string(kMaxDenseDim));
    a_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  /// J_n, the all-ones matrix.
  static Matrix ones(int n) {
    Matrix m(n, n);
    for (auto& x : m.a_) x = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  const std::vector<double>& entries() const { return a_; }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw ShapeError("matrix product dimension mismatch");
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const double aik = (*this)(i, k);
        if (aik == 0.0) continue;
        for (int j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
      }
    }
    return out;
  }

  Matrix operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix sum shape mismatch");
    Matrix out = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] += rhs.a_[k];
    return out;
  }

  Matrix operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix difference shape mismatch");
    Matrix out = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] -= rhs.a_[k];
    return out;
  }

  Matrix scaled(double s) const {
    Matrix out = *this;
    for (auto& x : out.a_) x *= s;
    return out;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::abs(x));
    return m;
  }

  bool operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).max_abs(); }

/// Permutation of [0..m-1], stored as the image of each basis vector:
/// P e_i = e_{image[i]}. Dense realization has one 1 per row and column.
class PermutationMatrix {
 public:
  explicit PermutationMatrix(int m) : image_(static_cast<std::size_t>(m)) {
    if (m <= 0) throw ArgumentError("permutation size must be positive");
    std::iota(image_.begin(), image_.end(), 0);
  }

  static PermutationMatrix from_mapping(std::vector<int> image) {
    PermutationMatrix p(static_cast<int>(image.size()));
    std::vector<char> seen(image.size(), 0);
    for (int v : image) {
      if (v < 0 || v >= static_cast<int>(image.size()) || seen[v])
        throw ArgumentError("mapping is not a bijection");
      seen[v] = 1;
    }
    p.image_ = std::move(image);
    return p;
  }

  int size() const { return static_cast<int>(image_.size()); }

  /// Image of basis index i.
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }

  const std::vector<int>& mapping() const { return image_; }

  PermutationMatrix inverse() const {
    PermutationMatrix inv(size());
    for (int i = 0; i < size(); ++i) inv.image_[image_[i]] = i;
    return inv;
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (image_[i] != i) return false;
    return true;
  }

  Matrix to_dense() const {
    Matrix d(size(), size());
    for (int c = 0; c < size(); ++c) d(image_[c], c) = 1.0;
    return d;
  }

  /// P v via index mapping; no dense multiply.
  std::vector<double> apply(const std::vector<double>& v) const {
    if (static_cast<int>(v.size()) != size()) throw ShapeError("vector length mismatch");
    std::vector<double> out(v.size());
    for (int i = 0; i < size(); ++i) out[image_[i]] = v[i];
    return out;
  }

  bool operator==(const PermutationMatrix& rhs) const { return image_ == rhs.image_; }

 private:
  std::vector<int> image_;
};

/// Matrix product p * q, i.e. the permutation applying q first, then p.
inline PermutationMatrix compose(const PermutationMatrix& p, const PermutationMatrix& q) {
  if (p.size() != q.size()) throw ShapeError("permutation size mismatch");
  std::vector<int> image(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) image[i] = p(q(i));
  return PermutationMatrix::from_mapping(std::move(image));
}

/// SWAP_m(i, j): fixes every k outside {i, j} and exchanges i and j.
inline PermutationMatrix swap_matrix(int m, int i, int j) {
  if (m < 2) throw ArgumentError("swap requires m >= 2");
  if (i < 0 || j < 0 || i >= m || j >= m) throw ArgumentError("swap target out of range");
  if (i == j) throw ArgumentError("swap targets must be distinct");
  std::vector<int> image(static_cast<std::size_t>(m));
  std::iota(image.begin(), image.end(), 0);
  std::swap(image[i], image[j]);
  return PermutationMatrix::from_mapping(std::move(image));
}

/// Kronecker product: (A (x) B)[i*br+k, j*bc+l] = A[i,j] * B[k,l].
inline Matrix kron(const Matrix& a, const Matrix& b) {
  const long long r = static_cast<long long>(a.rows()) * b.rows();
  const long long c = static_cast<long long>(a.cols()) * b.cols();
  if (r > kMaxDenseDim || c > kMaxDenseDim)
    throw SizeError("kron result exceeds dimension cap of " + std::to_string(kMaxDenseDim));
  Matrix out(static_cast<int>(r), static_cast<int>(c));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

/// Row-major vectorization: vec(A)[i*n+j] = A[i,j]. Square input only.
inline std::vector<double> vec_row_major(const Matrix& a) {
  if (!a.square()) throw ShapeError("vec_row_major requires a square matrix");
  return a.entries();
}

/// 1^T (A . B) 1, the sum of the Hadamard product's entries.
/// Equals tr(A B^T) and vec(I)^T (A (x) B) vec(I).
inline double hadamard_contraction(const Matrix& a, const Matrix& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw ShapeError("hadamard_contraction requires equal square matrices");
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * b(i, j);
  return s;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

/// True iff min entry >= -tol and all row and column sums are within tol of 1.
/// Non-square input is simply not doubly stochastic.
inline bool is_doubly_stochastic(const Matrix& a, double tol) {
  if (!a.square()) return false;
  const int n = a.rows();
  for (int i = 0; i < n; ++i) {
    double rs = 0.0, cs = 0.0;
    for (int j = 0; j < n; ++j) {
      if (a(i, j) < -tol) return false;
      rs += a(i, j);
      cs += a(j, i);
    }
    if (std::abs(rs - 1.0) > tol || std::abs(cs - 1.0) > tol) return false;
  }
  return true;
}

/// Non-negative matrix with unit row/column sums. The constructor clamps
/// entries in [-1e-12, 0) to zero (floating-point dust from composite
/// products) and rejects anything more negative.
class DoublyStochasticMatrix {
 public:
  static constexpr double kNegativeClamp = 1e-12;
  static constexpr double kSumTolerance = 1e-9;

  explicit DoublyStochasticMatrix(Matrix m) : m_(std::move(m)) {
    if (!m_.square()) throw ShapeError("doubly stochastic matrix must be square");
    const int n = m_.rows();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double& x = m_(i, j);
        if (x < 0.0) {
          if (x < -kNegativeClamp)
            throw ArgumentError("entry below the doubly stochastic negativity clamp");
          x = 0.0;
        }
      }
    if (!is_doubly_stochastic(m_, kSumTolerance))
      throw ArgumentError("row/column sums are not within tolerance of 1");
  }

  const Matrix& matrix() const { return m_; }
  int size() const { return m_.rows(); }

 private:
  Matrix m_;
};

/// Smooth swap: I_m + sin^2(theta) (SWAP_m(i,j) - I_m). Doubly stochastic
/// for every theta; a permutation exactly when theta is a multiple of pi/2.
inline DoublyStochasticMatrix sswap(int m, int i, int j, double theta) {
  swap_matrix(m, i, j);  // validates m, i, j
  const double s2 = std::sin(theta) * std::sin(theta);
  Matrix out = Matrix::identity(m);
  out(i, i) = 1.0 - s2;
  out(j, j) = 1.0 - s2;
  out(i, j) = s2;
  out(j, i) = s2;
  return DoublyStochasticMatrix(std::move(out));
}

/// Parallelized smooth swap on the m^2-dimensional tensor space:
/// I + sin^2(theta) (SWAP(i,j)^{(x)2} - I). Note this is not
/// sswap(...)^{(x)2}; the tensor power binds to the swap, not to the mixture.
inline DoublyStochasticMatrix psswap(int m, int i, int j, double theta) {
  PermutationMatrix sw = swap_matrix(m, i, j);
  const long long mm = static_cast<long long>(m) * m;
  if (mm > kMaxDenseDim)
    throw SizeError("psswap dimension m^2 exceeds cap of " + std::to_string(kMaxDenseDim));
  const double s2 = std::sin(theta) * std::sin(theta);
  Matrix out = Matrix::identity(static_cast<int>(mm));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const int r = x * m + y;
      const int rp = sw(x) * m + sw(y);
      if (rp == r) continue;
      out(r, r) = 1.0 - s2;
      out(rp, r) = s2;
    }
  return DoublyStochasticMatrix(std::move(out));
}

}  // namespace dsmswap
