#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace qsp {

/* Dense matrices over a commutative ring K (a field where elimination is
 * involved).  K must be default-constructible to zero, constructible from
 * long, and support +, -, *, == ; the elimination routines additionally use
 * the / operator.  Everything is exact; pivots are chosen deterministically
 * (first nonzero), so results are reproducible across runs.
 */
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(long rows, long cols, std::vector<K> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (static_cast<long>(a_.size()) != rows * cols)
      throw std::invalid_argument("Matrix: entry count mismatch");
  }

  static Matrix identity(long n) {
    Matrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  K& at(long r, long c) { return a_[r * cols_ + c]; }
  const K& at(long r, long c) const { return a_[r * cols_ + c]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool operator<(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!(a_[k] == o.a_[k])) return a_[k] < o.a_[k];
    return false;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (K& x : m.a_) x = -x;
    return m;
  }
  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] = a_[k] + o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] = a_[k] - o.a_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
  friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("Matrix: product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (long i = 0; i < a.rows_; ++i)
      for (long k = 0; k < a.cols_; ++k) {
        const K& aik = a.at(i, k);
        if (aik == K()) continue;
        for (long j = 0; j < b.cols_; ++j)
          p.at(i, j) = p.at(i, j) + aik * b.at(k, j);
      }
    return p;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix scaled(const K& s) const {
    Matrix m = *this;
    for (K& x : m.a_) x = x * s;
    return m;
  }

  std::vector<K> column(long j) const {
    std::vector<K> v(rows_);
    for (long i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }
  void set_column(long j, const std::vector<K>& v) {
    for (long i = 0; i < rows_; ++i) at(i, j) = v[i];
  }

  friend std::vector<K> operator*(const Matrix& m, const std::vector<K>& v) {
    if (m.cols_ != static_cast<long>(v.size()))
      throw std::invalid_argument("Matrix: vector shape mismatch");
    std::vector<K> out(m.rows_, K());
    for (long i = 0; i < m.rows_; ++i)
      for (long j = 0; j < m.cols_; ++j)
        if (!(m.at(i, j) == K())) out[i] = out[i] + m.at(i, j) * v[j];
    return out;
  }

  bool is_zero() const {
    for (const K& x : a_)
      if (!(x == K())) return false;
    return true;
  }

  // --- elimination-based routines (K must be a field) ---

  long rank() const { return Matrix(*this).row_reduce(); }

  K det() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::det: not square");
    Matrix m = *this;
    K d(1);
    long r = 0;
    for (long c = 0; c < cols_ && r < rows_; ++c) {
      long p = -1;
      for (long i = r; i < rows_; ++i)
        if (!(m.at(i, c) == K())) { p = i; break; }
      if (p < 0) return K();
      if (p != r) {
        m.swap_rows(p, r);
        d = -d;
      }
      d = d * m.at(r, c);
      K inv = K(1) / m.at(r, c);
      for (long i = r + 1; i < rows_; ++i) {
        K f = m.at(i, c) * inv;
        if (f == K()) continue;
        for (long j = c; j < cols_; ++j)
          m.at(i, j) = m.at(i, j) - f * m.at(r, j);
      }
      ++r;
    }
    return r == rows_ ? d : K();
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    return solve(*this, identity(rows_));
  }

  // Solve A X = B exactly.  Returns the unique solution when A has full
  // column rank and the system is consistent; nullopt otherwise.
  static std::optional<Matrix> solve(const Matrix& A, const Matrix& B) {
    if (A.rows_ != B.rows_)
      throw std::invalid_argument("Matrix::solve: shape mismatch");
    long n = A.rows_, m = A.cols_, w = B.cols_;
    Matrix aug(n, m + w);
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < m; ++j) aug.at(i, j) = A.at(i, j);
      for (long j = 0; j < w; ++j) aug.at(i, m + j) = B.at(i, j);
    }
    std::vector<long> pivot_col;
    aug.row_reduce(&pivot_col);
    // full column rank on the A side, and no pivot in the B side
    if (static_cast<long>(pivot_col.size()) != m) return std::nullopt;
    for (long c : pivot_col)
      if (c >= m) return std::nullopt;
    for (long i = m; i < n; ++i)
      for (long j = 0; j < w; ++j)
        if (!(aug.at(i, m + j) == K())) return std::nullopt;
    Matrix X(m, w);
    for (long i = 0; i < m; ++i)
      for (long j = 0; j < w; ++j) X.at(i, j) = aug.at(i, m + j);
    return X;
  }

  // columns spanning { v : A v = 0 }
  Matrix kernel() const {
    Matrix m = *this;
    std::vector<long> pivot_col;
    m.row_reduce(&pivot_col);
    std::vector<bool> is_pivot(cols_, false);
    for (long c : pivot_col) is_pivot[c] = true;
    long nfree = cols_ - static_cast<long>(pivot_col.size());
    Matrix ker(cols_, nfree);
    long kcol = 0;
    for (long fc = 0; fc < cols_; ++fc) {
      if (is_pivot[fc]) continue;
      ker.at(fc, kcol) = K(1);
      for (std::size_t r = 0; r < pivot_col.size(); ++r)
        ker.at(pivot_col[r], kcol) = -m.at(r, fc);
      ++kcol;
    }
    return ker;
  }

  // Greedy scan: indices of the lexicographically first maximal set of
  // linearly independent columns.
  std::vector<long> independent_columns() const {
    Matrix m = *this;
    std::vector<long> pivot_col;
    m.row_reduce(&pivot_col);
    return pivot_col;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
  }
  void swap_rows(long a, long b) {
    for (long j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  // In-place reduced row echelon form; returns the rank and (optionally)
  // the pivot column of each of the first rank rows.
  long row_reduce(std::vector<long>* pivot_col = nullptr) {
    long r = 0;
    for (long c = 0; c < cols_ && r < rows_; ++c) {
      long p = -1;
      for (long i = r; i < rows_; ++i)
        if (!(at(i, c) == K())) { p = i; break; }
      if (p < 0) continue;
      if (p != r) swap_rows(p, r);
      K inv = K(1) / at(r, c);
      for (long j = c; j < cols_; ++j) at(r, j) = at(r, j) * inv;
      for (long i = 0; i < rows_; ++i) {
        if (i == r) continue;
        K f = at(i, c);
        if (f == K()) continue;
        for (long j = c; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
      }
      if (pivot_col) pivot_col->push_back(c);
      ++r;
    }
    return r;
  }

  long rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

}  // namespace qsp
