#include "symq/matrix.hpp"

#include <utility>

#include "symq/error.hpp"

namespace symq {

Rational parse_rational(const std::string& text) {
  auto bad = [&] { fail(ErrorCode::ParseError, "bad rational '" + text + "'"); };
  if (text.empty()) bad();
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') bad();
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) bad();
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<RationalVector>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) fail(ErrorCode::ShapeMismatch, "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows) {
  std::vector<RationalVector> q;
  for (const auto& r : rows) {
    RationalVector v;
    for (long x : r) v.emplace_back(x);
    q.push_back(std::move(v));
  }
  return from_rows(q);
}

Matrix Matrix::column(const RationalVector& v) {
  Matrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

RationalVector Matrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

RationalVector Matrix::col(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorCode::ShapeMismatch, "block out of range");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) fail(ErrorCode::ShapeMismatch, "block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool Matrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r)) return false;
  return true;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::ShapeMismatch, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::ShapeMismatch, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::ShapeMismatch, "matrix product");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

RationalVector operator*(const Matrix& a, const RationalVector& v) {
  if (a.cols_ != v.size()) fail(ErrorCode::ShapeMismatch, "matrix-vector product");
  RationalVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) fail(ErrorCode::ShapeMismatch, "hstack");
    cols += b.cols();
  }
  Matrix m(rows, cols);
  std::size_t c = 0;
  for (const auto& b : blocks) {
    m.set_block(0, c, b);
    c += b.cols();
  }
  return m;
}

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) fail(ErrorCode::ShapeMismatch, "vstack");
    rows += b.rows();
  }
  Matrix m(rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks) {
    m.set_block(r, 0, b);
    r += b.rows();
  }
  return m;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

Matrix rref(const Matrix& input, std::vector<std::size_t>* pivots) {
  Matrix m = input;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

Rational determinant(const Matrix& input) {
  if (!input.is_square()) fail(ErrorCode::NotSquare, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  Matrix m = input;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(k, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Rational d = m(n - 1, n - 1);
  return sign > 0 ? d : Rational(-d);
}

std::vector<RationalVector> kernel_basis(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix kernel_matrix(const Matrix& m) {
  auto basis = kernel_basis(m);
  Matrix k(m.cols(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, j) = basis[j][i];
  return k;
}

std::vector<std::size_t> cokernel_complement(const Matrix& m) {
  Matrix aug = hstack({m, Matrix::identity(m.rows())}, m.rows());
  std::vector<std::size_t> piv;
  rref(aug, &piv);
  std::vector<std::size_t> out;
  for (auto p : piv)
    if (p >= m.cols()) out.push_back(p - m.cols());
  return out;
}

Matrix cokernel_projection(const Matrix& m, const std::vector<std::size_t>& complement) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  const std::size_t n = m.rows();
  if (piv.size() + complement.size() != n) fail(ErrorCode::ShapeMismatch, "complement size");
  Matrix basis(n, n);
  std::size_t c = 0;
  for (auto p : piv) basis.set_block(0, c++, m.block(0, p, n, 1));
  for (auto k : complement) basis(k, c++) = 1;
  Matrix inv = inverse(basis);
  return inv.block(piv.size(), 0, complement.size(), n);
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::NotSquare, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::size_t> piv;
  Matrix r = rref(hstack({m, Matrix::identity(n)}, n), &piv);
  if (piv.size() < n || (n > 0 && piv[n - 1] >= n)) fail(ErrorCode::Singular, "matrix is singular");
  return r.block(0, n, n, n);
}

std::optional<RationalVector> solve(const Matrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) fail(ErrorCode::ShapeMismatch, "solve");
  std::vector<std::size_t> piv;
  Matrix r = rref(hstack({a, Matrix::column(b)}, a.rows()), &piv);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  RationalVector x(a.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, a.cols());
  return x;
}

LinalgKit linalg_kit(const Matrix& m) {
  LinalgKit kit;
  kit.kernel_basis = kernel_basis(m);
  kit.rank = m.cols() - kit.kernel_basis.size();
  kit.cokernel_dim = m.rows() - kit.rank;
  if (m.is_square()) kit.det = determinant(m);
  return kit;
}

namespace {

Rational matching_sum(const Matrix& m, std::vector<std::size_t>& idx) {
  if (idx.empty()) return 1;
  std::size_t first = idx[0];
  Rational total = 0;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const Rational& a = m(first, idx[j]);
    if (a == 0) continue;
    std::vector<std::size_t> rest;
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    Rational sub = matching_sum(m, rest);
    if (j % 2 == 1)
      total += a * sub;
    else
      total -= a * sub;
  }
  return total;
}

void check_pfaffian_input(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::NotSquare, "pfaffian of non-square matrix");
  if (m.rows() % 2 != 0) fail(ErrorCode::OddDimension, "pfaffian of odd-size matrix");
  if (!m.is_skew_symmetric()) fail(ErrorCode::NotSkewSymmetric, "pfaffian input not skew-symmetric");
}

}  // namespace

Rational pfaffian_matching(const Matrix& m) {
  check_pfaffian_input(m);
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return matching_sum(m, idx);
}

Rational pfaffian_elimination(const Matrix& input) {
  check_pfaffian_input(input);
  Matrix a = input;
  const std::size_t n = a.rows();
  Rational result = 1;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t p = k + 1;
    while (p < n && a(k, p) == 0) ++p;
    if (p == n) return 0;
    if (p != k + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, p), a(r, k + 1));
      result = -result;
    }
    Rational piv = a(k, k + 1);
    result *= piv;
    for (std::size_t i = k + 2; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        a(i, j) += (a(k + 1, i) * a(k, j) - a(k, i) * a(k + 1, j)) / piv;
        a(j, i) = -a(i, j);
      }
  }
  return result;
}

Rational pfaffian(const Matrix& m) {
  check_pfaffian_input(m);
  return m.rows() <= 6 ? pfaffian_matching(m) : pfaffian_elimination(m);
}

}  // namespace symq
