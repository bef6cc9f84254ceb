#include "cliff/linalg.hpp"

#include "cliff/error.hpp"

#include <sstream>
#include <utility>

namespace cliff {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const Vector &entries) {
  RationalMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    m(i, i) = entries[i];
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<Vector> &rows) {
  if (rows.empty())
    return {};
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<Vector> &cols) {
  if (cols.empty())
    return {};
  RationalMatrix m(cols.front().size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    m.set_column(c, cols[c]);
  return m;
}

Vector RationalMatrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector RationalMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

void RationalMatrix::set_column(std::size_t c, const Vector &v) {
  if (v.size() != rows_)
    fail(ErrorCode::DimensionMismatch, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, c) = v[r];
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_symmetric() const {
  if (!square())
    return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r))
        return false;
  return true;
}

bool RationalMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero())
        return false;
  return true;
}

bool RationalMatrix::is_identity() const {
  return square() && *this == identity(rows_);
}

std::vector<std::size_t> row_reduce(RationalMatrix &m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && m(r, c).is_zero())
      ++r;
    if (r == m.rows())
      continue;
    if (r != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k)
        std::swap(m(r, k), m(lead_row, k));
    Rational inv = Rational(1) / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!m(lead_row, k).is_zero())
        m(lead_row, k) *= inv;
    for (std::size_t other = 0; other < m.rows(); ++other) {
      if (other == lead_row || m(other, c).is_zero())
        continue;
      Rational factor = m(other, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(lead_row, k).is_zero())
          m(other, k) -= factor * m(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

Rational RationalMatrix::determinant() const {
  if (!square())
    fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  RationalMatrix a = *this;
  Rational det(1);
  const std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a(r, c).is_zero())
      ++r;
    if (r == n)
      return Rational(0);
    if (r != c) {
      for (std::size_t k = 0; k < n; ++k)
        std::swap(a(r, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    Rational inv = Rational(1) / a(c, c);
    for (std::size_t below = c + 1; below < n; ++below) {
      if (a(below, c).is_zero())
        continue;
      Rational factor = a(below, c) * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!a(c, k).is_zero())
          a(below, k) -= factor * a(c, k);
    }
  }
  return det;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix a = *this;
  return row_reduce(a).size();
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (!square())
    fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      inv(r, c) = aug(r, n + c);
  return inv;
}

std::vector<Vector> RationalMatrix::null_space() const {
  RationalMatrix a = *this;
  auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free])
      continue;
    Vector v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> RationalMatrix::solve(const Vector &b) const {
  if (b.size() != rows_)
    fail(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  RationalMatrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c)
      aug(r, c) = (*this)(r, c);
    aug(r, cols_) = b[r];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == cols_)
    return std::nullopt;
  Vector x(cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug(i, cols_);
  return x;
}

RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b) {
  if (a.cols_ != b.rows_)
    fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational &lhs = a(r, k);
      if (lhs.is_zero())
        continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (!b(k, c).is_zero())
          out(r, c) += lhs * b(k, c);
    }
  return out;
}

RationalMatrix operator+(const RationalMatrix &a, const RationalMatrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] += b.data_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix &a, const RationalMatrix &b) {
  return a + (Rational(-1) * b);
}

RationalMatrix operator*(const Rational &c, const RationalMatrix &a) {
  RationalMatrix out = a;
  for (auto &x : out.data_)
    x *= c;
  return out;
}

Vector operator*(const RationalMatrix &a, const Vector &v) {
  if (a.cols_ != v.size())
    fail(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c)
      if (!a(r, c).is_zero() && !v[c].is_zero())
        out[r] += a(r, c) * v[c];
  return out;
}

Rational dot(const Vector &a, const Vector &b) {
  if (a.size() != b.size())
    fail(ErrorCode::DimensionMismatch, "dot product length mismatch");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += a[i] * b[i];
  return acc;
}

bool is_zero_vector(const Vector &v) {
  for (const auto &x : v)
    if (!x.is_zero())
      return false;
  return true;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return parts;
}

} // namespace

Vector parse_vector(std::string_view text) {
  Vector v;
  for (auto entry : split(text, ','))
    v.push_back(Rational::parse(entry));
  return v;
}

RationalMatrix parse_matrix(std::string_view text) {
  std::vector<Vector> rows;
  for (auto row : split(text, ';'))
    rows.push_back(parse_vector(row));
  for (const auto &r : rows)
    if (r.size() != rows.front().size())
      throw ParseError(0, "matrix rows have different lengths");
  return RationalMatrix::from_rows(rows);
}

std::string format_vector(const Vector &v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i].to_string();
  return os.str();
}

std::string format_matrix(const RationalMatrix &m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r)
    os << (r ? ";" : "") << format_vector(m.row(r));
  return os.str();
}

// --- SpanBuilder -----------------------------------------------------------

SparseVector SpanBuilder::reduce(SparseVector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto it = v.find(pivots_[i]);
    if (it == v.end())
      continue;
    Rational factor = it->second;
    for (const auto &[key, value] : rows_[i]) {
      Rational &slot = v[key];
      slot -= factor * value;
      if (slot.is_zero())
        v.erase(key);
    }
  }
  return v;
}

bool SpanBuilder::insert(const SparseVector &v) {
  SparseVector r = reduce(v);
  if (r.empty())
    return false;
  const std::uint32_t pivot = r.begin()->first;
  Rational inv = Rational(1) / r.begin()->second;
  for (auto &[key, value] : r)
    value *= inv;
  for (auto &row : rows_) {
    auto it = row.find(pivot);
    if (it == row.end())
      continue;
    Rational factor = it->second;
    for (const auto &[key, value] : r) {
      Rational &slot = row[key];
      slot -= factor * value;
      if (slot.is_zero())
        row.erase(key);
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

std::vector<SparseVector> SpanBuilder::null_space(std::uint32_t columns) const {
  std::map<std::uint32_t, std::size_t> pivot_row;
  for (std::size_t i = 0; i < pivots_.size(); ++i)
    pivot_row.emplace(pivots_[i], i);
  std::vector<SparseVector> out;
  for (std::uint32_t free = 0; free < columns; ++free) {
    if (pivot_row.count(free))
      continue;
    SparseVector v;
    v.emplace(free, Rational(1));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (auto it = rows_[i].find(free); it != rows_[i].end())
        v.emplace(pivots_[i], -it->second);
    out.push_back(std::move(v));
  }
  return out;
}

bool SpanBuilder::contains(const SparseVector &v) const { return reduce(v).empty(); }

std::optional<Vector> SpanBuilder::coordinates(const SparseVector &input) const {
  SparseVector v;
  for (const auto &[key, value] : input)
    if (!value.is_zero())
      v.emplace(key, value);
  Vector coords(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (auto it = v.find(pivots_[i]); it != v.end())
      coords[i] = it->second;
  SparseVector rebuilt;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (coords[i].is_zero())
      continue;
    for (const auto &[key, value] : rows_[i]) {
      Rational &slot = rebuilt[key];
      slot += coords[i] * value;
      if (slot.is_zero())
        rebuilt.erase(key);
    }
  }
  if (rebuilt != v)
    return std::nullopt;
  return coords;
}

} // namespace cliff
