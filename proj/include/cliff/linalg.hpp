#pragma once

#include "cliff/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cliff {

using Vector = std::vector<Rational>;

// Dense row-major matrix of exact rationals. Sizes here stay small (the
// largest systems are 2^n x 2^n blade systems), and every elimination loop
// skips zero entries.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const Vector &entries);
  static RationalMatrix from_rows(const std::vector<Vector> &rows);
  static RationalMatrix from_columns(const std::vector<Vector> &cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector &v);

  RationalMatrix transpose() const;
  bool is_symmetric() const;
  bool is_diagonal() const;
  bool is_identity() const;

  Rational determinant() const;
  std::size_t rank() const;
  std::optional<RationalMatrix> inverse() const;

  // Basis of the right null space {x : A x = 0}.
  std::vector<Vector> null_space() const;
  // Some solution of A x = b, or nullopt when inconsistent.
  std::optional<Vector> solve(const Vector &b) const;

  friend RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b);
  friend RationalMatrix operator+(const RationalMatrix &a, const RationalMatrix &b);
  friend RationalMatrix operator-(const RationalMatrix &a, const RationalMatrix &b);
  friend RationalMatrix operator*(const Rational &c, const RationalMatrix &a);
  friend Vector operator*(const RationalMatrix &a, const Vector &v);
  friend bool operator==(const RationalMatrix &, const RationalMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix &m);

Rational dot(const Vector &a, const Vector &b);
bool is_zero_vector(const Vector &v);

// Text format shared by the CLI and the quadratic-space API: rows separated
// by ';', entries by ',', each entry "a" or "a/b".
RationalMatrix parse_matrix(std::string_view text);
Vector parse_vector(std::string_view text);
std::string format_matrix(const RationalMatrix &m);
std::string format_vector(const Vector &v);

// Sparse vector keyed by coordinate index (blade masks in practice).
using SparseVector = std::map<std::uint32_t, Rational>;

// Incrementally maintained reduced echelon basis of a span of sparse vectors.
// Each stored row has coefficient 1 at its pivot and 0 at every other pivot,
// so coordinates of a member are read off at the pivot positions.
class SpanBuilder {
public:
  // Returns true when v was independent of the current span.
  bool insert(const SparseVector &v);
  std::size_t dimension() const { return rows_.size(); }
  bool contains(const SparseVector &v) const;
  // Coordinates of v in the echelon basis; nullopt when v is outside the span.
  std::optional<Vector> coordinates(const SparseVector &v) const;

  // Null space of the matrix whose rows are the inserted vectors, over
  // coordinates 0..columns-1.
  std::vector<SparseVector> null_space(std::uint32_t columns) const;

  const std::vector<SparseVector> &basis() const { return rows_; }
  const std::vector<std::uint32_t> &pivots() const { return pivots_; }

private:
  SparseVector reduce(SparseVector v) const;

  std::vector<SparseVector> rows_;
  std::vector<std::uint32_t> pivots_;
};

} // namespace cliff
