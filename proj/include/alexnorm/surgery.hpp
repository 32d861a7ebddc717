#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "alexnorm/arith.hpp"

namespace alexnorm {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Integer(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transposed() const;
  bool is_diagonal() const;
  bool operator==(const IntMatrix&) const = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// `mat <rows> <cols>` followed by one line of integers per row.
std::string to_text(const IntMatrix& m);
IntMatrix parse_matrix(std::string_view text);

/// Pairwise linking numbers (symmetric, zero diagonal) and surgery coefficients.
struct LinkingData {
  IntMatrix lk;
  std::vector<Integer> framings;

  std::size_t components() const { return lk.rows(); }
};

/// Validates shape, symmetry and zero diagonal.
void check_linking_matrix(const IntMatrix& lk);

/// p_i = -sum_{j != i} lk(i, j).
std::vector<Integer> canonical_framings(const IntMatrix& lk);

/// Linking numbers off the diagonal, framings on it.
IntMatrix surgery_presentation(const LinkingData& data);

struct SmithForm {
  IntMatrix u, d, v;  ///< d = u * m * v, u and v unimodular
};

/// Smith normal form with invariant factors d_1 | d_2 | ... (all >= 0).
/// Pivot: smallest nonzero absolute value, lowest row then column on ties.
SmithForm smith_normal_form(const IntMatrix& m);

/// Invariant factors (diagonal of d, including zeros for the free part).
std::vector<Integer> invariant_factors(const IntMatrix& m);

struct AbelianGroupInvariants {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  ///< entries >= 2, each dividing the next

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroupInvariants&) const = default;
};

std::string to_string(const AbelianGroupInvariants& g);

/// Invariants of Z^rows / (column space of m).
AbelianGroupInvariants cokernel(const IntMatrix& m);

AbelianGroupInvariants h1_of_surgery(const LinkingData& data);

struct ElementOrder {
  bool infinite = false;
  Integer order = 1;  ///< meaningful when finite

  bool operator==(const ElementOrder&) const = default;
};

std::string to_string(const ElementOrder& o);

/// Order of the i-th meridian in H_1 of the surgered manifold.
ElementOrder meridian_order(const LinkingData& data, std::size_t i);

/// `link <n>`, `lk i j v` lines (1-based, symmetric entries implied) and
/// optional `frame i p` lines; unspecified framings default to canonical.
LinkingData parse_link(std::string_view text);

/// 3x3 unimodular integer matrix acting on H_1 of a boundary torus times S^1.
class GluingMatrix {
 public:
  explicit GluingMatrix(IntMatrix m);
  GluingMatrix(std::initializer_list<std::initializer_list<long>> rows) : GluingMatrix(IntMatrix(rows)) {}

  const IntMatrix& matrix() const { return m_; }
  Integer det() const { return determinant(m_); }
  GluingMatrix inverse() const;
  bool operator==(const GluingMatrix&) const = default;

 private:
  IntMatrix m_;
};

/// Rows (a b 0 / d e 0 / g h 1) with determinant 1.
bool is_fiber_block_form(const GluingMatrix& g);

GluingMatrix compose_gluings(const GluingMatrix& g1, const GluingMatrix& g2);

}  // namespace alexnorm
