#pragma once

// Exact scalar and vector types shared by every module.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ssv {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major integer matrix. Rows are the natural unit throughout the
/// library: generators of a subgroup are rows, and a homomorphism
/// Z^m -> Z^n acts on row vectors as x -> x * M with M of shape m x n.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<IntVector>& rows,
                                 std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  std::vector<IntVector> row_list() const;
  IntegerMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source,
                        const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source,
                        const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::span<const Integer> entries() const { return entries_; }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntVector operator*(const IntVector& x, const IntegerMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

Integer determinant(const IntegerMatrix& m);

/// num/den in lowest terms (mpq_class's two-argument constructor does not
/// canonicalize).
Rational ratio(const Integer& num, const Integer& den);

// Vector helpers ------------------------------------------------------------

IntVector make_int_vector(std::initializer_list<long> values);
RatVector make_rat_vector(std::initializer_list<long> values);
RatVector to_rational(const IntVector& v);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);
Rational dot(const RatVector& a, const RatVector& b);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

/// gcd of the absolute values of the entries (0 for the zero vector).
Integer content(const IntVector& v);

/// Divides by the content. The sign is left unchanged: rays must keep
/// their direction.
IntVector primitive(const IntVector& v);

/// Divides by the content and makes the first nonzero entry positive; the
/// canonical representative of a line through the origin.
IntVector primitive_up_to_sign(const IntVector& v);

/// Smallest positive integer multiple of a rational vector that is integral,
/// divided by its content. Direction is preserved.
IntVector primitive_integer_direction(const RatVector& v);

/// Clears denominators (multiply by their lcm) without dividing by the content.
IntVector clear_denominators(const RatVector& v);

Integer lcm_of_denominators(const RatVector& v);

bool is_integral(const Rational& q);
bool is_integral(const RatVector& v);
IntVector to_integer(const RatVector& v);

// Text form ------------------------------------------------------------------

/// "p/q" in lowest terms, or "p" when integral.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
std::string to_string(const IntVector& v);  // "(a,b,c)"
std::string to_string(const RatVector& v);

/// Parses "p", "-p", "p/q". Throws ParseError on malformed input or zero
/// denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

}  // namespace ssv
