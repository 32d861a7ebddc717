#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alexnorm/arith.hpp"

namespace alexnorm {

/// Integer exponent tuple of a Laurent monomial. Variables are ordered
/// (x, y, z, t) for four-variable link polynomials.
class ExponentVector {
 public:
  using value_type = std::int64_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t arity) : e_(arity, 0) {}
  ExponentVector(std::initializer_list<value_type> e) : e_(e) {}
  explicit ExponentVector(std::vector<value_type> e) : e_(std::move(e)) {}

  std::size_t size() const { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  const std::vector<value_type>& entries() const { return e_; }

  bool is_zero() const;
  ExponentVector operator+(const ExponentVector& o) const;
  ExponentVector operator-(const ExponentVector& o) const;
  ExponentVector operator-() const;
  ExponentVector scaled(value_type k) const;
  Point to_point() const;

  auto operator<=>(const ExponentVector&) const = default;
  bool operator==(const ExponentVector&) const = default;

 private:
  std::vector<value_type> e_;
};

std::string to_string(const ExponentVector& e);

/// Converts a point with integral coordinates back to an exponent vector.
ExponentVector to_exponent(const Point& p);

/// Finitely supported map from exponent vectors to nonzero integers.
class LaurentPoly {
 public:
  using Terms = std::map<ExponentVector, Integer>;

  explicit LaurentPoly(std::size_t arity);

  static LaurentPoly constant(std::size_t arity, const Integer& c);
  static LaurentPoly monomial(const ExponentVector& e, const Integer& c = 1);
  /// The variable with index `var`, i.e. x_var.
  static LaurentPoly variable(std::size_t arity, std::size_t var);
  /// Sums repeated exponents and drops zero coefficients.
  static LaurentPoly from_terms(std::size_t arity, const std::vector<std::pair<ExponentVector, Integer>>& terms);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const ExponentVector& e) const;

  /// Lexicographically largest exponent and its coefficient.
  const std::pair<const ExponentVector, Integer>& leading_term() const;
  ExponentVector min_exponents() const;
  ExponentVector max_exponents() const;

  /// Multiplication by the monomial x^shift.
  LaurentPoly shifted(const ExponentVector& shift) const;
  /// p(x1^-1, ..., xn^-1).
  LaurentPoly inverted() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  /// Adds c * x^e in place.
  void add_term(const ExponentVector& e, const Integer& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const Integer& c);
  bool operator==(const LaurentPoly& o) const = default;

 private:
  void check_arity(const LaurentPoly& o, const char* op) const;

  std::size_t arity_;
  Terms terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// Replaces every variable by its k-th power.
LaurentPoly substitute_powers(const LaurentPoly& p, std::int64_t k);

/// Alexander polynomial of the Borromean rings together with their
/// three-fold symmetry axis, in variables (x, y, z, t).
LaurentPoly mt_link_polynomial();

Rational evaluate(const LaurentPoly& p, const std::vector<Rational>& point);

struct Symmetry {
  int sign;              ///< +1 or -1
  ExponentVector shift;  ///< p(x^-1) = sign * x^shift * p(x)
};

std::optional<Symmetry> is_symmetric(const LaurentPoly& p);

/// Canonical representative of the class {±x^a p}. Centered on the origin
/// when p is symmetric with an even span in every variable, otherwise
/// translated to nonnegative support touching every coordinate hyperplane;
/// the lexicographically largest term is made positive.
LaurentPoly normalize_units(const LaurentPoly& p);

bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q);

/// r with r * q == p, or nullopt when q does not divide p in Z[x^±1].
std::optional<LaurentPoly> try_divide(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);

/// Greatest common divisor in Z[x1^±1, ..., xn^±1], in normalize_units form.
LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q);

/// `laurent <arity>` header followed by `<coef> <e1> ... <en>` lines in
/// lexicographic exponent order.
std::string to_text(const LaurentPoly& p);
LaurentPoly parse_laurent(std::string_view text);

/// Human-readable form such as `-4 + t + t^-1 + x*y*z`.
std::string to_pretty(const LaurentPoly& p);

}  // namespace alexnorm
