#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace korbit {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exponent vector over a fixed, ordered set of variables.
using Monomial = std::vector<std::uint8_t>;

int total_degree(const Monomial& mono);

/// Graded lexicographic order: total degree first, then exponent vectors
/// lexicographically.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial with int64 coefficients in a fixed number of
/// variables. Zero coefficients are never stored. Arithmetic throws
/// std::overflow_error if a coefficient leaves the int64 range.
class Polynomial {
 public:
  using Terms = std::map<Monomial, std::int64_t, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(int num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(int num_vars, std::int64_t c);
  /// c * x_k.
  static Polynomial variable(int num_vars, int k, std::int64_t c = 1);

  int num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const Monomial& mono) const;
  std::int64_t constant_term() const;
  int degree() const;

  /// Adds c * mono; drops the term if it cancels.
  void add_term(const Monomial& mono, std::int64_t c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Value at a point given one rational per variable.
  Rational evaluate(std::span<const Rational> point) const;

  /// Highest term first, e.g. "2*a14 - a23^2 + 1". `names` has one entry
  /// per variable.
  std::string to_string(std::span<const std::string> names) const;

 private:
  int num_vars_ = 0;
  Terms terms_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant of the submatrix on `rows` x `cols` (equal lengths, entries
/// taken in the given order) by Laplace expansion along rows, memoized on
/// the set of columns already used.
Polynomial determinant(const PolyMatrix& a, std::span<const int> rows, std::span<const int> cols);

}  // namespace korbit
