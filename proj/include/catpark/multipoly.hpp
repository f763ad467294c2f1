#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "catpark/bigint.hpp"

namespace catpark {

class VariableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a polynomial is not in the requested form (not divisible by
/// a monomial, not a combination of complete homogeneous polynomials, ...).
class NonMembership : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using Exponents = std::vector<std::uint32_t>;

/// Orders exponent vectors by descending total degree, then descending
/// lexicographic order. Iterating a map with this comparator yields the
/// canonical graded-lex term order.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients over a named, ordered variable list.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, BigInt, GradedLexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const BigInt& value);
  static MultiPoly variable(std::vector<std::string> variables, const std::string& name);
  static MultiPoly monomial(std::vector<std::string> variables, Exponents exponents,
                            const BigInt& coefficient = 1);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  std::uint32_t total_degree() const;

  BigInt coefficient(const Exponents& exponents) const;
  void add_term(const Exponents& exponents, const BigInt& coefficient);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const BigInt& scalar);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigInt& s) { return a *= s; }
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly pow(unsigned exponent) const;

  /// Re-expresses the polynomial over `variables`, which must contain every
  /// variable this polynomial actually uses.
  MultiPoly with_variables(const std::vector<std::string>& variables) const;
  /// Renames one variable, keeping its position.
  MultiPoly renamed(const std::string& from, const std::string& to) const;
  /// Substitutes an integer for one variable and drops it from the list.
  MultiPoly substitute(const std::string& name, const BigInt& value) const;
  /// Substitutes integers for all variables.
  BigInt evaluate(const std::map<std::string, BigInt>& values) const;

  /// Exact division by a monomial; throws NonMembership if not divisible.
  MultiPoly divide_by_monomial(const Exponents& exponents) const;

  /// Graded-lex rendering with explicit '*' and '^', e.g. "q^2 + 2*q".
  std::string to_string() const;

  /// {"variables": [...], "terms": [{"exponents": [...], "coefficient": "..."}]}
  nlohmann::json to_json() const;
  static MultiPoly from_json(const nlohmann::json& j);

 private:
  void require_same_variables(const MultiPoly& other, const char* op) const;

  std::vector<std::string> variables_;
  Terms terms_;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
BigInt poly_eval(const MultiPoly& p, const std::map<std::string, BigInt>& values);

/// Union of two variable lists, preserving the order of `a` then new names of `b`.
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

/// h_d: sum of all degree-d monomials in `variables`.
MultiPoly complete_homogeneous(const std::vector<std::string>& variables, unsigned degree);

/// Writes `poly / prod(variables)` as sum_d c_d h_d(variables). The c_d are
/// read off the pure powers of the first variable, then the residual is
/// checked to vanish. Throws NonMembership otherwise.
std::map<unsigned, BigInt> h_decompose(const MultiPoly& poly,
                                       const std::vector<std::string>& variables);

}  // namespace catpark
