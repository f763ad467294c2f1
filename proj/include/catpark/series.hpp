#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "catpark/multipoly.hpp"

namespace catpark {

class NonUnitConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Power series in x modulo x^{order+1} whose coefficients are MultiPoly
/// values over a shared variable list.
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t order, std::vector<std::string> variables);

  static TruncatedSeries one(std::size_t order, std::vector<std::string> variables);
  /// The series x (zero when order == 0).
  static TruncatedSeries x(std::size_t order, std::vector<std::string> variables);
  static TruncatedSeries from_integers(const std::vector<BigInt>& coefficients,
                                       std::vector<std::string> variables = {});

  std::size_t order() const noexcept { return coefficients_.size() - 1; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const MultiPoly& coefficient(std::size_t j) const { return coefficients_.at(j); }
  void set_coefficient(std::size_t j, MultiPoly value);

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Multiplies every coefficient by a polynomial over the same variables.
  friend TruncatedSeries operator*(const MultiPoly& c, const TruncatedSeries& s);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  TruncatedSeries pow(unsigned exponent) const;
  /// Requires constant term 1.
  TruncatedSeries reciprocal() const;
  /// x * this, truncated.
  TruncatedSeries shifted() const;
  /// Substitutes x -> factor * x: coefficient j gains factor^j.
  TruncatedSeries scale_arg(const MultiPoly& factor) const;

  TruncatedSeries with_variables(const std::vector<std::string>& variables) const;
  TruncatedSeries renamed(const std::string& from, const std::string& to) const;
  TruncatedSeries substitute(const std::string& name, const BigInt& value) const;
  TruncatedSeries truncated(std::size_t order) const;

 private:
  void require_compatible(const TruncatedSeries& other, const char* op) const;

  std::vector<std::string> variables_;
  std::vector<MultiPoly> coefficients_;
};

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a * b;
}
inline TruncatedSeries series_pow(const TruncatedSeries& s, unsigned e) { return s.pow(e); }
inline TruncatedSeries series_reciprocal(const TruncatedSeries& s) { return s.reciprocal(); }
inline TruncatedSeries series_scale_arg(const TruncatedSeries& s, const MultiPoly& factor) {
  return s.scale_arg(factor);
}

}  // namespace catpark
