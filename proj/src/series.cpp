#include "catpark/series.hpp"

namespace catpark {

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<std::string> variables)
    : variables_(std::move(variables)), coefficients_(order + 1, MultiPoly(variables_)) {}

TruncatedSeries TruncatedSeries::one(std::size_t order, std::vector<std::string> variables) {
  TruncatedSeries s(order, std::move(variables));
  s.coefficients_[0] = MultiPoly::constant(s.variables_, 1);
  return s;
}

TruncatedSeries TruncatedSeries::x(std::size_t order, std::vector<std::string> variables) {
  TruncatedSeries s(order, std::move(variables));
  if (order >= 1) s.coefficients_[1] = MultiPoly::constant(s.variables_, 1);
  return s;
}

TruncatedSeries TruncatedSeries::from_integers(const std::vector<BigInt>& coefficients,
                                               std::vector<std::string> variables) {
  if (coefficients.empty()) throw std::invalid_argument("series needs at least one coefficient");
  TruncatedSeries s(coefficients.size() - 1, std::move(variables));
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    s.coefficients_[j] = MultiPoly::constant(s.variables_, coefficients[j]);
  }
  return s;
}

void TruncatedSeries::set_coefficient(std::size_t j, MultiPoly value) {
  if (value.variables() != variables_) {
    throw VariableMismatch("series coefficient variables differ from the series");
  }
  coefficients_.at(j) = std::move(value);
}

void TruncatedSeries::require_compatible(const TruncatedSeries& other, const char* op) const {
  if (order() != other.order()) {
    throw std::invalid_argument(std::string(op) + ": truncation orders differ");
  }
  if (variables_ != other.variables_) {
    throw VariableMismatch(std::string(op) + ": variable lists differ");
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_compatible(other, "series add");
  for (std::size_t j = 0; j < coefficients_.size(); ++j) coefficients_[j] += other.coefficients_[j];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_compatible(other, "series subtract");
  for (std::size_t j = 0; j < coefficients_.size(); ++j) coefficients_[j] -= other.coefficients_[j];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_compatible(b, "series multiply");
  TruncatedSeries out(a.order(), a.variables_);
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) {
      if (b.coefficients_[j].is_zero()) continue;
      out.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return out;
}

TruncatedSeries operator*(const MultiPoly& c, const TruncatedSeries& s) {
  if (c.variables() != s.variables_) throw VariableMismatch("scalar variables differ from series");
  TruncatedSeries out = s;
  for (auto& coefficient : out.coefficients_) coefficient = c * coefficient;
  return out;
}

TruncatedSeries TruncatedSeries::pow(unsigned exponent) const {
  TruncatedSeries result = one(order(), variables_);
  TruncatedSeries base = *this;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (coefficients_[0] != MultiPoly::constant(variables_, 1)) {
    throw NonUnitConstantTerm("reciprocal requires constant term 1, got " +
                              coefficients_[0].to_string());
  }
  // b_0 = 1, b_j = -sum_{i=1..j} a_i b_{j-i}
  TruncatedSeries out = one(order(), variables_);
  for (std::size_t j = 1; j <= order(); ++j) {
    MultiPoly acc(variables_);
    for (std::size_t i = 1; i <= j; ++i) {
      if (coefficients_[i].is_zero()) continue;
      acc += coefficients_[i] * out.coefficients_[j - i];
    }
    out.coefficients_[j] = -acc;
  }
  return out;
}

TruncatedSeries TruncatedSeries::shifted() const {
  TruncatedSeries out(order(), variables_);
  for (std::size_t j = 1; j <= order(); ++j) out.coefficients_[j] = coefficients_[j - 1];
  return out;
}

TruncatedSeries TruncatedSeries::scale_arg(const MultiPoly& factor) const {
  if (factor.term_count() > 1) throw std::invalid_argument("scale_arg factor must be a monomial");
  const MultiPoly f = factor.with_variables(variables_);
  TruncatedSeries out = *this;
  MultiPoly power = MultiPoly::constant(variables_, 1);
  for (std::size_t j = 1; j <= order(); ++j) {
    power = power * f;
    out.coefficients_[j] = out.coefficients_[j] * power;
  }
  return out;
}

TruncatedSeries TruncatedSeries::with_variables(const std::vector<std::string>& variables) const {
  TruncatedSeries out(order(), variables);
  for (std::size_t j = 0; j <= order(); ++j) {
    out.coefficients_[j] = coefficients_[j].with_variables(variables);
  }
  return out;
}

TruncatedSeries TruncatedSeries::renamed(const std::string& from, const std::string& to) const {
  std::vector<std::string> names = MultiPoly(variables_).renamed(from, to).variables();
  TruncatedSeries out(order(), names);
  for (std::size_t j = 0; j <= order(); ++j) out.coefficients_[j] = coefficients_[j].renamed(from, to);
  return out;
}

TruncatedSeries TruncatedSeries::substitute(const std::string& name, const BigInt& value) const {
  std::vector<std::string> names = MultiPoly(variables_).substitute(name, 0).variables();
  TruncatedSeries out(order(), names);
  for (std::size_t j = 0; j <= order(); ++j) {
    out.coefficients_[j] = coefficients_[j].substitute(name, value);
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) throw std::invalid_argument("cannot extend a truncated series");
  TruncatedSeries out(new_order, variables_);
  for (std::size_t j = 0; j <= new_order; ++j) out.coefficients_[j] = coefficients_[j];
  return out;
}

}  // namespace catpark
