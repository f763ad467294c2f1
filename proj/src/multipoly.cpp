#include "catpark/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace catpark {

namespace {

std::uint32_t degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

std::size_t index_of(const std::vector<std::string>& variables, const std::string& name) {
  const auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) throw VariableMismatch("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - variables.begin());
}

}  // namespace

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da > db;
  return b < a;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (variables_[i] == variables_[j]) {
        throw VariableMismatch("duplicate variable '" + variables_[i] + "'");
      }
    }
  }
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const BigInt& value) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.variables_.size(), 0), value);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
  MultiPoly p(std::move(variables));
  Exponents e(p.variables_.size(), 0);
  e[index_of(p.variables_, name)] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponents exponents,
                              const BigInt& coefficient) {
  MultiPoly p(std::move(variables));
  p.add_term(exponents, coefficient);
  return p;
}

std::uint32_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.begin()->first);
}

BigInt MultiPoly::coefficient(const Exponents& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(const Exponents& exponents, const BigInt& coefficient) {
  if (exponents.size() != variables_.size()) {
    throw VariableMismatch("exponent vector has " + std::to_string(exponents.size()) +
                           " entries for " + std::to_string(variables_.size()) + " variables");
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::require_same_variables(const MultiPoly& other, const char* op) const {
  if (variables_ != other.variables_) {
    throw VariableMismatch(std::string(op) + ": variable lists differ");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_variables(other, "add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_variables(other, "subtract");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_variables(b, "multiply");
  MultiPoly out(a.variables_);
  Exponents e(a.variables_.size());
  BigInt product;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      product = ca * cb;
      out.add_term(e, product);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(variables_, 1);
  MultiPoly base = *this;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& variables) const {
  MultiPoly out(variables);
  std::vector<std::size_t> target(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const auto it = std::find(variables.begin(), variables.end(), variables_[i]);
    if (it == variables.end()) {
      const bool used = std::any_of(terms_.begin(), terms_.end(),
                                    [i](const auto& t) { return t.first[i] != 0; });
      if (used) throw VariableMismatch("variable '" + variables_[i] + "' missing from target list");
      target[i] = variables.size();
    } else {
      target[i] = static_cast<std::size_t>(it - variables.begin());
    }
  }
  Exponents e(variables.size());
  for (const auto& [src, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (target[i] < variables.size()) e[target[i]] = src[i];
    }
    out.add_term(e, c);
  }
  return out;
}

MultiPoly MultiPoly::renamed(const std::string& from, const std::string& to) const {
  std::vector<std::string> names = variables_;
  names[index_of(names, from)] = to;
  MultiPoly out(std::move(names));
  out.terms_ = terms_;
  return out;
}

MultiPoly MultiPoly::substitute(const std::string& name, const BigInt& value) const {
  const std::size_t drop = index_of(variables_, name);
  std::vector<std::string> names = variables_;
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(drop));
  MultiPoly out(std::move(names));
  Exponents e;
  BigInt power;
  for (const auto& [src, c] : terms_) {
    e = src;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(drop));
    mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), src[drop]);
    out.add_term(e, c * power);
  }
  return out;
}

BigInt MultiPoly::evaluate(const std::map<std::string, BigInt>& values) const {
  std::vector<BigInt> at(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const auto it = values.find(variables_[i]);
    if (it == values.end()) throw VariableMismatch("no value given for '" + variables_[i] + "'");
    at[i] = it->second;
  }
  BigInt total = 0;
  BigInt term;
  BigInt power;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      mpz_pow_ui(power.get_mpz_t(), at[i].get_mpz_t(), e[i]);
      term *= power;
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::divide_by_monomial(const Exponents& exponents) const {
  if (exponents.size() != variables_.size()) {
    throw VariableMismatch("divisor exponent vector has the wrong length");
  }
  MultiPoly out(variables_);
  Exponents e(variables_.size());
  for (const auto& [src, c] : terms_) {
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (src[i] < exponents[i]) {
        throw NonMembership("polynomial is not divisible by the monomial: term exponent of '" +
                            variables_[i] + "' is " + std::to_string(src[i]));
      }
      e[i] = src[i] - exponents[i];
    }
    out.add_term(e, c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variables_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

nlohmann::json MultiPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    terms.push_back({{"exponents", e}, {"coefficient", c.get_str()}});
  }
  return {{"variables", variables_}, {"terms", terms}};
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j) {
  MultiPoly out(j.at("variables").get<std::vector<std::string>>());
  for (const auto& term : j.at("terms")) {
    out.add_term(term.at("exponents").get<Exponents>(),
                 BigInt(term.at("coefficient").get<std::string>()));
  }
  return out;
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
BigInt poly_eval(const MultiPoly& p, const std::map<std::string, BigInt>& values) {
  return p.evaluate(values);
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& name : b) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

namespace {

void emit_homogeneous(MultiPoly& out, Exponents& e, std::size_t position, unsigned remaining) {
  if (position + 1 == e.size()) {
    e[position] = remaining;
    out.add_term(e, 1);
    return;
  }
  for (unsigned k = 0; k <= remaining; ++k) {
    e[position] = k;
    emit_homogeneous(out, e, position + 1, remaining - k);
  }
  e[position] = 0;
}

}  // namespace

MultiPoly complete_homogeneous(const std::vector<std::string>& variables, unsigned degree) {
  MultiPoly out(variables);
  if (variables.empty()) {
    if (degree == 0) out.add_term({}, 1);
    return out;
  }
  Exponents e(variables.size(), 0);
  emit_homogeneous(out, e, 0, degree);
  return out;
}

std::map<unsigned, BigInt> h_decompose(const MultiPoly& poly,
                                       const std::vector<std::string>& variables) {
  if (variables.empty()) throw std::invalid_argument("h_decompose needs at least one variable");
  const MultiPoly aligned = poly.with_variables(variables);
  const MultiPoly quotient = aligned.divide_by_monomial(Exponents(variables.size(), 1));

  // Only h_d contains the pure power (first variable)^d.
  std::map<unsigned, BigInt> coefficients;
  for (const auto& [e, c] : quotient.terms()) {
    const bool pure = std::all_of(e.begin() + 1, e.end(), [](std::uint32_t x) { return x == 0; });
    if (pure) coefficients[e[0]] = c;
  }

  MultiPoly residual = quotient;
  for (const auto& [d, c] : coefficients) residual -= complete_homogeneous(variables, d) * c;
  if (!residual.is_zero()) {
    throw NonMembership("not a combination of complete homogeneous polynomials; residual " +
                        residual.to_string());
  }
  return coefficients;
}

}  // namespace catpark
