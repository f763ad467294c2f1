#include "catpark/generating_functions.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "catpark/caterpillar.hpp"
#include "catpark/decomposition.hpp"

namespace catpark {

namespace {

template <std::size_t N>
MultiPoly from_counts(const std::vector<std::string>& variables,
                      const std::map<std::array<std::uint32_t, N>, std::uint64_t>& counts) {
  MultiPoly out(variables);
  for (const auto& [key, count] : counts) {
    out.add_term(Exponents(key.begin(), key.end()), BigInt(static_cast<unsigned long>(count)));
  }
  return out;
}

MultiPoly from_counts(const std::vector<std::string>& variables,
                      const std::map<Exponents, std::uint64_t>& counts) {
  MultiPoly out(variables);
  for (const auto& [key, count] : counts) {
    out.add_term(key, BigInt(static_cast<unsigned long>(count)));
  }
  return out;
}

/// [x^k]-coefficients of R_n as integers.
std::vector<BigInt> luck_counts(int m, std::size_t n) {
  const MultiPoly r = r_poly_brute(m, n);
  std::vector<BigInt> out(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) out[k] = r.coefficient({static_cast<std::uint32_t>(k)});
  return out;
}

MultiPoly monomial_product(const std::vector<std::string>& variables, std::uint32_t power) {
  return MultiPoly::monomial(variables, Exponents(variables.size(), power));
}

}  // namespace

IdentityReport compare_coefficients(std::string identity, const std::vector<MultiPoly>& expected,
                                    const TruncatedSeries& actual, std::size_t from) {
  IdentityReport report{std::move(identity), {}};
  for (std::size_t j = from; j < expected.size() && j <= actual.order(); ++j) {
    const MultiPoly lhs = expected[j].with_variables(actual.variables());
    if (lhs != actual.coefficient(j)) {
      report.mismatches.push_back({j, lhs.to_string(), actual.coefficient(j).to_string()});
    }
  }
  return report;
}

std::vector<std::string> q_variables(int m) {
  std::vector<std::string> out;
  for (int i = 0; i <= m; ++i) out.push_back("q" + std::to_string(i));
  return out;
}

TruncatedSeries fuss_catalan_series(int m, std::size_t order) {
  std::vector<BigInt> coefficients;
  coefficients.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) coefficients.push_back(fuss_catalan(m, n));
  return TruncatedSeries::from_integers(coefficients);
}

IdentityReport check_functional_equation(const TruncatedSeries& b, int m) {
  const TruncatedSeries rhs =
      TruncatedSeries::one(b.order(), b.variables()) + b.pow(static_cast<unsigned>(m) + 1).shifted();
  std::vector<MultiPoly> lhs;
  for (std::size_t j = 0; j <= b.order(); ++j) lhs.push_back(b.coefficient(j));
  return compare_coefficients("B = 1 + x B^(m+1)", lhs, rhs);
}

IdentityReport verify_functional_equation(int m, std::size_t order) {
  return check_functional_equation(fuss_catalan_series(m, order), m);
}

MultiPoly r_poly_brute(int m, std::size_t n, std::uint64_t max_objects) {
  std::map<std::array<std::uint32_t, 1>, std::uint64_t> counts;
  for_each_u_pk(
      n, BoundFamily::canonical(m),
      [&](std::span<const int> s) {
        std::uint32_t lucky = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (s[i] == m * static_cast<int>(i) + 1) ++lucky;
        }
        ++counts[{lucky}];
      },
      max_objects);
  return from_counts({"q"}, counts);
}

TruncatedSeries r_series_closed(int m, std::size_t order, Form form, const std::string& variable) {
  const std::vector<std::string> vars{variable};
  const TruncatedSeries b = fuss_catalan_series(m, order).with_variables(vars);
  const unsigned power = form == Form::corrected ? static_cast<unsigned>(m) : 1U;
  const TruncatedSeries qxb = MultiPoly::variable(vars, variable) * b.pow(power).shifted();
  return (TruncatedSeries::one(order, vars) - qxb).reciprocal();
}

MultiPoly gamma_poly_brute(int m, std::size_t n, std::uint64_t max_objects) {
  const std::vector<std::string> vars{"q", "t", "u", "v"};
  if (n == 0) return MultiPoly::constant(vars, 1);
  std::map<std::array<std::uint32_t, 4>, std::uint64_t> counts;
  for_each_u_pk(
      n, BoundFamily::canonical(m),
      [&](std::span<const int> s) {
        const ParkingSeq p(std::vector<int>(s.begin(), s.end()));
        ++counts[{static_cast<std::uint32_t>(u_luck(p, m)),
                  static_cast<std::uint32_t>(u_omega(p, 1)),
                  static_cast<std::uint32_t>(f_stat(p, m)),
                  static_cast<std::uint32_t>(g_stat(p, m))}];
      },
      max_objects);
  return from_counts(vars, counts);
}

TruncatedSeries gamma_series_closed(int m, std::size_t order, Form form) {
  const std::vector<std::string> vars{"q", "t", "u", "v"};
  const TruncatedSeries b_q = r_series_closed(m, order, Form::corrected, "q").with_variables(vars);
  const TruncatedSeries b_t = r_series_closed(m, order, Form::corrected, "t").with_variables(vars);
  const TruncatedSeries b_rest =
      fuss_catalan_series(m, order).with_variables(vars).pow(static_cast<unsigned>(m) - 1);

  const MultiPoly v = MultiPoly::variable(vars, "v");
  const MultiPoly uv = MultiPoly::variable(vars, "u") * v;
  const MultiPoly prefactor = MultiPoly::variable(vars, "q") * MultiPoly::variable(vars, "t") * uv * uv;

  TruncatedSeries product = form == Form::corrected
                                ? b_q * b_rest.scale_arg(v) * b_t.scale_arg(uv)
                                : b_rest * b_q.scale_arg(v) * b_t.scale_arg(uv);
  return TruncatedSeries::one(order, vars) + (prefactor * product).shifted();
}

TruncatedSeries h_series(int m, int k, int r, std::size_t order) {
  const BoundFamily family(m, k, r);
  std::vector<BigInt> coefficients;
  for (std::size_t n = 0; n <= order; ++n) coefficients.push_back(count_u_pk(n, family));
  return TruncatedSeries::from_integers(coefficients);
}

IdentityReport verify_thm_rec(int m, int k, int r, std::size_t order) {
  const TruncatedSeries counted = h_series(m, k, r, order);
  std::vector<MultiPoly> lhs;
  for (std::size_t j = 0; j <= order; ++j) lhs.push_back(counted.coefficient(j));
  const auto power = static_cast<unsigned>(m * k - r);
  return compare_coefficients("H_m(x;k,r) = B_m^(mk-r)", lhs,
                              fuss_catalan_series(m, order).pow(power));
}

std::map<unsigned, BigInt> predicted_gamma_h_coefficients(int m, std::size_t n) {
  std::map<unsigned, BigInt> out;
  if (n == 0) return out;
  for (std::size_t r = 0; r + 1 <= n; ++r) {
    // h_{r,1,1} counts under bounds m(i) - 1; for m = 1 that family is B^0.
    const BigInt middle = m >= 2 ? count_u_pk(r, BoundFamily(m, 1, 1)) : BigInt(r == 0 ? 1 : 0);
    if (middle == 0) continue;
    const std::vector<BigInt> c = luck_counts(m, n - r - 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] != 0) out[static_cast<unsigned>(k)] += middle * c[k];
    }
  }
  return out;
}

IdentityReport verify_convolution_identity(int m, std::size_t n_max) {
  IdentityReport report{"sum R_a0(q0)...R_at(qt) = sum_k C_{n,k} h_k", {}};
  std::vector<std::vector<BigInt>> c;
  for (std::size_t n = 0; n <= n_max; ++n) c.push_back(luck_counts(m, n));

  for (int t = 2; t <= m + 1; ++t) {
    const std::vector<std::string> vars = q_variables(t - 1);
    TruncatedSeries product = TruncatedSeries::one(n_max, vars);
    for (std::size_t var = 0; var < vars.size(); ++var) {
      TruncatedSeries r_series(n_max, vars);
      for (std::size_t n = 0; n <= n_max; ++n) {
        MultiPoly coefficient(vars);
        for (std::size_t k = 0; k < c[n].size(); ++k) {
          Exponents e(vars.size(), 0);
          e[var] = static_cast<std::uint32_t>(k);
          coefficient.add_term(e, c[n][k]);
        }
        r_series.set_coefficient(n, coefficient);
      }
      product = product * r_series;
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
      MultiPoly rhs(vars);
      for (std::size_t k = 0; k < c[n].size(); ++k) {
        if (c[n][k] != 0) rhs += complete_homogeneous(vars, static_cast<unsigned>(k)) * c[n][k];
      }
      if (rhs != product.coefficient(n)) {
        report.mismatches.push_back({n, rhs.to_string(), product.coefficient(n).to_string()});
      }
    }
  }
  return report;
}

MultiPoly multi_stat_poly_brute(int m, std::size_t n, std::uint64_t max_objects) {
  if (n == 0) throw std::invalid_argument("multi_stat_poly_brute requires n >= 1");
  const std::vector<std::string> vars = q_variables(m);
  const CaterpillarTree tree(m, static_cast<int>(n));
  std::map<Exponents, std::uint64_t> counts;
  Exponents key(vars.size());
  for_each_caterpillar_pk(
      m, static_cast<int>(n),
      [&](const ParkingSeq& s) {
        key[0] = static_cast<std::uint32_t>(luck_tree(tree, s));
        for (int j = 1; j <= m; ++j) {
          key[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(omega_tree(s, j));
        }
        ++counts[key];
      },
      max_objects);
  return from_counts(vars, counts);
}

TruncatedSeries multi_stat_series_closed(int m, std::size_t order, Form form) {
  const std::vector<std::string> vars = q_variables(m);
  TruncatedSeries product = TruncatedSeries::one(order, vars);
  for (const auto& name : vars) {
    product = product * r_series_closed(m, order, Form::corrected, name).with_variables(vars);
  }
  const MultiPoly all = monomial_product(vars, 1);
  const TruncatedSeries one = TruncatedSeries::one(order, vars);
  if (form == Form::paper_literal) return one + (all * product).shifted();

  Exponents first_two(vars.size(), 0);
  first_two[0] = first_two[1] = 1;
  TruncatedSeries boundary = TruncatedSeries::x(order, vars);
  boundary = MultiPoly::monomial(vars, first_two) * boundary;
  return one + boundary + (all * (product - one)).shifted();
}

IdentityReport verify_multi_stat_product(int m, std::size_t order, Form form) {
  const std::vector<std::string> vars = q_variables(m);
  std::vector<MultiPoly> lhs{MultiPoly::constant(vars, 1)};
  for (std::size_t n = 1; n <= order; ++n) lhs.push_back(multi_stat_poly_brute(m, n));
  return compare_coefficients(form == Form::corrected ? "multi-statistic product (corrected)"
                                                      : "multi-statistic product (printed form)",
                              lhs, multi_stat_series_closed(m, order, form));
}

BigInt JointCountTensor::at(const Exponents& k) const {
  const auto it = entries.find(k);
  return it == entries.end() ? BigInt(0) : it->second;
}

BigInt JointCountTensor::total() const {
  BigInt sum = 0;
  for (const auto& [k, c] : entries) sum += c;
  return sum;
}

std::vector<std::pair<Exponents, Exponents>> JointCountTensor::equal_sum_violations() const {
  std::vector<std::pair<Exponents, Exponents>> out;
  std::map<std::uint32_t, Exponents> representative;
  const auto dims = static_cast<std::size_t>(m) + 1;
  Exponents k(dims, 1);
  if (n == 0) return out;
  while (true) {
    const auto sum = std::accumulate(k.begin(), k.end(), std::uint32_t{0});
    auto [it, inserted] = representative.try_emplace(sum, k);
    if (!inserted && at(it->second) != at(k)) out.emplace_back(it->second, k);
    std::size_t i = 0;
    while (i < dims && k[i] == n) k[i++] = 1;
    if (i == dims) break;
    ++k[i];
  }
  return out;
}

BigInt JointCountTensor::mass_outside_positive_box() const {
  BigInt mass = 0;
  for (const auto& [k, c] : entries) {
    if (std::find(k.begin(), k.end(), 0U) != k.end()) mass += c;
  }
  return mass;
}

JointCountTensor joint_count_tensor(int m, std::size_t n, std::uint64_t max_objects) {
  JointCountTensor tensor{m, n, {}};
  const MultiPoly poly = multi_stat_poly_brute(m, n, max_objects);
  for (const auto& [e, c] : poly.terms()) tensor.entries[e] = c;
  return tensor;
}

}  // namespace catpark
