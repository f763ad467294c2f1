#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "catpark/caterpillar.hpp"
#include "catpark/decomposition.hpp"
#include "catpark/generating_functions.hpp"
#include "oracles.hpp"

using namespace catpark;

namespace {

// Luck distribution by direct counting over the filtered oracle sequences.
std::map<unsigned, std::uint64_t> oracle_luck_hist(int m, std::size_t n) {
  std::map<unsigned, std::uint64_t> hist;
  for (const auto& p : oracle::canonical(n, m)) ++hist[oracle::luck(p, m)];
  return hist;
}

MultiPoly parse_q(const std::map<unsigned, long>& coeffs, const std::string& var = "q") {
  MultiPoly p({var});
  for (const auto& [e, c] : coeffs) p.add_term({e}, c);
  return p;
}

std::vector<BigInt> descending(const std::map<unsigned, BigInt>& coeffs) {
  std::vector<BigInt> out;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out.push_back(it->second);
  return out;
}

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("Fuss-Catalan functional equation") {
  for (int m = 1; m <= 4; ++m) CHECK(verify_functional_equation(m, 12).passed());
  // A perturbed coefficient breaks it.
  TruncatedSeries b = fuss_catalan_series(2, 6);
  b.set_coefficient(3, MultiPoly::constant({}, 13));
  const auto report = check_functional_equation(b, 2);
  CHECK_FALSE(report.passed());
  CHECK(report.mismatches.front().index == 3);
}

TEST_CASE("printed R_n table") {
  const std::map<int, std::vector<MultiPoly>> printed{
      {2, {parse_q({{0, 1}}), parse_q({{1, 1}}), parse_q({{2, 1}, {1, 2}}),
           parse_q({{3, 1}, {2, 4}, {1, 7}}), parse_q({{4, 1}, {3, 6}, {2, 18}, {1, 30}})}},
      {3, {parse_q({{0, 1}}), parse_q({{1, 1}}), parse_q({{2, 1}, {1, 3}}),
           parse_q({{3, 1}, {2, 6}, {1, 15}}), parse_q({{4, 1}, {3, 9}, {2, 39}, {1, 91}})}},
      {4, {parse_q({{0, 1}}), parse_q({{1, 1}}), parse_q({{2, 1}, {1, 4}}),
           parse_q({{3, 1}, {2, 8}, {1, 26}}), parse_q({{4, 1}, {3, 12}, {2, 68}, {1, 204}})}}};
  for (const auto& [m, rows] : printed) {
    const auto closed = r_series_closed(m, 4);
    for (std::size_t n = 0; n <= 4; ++n) {
      CHECK(r_poly_brute(m, n) == rows[n]);
      CHECK(closed.coefficient(n) == rows[n]);
    }
  }
  CHECK(r_poly_brute(3, 4).to_string() == "q^4 + 9*q^3 + 39*q^2 + 91*q");
}

TEST_CASE("R_n brute force agrees with an independent histogram and the closed form") {
  for (int m = 1; m <= 3; ++m) {
    const auto closed = r_series_closed(m, 8);
    for (std::size_t n = 0; n <= 8; ++n) {
      const MultiPoly brute = r_poly_brute(m, n);
      CHECK(brute == closed.coefficient(n));
      if (n <= 6) {
        MultiPoly expected({"q"});
        for (const auto& [k, c] : oracle_luck_hist(m, n)) expected.add_term({k}, static_cast<unsigned long>(c));
        CHECK(brute == expected);
      }
    }
  }
}

TEST_CASE("the displayed R exponent disagrees with enumeration at m=2, n=2") {
  const auto literal = r_series_closed(2, 4, Form::paper_literal);
  CHECK(literal.coefficient(2).to_string() == "q^2 + q");
  CHECK(r_poly_brute(2, 2).to_string() == "q^2 + 2*q");
  // At m=1 both forms coincide.
  CHECK(r_series_closed(1, 6, Form::paper_literal) == r_series_closed(1, 6));
}

TEST_CASE("luck and omega_1 are symmetric and R is both distributions") {
  for (int m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const MultiPoly g = gamma_poly_brute(m, n);
      const MultiPoly qt = g.substitute("u", 1).substitute("v", 1);
      CHECK(qt == qt.renamed("q", "s").renamed("t", "q").renamed("s", "t").with_variables({"q", "t"}));
      CHECK(qt.substitute("t", 1) == r_poly_brute(m, n));
    }
  }
}

TEST_CASE("gamma closed form, corrected argument assignment") {
  const std::vector<std::string> vars{"q", "t", "u", "v"};
  for (int m = 1; m <= 3; ++m) {
    const std::size_t order = m == 3 ? 5 : 6;
    const auto closed = gamma_series_closed(m, order);
    for (std::size_t n = 0; n <= order; ++n) CHECK(gamma_poly_brute(m, n) == closed.coefficient(n));
  }
}

TEST_CASE("gamma paper-literal assignment fails at m=2, n=2") {
  const auto literal = gamma_series_closed(2, 2, Form::paper_literal);
  const std::vector<std::string> vars{"q", "t", "u", "v"};
  const MultiPoly q = MultiPoly::variable(vars, "q");
  const MultiPoly t = MultiPoly::variable(vars, "t");
  const MultiPoly u = MultiPoly::variable(vars, "u");
  const MultiPoly v = MultiPoly::variable(vars, "v");
  const MultiPoly one = MultiPoly::constant(vars, 1);
  const MultiPoly prefix = q * t * (u * v).pow(2);
  CHECK(literal.coefficient(2) == prefix * (one + q * v + t * u * v));
  CHECK(gamma_poly_brute(2, 2) == prefix * (q + v + t * u * v));
  CHECK(gamma_poly_brute(2, 1) == literal.coefficient(1));
}

TEST_CASE("printed h-decomposition tables") {
  const std::map<int, std::vector<std::vector<BigInt>>> printed{
      {2, {big({1}), big({1, 1}), big({1, 3, 3}), big({1, 5, 12, 12})}},
      {3, {big({1}), big({1, 2}), big({1, 5, 9}), big({1, 8, 30, 52})}},
      {4, {big({1}), big({1, 3}), big({1, 7, 18}), big({1, 11, 56, 136})}}};
  for (const auto& [m, rows] : printed) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const MultiPoly g = gamma_poly_brute(m, n).substitute("u", 1).substitute("v", 1);
      const auto coeffs = h_decompose(g, {"q", "t"});
      CHECK(descending(coeffs) == rows[n - 1]);
      CHECK(coeffs == predicted_gamma_h_coefficients(m, n));
    }
  }
}

TEST_CASE("h-decomposition prediction holds beyond the printed range") {
  for (int m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const MultiPoly g = gamma_poly_brute(m, n).substitute("u", 1).substitute("v", 1);
      CHECK(h_decompose(g, {"q", "t"}) == predicted_gamma_h_coefficients(m, n));
    }
  }
}

TEST_CASE("bound-family generating function is a power of B") {
  for (int m = 2; m <= 3; ++m) {
    for (int k = 1; k <= 3; ++k) {
      for (int r = 0; r < m; ++r) CHECK(verify_thm_rec(m, k, r, 7).passed());
    }
  }
  CHECK(verify_thm_rec(1, 2, 0, 7).passed());
  // Cross-check one coefficient against the independent filter.
  const auto h = h_series(2, 2, 0, 4);
  const auto filtered = oracle::bounded(4, [](std::size_t i) { return 2 * static_cast<int>(i + 1); });
  CHECK(h.coefficient(4) == MultiPoly::constant({}, static_cast<unsigned long>(filtered.size())));
}

TEST_CASE("convolution of R series is a combination of complete homogeneous polynomials") {
  for (int m = 1; m <= 3; ++m) CHECK(verify_convolution_identity(m, 5).passed());
}

TEST_CASE("multi-statistic product on caterpillar trees") {
  CHECK(verify_multi_stat_product(1, 6).passed());
  CHECK(verify_multi_stat_product(2, 5).passed());
  CHECK(verify_multi_stat_product(3, 4).passed());

  // The printed product is off only in the x^1 coefficient.
  const auto literal = verify_multi_stat_product(2, 4, Form::paper_literal);
  REQUIRE(literal.mismatches.size() == 1);
  CHECK(literal.mismatches[0].index == 1);
  CHECK(multi_stat_poly_brute(2, 1).to_string() == "q0*q1");
  CHECK(verify_multi_stat_product(1, 5, Form::paper_literal).passed());
}

TEST_CASE("multi-statistic brute force matches theta transport") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 2; n <= 5; ++n) {
      if (m == 3 && n == 5) continue;
      const auto vars = q_variables(m);
      std::map<Exponents, std::uint64_t> counts;
      for (const auto& p : enumerate_u_pk(static_cast<std::size_t>(n), BoundFamily::canonical(m))) {
        Exponents key(vars.size());
        key[0] = static_cast<std::uint32_t>(u_luck(p, m));
        key[1] = static_cast<std::uint32_t>(u_omega(p, 1));
        for (int j = 2; j <= m; ++j) key[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(u_omega(p, j) + 1);
        ++counts[key];
      }
      MultiPoly expected(vars);
      for (const auto& [k, c] : counts) expected.add_term(k, static_cast<unsigned long>(c));
      CHECK(multi_stat_poly_brute(m, static_cast<std::size_t>(n)) == expected);
    }
  }
}

TEST_CASE("printed joint count tensor") {
  const JointCountTensor tensor = joint_count_tensor(2, 4);
  for (std::uint32_t a = 1; a <= 4; ++a) {
    for (std::uint32_t b = 1; b <= 4; ++b) {
      for (std::uint32_t c = 1; c <= 4; ++c) {
        const std::uint32_t s = a + b + c;
        const long expected = s == 4 ? 7 : s == 5 ? 4 : s == 6 ? 1 : 0;
        CHECK(tensor.at({a, b, c}) == expected);
      }
    }
  }
  CHECK(tensor.total() == 55);
  CHECK(tensor.mass_outside_positive_box() == 0);
}

TEST_CASE("joint count tensor symmetry") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto t = joint_count_tensor(2, n);
    CHECK(t.equal_sum_violations().empty());
    CHECK(t.mass_outside_positive_box() == 0);
    CHECK(t.total() == fuss_catalan(2, n));
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto t = joint_count_tensor(3, n);
    CHECK(t.equal_sum_violations().empty());
    CHECK(t.mass_outside_positive_box() == 0);
  }
  // Cat_m(1) has a single node, so node 2 never receives a preference.
  const auto single = joint_count_tensor(2, 1);
  CHECK(single.at({1, 1, 0}) == 1);
  CHECK(single.mass_outside_positive_box() == 1);

  JointCountTensor broken = joint_count_tensor(2, 3);
  broken.entries[{1, 1, 2}] += 1;
  CHECK_FALSE(broken.equal_sum_violations().empty());
}

TEST_CASE("enumeration caps propagate") {
  CHECK_THROWS_AS(r_poly_brute(2, 8, 1000), ResourceLimitError);
  CHECK_THROWS_AS(multi_stat_poly_brute(2, 6, 1000), ResourceLimitError);
  CHECK_THROWS_AS(multi_stat_poly_brute(2, 0), std::invalid_argument);
}
