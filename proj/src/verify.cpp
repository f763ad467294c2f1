#include "catpark/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "catpark/caterpillar.hpp"
#include "catpark/decomposition.hpp"
#include "catpark/generating_functions.hpp"

namespace catpark {

namespace {

using nlohmann::json;

const std::vector<std::pair<std::string_view, Mutation>> kMutations{
    {"none", Mutation::none},
    {"fuss-catalan", Mutation::fuss_catalan},
    {"r-exponent", Mutation::r_exponent},
    {"gamma-arguments", Mutation::gamma_arguments},
    {"tau-shallow", Mutation::tau_shallow},
    {"product-literal", Mutation::product_literal},
};

struct Context {
  const VerifyOptions& options;
  mutable std::chrono::steady_clock::time_point last = std::chrono::steady_clock::now();

  /// Appends `r`, charging it the time since the previous result.
  void emit(std::vector<CheckResult>& out, CheckResult r) const {
    const auto now = std::chrono::steady_clock::now();
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(now - last).count();
    last = now;
    out.push_back(std::move(r));
  }

  std::vector<int> ms(std::vector<int> defaults) const {
    if (options.m) return {*options.m};
    return defaults;
  }
  std::size_t n_or(std::size_t fallback) const { return options.n.value_or(fallback); }
  std::size_t order_or(std::size_t fallback) const { return options.order.value_or(fallback); }
};

json mismatch_payload(const IdentityReport& report) {
  const auto& first = report.mismatches.front();
  return json{{"coefficient", first.index},
              {"expected", first.expected},
              {"actual", first.actual},
              {"mismatches", report.mismatches.size()}};
}

CheckResult from_report(std::string identity, json params, const IdentityReport& report) {
  CheckResult r{std::move(identity), CheckStatus::pass, std::move(params), std::nullopt, 0};
  if (!report.passed()) {
    r.status = CheckStatus::fail;
    r.counterexample = mismatch_payload(report);
  }
  return r;
}

CheckResult failed(CheckResult r, json counterexample) {
  r.status = CheckStatus::fail;
  r.counterexample = std::move(counterexample);
  return r;
}

json seq_json(const ParkingSeq& p) { return json(p.values()); }

ParkingSeq shallow_tau(const ParkingSeq& p, int m) {
  if (p.empty()) return p;
  auto parts = decompose(p, m).components;
  std::swap(parts.front(), parts.back());
  return recompose(parts, m);
}

// ---- individual scopes ---------------------------------------------------

std::vector<CheckResult> check_count(const Context& ctx) {
  std::vector<CheckResult> out;
  const std::size_t n_max = ctx.n_or(8);
  for (int m : ctx.ms({1, 2, 3, 4})) {
    CheckResult r{"fuss-catalan-count", CheckStatus::pass, json{{"m", m}, {"n", n_max}}, std::nullopt, 0};
    const BoundFamily family = BoundFamily::canonical(m);
    for (std::size_t n = 0; n <= n_max; ++n) {
      const BigInt counted = count_u_pk(n, family);
      const BigInt expected = fuss_catalan(m, n);
      std::uint64_t enumerated = 0;
      for_each_u_pk(n, family, [&](std::span<const int>) { ++enumerated; }, ctx.options.max_objects);
      if (counted != expected || counted != BigInt(static_cast<unsigned long>(enumerated))) {
        r = failed(std::move(r), json{{"n", n},
                                      {"count", to_string(counted)},
                                      {"fuss_catalan", to_string(expected)},
                                      {"enumerated", enumerated}});
        break;
      }
    }
    ctx.emit(out, std::move(r));
  }
  return out;
}

std::vector<CheckResult> check_funceq(const Context& ctx) {
  std::vector<CheckResult> out;
  const std::size_t order = ctx.order_or(12);
  for (int m : ctx.ms({1, 2, 3, 4})) {
    TruncatedSeries b = fuss_catalan_series(m, order);
    if (ctx.options.mutation == Mutation::fuss_catalan && order >= 3) {
      b.set_coefficient(3, b.coefficient(3) + MultiPoly::constant({}, 1));
    }
    ctx.emit(out, from_report("functional-equation", json{{"m", m}, {"order", order}},
                              check_functional_equation(b, m)));
  }
  return out;
}

std::vector<CheckResult> check_bound_family(const Context& ctx) {
  std::vector<CheckResult> out;
  const std::size_t order = ctx.order_or(7);
  for (int m : ctx.ms({2, 3})) {
    CheckResult r{"bound-family-power", CheckStatus::pass, json{{"m", m}, {"order", order}}, std::nullopt, 0};
    for (int k = 1; k <= 3 && r.status == CheckStatus::pass; ++k) {
      for (int rr = 0; rr < m; ++rr) {
        const IdentityReport report = verify_thm_rec(m, k, rr, order);
        if (!report.passed()) {
          json payload = mismatch_payload(report);
          payload["k"] = k;
          payload["r"] = rr;
          r = failed(std::move(r), std::move(payload));
          break;
        }
      }
    }
    ctx.emit(out, std::move(r));
  }
  return out;
}

std::vector<CheckResult> check_tau(const Context& ctx) {
  std::vector<CheckResult> out;
  const std::size_t n_max = ctx.n_or(7);
  const bool shallow = ctx.options.mutation == Mutation::tau_shallow;
  for (int m : ctx.ms({1, 2, 3})) {
    CheckResult r{"tau-exchange", CheckStatus::pass, json{{"m", m}, {"n", n_max}}, std::nullopt, 0};
    for (std::size_t n = 0; n <= n_max && r.status == CheckStatus::pass; ++n) {
      for_each_u_pk(
          n, BoundFamily::canonical(m),
          [&](std::span<const int> s) {
            if (r.status != CheckStatus::pass) return;
            const ParkingSeq p(std::vector<int>(s.begin(), s.end()));
            const ParkingSeq t = shallow ? shallow_tau(p, m) : tau(p, m);
            const ParkingSeq back = shallow ? shallow_tau(t, m) : tau(t, m);
            if (back != p || u_luck(p, m) != u_omega(t, 1)) {
              r = failed(std::move(r), json{{"p", seq_json(p)},
                                            {"tau", seq_json(t)},
                                            {"tau_tau", seq_json(back)},
                                            {"luck", u_luck(p, m)},
                                            {"omega_1_of_tau", u_omega(t, 1)}});
            }
          },
          ctx.options.max_objects);
    }
    ctx.emit(out, std::move(r));
  }
  return out;
}

std::vector<CheckResult> check_r_series(const Context& ctx) {
  std::vector<CheckResult> out;
  const std::size_t order = ctx.order_or(8);
  const Form form = ctx.options.mutation == Mutation::r_exponent ? Form::paper_literal : Form::corrected;
  for (int m : ctx.ms({1, 2, 3})) {
    std::vector<MultiPoly> brute;
    for (std::size_t n = 0; n <= order; ++n) brute.push_back(r_poly_brute(m, n, ctx.options.max_objects));
    ctx.emit(out, from_report("luck-series-closed-form", json{{"m", m}, {"order", order}},
                              compare_coefficients("R", brute, r_series_closed(m, order, form))));
  }
  return out;
}

std::vector<CheckResult> check_gamma(const Context& ctx) {
  std::vector<CheckResult> out;
  const Form form =
      ctx.options.mutation == Mutation::gamma_arguments ? Form::paper_literal : Form::corrected;
  for (int m : ctx.ms({1, 2, 3})) {
    const std::size_t order = ctx.order_or(m >= 3 ? 6 : 7);
    std::vector<MultiPoly> brute;
    for (std::size_t n = 0; n <= order; ++n) {
      brute.push_back(gamma_poly_brute(m, n, ctx.options.max_objects));
    }
    ctx.emit(out, from_report("gamma-closed-form", json{{"m", m}, {"order", order}},
                              compare_coefficients("gamma", brute, gamma_series_closed(m, order, form))));
  }
  return out;
}

MultiPoly gamma_qt(int m, std::size_t n, std::uint64_t max_objects) {
  return gamma_poly_brute(m, n, max_objects).substitute("u", 1).substitute("v", 1);
}

std::vector<CheckResult> check_symmetry(const Context& ctx) {
  std::vector<CheckResult> out;
  const std::size_t n_max = ctx.n_or(6);
  for (int m : ctx.ms({1, 2, 3, 4})) {
    CheckResult r{"luck-omega1-symmetry", CheckStatus::pass, json{{"m", m}, {"n", n_max}}, std::nullopt, 0};
    for (std::size_t n = 1; n <= n_max; ++n) {
      const MultiPoly g = gamma_qt(m, n, ctx.options.max_objects);
      const MultiPoly swapped =
          g.renamed("q", "#").renamed("t", "q").renamed("#", "t").with_variables(g.variables());
      if (g != swapped) {
        r = failed(std::move(r), json{{"n", n}, {"gamma", g.to_string()}, {"swapped", swapped.to_string()}});
        break;
      }
    }
    ctx.emit(out, std::move(r));
  }
  return out;
}

json h_map_json(const std::map<unsigned, BigInt>& coeffs) {
  json j = json::object();
  for (const auto& [d, c] : coeffs) j[std::to_string(d)] = to_string(c);
  return j;
}

std::vector<CheckResult> check_hdecomp(const Context& ctx) {
  std::vector<CheckResult> out;
  const std::size_t n_max = ctx.n_or(6);
  for (int m : ctx.ms({1, 2, 3, 4})) {
    CheckResult r{"gamma-h-decomposition", CheckStatus::pass, json{{"m", m}, {"n", n_max}}, std::nullopt, 0};
    for (std::size_t n = 1; n <= n_max; ++n) {
      const MultiPoly g = gamma_qt(m, n, ctx.options.max_objects);
      const auto predicted = predicted_gamma_h_coefficients(m, n);
      try {
        const auto coeffs = h_decompose(g, {"q", "t"});
        if (coeffs != predicted) {
          r = failed(std::move(r), json{{"n", n}, {"expected", h_map_json(predicted)}, {"actual", h_map_json(coeffs)}});
          break;
        }
      } catch (const NonMembership& e) {
        r = failed(std::move(r), json{{"n", n}, {"error", e.what()}});
        break;
      }
    }
    ctx.emit(out, std::move(r));
  }

  for (int m : ctx.ms({2, 3})) {
    const std::size_t top = ctx.n_or(m == 2 ? 5 : 4);
    CheckResult r{"multi-statistic-h-decomposition", CheckStatus::pass, json{{"m", m}, {"n", top}},
                  std::nullopt, 0};
    // Cat_m(1) never sees labels 2..m, so n = 1 has no factor q_2...q_m.
    for (std::size_t n = 2; n <= top; ++n) {
      try {
        h_decompose(multi_stat_poly_brute(m, n, ctx.options.max_objects), q_variables(m));
      } catch (const NonMembership& e) {
        r = failed(std::move(r), json{{"n", n}, {"error", e.what()}});
        break;
      }
    }
    ctx.emit(out, std::move(r));
  }
  return out;
}

std::vector<CheckResult> check_convolution(const Context& ctx) {
  std::vector<CheckResult> out;
  const std::size_t n_max = ctx.n_or(6);
  for (int m : ctx.ms({1, 2, 3})) {
    ctx.emit(out, from_report("luck-convolution", json{{"m", m}, {"n", n_max}},
                              verify_convolution_identity(m, n_max)));
  }
  return out;
}

std::vector<CheckResult> check_eta(const Context& ctx) {
  std::vector<CheckResult> out;
  const std::size_t n_max = ctx.n_or(6);
  for (int m : ctx.ms({1, 2, 3})) {
    CheckResult r{"eta-bijection", CheckStatus::pass, json{{"m", m}, {"n", n_max}}, std::nullopt, 0};
    for (std::size_t n = 1; n <= n_max && r.status == CheckStatus::pass; ++n) {
      for_each_u_pk(
          n, BoundFamily::canonical(m),
          [&](std::span<const int> s) {
            if (r.status != CheckStatus::pass) return;
            const ParkingSeq p(std::vector<int>(s.begin(), s.end()));
            const ParkingSeq e = eta(p, m);
            const auto parts = decompose(p, m).components;
            bool ok = eta_inv(e, m) == p && u_omega(e, 1) == 1 + u_omega(parts[0], 1);
            for (int j = 2; j <= m + 1 && ok; ++j) {
              ok = u_omega(e, j) == u_omega(parts[static_cast<std::size_t>(j - 1)], 1);
            }
            if (!ok) r = failed(std::move(r), json{{"p", seq_json(p)}, {"eta", seq_json(e)}});
          },
          ctx.options.max_objects);
    }
    ctx.emit(out, std::move(r));
  }
  return out;
}

std::vector<CheckResult> check_compat(const Context& ctx) {
  std::vector<CheckResult> out;
  const std::size_t n_max = ctx.n_or(6);
  for (int m : ctx.ms({1, 2, 3})) {
    const Statistic luck = [m](const ParkingSeq& p) { return static_cast<std::int64_t>(u_luck(p, m)); };
    const Statistic omega1 = [](const ParkingSeq& p) { return static_cast<std::int64_t>(u_omega(p, 1)); };
    const std::vector<std::pair<std::string, std::pair<Statistic, int>>> cases{
        {"luck", {luck, m}}, {"omega_1", {omega1, 0}}};
    for (const auto& [name, entry] : cases) {
      const auto report = check_statistic_compatibility(entry.first, entry.second, m, n_max);
      CheckResult r{"statistic-compatibility", CheckStatus::pass,
                    json{{"m", m}, {"n", n_max}, {"statistic", name}, {"component", entry.second}},
                    std::nullopt, 0};
      if (!report.recursive() || report.constant != 1 || !report.equidistributed()) {
        json payload{{"recursive", report.recursive()}, {"equidistributed", report.equidistributed()}};
        if (!report.counterexamples.empty()) payload["p"] = seq_json(report.counterexamples.front().seq);
        r = failed(std::move(r), std::move(payload));
      }
      ctx.emit(out, std::move(r));
    }
  }
  return out;
}

std::vector<CheckResult> check_product(const Context& ctx) {
  std::vector<CheckResult> out;
  const Form form =
      ctx.options.mutation == Mutation::product_literal ? Form::paper_literal : Form::corrected;
  for (int m : ctx.ms({1, 2, 3})) {
    const std::size_t order = ctx.order_or(m == 1 ? 6 : m == 2 ? 5 : 4);
    std::vector<MultiPoly> brute{MultiPoly::constant(q_variables(m), 1)};
    for (std::size_t n = 1; n <= order; ++n) brute.push_back(multi_stat_poly_brute(m, n, ctx.options.max_objects));
    ctx.emit(out, from_report("multi-statistic-product", json{{"m", m}, {"order", order}},
                              compare_coefficients("product", brute, multi_stat_series_closed(m, order, form))));
  }
  return out;
}

json exponents_json(const Exponents& e) { return json(e); }

std::vector<CheckResult> check_tensor(const Context& ctx) {
  std::vector<CheckResult> out;
  for (int m : ctx.ms({2, 3})) {
    const std::size_t n_max = ctx.n_or(m == 2 ? 5 : m == 3 ? 4 : 6);
    CheckResult r{"tensor-symmetry", CheckStatus::pass, json{{"m", m}, {"n", n_max}}, std::nullopt, 0};
    for (std::size_t n = 2; n <= n_max; ++n) {
      const JointCountTensor t = joint_count_tensor(m, n, ctx.options.max_objects);
      const auto violations = t.equal_sum_violations();
      if (!violations.empty()) {
        const auto& [a, b] = violations.front();
        r = failed(std::move(r), json{{"n", n},
                                      {"k", exponents_json(a)}, {"count_k", to_string(t.at(a))},
                                      {"l", exponents_json(b)}, {"count_l", to_string(t.at(b))}});
        break;
      }
      if (t.mass_outside_positive_box() != 0) {
        r = failed(std::move(r), json{{"n", n}, {"mass_outside_positive_box", to_string(t.mass_outside_positive_box())}});
        break;
      }
    }
    ctx.emit(out, std::move(r));

    if (m == 2 && n_max >= 4) {
      // Printed slices: 7 at coordinate sum 4, 4 at sum 5, 1 at sum 6, else 0.
      CheckResult table{"tensor-table", CheckStatus::pass, json{{"m", 2}, {"n", 4}}, std::nullopt, 0};
      const JointCountTensor t = joint_count_tensor(2, 4, ctx.options.max_objects);
      for (std::uint32_t a = 1; a <= 4 && table.status == CheckStatus::pass; ++a) {
        for (std::uint32_t b = 1; b <= 4 && table.status == CheckStatus::pass; ++b) {
          for (std::uint32_t c = 1; c <= 4; ++c) {
            const std::uint32_t s = a + b + c;
            const BigInt expected = s == 4 ? 7 : s == 5 ? 4 : s == 6 ? 1 : 0;
            if (t.at({a, b, c}) != expected) {
              table = failed(std::move(table), json{{"k", {a, b, c}},
                                                    {"expected", to_string(expected)},
                                                    {"actual", to_string(t.at({a, b, c}))}});
              break;
            }
          }
        }
      }
      ctx.emit(out, std::move(table));
    }
  }
  return out;
}

// ---- erratum demonstrations ---------------------------------------------
//
// Each is reported as erratum when the displayed form disagrees with
// enumeration exactly as documented and the corrected form agrees; any
// other outcome is a failure.

CheckResult erratum(std::string identity, json params, bool documented, json payload) {
  CheckResult r{std::move(identity), documented ? CheckStatus::erratum : CheckStatus::fail,
                std::move(params), std::move(payload), 0};
  return r;
}

std::vector<CheckResult> check_errata(const Context& ctx) {
  std::vector<CheckResult> out;
  const std::uint64_t cap = ctx.options.max_objects;

  {
    // Displayed count C_{n-1}^{(m+1)} = binom(mn, n)/(mn-m+1) at (m, n) = (2, 3).
    const BigInt displayed = fuss_catalan(3, 2);
    const auto enumerated = static_cast<unsigned long>(enumerate_u_pk(3, BoundFamily::canonical(2), cap).size());
    const bool documented = displayed == 4 && enumerated == 12 && fuss_catalan(2, 3) == 12;
    ctx.emit(out, erratum("count-formula", json{{"m", 2}, {"n", 3}}, documented,
                          json{{"displayed", to_string(displayed)}, {"enumerated", enumerated}}));
  }
  {
    const MultiPoly brute = r_poly_brute(2, 2, cap);
    const MultiPoly literal = r_series_closed(2, 2, Form::paper_literal).coefficient(2);
    const MultiPoly corrected = r_series_closed(2, 2, Form::corrected).coefficient(2);
    const bool documented = literal.to_string() == "q^2 + q" && brute.to_string() == "q^2 + 2*q" &&
                            corrected == brute;
    ctx.emit(out, erratum("luck-series-exponent", json{{"m", 2}, {"n", 2}}, documented,
                          json{{"displayed", literal.to_string()}, {"enumerated", brute.to_string()}}));
  }
  {
    const MultiPoly brute = gamma_poly_brute(2, 2, cap);
    const MultiPoly literal = gamma_series_closed(2, 2, Form::paper_literal).coefficient(2);
    const MultiPoly corrected = gamma_series_closed(2, 2, Form::corrected).coefficient(2);
    const std::vector<std::string> vars{"q", "t", "u", "v"};
    const auto var = [&](const char* name) { return MultiPoly::variable(vars, name); };
    const MultiPoly prefix = var("q") * var("t") * (var("u") * var("v")).pow(2);
    const MultiPoly expected_literal =
        prefix * (MultiPoly::constant(vars, 1) + var("q") * var("v") + var("t") * var("u") * var("v"));
    const MultiPoly expected_brute = prefix * (var("q") + var("v") + var("t") * var("u") * var("v"));
    const bool documented = literal == expected_literal && brute == expected_brute && corrected == brute;
    ctx.emit(out, erratum("gamma-arguments", json{{"m", 2}, {"n", 2}}, documented,
                          json{{"displayed", literal.to_string()}, {"enumerated", brute.to_string()}}));
  }
  {
    const std::size_t order = 4;
    const IdentityReport literal = verify_multi_stat_product(2, order, Form::paper_literal);
    const IdentityReport corrected = verify_multi_stat_product(2, order, Form::corrected);
    const bool documented = corrected.passed() && literal.mismatches.size() == 1 &&
                            literal.mismatches.front().index == 1;
    json payload = literal.passed() ? json{{"mismatches", 0}} : mismatch_payload(literal);
    ctx.emit(out, erratum("multi-statistic-product-boundary", json{{"m", 2}, {"order", order}},
                          documented, std::move(payload)));
  }
  return out;
}

using ScopeFn = std::function<std::vector<CheckResult>(const Context&)>;

const std::vector<std::pair<std::string, ScopeFn>>& scope_table() {
  static const std::vector<std::pair<std::string, ScopeFn>> table{
      {"count", check_count},           {"funceq", check_funceq},
      {"bound-family", check_bound_family}, {"tau", check_tau},
      {"r-series", check_r_series},     {"gamma", check_gamma},
      {"symmetry", check_symmetry},     {"hdecomp", check_hdecomp},
      {"convolution", check_convolution}, {"eta", check_eta},
      {"compat", check_compat},         {"product", check_product},
      {"tensor", check_tensor},         {"errata", check_errata},
  };
  return table;
}

}  // namespace

std::optional<Mutation> parse_mutation(std::string_view name) {
  for (const auto& [key, value] : kMutations) {
    if (key == name) return value;
  }
  return std::nullopt;
}

std::vector<std::string> mutation_names() {
  std::vector<std::string> out;
  for (const auto& [key, value] : kMutations) out.emplace_back(key);
  return out;
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::erratum: return "erratum";
  }
  return "fail";
}

nlohmann::json CheckResult::to_json() const {
  json j{{"identity", identity}, {"status", to_string(status)}, {"params", params}, {"millis", millis}};
  if (counterexample) j["counterexample"] = *counterexample;
  return j;
}

const std::vector<std::string>& verify_scopes() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out{"all"};
    for (const auto& [name, fn] : scope_table()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const Context ctx{options};
  std::vector<CheckResult> results;
  bool matched = false;
  for (const auto& [name, fn] : scope_table()) {
    if (options.scope != "all" && options.scope != name) continue;
    matched = true;
    ctx.last = std::chrono::steady_clock::now();
    for (auto& r : fn(ctx)) results.push_back(std::move(r));
  }
  if (!matched) throw std::invalid_argument("unknown verify scope '" + options.scope + "'");
  return results;
}

bool verification_succeeded(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const CheckResult& r) { return r.status == CheckStatus::fail; });
}

}  // namespace catpark
