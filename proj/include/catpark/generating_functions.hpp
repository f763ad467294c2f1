#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "catpark/multipoly.hpp"
#include "catpark/parking_seq.hpp"
#include "catpark/series.hpp"

namespace catpark {

/// Which version of a displayed identity to evaluate. `paper_literal`
/// reproduces the printed form so its disagreement with enumeration can be
/// shown; `corrected` is the form that matches enumeration.
enum class Form { corrected, paper_literal };

struct CoefficientMismatch {
  std::size_t index;
  std::string expected;
  std::string actual;
};

struct IdentityReport {
  std::string identity;
  std::vector<CoefficientMismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Coefficient-wise comparison of `expected[j]` against `actual` for
/// j in [from, expected.size()).
IdentityReport compare_coefficients(std::string identity, const std::vector<MultiPoly>& expected,
                                    const TruncatedSeries& actual, std::size_t from = 0);

/// (q_0, ..., q_m)
std::vector<std::string> q_variables(int m);

// ---- Fuss-Catalan series ---------------------------------------------------

TruncatedSeries fuss_catalan_series(int m, std::size_t order);
/// B = 1 + x B^{m+1} for a caller-supplied B (lets tests perturb it).
IdentityReport check_functional_equation(const TruncatedSeries& b, int m);
IdentityReport verify_functional_equation(int m, std::size_t order);

// ---- luck q-analog R_n ----------------------------------------------------

/// sum over PK(n; u) of q^{luck}.
MultiPoly r_poly_brute(int m, std::size_t n, std::uint64_t max_objects = kDefaultMaxObjects);
/// corrected: 1 / (1 - q x B_m(x)^m); paper_literal: 1 / (1 - q x B_m(x)).
TruncatedSeries r_series_closed(int m, std::size_t order, Form form = Form::corrected,
                                const std::string& variable = "q");

// ---- (luck, omega_1, f, g) ------------------------------------------------

/// sum over PK(n; u) of q^{luck} t^{omega_1} u^f v^g, with gamma_0 = 1.
MultiPoly gamma_poly_brute(int m, std::size_t n, std::uint64_t max_objects = kDefaultMaxObjects);
/// corrected:     1 + x q t (uv)^2 B(x;q) B^{m-1}(vx) B(uvx;t)
/// paper_literal: 1 + x q t (uv)^2 B^{m-1}(x) B(vx;q) B(uvx;t)
TruncatedSeries gamma_series_closed(int m, std::size_t order, Form form = Form::corrected);

// ---- bound families -------------------------------------------------------

/// Coefficient n is h_{n,k,r}^{(m)}.
TruncatedSeries h_series(int m, int k, int r, std::size_t order);
/// H_m(x; k, r) = B_m(x)^{mk-r}.
IdentityReport verify_thm_rec(int m, int k, int r, std::size_t order);

// ---- complete homogeneous decompositions ---------------------------------

/// sum_r h_{r,1,1} C_{n-r-1,k}: the predicted h-coefficients of gamma_n(q,t,1,1)/qt.
std::map<unsigned, BigInt> predicted_gamma_h_coefficients(int m, std::size_t n);

/// For 2 <= t <= m+1 and n <= n_max: sum over weak t-compositions of
/// prod R_{alpha_i}(q_i) equals sum_k C_{n,k} h_k(q_0..q_{t-1}).
IdentityReport verify_convolution_identity(int m, std::size_t n_max);

// ---- (luck, omega_1, ..., omega_m) on caterpillar trees ------------------

/// sum over PK_m(n) of q_0^{luck} prod_j q_j^{omega_j}, luck from simulation.
MultiPoly multi_stat_poly_brute(int m, std::size_t n,
                                std::uint64_t max_objects = kDefaultMaxObjects);
/// corrected:     1 + x q_0 q_1 + x prod q_i (prod_i B(x;q_i) - 1)
/// paper_literal: 1 + x prod_{i=0}^{m} q_i B(x;q_i)
/// The corrected form differs only at x^1: Cat_m(1) is a single node, so
/// labels 2..m do not exist there.
TruncatedSeries multi_stat_series_closed(int m, std::size_t order, Form form = Form::corrected);
IdentityReport verify_multi_stat_product(int m, std::size_t order, Form form = Form::corrected);

/// B_m(n, k_0, ..., k_m): distributions on Cat_m(n) with k_0 lucky cars
/// and k_j preferences for node j.
struct JointCountTensor {
  int m = 1;
  std::size_t n = 0;
  std::map<Exponents, BigInt> entries;

  BigInt at(const Exponents& k) const;
  BigInt total() const;
  /// Pairs of tuples in [1, n]^{m+1} with equal coordinate sum but
  /// different counts.
  std::vector<std::pair<Exponents, Exponents>> equal_sum_violations() const;
  /// Mass carried by tuples with some zero coordinate.
  BigInt mass_outside_positive_box() const;
};

JointCountTensor joint_count_tensor(int m, std::size_t n,
                                    std::uint64_t max_objects = kDefaultMaxObjects);

}  // namespace catpark
