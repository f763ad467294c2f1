#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "catpark/parking_seq.hpp"

namespace catpark {

/// Raised by recompose when the components do not describe a valid
/// u-parking distribution.
class InvalidComposition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// First fixed points i_1 <= ... <= i_m; n+1 marks an absent type.
struct FixedPointIndices {
  int m = 1;
  std::vector<std::size_t> indices;

  friend bool operator==(const FixedPointIndices&, const FixedPointIndices&) = default;
};

/// m+1 components p_1 ... p_{m+1}; the leading entry 1 of the
/// decomposed sequence is implicit.
struct FirstReturnDecomposition {
  std::vector<ParkingSeq> components;
  FixedPointIndices fixed_points;
};

/// Smallest k > 1 with m(k-2)+1+type <= p_k <= m(k-1)+1, else n+1.
std::size_t first_fixed_point(const ParkingSeq& seq, int m, int type);
FixedPointIndices fixed_points(const ParkingSeq& seq, int m);

FirstReturnDecomposition decompose(const ParkingSeq& seq, int m);
ParkingSeq recompose(const std::vector<ParkingSeq>& components, int m);

/// The luck / omega_1 exchanging involution.
ParkingSeq tau(const ParkingSeq& seq, int m);

/// Positions i with p_i = m(i-1)+1.
std::size_t u_luck(const ParkingSeq& seq, int m);
std::size_t u_omega(const ParkingSeq& seq, int value);
std::size_t f_stat(const ParkingSeq& seq, int m);
std::size_t g_stat(const ParkingSeq& seq, int m);

ParkingSeq eta(const ParkingSeq& seq, int m);
ParkingSeq eta_inv(const ParkingSeq& seq, int m);

using Statistic = std::function<std::int64_t(const ParkingSeq&)>;

struct CompatibilityCounterexample {
  ParkingSeq seq;
  ParkingSeq component;
  std::int64_t value;
  std::int64_t component_value;
};

struct CompatibilityReport {
  /// The shared C with stat(p) = stat(p_{i+1}) + C, when one exists.
  std::optional<std::int64_t> constant;
  std::vector<CompatibilityCounterexample> counterexamples;
  /// Lengths (1..n_max) where the value distribution differs from u_luck's.
  std::vector<std::size_t> non_equidistributed_lengths;

  bool recursive() const { return constant.has_value(); }
  bool equidistributed() const { return non_equidistributed_lengths.empty(); }
};

/// Exhaustively checks stat(p) = stat(p_{i+1}) + C and equidistribution
/// with u_luck over PK(n; u), 1 <= n <= n_max. `component` is i in [0, m].
CompatibilityReport check_statistic_compatibility(const Statistic& stat, int component, int m,
                                                  std::size_t n_max,
                                                  std::size_t max_counterexamples = 8);

}  // namespace catpark
