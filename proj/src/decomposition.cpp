#include "catpark/decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace catpark {

namespace {

void require_canonical(const ParkingSeq& seq, int m, const char* op) {
  if (m < 1) throw std::invalid_argument(std::string(op) + ": m must be >= 1");
  if (!is_u_pk(seq, BoundFamily::canonical(m))) {
    throw std::invalid_argument(std::string(op) + ": " + seq.to_display() +
                                " is not a u-parking distribution for m=" + std::to_string(m));
  }
}

/// delta_{first-1} applied to the 1-based block [from, to].
ParkingSeq shifted_block(const ParkingSeq& seq, std::size_t from, std::size_t to) {
  if (from > to) return {};
  const int shift = seq.at1(from) - 1;
  std::vector<int> block;
  block.reserve(to - from + 1);
  for (std::size_t i = from; i <= to; ++i) block.push_back(seq.at1(i) - shift);
  return ParkingSeq(std::move(block));
}

}  // namespace

std::size_t first_fixed_point(const ParkingSeq& seq, int m, int type) {
  require_canonical(seq, m, "first_fixed_point");
  if (seq.empty()) throw std::invalid_argument("first_fixed_point: sequence must be nonempty");
  if (type < 1 || type > m) {
    throw std::invalid_argument("first_fixed_point: type must lie in [1, m]");
  }
  const std::size_t n = seq.size();
  for (std::size_t k = 2; k <= n; ++k) {
    const int lo = m * (static_cast<int>(k) - 2) + 1 + type;
    const int hi = m * (static_cast<int>(k) - 1) + 1;
    if (lo <= seq.at1(k) && seq.at1(k) <= hi) return k;
  }
  return n + 1;
}

FixedPointIndices fixed_points(const ParkingSeq& seq, int m) {
  FixedPointIndices out{m, {}};
  for (int type = 1; type <= m; ++type) out.indices.push_back(first_fixed_point(seq, m, type));
  return out;
}

FirstReturnDecomposition decompose(const ParkingSeq& seq, int m) {
  FirstReturnDecomposition out;
  out.fixed_points = fixed_points(seq, m);
  const auto& idx = out.fixed_points.indices;
  const std::size_t n = seq.size();
  const auto mm = static_cast<std::size_t>(m);

  out.components.reserve(mm + 1);
  out.components.push_back(shifted_block(seq, 2, idx[0] - 1));
  for (std::size_t l = 1; l < mm; ++l) {
    out.components.push_back(shifted_block(seq, idx[l - 1], idx[l] - 1));
  }
  out.components.push_back(shifted_block(seq, idx[mm - 1], n));
  return out;
}

ParkingSeq recompose(const std::vector<ParkingSeq>& components, int m) {
  if (m < 1) throw InvalidComposition("recompose: m must be >= 1");
  const auto mm = static_cast<std::size_t>(m);
  if (components.size() != mm + 1) {
    throw InvalidComposition("recompose: expected " + std::to_string(mm + 1) +
                             " components, got " + std::to_string(components.size()));
  }
  for (const auto& c : components) {
    if (!is_u_pk(c, BoundFamily::canonical(m))) {
      throw InvalidComposition("recompose: component " + c.to_display() +
                               " is not a u-parking distribution");
    }
  }

  std::vector<std::size_t> idx(mm);
  idx[0] = components[0].size() + 2;
  for (std::size_t l = 1; l < mm; ++l) idx[l] = idx[l - 1] + components[l].size();

  std::vector<int> values{1};
  values.insert(values.end(), components[0].begin(), components[0].end());
  for (std::size_t l = 2; l <= mm; ++l) {
    const int shift = m * (static_cast<int>(idx[l - 2]) - 2) + static_cast<int>(l) - 1;
    for (int v : components[l - 1]) values.push_back(v + shift);
  }
  const int last_shift = m * (static_cast<int>(idx[mm - 1]) - 1);
  for (int v : components[mm]) values.push_back(v + last_shift);

  if (!std::is_sorted(values.begin(), values.end())) {
    throw InvalidComposition("recompose: components do not assemble to a nondecreasing sequence");
  }
  ParkingSeq seq(std::move(values));
  if (!is_u_pk(seq, BoundFamily::canonical(m))) {
    throw InvalidComposition("recompose: result " + seq.to_display() +
                             " violates the bounds");
  }
  if (decompose(seq, m).components != components) {
    throw InvalidComposition("recompose: " + seq.to_display() +
                             " does not decompose back into the given components");
  }
  return seq;
}

ParkingSeq tau(const ParkingSeq& seq, int m) {
  require_canonical(seq, m, "tau");
  if (seq.empty()) return {};

  // Post-order over the recursion tree: tau(p) needs tau(p_{m+1}) and tau(p_1).
  struct Frame {
    std::vector<ParkingSeq> components;
    int stage = 0;
    ParkingSeq tau_last;
    ParkingSeq tau_first;
  };
  const auto mm = static_cast<std::size_t>(m);
  std::vector<Frame> stack;
  stack.push_back(Frame{decompose(seq, m).components, 0, {}, {}});
  std::optional<ParkingSeq> returned;

  while (!stack.empty()) {
    Frame& frame = stack.back();
    if (returned) {
      (frame.stage == 1 ? frame.tau_last : frame.tau_first) = std::move(*returned);
      returned.reset();
    }
    if (frame.stage < 2) {
      const ParkingSeq& child = frame.stage == 0 ? frame.components[mm] : frame.components[0];
      ++frame.stage;
      if (child.empty()) {
        returned = ParkingSeq{};
      } else {
        auto components = decompose(child, m).components;
        stack.push_back(Frame{std::move(components), 0, {}, {}});
      }
      continue;
    }
    std::vector<ParkingSeq> swapped = std::move(frame.components);
    swapped[0] = std::move(frame.tau_last);
    swapped[mm] = std::move(frame.tau_first);
    stack.pop_back();
    returned = recompose(swapped, m);
  }
  return *returned;
}

std::size_t u_luck(const ParkingSeq& seq, int m) {
  std::size_t lucky = 0;
  for (std::size_t i = 1; i <= seq.size(); ++i) {
    if (seq.at1(i) == m * (static_cast<int>(i) - 1) + 1) ++lucky;
  }
  return lucky;
}

std::size_t u_omega(const ParkingSeq& seq, int value) {
  return static_cast<std::size_t>(std::count(seq.begin(), seq.end(), value));
}

std::size_t f_stat(const ParkingSeq& seq, int m) { return first_fixed_point(seq, m, 1); }
std::size_t g_stat(const ParkingSeq& seq, int m) { return first_fixed_point(seq, m, m); }

ParkingSeq eta(const ParkingSeq& seq, int m) {
  require_canonical(seq, m, "eta");
  if (seq.empty()) throw std::invalid_argument("eta: sequence must be nonempty");
  const auto components = decompose(seq, m).components;
  const std::size_t parts = components.size();

  std::vector<int> out{1};
  for (std::size_t j = 0; j < parts; ++j) {
    out.insert(out.end(), u_omega(components[j], 1), static_cast<int>(j) + 1);
  }
  std::size_t right_size = 0;  // sum of |p_k| for k > j
  for (std::size_t j = parts; j-- > 0;) {
    const int offset = m * (1 + static_cast<int>(right_size));
    for (int e : components[j]) {
      if (e != 1) out.push_back(e + offset);
    }
    right_size += components[j].size();
  }
  return ParkingSeq::from_unsorted(std::move(out));
}

ParkingSeq eta_inv(const ParkingSeq& seq, int m) {
  require_canonical(seq, m, "eta_inv");
  if (seq.empty()) throw std::invalid_argument("eta_inv: sequence must be nonempty");
  const auto parts = static_cast<std::size_t>(m) + 1;

  std::vector<std::vector<int>> components(parts);
  // omega_1 counts the implicit leading 1, omega_j (j >= 2) feeds p_j directly.
  for (std::size_t j = 0; j < parts; ++j) {
    const std::size_t ones = u_omega(seq, static_cast<int>(j) + 1) - (j == 0 ? 1 : 0);
    components[j].assign(ones, 1);
  }

  const BoundFamily canonical = BoundFamily::canonical(m);
  auto accepts = [&](const std::vector<int>& part, int value) {
    if (part.empty() || value < part.back()) return false;
    return value <= canonical.bound(part.size() + 1);
  };

  // Values from p_{m+1} come out smallest, then p_m, ..., so an ascending
  // scan settles each component before the next one receives anything.
  for (int value : seq) {
    if (value <= m + 1) continue;
    bool placed = false;
    for (std::size_t j = parts; j-- > 0 && !placed;) {
      std::size_t right_size = 0;
      for (std::size_t k = j + 1; k < parts; ++k) right_size += components[k].size();
      const int q = value - m * (1 + static_cast<int>(right_size));
      if (q > 0 && accepts(components[j], q)) {
        components[j].push_back(q);
        placed = true;
      }
    }
    if (!placed) {
      throw std::invalid_argument("eta_inv: " + seq.to_display() + " is not in the image of eta");
    }
  }

  std::vector<ParkingSeq> parts_seq;
  parts_seq.reserve(parts);
  for (auto& c : components) parts_seq.emplace_back(std::move(c));
  ParkingSeq result = recompose(parts_seq, m);
  if (eta(result, m) != seq) {
    throw std::invalid_argument("eta_inv: " + seq.to_display() + " is not in the image of eta");
  }
  return result;
}

CompatibilityReport check_statistic_compatibility(const Statistic& stat, int component, int m,
                                                  std::size_t n_max,
                                                  std::size_t max_counterexamples) {
  if (component < 0 || component > m) {
    throw std::invalid_argument("component index must lie in [0, m]");
  }
  CompatibilityReport report;
  std::optional<std::int64_t> candidate;
  bool consistent = true;
  const BoundFamily canonical = BoundFamily::canonical(m);

  for (std::size_t n = 1; n <= n_max; ++n) {
    std::map<std::int64_t, std::uint64_t> stat_hist;
    std::map<std::int64_t, std::uint64_t> luck_hist;
    for_each_u_pk(n, canonical, [&](std::span<const int> s) {
      const ParkingSeq p(std::vector<int>(s.begin(), s.end()));
      const ParkingSeq part = decompose(p, m).components[static_cast<std::size_t>(component)];
      const std::int64_t value = stat(p);
      const std::int64_t part_value = stat(part);
      ++stat_hist[value];
      ++luck_hist[static_cast<std::int64_t>(u_luck(p, m))];

      const std::int64_t diff = value - part_value;
      if (!candidate) candidate = diff;
      if (diff != *candidate) {
        consistent = false;
        if (report.counterexamples.size() < max_counterexamples) {
          report.counterexamples.push_back({p, part, value, part_value});
        }
      }
    });
    if (stat_hist != luck_hist) report.non_equidistributed_lengths.push_back(n);
  }
  if (consistent) report.constant = candidate;
  return report;
}

}  // namespace catpark
