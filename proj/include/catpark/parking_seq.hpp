#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catpark/bigint.hpp"

namespace catpark {

/// Raised when an enumeration would exceed the configured object cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A nondecreasing sequence of positive integers, possibly empty.
///
/// Holds both u-parking distributions and caterpillar preference
/// sequences. Construction validates the invariants, so every instance is
/// sorted and strictly positive.
class ParkingSeq {
 public:
  ParkingSeq() = default;
  explicit ParkingSeq(std::vector<int> values);
  ParkingSeq(std::initializer_list<int> values);

  /// Sorts `values` before validating positivity.
  static ParkingSeq from_unsorted(std::vector<int> values);

  /// Parses "1,1,4". The empty string, "e" and "ε" denote the empty sequence.
  static ParkingSeq parse(std::string_view text);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  /// 0-based access.
  int operator[](std::size_t i) const { return values_[i]; }
  /// 1-based access, matching the position index i in the bound u_i.
  int at1(std::size_t i) const { return values_.at(i - 1); }

  const std::vector<int>& values() const noexcept { return values_; }
  std::span<const int> span() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  /// "1,1,4"; empty for ε.
  std::string to_csv() const;
  /// "(1, 1, 4)"; "ε" for the empty sequence.
  std::string to_display() const;

  friend auto operator<=>(const ParkingSeq&, const ParkingSeq&) = default;
  friend bool operator==(const ParkingSeq&, const ParkingSeq&) = default;

 private:
  std::vector<int> values_;
};

/// Bounds u_i = m(i+k-1) - r with m >= 1, k >= 1, 0 <= r <= m-1.
class BoundFamily {
 public:
  BoundFamily(int m, int k, int r);

  /// The family (m, 1, m-1), bounds 1, m+1, 2m+1, ...
  static BoundFamily canonical(int m) { return BoundFamily(m, 1, m - 1); }

  int m() const noexcept { return m_; }
  int k() const noexcept { return k_; }
  int r() const noexcept { return r_; }

  /// u_i for 1-based position i >= 1.
  int bound(std::size_t i) const noexcept {
    return m_ * (static_cast<int>(i) + k_ - 1) - r_;
  }

  friend bool operator==(const BoundFamily&, const BoundFamily&) = default;

 private:
  int m_;
  int k_;
  int r_;
};

inline int bound(const BoundFamily& family, std::size_t i) { return family.bound(i); }

struct CountTriple {
  std::size_t n;
  BoundFamily family;
  BigInt count;
};

inline constexpr std::uint64_t kDefaultMaxObjects = 100'000'000;

bool is_u_pk(std::span<const int> seq, const BoundFamily& family);
inline bool is_u_pk(const ParkingSeq& seq, const BoundFamily& family) {
  return is_u_pk(seq.span(), family);
}

/// Lexicographic successor enumeration of PK(n; u).
///
/// Holds one sequence at a time; `current()` stays valid until the next
/// call to `next()`.
class UpkEnumerator {
 public:
  UpkEnumerator(std::size_t n, BoundFamily family);

  /// Advances to the next sequence. The first call yields (1, ..., 1), or ε
  /// when n == 0. Returns false once exhausted.
  bool next();
  std::span<const int> current() const noexcept { return values_; }
  std::size_t length() const noexcept { return n_; }

 private:
  std::size_t n_;
  BoundFamily family_;
  std::vector<int> values_;
  bool started_ = false;
  bool done_ = false;
};

/// Calls `visit` for every sequence of PK(n; u) in lexicographic order.
/// Throws ResourceLimitError before enumerating if h_{n,k,r} > max_objects.
void for_each_u_pk(std::size_t n, const BoundFamily& family,
                   const std::function<void(std::span<const int>)>& visit,
                   std::uint64_t max_objects = kDefaultMaxObjects);

std::vector<ParkingSeq> enumerate_u_pk(std::size_t n, const BoundFamily& family,
                                       std::uint64_t max_objects = kDefaultMaxObjects);

/// h_{n,k,r}^{(m)} by a rolling (position, last value) table.
BigInt count_u_pk(std::size_t n, const BoundFamily& family);

CountTriple count_triple(std::size_t n, const BoundFamily& family);

/// binomial(mn+n, n) / (mn+1).
BigInt fuss_catalan(int m, std::size_t n);

}  // namespace catpark
