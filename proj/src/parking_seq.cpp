#include "catpark/parking_seq.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace catpark {

namespace {

void validate(const std::vector<int>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1) {
      throw std::invalid_argument("sequence entries must be positive, got " +
                                  std::to_string(values[i]));
    }
    if (i > 0 && values[i - 1] > values[i]) {
      throw std::invalid_argument("sequence must be nondecreasing at position " +
                                  std::to_string(i + 1));
    }
  }
}

}  // namespace

ParkingSeq::ParkingSeq(std::vector<int> values) : values_(std::move(values)) {
  validate(values_);
}

ParkingSeq::ParkingSeq(std::initializer_list<int> values) : values_(values) {
  validate(values_);
}

ParkingSeq ParkingSeq::from_unsorted(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  return ParkingSeq(std::move(values));
}

ParkingSeq ParkingSeq::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "e" || text == "\xCE\xB5") return ParkingSeq{};

  std::vector<int> values;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("cannot parse sequence entry '" + std::string(token) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return ParkingSeq(std::move(values));
}

std::string ParkingSeq::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::string ParkingSeq::to_display() const {
  if (values_.empty()) return "\xCE\xB5";
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values_[i]);
  }
  return out + ")";
}

BoundFamily::BoundFamily(int m, int k, int r) : m_(m), k_(k), r_(r) {
  if (m < 1) throw std::invalid_argument("bound family requires m >= 1");
  if (k < 1) throw std::invalid_argument("bound family requires k >= 1");
  if (r < 0 || r > m - 1) throw std::invalid_argument("bound family requires 0 <= r <= m-1");
}

bool is_u_pk(std::span<const int> seq, const BoundFamily& family) {
  int previous = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < previous || seq[i] > family.bound(i + 1)) return false;
    previous = seq[i];
  }
  return true;
}

UpkEnumerator::UpkEnumerator(std::size_t n, BoundFamily family)
    : n_(n), family_(family), values_(n, 1) {}

bool UpkEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  // Rightmost position that can still grow; everything after it resets to
  // the smallest nondecreasing continuation.
  for (std::size_t i = n_; i-- > 0;) {
    if (values_[i] < family_.bound(i + 1)) {
      const int v = ++values_[i];
      std::fill(values_.begin() + static_cast<std::ptrdiff_t>(i) + 1, values_.end(), v);
      return true;
    }
  }
  done_ = true;
  return false;
}

void for_each_u_pk(std::size_t n, const BoundFamily& family,
                   const std::function<void(std::span<const int>)>& visit,
                   std::uint64_t max_objects) {
  const BigInt projected = count_u_pk(n, family);
  if (projected > BigInt(static_cast<unsigned long>(max_objects))) {
    throw ResourceLimitError("enumeration of " + to_string(projected) +
                             " objects exceeds the cap of " + std::to_string(max_objects));
  }
  UpkEnumerator it(n, family);
  while (it.next()) visit(it.current());
}

std::vector<ParkingSeq> enumerate_u_pk(std::size_t n, const BoundFamily& family,
                                       std::uint64_t max_objects) {
  std::vector<ParkingSeq> out;
  for_each_u_pk(
      n, family,
      [&](std::span<const int> s) { out.emplace_back(std::vector<int>(s.begin(), s.end())); },
      max_objects);
  return out;
}

BigInt count_u_pk(std::size_t n, const BoundFamily& family) {
  if (n == 0) return 1;
  // ways[v] = number of valid prefixes of the current length ending in v.
  const auto top = static_cast<std::size_t>(family.bound(n));
  std::vector<BigInt> ways(top + 1, 0);
  for (int v = 1; v <= family.bound(1); ++v) ways[static_cast<std::size_t>(v)] = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    const auto limit = static_cast<std::size_t>(family.bound(i));
    BigInt running = 0;
    for (std::size_t v = 1; v <= limit; ++v) {
      running += ways[v];
      ways[v] = running;
    }
  }
  BigInt total = 0;
  for (std::size_t v = 1; v <= top; ++v) total += ways[v];
  return total;
}

CountTriple count_triple(std::size_t n, const BoundFamily& family) {
  return CountTriple{n, family, count_u_pk(n, family)};
}

BigInt fuss_catalan(int m, std::size_t n) {
  if (m < 1) throw std::invalid_argument("fuss_catalan requires m >= 1");
  const auto mn = static_cast<unsigned long>(m) * n;
  BigInt binom;
  mpz_bin_uiui(binom.get_mpz_t(), mn + n, n);
  BigInt result;
  mpz_divexact_ui(result.get_mpz_t(), binom.get_mpz_t(), mn + 1);
  return result;
}

}  // namespace catpark
