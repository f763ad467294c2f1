#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catpark/parking_seq.hpp"
#include "oracles.hpp"

using namespace catpark;

TEST_CASE("bound family arithmetic") {
  CHECK(BoundFamily(2, 1, 1).bound(3) == 5);
  CHECK(BoundFamily(1, 1, 0).bound(7) == 7);
  CHECK(BoundFamily(3, 2, 0).bound(2) == 9);
  CHECK(BoundFamily::canonical(4).bound(1) == 1);
  CHECK(BoundFamily::canonical(4).bound(3) == 9);

  CHECK_THROWS_AS(BoundFamily(0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(BoundFamily(2, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(BoundFamily(2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(BoundFamily(2, 1, -1), std::invalid_argument);
}

TEST_CASE("bounds are strictly increasing and positive") {
  for (int m = 1; m <= 4; ++m) {
    for (int k = 1; k <= 3; ++k) {
      for (int r = 0; r < m; ++r) {
        const BoundFamily f(m, k, r);
        CHECK(f.bound(1) >= 1);
        for (std::size_t i = 1; i < 10; ++i) CHECK(f.bound(i) < f.bound(i + 1));
      }
    }
  }
}

TEST_CASE("parking sequence construction and parsing") {
  CHECK(ParkingSeq::parse("1,1,4") == ParkingSeq{1, 1, 4});
  CHECK(ParkingSeq::parse("(1, 2, 5)") == ParkingSeq{1, 2, 5});
  CHECK(ParkingSeq::parse("").empty());
  CHECK(ParkingSeq::parse("e").empty());
  CHECK(ParkingSeq::parse("\xCE\xB5").empty());
  CHECK_THROWS_AS(ParkingSeq::parse("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(ParkingSeq::parse("2,1"), std::invalid_argument);
  CHECK_THROWS_AS(ParkingSeq::parse("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(ParkingSeq::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS((ParkingSeq{3, 2}), std::invalid_argument);

  CHECK(ParkingSeq{1, 1, 5}.to_csv() == "1,1,5");
  CHECK(ParkingSeq{1, 1, 5}.to_display() == "(1, 1, 5)");
  CHECK(ParkingSeq{}.to_display() == "\xCE\xB5");
  CHECK(ParkingSeq::from_unsorted({4, 1, 2}) == ParkingSeq{1, 2, 4});
}

TEST_CASE("is_u_pk") {
  const BoundFamily f(2, 1, 1);
  CHECK(is_u_pk(ParkingSeq{1, 1, 5}, f));
  CHECK(is_u_pk(ParkingSeq{}, f));
  CHECK_FALSE(is_u_pk(ParkingSeq{1, 2, 6}, f));
  CHECK_FALSE(is_u_pk(ParkingSeq{2}, f));
  const std::vector<int> unsorted{1, 3, 2};
  CHECK_FALSE(is_u_pk(std::span<const int>(unsorted), f));
}

TEST_CASE("enumeration matches the printed theta table left column") {
  const auto seqs = enumerate_u_pk(3, BoundFamily(2, 1, 1));
  const std::vector<ParkingSeq> expected{
      {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 1, 4}, {1, 1, 5}, {1, 2, 2},
      {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 3}, {1, 3, 4}, {1, 3, 5}};
  CHECK(seqs == expected);
}

TEST_CASE("enumeration edge cases") {
  const auto empty = enumerate_u_pk(0, BoundFamily(3, 2, 1));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());

  const auto pairs = enumerate_u_pk(2, BoundFamily(3, 1, 2));
  CHECK(pairs == std::vector<ParkingSeq>{{1, 1}, {1, 2}, {1, 3}, {1, 4}});
}

TEST_CASE("enumeration agrees with an independent filter of all nondecreasing sequences") {
  for (int m = 1; m <= 3; ++m) {
    for (int k = 1; k <= 2; ++k) {
      for (int r = 0; r < m; ++r) {
        const BoundFamily f(m, k, r);
        for (std::size_t n = 0; n <= 5; ++n) {
          const auto expected = oracle::bounded(n, [&](std::size_t i) { return f.bound(i); });
          const auto got = enumerate_u_pk(n, f);
          REQUIRE(got.size() == expected.size());
          for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].values() == expected[i]);
          for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1] < got[i]);
          CHECK(count_u_pk(n, f) == BigInt(static_cast<unsigned long>(expected.size())));
        }
      }
    }
  }
}

TEST_CASE("count_u_pk examples") {
  CHECK(count_u_pk(3, BoundFamily(2, 1, 1)) == 12);
  CHECK(count_u_pk(0, BoundFamily(2, 1, 1)) == 1);
  CHECK(count_u_pk(2, BoundFamily(2, 2, 0)) == 18);
  const auto triple = count_triple(3, BoundFamily(2, 1, 1));
  CHECK(triple.count == 12);
  CHECK(triple.n == 3);
}

TEST_CASE("fuss_catalan against the binomial oracle") {
  CHECK(fuss_catalan(2, 3) == 12);
  CHECK(fuss_catalan(7, 0) == 1);
  CHECK(fuss_catalan(3, 4) == 140);
  for (unsigned m = 1; m <= 5; ++m) {
    for (unsigned n = 0; n <= 9; ++n) {
      const std::uint64_t expected = oracle::binomial(m * n + n, n) / (m * n + 1);
      CHECK(fuss_catalan(static_cast<int>(m), n) == BigInt(static_cast<unsigned long>(expected)));
    }
  }
  CHECK_THROWS_AS(fuss_catalan(0, 3), std::invalid_argument);
  // Beyond 64 bits.
  CHECK(fuss_catalan(4, 40).get_str() == BigInt(fuss_catalan(4, 40)).get_str());
  CHECK(fuss_catalan(4, 40) > BigInt("18446744073709551616"));
}

TEST_CASE("canonical counts are Fuss-Catalan") {
  for (int m = 1; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 7; ++n) {
      const BigInt count = count_u_pk(n, BoundFamily::canonical(m));
      CHECK(count == fuss_catalan(m, n));
      std::uint64_t enumerated = 0;
      for_each_u_pk(n, BoundFamily::canonical(m), [&](std::span<const int>) { ++enumerated; });
      CHECK(count == BigInt(static_cast<unsigned long>(enumerated)));
    }
  }
}

TEST_CASE("count recurrences from the bound-family decomposition") {
  for (int m = 2; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 7; ++n) {
      for (int k = 1; k <= 3; ++k) {
        for (int r = 0; r < m - 1; ++r) {
          BigInt sum = 0;
          for (std::size_t j = 0; j <= n; ++j) {
            sum += count_u_pk(j, BoundFamily(m, k, r + 1)) * fuss_catalan(m, n - j);
          }
          CHECK(count_u_pk(n, BoundFamily(m, k, r)) == sum);
        }
        if (k >= 2) {
          BigInt sum = 0;
          for (std::size_t j = 0; j <= n; ++j) {
            sum += count_u_pk(j, BoundFamily(m, k - 1, 0)) * fuss_catalan(m, n - j);
          }
          CHECK(count_u_pk(n, BoundFamily(m, k, m - 1)) == sum);
        }
      }
    }
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_u_pk(6, BoundFamily::canonical(2), 100), ResourceLimitError);
  CHECK(enumerate_u_pk(4, BoundFamily::canonical(2), 55).size() == 55);
}

TEST_CASE("enumerator stream protocol") {
  UpkEnumerator it(2, BoundFamily::canonical(2));
  std::vector<std::vector<int>> seen;
  while (it.next()) seen.emplace_back(it.current().begin(), it.current().end());
  CHECK(seen == std::vector<std::vector<int>>{{1, 1}, {1, 2}, {1, 3}});
  CHECK_FALSE(it.next());
}
