#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "catpark/caterpillar.hpp"
#include "catpark/decomposition.hpp"
#include "oracles.hpp"

using namespace catpark;

namespace {

// Parent of a label in Cat_m(n), from the label arithmetic alone.
int oracle_parent(int label, int m, int n) {
  const int sink = m * n - m + 1;
  if (label == sink) return 0;
  if ((label - 1) % m == 0) return label + m;
  return ((label - 1) / m + 1) * m + 1;
}

// Plain parking run on an explicit parent map; returns parked count and lucky count.
std::pair<int, int> oracle_park(const std::vector<int>& prefs, int m, int n) {
  std::set<int> taken;
  int parked = 0;
  int lucky = 0;
  for (int pref : prefs) {
    int node = pref;
    while (node != 0 && taken.count(node)) node = oracle_parent(node, m, n);
    if (node == 0) continue;
    taken.insert(node);
    ++parked;
    if (node == pref && (pref - 1) % m == 0) ++lucky;
  }
  return {parked, lucky};
}

}  // namespace

TEST_CASE("caterpillar structure") {
  const CaterpillarTree t(2, 3);
  CHECK(t.node_count() == 5);
  CHECK(t.sink() == 5);
  CHECK(t.backbone_labels() == std::vector<int>{1, 3, 5});
  CHECK(t.parent(1) == 3);
  CHECK(t.parent(2) == 3);
  CHECK(t.parent(3) == 5);
  CHECK(t.parent(4) == 5);
  CHECK_FALSE(t.parent(5).has_value());
  CHECK(t.subtree_size(5) == 5);
  CHECK(t.subtree_size(3) == 3);
  CHECK(t.subtree_size(2) == 1);
  CHECK_THROWS_AS(t.parent(6), std::out_of_range);
  CHECK_THROWS_AS(t.parent(0), std::out_of_range);
  CHECK_THROWS_AS(CaterpillarTree(0, 2), std::invalid_argument);

  const CaterpillarTree single(3, 1);
  CHECK(single.node_count() == 1);
  CHECK_FALSE(single.parent(1).has_value());
}

TEST_CASE("parent structure matches label arithmetic") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 6; ++n) {
      const CaterpillarTree t = build_caterpillar(m, n);
      CHECK(t.node_count() == m * n - m + 1);
      for (int label = 1; label <= t.node_count(); ++label) {
        const int expected = oracle_parent(label, m, n);
        if (expected == 0) {
          CHECK_FALSE(t.parent(label).has_value());
        } else {
          CHECK(t.parent(label) == expected);
          CHECK(*t.parent(label) > label);
        }
        CHECK(t.is_backbone(label) == ((label - 1) % m == 0));
      }
    }
  }
}

TEST_CASE("theta on the printed table") {
  const std::vector<std::pair<ParkingSeq, ParkingSeq>> rows{
      {{1, 1, 1}, {1, 1, 1, 2, 4}}, {{1, 1, 2}, {1, 1, 2, 2, 4}}, {{1, 1, 3}, {1, 1, 2, 3, 4}},
      {{1, 1, 4}, {1, 1, 2, 4, 4}}, {{1, 1, 5}, {1, 1, 2, 4, 5}}, {{1, 2, 2}, {1, 2, 2, 2, 4}},
      {{1, 2, 3}, {1, 2, 2, 3, 4}}, {{1, 2, 4}, {1, 2, 2, 4, 4}}, {{1, 2, 5}, {1, 2, 2, 4, 5}},
      {{1, 3, 3}, {1, 2, 3, 3, 4}}, {{1, 3, 4}, {1, 2, 3, 4, 4}}, {{1, 3, 5}, {1, 2, 3, 4, 5}}};
  for (const auto& [p, image] : rows) {
    CHECK(theta(p, 2, 3) == image);
    CHECK(theta_inv(image, 2, 3) == p);
  }
  CHECK(theta(ParkingSeq{}, 2, 0).empty());
  CHECK_THROWS_AS(theta(ParkingSeq{1, 4}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(theta(ParkingSeq{1, 1}, 2, 3), std::invalid_argument);
  // Not a tree parking distribution: nobody parks at node 4's leaf position.
  CHECK_THROWS_AS(theta_inv(ParkingSeq{1, 1, 1, 1, 2}, 2, 3), std::invalid_argument);
}

TEST_CASE("tree parking condition agrees with simulation and brute force") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const CaterpillarTree t(m, n);
      const int size = t.node_count();
      if (size > 7) continue;
      std::size_t valid = 0;
      for (const auto& prefs : oracle::all_nondecreasing(static_cast<std::size_t>(size), size)) {
        const ParkingSeq p(prefs);
        const auto [parked, lucky] = oracle_park(prefs, m, n);
        const bool all = parked == size;
        CHECK(is_tree_pk(t, p) == all);
        const ParkingOutcome outcome = simulate(t, p);
        CHECK(outcome.all_parked() == all);
        if (all) {
          ++valid;
          CHECK(luck_tree(t, p) == static_cast<std::size_t>(lucky));
        }
      }
      CHECK(BigInt(static_cast<unsigned long>(valid)) == fuss_catalan(m, static_cast<std::size_t>(n)));
    }
  }
}

TEST_CASE("simulate records assignments and lucky cars") {
  const CaterpillarTree t(2, 3);
  const ParkingOutcome out = simulate(t, ParkingSeq{1, 1, 2, 3, 4});
  REQUIRE(out.assignment.size() == 5);
  CHECK(out.assignment[0] == 1);
  CHECK(out.assignment[1] == 3);
  CHECK(out.assignment[2] == 2);
  CHECK(out.assignment[3] == 5);
  CHECK(out.assignment[4] == 4);
  // Car 3 prefers leaf 2 and parks there, but leaves never count.
  CHECK(out.lucky_set == std::vector<std::size_t>{1});
  CHECK(out.all_parked());

  const ParkingOutcome failed = simulate(t, ParkingSeq{5, 5, 5, 5, 5});
  CHECK_FALSE(failed.all_parked());
  CHECK_FALSE(failed.assignment[1].has_value());
  CHECK_THROWS_AS(is_tree_pk(t, ParkingSeq{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(is_tree_pk(t, ParkingSeq{1, 1, 1, 1, 6}), std::invalid_argument);
}

TEST_CASE("theta is a bijection that transports luck and omega") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 6; ++n) {
      const auto images = enumerate_caterpillar_pk(m, n);
      std::set<ParkingSeq> seen;
      const CaterpillarTree t(m, n);
      for_each_u_pk(static_cast<std::size_t>(n), BoundFamily::canonical(m), [&](std::span<const int> s) {
        const ParkingSeq p(std::vector<int>(s.begin(), s.end()));
        const ParkingSeq image = theta(p, m, n);
        CHECK(is_tree_pk(t, image));
        CHECK(theta_inv(image, m, n) == p);
        CHECK(luck_tree(t, image) == u_luck(p, m));
        CHECK(omega_tree(image, 1) == u_omega(p, 1));
        for (int j = 2; j <= m && n >= 2; ++j) CHECK(omega_tree(image, j) == u_omega(p, j) + 1);
        seen.insert(image);
      });
      CHECK(seen.size() == images.size());
      CHECK(std::set<ParkingSeq>(images.begin(), images.end()) == seen);
    }
  }
}

TEST_CASE("lattice path codec") {
  CHECK(to_lattice_path(ParkingSeq{1, 1, 4}, 2) == "NNEEENE");
  CHECK(to_lattice_path(ParkingSeq{}, 2).empty());
  CHECK(from_lattice_path("NNEEENE", 2) == ParkingSeq{1, 1, 4});
  CHECK(from_lattice_path("", 3).empty());
  CHECK_THROWS_AS(from_lattice_path("NEENE", 1), std::invalid_argument);
  CHECK_THROWS_AS(from_lattice_path("NNX", 2), std::invalid_argument);
  CHECK_THROWS_AS(from_lattice_path("NNE", 2), std::invalid_argument);
  CHECK_THROWS_AS(to_lattice_path(ParkingSeq{1, 4}, 2), std::invalid_argument);

  for (int m = 1; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 6; ++n) {
      std::set<std::string> words;
      for (const auto& p : enumerate_u_pk(n, BoundFamily::canonical(m))) {
        const std::string w = to_lattice_path(p, m);
        CHECK(from_lattice_path(w, m) == p);
        CHECK(std::count(w.begin(), w.end(), 'N') == static_cast<long>(n));
        words.insert(w);
      }
      CHECK(BigInt(static_cast<unsigned long>(words.size())) == fuss_catalan(m, n));
    }
  }
}

TEST_CASE("random sequences: theta roundtrip at larger n") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 20);
    // Random canonical u-pk: draw each entry uniformly between the previous value and its bound.
    std::vector<int> v;
    int last = 1;
    for (int i = 1; i <= n; ++i) {
      const int hi = m * (i - 1) + 1;
      last = last + static_cast<int>(rng() % static_cast<unsigned>(hi - last + 1));
      v.push_back(last);
    }
    const ParkingSeq p(v);
    const CaterpillarTree t(m, n);
    const ParkingSeq image = theta(p, m, n);
    CHECK(is_tree_pk(t, image));
    CHECK(simulate(t, image).all_parked());
    CHECK(theta_inv(image, m, n) == p);
    CHECK(luck_tree(t, image) == u_luck(p, m));
    CHECK(from_lattice_path(to_lattice_path(p, m), m) == p);
  }
}
