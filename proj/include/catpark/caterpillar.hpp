#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catpark/parking_seq.hpp"

namespace catpark {

/// The labeled m-regular caterpillar Cat_m(n).
///
/// Backbone vertex v_j carries label m(j-1)+1; the m-1 leaves hanging off
/// v_j (j >= 2) take the labels strictly between v_{j-1} and v_j. Every
/// parent label exceeds its child's, and the sink is m(n-1)+1.
class CaterpillarTree {
 public:
  CaterpillarTree(int m, int n);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int node_count() const noexcept { return m_ * n_ - m_ + 1; }
  int sink() const noexcept { return node_count(); }

  /// Parent label, or nullopt for the sink.
  std::optional<int> parent(int label) const;
  bool is_backbone(int label) const;
  std::vector<int> backbone_labels() const;
  /// Labels in the subtree rooted at `label` count.
  int subtree_size(int label) const { return subtree_size_.at(static_cast<std::size_t>(label)); }

 private:
  int m_;
  int n_;
  std::vector<int> parent_;  // indexed by label; 0 marks the sink
  std::vector<int> subtree_size_;
};

CaterpillarTree build_caterpillar(int m, int n);

struct ParkingOutcome {
  /// assignment[i] is the node where car i+1 parked, or nullopt if it exited.
  std::vector<std::optional<int>> assignment;
  /// 1-based indices of lucky cars, ascending.
  std::vector<std::size_t> lucky_set;

  bool all_parked() const;
};

/// Subtree-count condition: every vertex's subtree receives at least as
/// many preferences as it has nodes. Throws on length mismatch or labels
/// outside the tree.
bool is_tree_pk(const CaterpillarTree& tree, const ParkingSeq& seq);

/// Runs the cars in index order; each starts at its preferred node and
/// follows parent links until it finds a free node or leaves past the sink.
ParkingOutcome simulate(const CaterpillarTree& tree, const ParkingSeq& seq);

std::size_t luck_tree(const CaterpillarTree& tree, const ParkingSeq& seq);
std::size_t omega_tree(const ParkingSeq& seq, int label);

/// Merges one copy of every non-backbone label of Cat_m(n) into seq.
ParkingSeq theta(const ParkingSeq& seq, int m, int n);
/// Removes one copy of every non-backbone label.
ParkingSeq theta_inv(const ParkingSeq& seq, int m, int n);

void for_each_caterpillar_pk(int m, int n, const std::function<void(const ParkingSeq&)>& visit,
                             std::uint64_t max_objects = kDefaultMaxObjects);
std::vector<ParkingSeq> enumerate_caterpillar_pk(int m, int n,
                                                 std::uint64_t max_objects = kDefaultMaxObjects);

/// Unit-step word over {N, E}: E^{p_1-1} N E^{p_2-p_1} N ... N E^{m(n-1)+1-p_n}.
std::string to_lattice_path(const ParkingSeq& seq, int m);
ParkingSeq from_lattice_path(std::string_view word, int m);

}  // namespace catpark
