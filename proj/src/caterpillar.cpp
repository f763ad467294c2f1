#include "catpark/caterpillar.hpp"

#include <algorithm>
#include <stdexcept>

namespace catpark {

CaterpillarTree::CaterpillarTree(int m, int n) : m_(m), n_(n) {
  if (m < 1) throw std::invalid_argument("caterpillar requires m >= 1");
  if (n < 1) throw std::invalid_argument("caterpillar requires n >= 1");

  const int count = node_count();
  parent_.assign(static_cast<std::size_t>(count) + 1, 0);
  for (int j = 1; j < n; ++j) parent_[static_cast<std::size_t>(m * (j - 1) + 1)] = m * j + 1;
  for (int j = 2; j <= n; ++j) {
    const int vertex = m * (j - 1) + 1;
    for (int leaf = m * (j - 2) + 2; leaf < vertex; ++leaf) {
      parent_[static_cast<std::size_t>(leaf)] = vertex;
    }
  }

  // Parents always carry larger labels, so one ascending pass accumulates sizes.
  subtree_size_.assign(static_cast<std::size_t>(count) + 1, 1);
  subtree_size_[0] = 0;
  for (int label = 1; label <= count; ++label) {
    if (const int p = parent_[static_cast<std::size_t>(label)]; p != 0) {
      subtree_size_[static_cast<std::size_t>(p)] += subtree_size_[static_cast<std::size_t>(label)];
    }
  }
}

std::optional<int> CaterpillarTree::parent(int label) const {
  if (label < 1 || label > node_count()) {
    throw std::out_of_range("label " + std::to_string(label) + " not in Cat_" +
                            std::to_string(m_) + "(" + std::to_string(n_) + ")");
  }
  const int p = parent_[static_cast<std::size_t>(label)];
  if (p == 0) return std::nullopt;
  return p;
}

bool CaterpillarTree::is_backbone(int label) const {
  return label >= 1 && label <= node_count() && (label - 1) % m_ == 0;
}

std::vector<int> CaterpillarTree::backbone_labels() const {
  std::vector<int> out;
  for (int j = 1; j <= n_; ++j) out.push_back(m_ * (j - 1) + 1);
  return out;
}

CaterpillarTree build_caterpillar(int m, int n) { return CaterpillarTree(m, n); }

bool ParkingOutcome::all_parked() const {
  return std::all_of(assignment.begin(), assignment.end(),
                     [](const std::optional<int>& a) { return a.has_value(); });
}

namespace {

void require_labels_in_tree(const CaterpillarTree& tree, const ParkingSeq& seq) {
  if (!seq.empty() && seq.values().back() > tree.node_count()) {
    throw std::invalid_argument("preference " + std::to_string(seq.values().back()) +
                                " exceeds node count " + std::to_string(tree.node_count()));
  }
}

}  // namespace

bool is_tree_pk(const CaterpillarTree& tree, const ParkingSeq& seq) {
  if (seq.size() != static_cast<std::size_t>(tree.node_count())) {
    throw std::invalid_argument("sequence length " + std::to_string(seq.size()) +
                                " does not match node count " +
                                std::to_string(tree.node_count()));
  }
  require_labels_in_tree(tree, seq);

  std::vector<int> received(static_cast<std::size_t>(tree.node_count()) + 1, 0);
  for (int label : seq) ++received[static_cast<std::size_t>(label)];
  for (int label = 1; label <= tree.node_count(); ++label) {
    if (received[static_cast<std::size_t>(label)] < tree.subtree_size(label)) return false;
    if (auto p = tree.parent(label)) {
      received[static_cast<std::size_t>(*p)] += received[static_cast<std::size_t>(label)];
    }
  }
  return true;
}

ParkingOutcome simulate(const CaterpillarTree& tree, const ParkingSeq& seq) {
  require_labels_in_tree(tree, seq);
  ParkingOutcome outcome;
  outcome.assignment.reserve(seq.size());
  std::vector<bool> occupied(static_cast<std::size_t>(tree.node_count()) + 1, false);

  for (std::size_t car = 0; car < seq.size(); ++car) {
    const int preferred = seq[car];
    std::optional<int> node = preferred;
    while (node && occupied[static_cast<std::size_t>(*node)]) node = tree.parent(*node);
    if (node) {
      occupied[static_cast<std::size_t>(*node)] = true;
      if (*node == preferred && tree.is_backbone(preferred)) outcome.lucky_set.push_back(car + 1);
    }
    outcome.assignment.push_back(node);
  }
  return outcome;
}

std::size_t luck_tree(const CaterpillarTree& tree, const ParkingSeq& seq) {
  return simulate(tree, seq).lucky_set.size();
}

std::size_t omega_tree(const ParkingSeq& seq, int label) {
  return static_cast<std::size_t>(std::count(seq.begin(), seq.end(), label));
}

namespace {

std::vector<int> leaf_labels(int m, int n) {
  std::vector<int> leaves;
  const int count = m * n - m + 1;
  for (int label = 1; label <= count; ++label) {
    if ((label - 1) % m != 0) leaves.push_back(label);
  }
  return leaves;
}

}  // namespace

ParkingSeq theta(const ParkingSeq& seq, int m, int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("theta requires m >= 1 and n >= 0");
  if (seq.size() != static_cast<std::size_t>(n) || !is_u_pk(seq, BoundFamily::canonical(m))) {
    throw std::invalid_argument("theta: " + seq.to_display() + " is not in PK(" +
                                std::to_string(n) + "; u) for m=" + std::to_string(m));
  }
  if (n == 0) return seq;
  const std::vector<int> leaves = leaf_labels(m, n);
  std::vector<int> merged;
  merged.reserve(seq.size() + leaves.size());
  std::merge(seq.begin(), seq.end(), leaves.begin(), leaves.end(), std::back_inserter(merged));
  return ParkingSeq(std::move(merged));
}

ParkingSeq theta_inv(const ParkingSeq& seq, int m, int n) {
  const CaterpillarTree tree(m, n);
  if (!is_tree_pk(tree, seq)) {
    throw std::invalid_argument("theta_inv: " + seq.to_display() +
                                " is not a parking distribution on Cat_" + std::to_string(m) +
                                "(" + std::to_string(n) + ")");
  }
  std::vector<int> remaining;
  const std::vector<int> leaves = leaf_labels(m, n);
  std::set_difference(seq.begin(), seq.end(), leaves.begin(), leaves.end(),
                      std::back_inserter(remaining));
  if (remaining.size() + leaves.size() != seq.size()) {
    throw std::invalid_argument("theta_inv: some leaf label is absent from " + seq.to_display());
  }
  return ParkingSeq(std::move(remaining));
}

void for_each_caterpillar_pk(int m, int n, const std::function<void(const ParkingSeq&)>& visit,
                             std::uint64_t max_objects) {
  if (m < 1 || n < 1) throw std::invalid_argument("caterpillar requires m >= 1 and n >= 1");
  const std::vector<int> leaves = leaf_labels(m, n);
  std::vector<int> merged;
  for_each_u_pk(
      static_cast<std::size_t>(n), BoundFamily::canonical(m),
      [&](std::span<const int> s) {
        merged.clear();
        std::merge(s.begin(), s.end(), leaves.begin(), leaves.end(), std::back_inserter(merged));
        visit(ParkingSeq(merged));
      },
      max_objects);
}

std::vector<ParkingSeq> enumerate_caterpillar_pk(int m, int n, std::uint64_t max_objects) {
  std::vector<ParkingSeq> out;
  for_each_caterpillar_pk(m, n, [&](const ParkingSeq& s) { out.push_back(s); }, max_objects);
  return out;
}

std::string to_lattice_path(const ParkingSeq& seq, int m) {
  if (m < 1) throw std::invalid_argument("lattice path requires m >= 1");
  if (!is_u_pk(seq, BoundFamily::canonical(m))) {
    throw std::invalid_argument("to_lattice_path: " + seq.to_display() +
                                " is not a u-parking distribution for m=" + std::to_string(m));
  }
  if (seq.empty()) return {};
  std::string word;
  int x = 0;
  for (int p : seq) {
    word.append(static_cast<std::size_t>(p - 1 - x), 'E');
    word.push_back('N');
    x = p - 1;
  }
  const int n = static_cast<int>(seq.size());
  word.append(static_cast<std::size_t>(m * (n - 1) - x), 'E');
  return word;
}

ParkingSeq from_lattice_path(std::string_view word, int m) {
  if (m < 1) throw std::invalid_argument("lattice path requires m >= 1");
  std::vector<int> values;
  long x = 0;
  for (char step : word) {
    if (step == 'E') {
      ++x;
    } else if (step == 'N') {
      const long y = static_cast<long>(values.size());
      if (x > m * y) {
        throw std::invalid_argument("lattice path crosses x <= m*y before north step " +
                                    std::to_string(y + 1));
      }
      values.push_back(static_cast<int>(x + 1));
    } else {
      throw std::invalid_argument(std::string("lattice path step must be N or E, got '") + step +
                                  "'");
    }
  }
  const long n = static_cast<long>(values.size());
  const long expected_east = n == 0 ? 0 : static_cast<long>(m) * (n - 1);
  if (x != expected_east) {
    throw std::invalid_argument("lattice path has " + std::to_string(x) + " east steps, expected " +
                                std::to_string(expected_east));
  }
  return ParkingSeq(std::move(values));
}

}  // namespace catpark
