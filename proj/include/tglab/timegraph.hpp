#ifndef TGLAB_TIMEGRAPH_HPP
#define TGLAB_TIMEGRAPH_HPP

#include <compare>
#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tglab/bitvec.hpp"

namespace tglab {

/// Oracles enumerate S_n; past these orders they refuse rather than sample.
inline constexpr int kDefaultPermutationCap = 8;
inline constexpr int kDefaultPathCap = 10;

class OracleScaleExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge (i, j, t) of the complete time-graph: joins vertex i in layer t to
/// vertex j in layer t + 1. All labels are 1-based; i == j is allowed.
struct Edge {
  int i = 0;
  int j = 0;
  int t = 0;

  auto operator<=>(const Edge&) const = default;
};

/// |E(n)| = n^2 (n - 1).
std::size_t edge_count(int n);

bool is_valid_edge(const Edge& e, int n);

/// Dense index in (t, i, j) lexicographic order:
/// ((t - 1) n + (i - 1)) n + (j - 1). Layer t occupies [(t-1) n^2, t n^2).
std::size_t edge_index(const Edge& e, int n);
Edge edge_from_index(std::size_t index, int n);

std::string to_string(const Edge& e);

/// A bijection of {1, ..., n}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  /// pi(position), 1-based.
  int operator()(int position) const { return image_[static_cast<std::size_t>(position - 1)]; }
  const std::vector<int>& image() const { return image_; }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

std::string to_string(const Permutation& p);

/// All of S_n in lexicographic order of image arrays.
std::vector<Permutation> all_permutations(int n, int cap = kDefaultPermutationCap);

/// (i, j, t) is incident on p iff p(t) = i and p(t + 1) = j.
bool is_incident(const Edge& e, const Permutation& p);

/// The n - 1 edges incident on p, one per layer, in layer order.
std::vector<Edge> incident_edges(const Permutation& p);
std::vector<std::size_t> incident_edge_indices(const Permutation& p);

/// A time-graph of order n: a subset of E(n).
class TimeGraph {
 public:
  TimeGraph() = default;
  /// The empty time-graph of order n.
  explicit TimeGraph(int n);

  /// K_T^n, every edge present.
  static TimeGraph complete(int n);
  static TimeGraph from_indices(int n, const std::vector<std::size_t>& indices);

  int order() const { return n_; }
  std::size_t size() const { return edges_.popcount(); }

  bool contains(const Edge& e) const;
  bool contains_index(std::size_t index) const { return edges_.test(index); }
  void add(const Edge& e);
  void add_index(std::size_t index);
  void remove_index(std::size_t index);

  std::vector<std::size_t> edge_indices() const { return edges_.set_bits(); }
  /// Indices of G^c in increasing order.
  std::vector<std::size_t> complement_indices() const;

  const BitVec& bits() const { return edges_; }

  bool operator==(const TimeGraph&) const = default;

 private:
  int n_ = 0;
  BitVec edges_;
};

/// Simple undirected graph on vertices 1..n.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  /// K_{1,leaves} with centre 1.
  static Graph star(int leaves);
  static Graph petersen();
  /// Graph whose edge set is the bitmask over pairs (i < j) in
  /// lexicographic order; used for exhaustive enumeration.
  static Graph from_mask(int n, unsigned long long mask);

  int order() const { return n_; }
  /// Ignores duplicates; rejects self-loops and out-of-range labels.
  void add_edge(int i, int j);
  bool has_edge(int i, int j) const;
  /// Pairs (i, j), i < j, sorted.
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_total() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<bool> adjacency_;  // n x n, symmetric
};

/// The set of permutations incident on G, in lexicographic order.
std::vector<Permutation> incident_permutations(const TimeGraph& g,
                                               int cap = kDefaultPermutationCap);
bool is_permutation_incident(const Permutation& p, const TimeGraph& g);
bool is_hamiltonian_oracle(const TimeGraph& g, int cap = kDefaultPermutationCap);

/// HAMP -> HAMTG: (i, j, t) is present for every t iff {i, j} is an edge.
TimeGraph reduce_hamp(const Graph& g);

/// Backtracking search for a Hamiltonian path.
bool hamiltonian_path_oracle(const Graph& g, int cap = kDefaultPathCap);

/// Graph text format: first line n, then one "i j" pair per line.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

/// Time-graph text format: first line n, then one edge index per line.
TimeGraph read_time_graph(std::istream& in);
void write_time_graph(std::ostream& out, const TimeGraph& g);

}  // namespace tglab

#endif  // TGLAB_TIMEGRAPH_HPP
