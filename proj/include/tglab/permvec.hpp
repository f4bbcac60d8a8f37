#ifndef TGLAB_PERMVEC_HPP
#define TGLAB_PERMVEC_HPP

#include <cstddef>
#include <vector>

#include "tglab/bitvec.hpp"
#include "tglab/timegraph.hpp"

namespace tglab {

/// Element of B^{E(n)}: a function from edges to {0, 1}.
class EdgeVector {
 public:
  EdgeVector() = default;
  explicit EdgeVector(int n) : n_(n), bits_(edge_count(n)) {}
  EdgeVector(int n, BitVec bits);

  int order() const { return n_; }
  bool operator[](const Edge& e) const { return bits_.test(edge_index(e, n_)); }
  bool at(std::size_t index) const { return bits_.test(index); }
  void set(const Edge& e, bool value = true) { bits_.assign(edge_index(e, n_), value); }

  EdgeVector& operator^=(const EdgeVector& other);
  friend EdgeVector operator^(EdgeVector a, const EdgeVector& b) { return a ^= b; }
  bool operator==(const EdgeVector&) const = default;

  bool any() const { return bits_.any(); }
  const BitVec& bits() const { return bits_; }

 private:
  int n_ = 0;
  BitVec bits_;
};

/// Element of B^{E(n) x E(n)}, stored as the full |E(n)| x |E(n)| matrix
/// in row-major order: bit (a, b) lives at a * |E(n)| + b.
class PairVector {
 public:
  PairVector() = default;
  explicit PairVector(int n);
  PairVector(int n, BitVec bits);

  int order() const { return n_; }
  std::size_t edges() const { return m_; }

  bool at(std::size_t a, std::size_t b) const { return bits_.test(a * m_ + b); }
  bool operator()(const Edge& e, const Edge& f) const {
    return at(edge_index(e, n_), edge_index(f, n_));
  }
  /// Flips both (a, b) and (b, a) (once when a == b).
  void flip_symmetric(std::size_t a, std::size_t b);

  PairVector& operator^=(const PairVector& other);
  friend PairVector operator^(PairVector a, const PairVector& b) { return a ^= b; }
  bool operator==(const PairVector&) const = default;

  bool any() const { return bits_.any(); }
  std::size_t popcount() const { return bits_.popcount(); }
  bool row_any(std::size_t a) const;
  const BitVec& bits() const { return bits_; }

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  BitVec bits_;
};

/// T^n(p): indicator of the n - 1 edges incident on p.
EdgeVector tn(const Permutation& p);

/// T_P^n(p): indicator of ordered pairs of edges both incident on p.
PairVector tpn(const Permutation& p);

/// P(g)(e) = g(e, e).
EdgeVector pmap(const PairVector& g);

/// P_e(g)(e') = g(e, e').
EdgeVector pe_map(const PairVector& g, const Edge& e);

/// Parity of the layer-1 entries.
bool value(const EdgeVector& f);
bool value(const PairVector& g);

inline bool is_cycle(const EdgeVector& f) { return !value(f); }
inline bool is_cycle(const PairVector& g) { return !value(g); }
inline bool is_closed_cycle(const PairVector& g) { return !pmap(g).any(); }

bool is_symmetric(const PairVector& g);

/// Edges e with a nonzero row g(e, .), as ascending indices.
std::vector<std::size_t> support(const PairVector& g);
bool is_supported_in(const PairVector& g, const TimeGraph& graph);

/// xor of tn / tpn over a list of permutations.
EdgeVector sum_tn(const std::vector<Permutation>& perms, int n);
PairVector sum_tpn(const std::vector<Permutation>& perms, int n);

}  // namespace tglab

#endif  // TGLAB_PERMVEC_HPP
